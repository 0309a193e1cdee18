#include <transcut/transcut.h>

#include "additive.hpp"
#include "generators.hpp"
#include "json_io.hpp"
#include "render.hpp"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

using namespace transcut;

struct tc_family {
  CurveFamily family;
};

struct tc_cutting {
  Cutting cutting;
};

struct tc_instance {
  Instance instance;
};

namespace {

thread_local std::string g_last_error;

tc_status fail(tc_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs body, mapping exceptions to status codes.
template <class F>
tc_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return TC_OK;
  } catch (const ParseError& e) {
    return fail(TC_ERR_PARSE, e.what());
  } catch (const DegenerateFamily& e) {
    return fail(TC_ERR_DEGENERATE, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(TC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TC_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

Json parse(const char* text) {
  require(text != nullptr, "null JSON input");
  return parse_json_text(text);
}

}  // namespace

extern "C" {

const char* tc_version(void) { return "0.1.0"; }

const char* tc_status_name(tc_status status) {
  switch (status) {
    case TC_OK: return "ok";
    case TC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TC_ERR_PARSE: return "parse error";
    case TC_ERR_DEGENERATE: return "degenerate family";
    case TC_ERR_UNSUPPORTED: return "unsupported";
    case TC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* tc_last_error(void) { return g_last_error.c_str(); }

void tc_string_free(char* s) { std::free(s); }

tc_status tc_family_from_json(const char* json, tc_family** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    auto f = std::make_unique<tc_family>(tc_family{family_from_json(parse(json))});
    *out = f.release();
  });
}

void tc_family_free(tc_family* family) { delete family; }

size_t tc_family_size(const tc_family* family) { return family ? family->family.size() : 0; }

tc_status tc_family_general_position(const tc_family* family, int* ok, char** detail) {
  return guarded([&] {
    require(family && ok, "null argument");
    const GeneralPosition gp = is_general_position(family->family);
    *ok = gp.ok ? 1 : 0;
    if (detail) {
      Json j{{"general_position", gp.ok}};
      switch (gp.failure) {
        case GeneralPosition::Failure::None: j["failure"] = nullptr; break;
        case GeneralPosition::Failure::VerticalShift: j["failure"] = "vertical_shift"; break;
        case GeneralPosition::Failure::TriplePoint: j["failure"] = "triple_point"; break;
      }
      j["witness"] = gp.witness;
      if (gp.where) j["where"] = to_json(*gp.where);
      *detail = dup_string(j.dump());
    }
  });
}

tc_status tc_arrangement_dump_json(const tc_family* family, int perturb, int with_levels,
                                   char** out_json) {
  return guarded([&] {
    require(family && out_json, "null argument");
    const Arrangement arr = build_arrangement(family->family, {perturb != 0});
    *out_json = dup_string(arrangement_to_json(arr, with_levels != 0).dump());
  });
}

void tc_cutting_options_init(tc_cutting_options* options) {
  if (!options) return;
  options->r = 11;
  options->perturb = 0;
  options->policy = TC_Q_ADAPTIVE;
  options->fixed_q = 0;
}

tc_status tc_cutting_build(const tc_family* family, const tc_cutting_options* options,
                           tc_cutting** out) {
  return guarded([&] {
    require(family && options && out, "null argument");
    *out = nullptr;
    CuttingOptions o;
    o.perturb = options->perturb != 0;
    switch (options->policy) {
      case TC_Q_ADAPTIVE: o.policy = QPolicy::Adaptive; break;
      case TC_Q_STRICT: o.policy = QPolicy::Strict; break;
      case TC_Q_FIXED: o.policy = QPolicy::Fixed; break;
      default: throw std::invalid_argument("unknown q policy");
    }
    o.fixed_q = options->fixed_q;
    auto c = std::make_unique<tc_cutting>(tc_cutting{build_cutting(family->family, options->r, o)});
    *out = c.release();
  });
}

void tc_cutting_free(tc_cutting* cutting) { delete cutting; }

size_t tc_cutting_cell_count(const tc_cutting* cutting) {
  return cutting ? cutting->cutting.cells.size() : 0;
}

tc_status tc_cutting_report_json(const tc_cutting* cutting, int simpprop, unsigned jobs, int* pass,
                                 char** out_json) {
  return guarded([&] {
    require(cutting && out_json, "null argument");
    VerifyOptions v;
    v.simpprop = simpprop != 0;
    v.jobs = jobs == 0 ? 1 : jobs;
    const CuttingReport rep = verify_cutting(cutting->cutting, v);
    if (pass) *pass = rep.pass() ? 1 : 0;
    *out_json = dup_string(cutting_report_to_json(cutting->cutting, rep).dump());
  });
}

tc_status tc_cutting_cell_json(const tc_cutting* cutting, size_t cell, char** out_json) {
  return guarded([&] {
    require(cutting && out_json, "null argument");
    require(cell < cutting->cutting.cells.size(), "cell index out of range");
    Json j = cell_to_json(cutting->cutting.cells[cell]);
    j["index"] = cell;
    *out_json = dup_string(j.dump());
  });
}

tc_status tc_cutting_locate(const tc_cutting* cutting, const char* x, const char* y,
                            int64_t* cell) {
  return guarded([&] {
    require(cutting && x && y && cell, "null argument");
    const Point p{parse_rational(x), parse_rational(y)};
    const Location loc = locate(cutting->cutting, p);
    const auto* c = std::get_if<std::size_t>(&loc);
    *cell = c ? static_cast<int64_t>(*c) : -1;
  });
}

tc_status tc_instance_from_json(const char* json, tc_instance** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = nullptr;
    auto i = std::make_unique<tc_instance>(tc_instance{instance_from_json(parse(json))});
    *out = i.release();
  });
}

void tc_instance_free(tc_instance* instance) { delete instance; }

tc_status tc_incidences_json(const tc_instance* instance, int* audit_pass, char** out_json) {
  return guarded([&] {
    require(instance && out_json, "null argument");
    const Instance& inst = instance->instance;
    const IncidenceCount c = count_incidences(inst);
    const StAudit audit = st_audit(inst.points.size(), inst.translates.size(), c.total);
    if (audit_pass) *audit_pass = audit.pass ? 1 : 0;
    Json j{{"points", inst.points.size()},
           {"s_coords", inst.s_coords.size()},
           {"translates", inst.translates.size()},
           {"incidences", c.total},
           {"incident_points", c.distinct_points},
           {"per_translate", c.per_translate},
           {"st_audit", {{"c", 4}, {"ratio", audit.ratio}, {"pass", audit.pass}}}};
    *out_json = dup_string(j.dump());
  });
}

tc_status tc_unit_distance_json(const char* json, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const Json j = parse(json);
    if (!j.is_object() || !j.contains("points") || !j.contains("vectors")) {
      throw ParseError("unit distance input needs 'points' and 'vectors'");
    }
    const auto points = points_from_json(j["points"], "points");
    const auto vectors = points_from_json(j["vectors"], "vectors");
    const std::uint64_t pairs = unit_distance_count(points, vectors);
    const StAudit audit = st_audit(points.size(), points.size(), pairs);
    Json out{{"points", points.size()},
             {"vectors", vectors.size()},
             {"unit_pairs", pairs},
             {"st_audit", {{"c", 4}, {"ratio", audit.ratio}, {"pass", audit.pass}}}};
    *out_json = dup_string(out.dump());
  });
}

tc_status tc_pipeline_run(const tc_instance* instance, const char* thresholds_json, unsigned jobs,
                          char** out_json) {
  return guarded([&] {
    require(instance && out_json, "null argument");
    PipelineConfig cfg;
    if (thresholds_json) cfg = pipeline_config_from_json(parse(thresholds_json));
    cfg.jobs = jobs == 0 ? 1 : jobs;
    const PipelineResult res = run_pipeline(instance->instance, cfg);
    *out_json = dup_string(pipeline_report_to_json(res.report).dump());
  });
}

void tc_gapfit_options_init(tc_gapfit_options* options) {
  if (!options) return;
  options->d_max = 2;
  options->size_cap = 0;
  options->exact = 0;
  options->min_coverage = nullptr;
}

tc_status tc_gapfit_json(const char* json, const tc_gapfit_options* options, char** out_json) {
  return guarded([&] {
    require(options && out_json, "null argument");
    const Json j = parse(json);
    std::vector<Point> pts;
    if (j.is_object() && j.contains("set")) {
      pts = points_from_json(j["set"], "set");
    } else if (j.is_object() && j.contains("translates")) {
      pts = points_from_json(j["translates"], "translates");
    } else {
      throw ParseError("gapfit input needs 'set' or 'translates'");
    }
    std::vector<Translate> A;
    for (auto& p : pts) A.push_back({std::move(p.x), std::move(p.y)});
    GapFitOptions o;
    o.d_max = options->d_max;
    o.size_cap = options->size_cap;
    o.exact = options->exact != 0;
    if (options->min_coverage) o.min_coverage = parse_rational(options->min_coverage);
    const auto fit = gap_fit(A, o);
    Json out = gap_fit_to_json(fit, o, A.size());
    out["difference_set_size"] = difference_set(A).elements.size();
    *out_json = dup_string(out.dump());
  });
}

tc_status tc_generate_grid(uint32_t A, int tight, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    *out_json = dup_string(instance_to_json(gen_grid_construction(A, tight != 0)).dump());
  });
}

tc_status tc_generate_unitgap(const char* json, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const Json j = parse(json);
    if (!j.is_object() || !j.contains("lengths")) {
      throw ParseError("unitgap input needs 'lengths'");
    }
    std::vector<std::uint32_t> lengths;
    if (!j["lengths"].is_array()) throw ParseError("lengths: expected an array");
    for (const auto& l : j["lengths"]) {
      if (!l.is_number_unsigned()) throw ParseError("lengths: expected positive integers");
      lengths.push_back(l.get<std::uint32_t>());
    }
    std::vector<Point> vectors;
    if (j.contains("vectors")) {
      vectors = points_from_json(j["vectors"], "vectors");
    } else {
      const auto& table = pythagorean_unit_vectors();
      if (lengths.size() > table.size()) {
        throw std::invalid_argument("unitgap: at most " + std::to_string(table.size()) +
                                    " built-in vectors");
      }
      vectors.assign(table.begin(), table.begin() + static_cast<std::ptrdiff_t>(lengths.size()));
    }
    const UnitDistanceGap g = gen_unit_distance_gap(vectors, lengths);
    Instance inst;
    inst.points = g.points;
    Json out = instance_to_json(inst);
    Json vs = Json::array();
    for (const auto& v : g.vectors) vs.push_back(to_json(v));
    out["vectors"] = vs;
    *out_json = dup_string(out.dump());
  });
}

tc_status tc_generate_random(size_t n, uint64_t seed, int64_t coord_bound, char** out_json) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    Instance inst;
    inst.translates = gen_random_family(n, seed, coord_bound).translates();
    *out_json = dup_string(instance_to_json(inst).dump());
  });
}

tc_status tc_render_svg(const tc_instance* instance, int with_pipeline, const char* thresholds_json,
                        char** out_svg) {
  return guarded([&] {
    require(instance && out_svg, "null argument");
    std::optional<PipelineResult> res;
    if (with_pipeline) {
      PipelineConfig cfg;
      if (thresholds_json) cfg = pipeline_config_from_json(parse(thresholds_json));
      res = run_pipeline(instance->instance, cfg);
    }
    *out_svg = dup_string(render_svg(instance->instance, res ? &*res : nullptr));
  });
}

}  // extern "C"
