#include "json_io.hpp"

#include <set>

namespace transcut {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field '" + key + "'");
  return *it;
}

const Json& array_at(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  return j;
}

std::pair<Rational, Rational> pair_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) throw ParseError(where + ": expected a pair [x, y]");
  return {rational_from_json(j[0], where + "[0]"), rational_from_json(j[1], where + "[1]")};
}

std::vector<Translate> translates_from_json(const Json& j, const std::string& where) {
  std::vector<Translate> out;
  const Json& arr = array_at(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto [a, b] = pair_from_json(arr[i], where + "[" + std::to_string(i) + "]");
    out.push_back({std::move(a), std::move(b)});
  }
  return out;
}

Json simpprop_to_json(const SimpPropReport& s) {
  return Json{{"q", s.q},
              {"arcs", s.arcs},
              {"max_portion_crossings", s.max_portion_crossings},
              {"max_arc_crossings", s.max_arc_crossings},
              {"limit", s.q + 1},
              {"level_offset_min", s.min_level},
              {"level_offset_max", s.max_level},
              {"band", {s.band_lo, s.band_hi}},
              {"pass_portion", s.pass_portion},
              {"pass_arc", s.pass_arc},
              {"pass_band", s.pass_band},
              {"pass", s.pass()}};
}

Json piece_to_json(const Piece& p) {
  Json j{{"kind", to_string(p.kind)},
         {"curve", to_json(p.curve)},
         {"x_lo", to_json(p.x_lo)},
         {"x_hi", to_json(p.x_hi)}};
  if (p.family_curve) j["family_curve"] = *p.family_curve;
  return j;
}

Json wall_to_json(const std::optional<VerticalSegment>& w) {
  if (!w) return nullptr;
  Json j{{"x", to_json(w->x)}};
  j["y_lo"] = w->y_lo ? to_json(*w->y_lo) : Json("-inf");
  j["y_hi"] = w->y_hi ? to_json(*w->y_hi) : Json("inf");
  return j;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const XBound& x) { return x.str(); }

Json to_json(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json to_json(const Translate& t) { return Json::array({to_string(t.a), to_string(t.b)}); }

Rational rational_from_json(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return parse_rational(j.dump());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational string like \"3/4\" or an integer");
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset to line:column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
}

std::vector<Point> points_from_json(const Json& j, const std::string& where) {
  std::vector<Point> out;
  const Json& arr = array_at(j, where);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto [x, y] = pair_from_json(arr[i], where + "[" + std::to_string(i) + "]");
    out.push_back({std::move(x), std::move(y)});
  }
  return out;
}

Instance instance_from_json(const Json& j) {
  Instance inst;
  inst.points = points_from_json(field(j, "points", "instance"), "points");
  const Json& s = array_at(field(j, "s_coords", "instance"), "s_coords");
  for (std::size_t i = 0; i < s.size(); ++i) {
    inst.s_coords.push_back(rational_from_json(s[i], "s_coords[" + std::to_string(i) + "]"));
  }
  inst.translates = translates_from_json(field(j, "translates", "instance"), "translates");
  try {
    validate(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  return inst;
}

Json instance_to_json(const Instance& inst) {
  Json points = Json::array(), s = Json::array(), t = Json::array();
  for (const auto& p : inst.points) points.push_back(to_json(p));
  for (const auto& x : inst.s_coords) s.push_back(to_json(x));
  for (const auto& tr : inst.translates) t.push_back(to_json(tr));
  return Json{{"points", points}, {"s_coords", s}, {"translates", t}};
}

CurveFamily family_from_json(const Json& j) {
  auto ts = translates_from_json(field(j, "translates", "family"), "translates");
  try {
    return CurveFamily(std::move(ts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("translates: ") + e.what());
  }
}

Json family_to_json(const CurveFamily& fam) {
  Json t = Json::array();
  for (const auto& tr : fam.translates()) t.push_back(to_json(tr));
  return Json{{"translates", t}};
}

Json arrangement_to_json(const Arrangement& arr, bool with_levels) {
  const std::size_t n = arr.family().size();
  Json j{{"n", n},
         {"vertices", arr.vertices().size()},
         {"edges", arr.edges().size()},
         {"levels", arr.level_count()}};
  if (arr.perturbation()) j["perturbation_epsilon"] = to_json(arr.perturbation()->epsilon);
  Json vs = Json::array();
  for (const auto& v : arr.vertices()) {
    vs.push_back({{"point", to_json(v.location)}, {"curves", {v.first, v.second}}});
  }
  j["vertex_list"] = vs;
  if (with_levels) {
    Json levels = Json::array();
    for (std::size_t k = 0; k < arr.level_count(); ++k) {
      Json edges = Json::array();
      for (const auto& e : compute_level(arr, k).edges) {
        edges.push_back({{"curve", e.curve}, {"x_lo", to_json(e.x_lo)}, {"x_hi", to_json(e.x_hi)}});
      }
      levels.push_back({{"k", k}, {"edges", edges}});
    }
    j["level_list"] = levels;
  }
  return j;
}

Json cell_to_json(const Cell& cell) {
  Json j{{"strip", cell.strip}, {"rank", cell.rank}, {"atypical", cell.atypical}};
  j["bottom"] = cell.bottom ? piece_to_json(*cell.bottom) : Json(nullptr);
  j["top"] = cell.top ? piece_to_json(*cell.top) : Json(nullptr);
  j["left_wall"] = wall_to_json(cell.left_wall);
  j["right_wall"] = wall_to_json(cell.right_wall);
  return j;
}

Json cutting_report_to_json(const Cutting& cutting, const CuttingReport& rep) {
  const bool nr = rep.max_crossing * rep.r <= rep.n;
  Json j{{"n", rep.n},
         {"r", rep.r},
         {"q", rep.q},
         {"base_q", rep.base_q},
         {"policy", to_string(cutting.policy)},
         {"branch", rep.trivial ? "trivial" : "simplified"},
         {"offset", rep.offset},
         {"chains", rep.chains},
         {"pieces", rep.pieces},
         {"cells", rep.cells},
         {"max_crossing", rep.max_crossing},
         {"atypical_max_crossing", rep.atypical_max_crossing},
         {"bound_20r2", rep.bound_20r2},
         {"bound_nr", Json{{"n_over_r", to_string(Rational(static_cast<unsigned long>(rep.n),
                                                              static_cast<unsigned long>(rep.r)))},
                           {"pass", nr}}},
         {"bound_3q2", Json{{"limit", 3 * rep.q + 2}, {"pass", rep.pass_3q2}}},
         {"pass_cells", rep.pass_cells},
         {"pass_separation", rep.pass_separation},
         {"piece_budget", rep.pass_piece_budget},
         {"pass", rep.pass()}};
  if (cutting.arrangement && cutting.arrangement->perturbation()) {
    j["perturbation_epsilon"] = to_json(cutting.arrangement->perturbation()->epsilon);
  }
  j["simpprop"] = rep.simpprop ? simpprop_to_json(*rep.simpprop) : Json(nullptr);
  j["crossings"] = rep.crossings;
  return j;
}

PipelineConfig pipeline_config_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("thresholds: expected an object");
  static const std::set<std::string> known{"c_good", "C2", "C3", "C4", "r", "q", "K",
                                           "exhaustive_subset"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) throw ParseError("thresholds: unknown field '" + it.key() + "'");
  }
  PipelineConfig c;
  auto size_field = [&](const char* key, std::size_t& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_unsigned()) {
      throw ParseError(std::string("thresholds.") + key + ": expected a non-negative integer");
    }
    out = j[key].get<std::size_t>();
  };
  if (j.contains("c_good")) c.c_good = rational_from_json(j["c_good"], "thresholds.c_good");
  if (j.contains("C3")) c.C3 = rational_from_json(j["C3"], "thresholds.C3");
  if (j.contains("C4")) c.C4 = rational_from_json(j["C4"], "thresholds.C4");
  if (j.contains("K")) c.K = rational_from_json(j["K"], "thresholds.K");
  size_field("C2", c.C2);
  size_field("r", c.r);
  size_field("q", c.q);
  if (j.contains("exhaustive_subset")) {
    if (!j["exhaustive_subset"].is_boolean()) {
      throw ParseError("thresholds.exhaustive_subset: expected a boolean");
    }
    c.exhaustive_subset = j["exhaustive_subset"].get<bool>();
  }
  return c;
}

Json pipeline_config_to_json(const PipelineConfig& c) {
  return Json{{"c_good", to_json(c.c_good)}, {"C2", c.C2},     {"C3", to_json(c.C3)},
              {"C4", to_json(c.C4)},         {"r", c.r},       {"q", c.q},
              {"K", to_json(c.K)},           {"exhaustive_subset", c.exhaustive_subset}};
}

Json pipeline_report_to_json(const PipelineReport& r) {
  Json mult = Json::object();
  for (const auto& [m, count] : r.multiplicity) mult[std::to_string(m)] = count;
  Json cells = Json::array();
  for (const auto& s : r.good_cell_stats) {
    cells.push_back({{"cell", s.cell}, {"points", s.points}, {"curves", s.triple_curves}});
  }
  Json thresholds = pipeline_config_to_json(r.config);
  thresholds["r"] = r.r;
  Json j{{"n", r.n},
         {"points", r.points},
         {"thresholds", thresholds},
         {"q", r.q},
         {"cells", r.cells},
         {"good_curves", r.good_curves},
         {"boundary_points", r.boundary_points},
         {"good_triples", r.good_triples},
         {"good_cells", r.good_cells},
         {"triangles", r.triangles},
         {"edge_disjoint_triangles", r.edge_disjoint_triangles},
         {"self_intersecting_p3", r.self_intersecting_p3},
         {"h_edges", r.h_edges},
         {"h_multiplicity", mult},
         {"h_edges_vs_p3_over_9", 9 * r.h_edges >= r.self_intersecting_p3},
         {"restricted_difference", r.restricted_difference},
         {"dense_subset", r.dense_subset},
         {"dense_difference", r.dense_difference},
         {"dense_subset_mode", r.exhaustive_subset ? "exhaustive" : "peeling"},
         {"dense_vertices", r.dense_vertices},
         {"good_cell_stats", cells}};
  if (!r.skipped.empty()) j["skipped"] = r.skipped;
  return j;
}

Json gap_to_json(const Gap& gap) {
  Json gens = Json::array();
  for (const auto& g : gap.generators) gens.push_back(to_json(g));
  return Json{{"base", to_json(gap.base)},
              {"generators", gens},
              {"lengths", gap.lengths},
              {"dimension", gap.dimension()},
              {"size", gap.size().get_str()}};
}

Json gap_fit_to_json(const std::optional<GapFit>& fit, const GapFitOptions& options,
                     std::size_t input_size) {
  Json j{{"input_size", input_size},
         {"d_max", options.d_max},
         {"size_cap", options.size_cap},
         {"exact", options.exact},
         {"min_coverage", to_json(options.min_coverage)},
         {"found", fit.has_value()}};
  if (fit) {
    j["gap"] = gap_to_json(fit->gap);
    j["coverage"] = fit->coverage;
  }
  return j;
}

}  // namespace transcut
