// transcut: command-line front end over the C API.
//
// Exit codes: 0 success, 1 verification failure or internal error, 2 usage
// or input error.

#include <transcut/transcut.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApiError : std::runtime_error {
  tc_status status;
  ApiError(tc_status s, const std::string& what) : std::runtime_error(what), status(s) {}
};

void check(tc_status s, const char* what) {
  if (s != TC_OK) {
    throw ApiError(s, std::string(what) + ": " + tc_status_name(s) + ": " + tc_last_error());
  }
}

// Owns a library string.
struct LibString {
  char* p = nullptr;
  ~LibString() { tc_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

std::string pretty(const std::string& json) { return Json::parse(json).dump(2); }

using FamilyPtr = std::unique_ptr<tc_family, decltype(&tc_family_free)>;
using CuttingPtr = std::unique_ptr<tc_cutting, decltype(&tc_cutting_free)>;
using InstancePtr = std::unique_ptr<tc_instance, decltype(&tc_instance_free)>;

FamilyPtr load_family(const std::string& path) {
  tc_family* f = nullptr;
  check(tc_family_from_json(read_file(path).c_str(), &f), path.c_str());
  return FamilyPtr(f, tc_family_free);
}

InstancePtr load_instance(const std::string& path) {
  tc_instance* i = nullptr;
  check(tc_instance_from_json(read_file(path).c_str(), &i), path.c_str());
  return InstancePtr(i, tc_instance_free);
}

// "x,y" -> ["x", "y"]
Json parse_vector_arg(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("vector '" + text + "' is not of the form x,y");
  return Json::array({text.substr(0, comma), text.substr(comma + 1)});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cuttings, incidences and structure for translates of a parabola"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs,-j", jobs, "Worker threads for verification and pipeline stages")
      ->check(CLI::Range(1u, 256u));

  // generate
  auto* gen = app.add_subcommand("generate", "Write an instance or family as JSON");
  gen->require_subcommand(1);
  std::string gen_out;
  gen->add_option("--output,-o", gen_out, "Output file (default stdout)");

  auto* grid = gen->add_subcommand("grid", "S = {0..A-1}, T = [0,A) x [0,A^2), P = box or S+T");
  std::uint32_t grid_a = 4;
  bool grid_tight = false;
  grid->add_option("--a", grid_a, "A")->required()->check(CLI::Range(2u, 64u));
  grid->add_flag("--tight", grid_tight, "Only the points of S + T");

  auto* unitgap = gen->add_subcommand("unitgap", "GAP of rational unit vectors");
  std::vector<std::string> ug_vectors;
  std::vector<std::uint32_t> ug_lengths;
  unitgap->add_option("--vectors", ug_vectors, "Unit vectors x,y (default: Pythagorean table)");
  unitgap->add_option("--lengths", ug_lengths, "Lengths L_i")->required();

  auto* random = gen->add_subcommand("random", "Random family in general position");
  std::size_t rnd_n = 0;
  std::uint64_t rnd_seed = 0;
  std::int64_t rnd_bound = 1000;
  random->add_option("--n", rnd_n, "Number of translates")->required()->check(CLI::PositiveNumber);
  random->add_option("--seed", rnd_seed, "Seed")->required();
  random->add_option("--bound", rnd_bound, "Coordinates are k/4 with |k| <= bound")
      ->check(CLI::PositiveNumber);
  for (auto* leaf : {grid, unitgap, random}) leaf->fallthrough();  // accept -o after the leaf

  // cut
  auto* cut = app.add_subcommand("cut", "Build (and verify) a cutting of a family");
  std::string cut_in, cut_report;
  std::size_t cut_r = 11, cut_q = 0;
  bool cut_verify = false, cut_perturb = false, cut_no_simpprop = false;
  std::string cut_policy = "adaptive";
  cut->add_option("--input,-i", cut_in, "Family or instance JSON")->required();
  cut->add_option("--r", cut_r, "Cutting parameter r (>= 11)")->required();
  cut->add_flag("--verify", cut_verify, "Verify bounds; exit 1 on failure");
  cut->add_flag("--perturb", cut_perturb, "Break triple points by a tiny vertical shift");
  cut->add_flag("--no-simpprop", cut_no_simpprop, "Skip simplification checks");
  cut->add_option("--policy", cut_policy, "q policy")
      ->check(CLI::IsMember({"adaptive", "strict", "fixed"}));
  cut->add_option("--q", cut_q, "q for --policy fixed");
  cut->add_option("--report", cut_report, "Report file (default stdout)");

  // levels
  auto* levels = app.add_subcommand("levels", "Dump the arrangement and its levels");
  std::string lv_in, lv_out;
  bool lv_perturb = false, lv_no_levels = false;
  levels->add_option("--input,-i", lv_in, "Family or instance JSON")->required();
  levels->add_flag("--perturb", lv_perturb, "Break triple points");
  levels->add_flag("--no-levels", lv_no_levels, "Counts and vertices only");
  levels->add_option("--output,-o", lv_out, "Output file");

  // incidences
  auto* inc = app.add_subcommand("incidences", "Count incidences and audit the ST bound");
  std::string inc_in, inc_out;
  inc->add_option("--input,-i", inc_in, "Instance JSON")->required();
  inc->add_option("--output,-o", inc_out, "Output file");

  // unitdist
  auto* ud = app.add_subcommand("unitdist", "Count unit-distance pairs");
  std::string ud_in, ud_out;
  ud->add_option("--input,-i", ud_in, "JSON with points and vectors")->required();
  ud->add_option("--output,-o", ud_out, "Output file");

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "Run the structure pipeline");
  std::string pp_in, pp_thr, pp_report;
  pipe->add_option("--input,-i", pp_in, "Instance JSON")->required();
  pipe->add_option("--thresholds", pp_thr, "Thresholds JSON {c_good, C2, C3, C4, r, q, K}");
  pipe->add_option("--report", pp_report, "Report file (default stdout)");

  // gapfit
  auto* gf = app.add_subcommand("gapfit", "Fit a GAP around a set of vectors");
  std::string gf_in, gf_out, gf_cov;
  std::size_t gf_dmax = 2;
  std::uint64_t gf_cap = 0;
  bool gf_exact = false;
  gf->add_option("--input,-i", gf_in, "JSON with 'set' or 'translates'")->required();
  gf->add_option("--d-max", gf_dmax, "Maximum dimension")->check(CLI::Range(0, 2));
  gf->add_option("--size-cap", gf_cap, "Maximum GAP size (0 = none)");
  gf->add_flag("--exact", gf_exact, "Try every difference as a generator (|A| <= 12)");
  gf->add_option("--coverage", gf_cov, "Required covered fraction, rational in (0, 1]");
  gf->add_option("--output,-o", gf_out, "Output file");

  // render
  auto* render = app.add_subcommand("render", "Draw an instance as SVG");
  std::string rd_in, rd_svg, rd_thr;
  bool rd_pipeline = false;
  render->add_option("--input,-i", rd_in, "Instance JSON")->required();
  render->add_option("--svg", rd_svg, "SVG output file")->required();
  render->add_flag("--pipeline", rd_pipeline, "Overlay the pipeline cutting and P3 witnesses");
  render->add_option("--thresholds", rd_thr, "Thresholds JSON for --pipeline");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      LibString out;
      if (grid->parsed()) {
        check(tc_generate_grid(grid_a, grid_tight ? 1 : 0, &out.p), "generate grid");
      } else if (unitgap->parsed()) {
        Json spec{{"lengths", ug_lengths}};
        if (!ug_vectors.empty()) {
          Json vs = Json::array();
          for (const auto& v : ug_vectors) vs.push_back(parse_vector_arg(v));
          spec["vectors"] = vs;
        }
        check(tc_generate_unitgap(spec.dump().c_str(), &out.p), "generate unitgap");
      } else {
        check(tc_generate_random(rnd_n, rnd_seed, rnd_bound, &out.p), "generate random");
      }
      write_output(gen_out, pretty(out.str()));
      return kOk;
    }

    if (cut->parsed()) {
      FamilyPtr fam = load_family(cut_in);
      tc_cutting_options opt;
      tc_cutting_options_init(&opt);
      opt.r = cut_r;
      opt.perturb = cut_perturb ? 1 : 0;
      opt.policy = cut_policy == "strict" ? TC_Q_STRICT
                   : cut_policy == "fixed" ? TC_Q_FIXED
                                           : TC_Q_ADAPTIVE;
      opt.fixed_q = cut_q;
      tc_cutting* raw = nullptr;
      check(tc_cutting_build(fam.get(), &opt, &raw), "cut");
      CuttingPtr c(raw, tc_cutting_free);
      LibString report;
      int pass = 1;
      if (cut_verify) {
        check(tc_cutting_report_json(c.get(), cut_no_simpprop ? 0 : 1, jobs, &pass, &report.p),
              "verify");
        Json j = Json::parse(report.str());
        j.erase("crossings");  // per-cell detail is noise on the console
        write_output(cut_report, j.dump(2));
        if (!pass) std::cerr << "cutting verification failed\n";
        return pass ? kOk : kVerifyFailed;
      }
      Json j{{"n", tc_family_size(fam.get())},
             {"r", cut_r},
             {"cells", tc_cutting_cell_count(c.get())},
             {"verified", false}};
      write_output(cut_report, j.dump(2));
      return kOk;
    }

    if (levels->parsed()) {
      FamilyPtr fam = load_family(lv_in);
      LibString out;
      check(tc_arrangement_dump_json(fam.get(), lv_perturb ? 1 : 0, lv_no_levels ? 0 : 1, &out.p),
            "levels");
      write_output(lv_out, pretty(out.str()));
      return kOk;
    }

    if (inc->parsed()) {
      InstancePtr inst = load_instance(inc_in);
      LibString out;
      int pass = 1;
      check(tc_incidences_json(inst.get(), &pass, &out.p), "incidences");
      write_output(inc_out, pretty(out.str()));
      return pass ? kOk : kVerifyFailed;
    }

    if (ud->parsed()) {
      LibString out;
      check(tc_unit_distance_json(read_file(ud_in).c_str(), &out.p), "unitdist");
      write_output(ud_out, pretty(out.str()));
      return Json::parse(out.str())["st_audit"]["pass"].get<bool>() ? kOk : kVerifyFailed;
    }

    if (pipe->parsed()) {
      InstancePtr inst = load_instance(pp_in);
      std::string thr;
      if (!pp_thr.empty()) thr = read_file(pp_thr);
      LibString out;
      check(tc_pipeline_run(inst.get(), pp_thr.empty() ? nullptr : thr.c_str(), jobs, &out.p),
            "pipeline");
      write_output(pp_report, pretty(out.str()));
      return kOk;
    }

    if (gf->parsed()) {
      tc_gapfit_options opt;
      tc_gapfit_options_init(&opt);
      opt.d_max = gf_dmax;
      opt.size_cap = gf_cap;
      opt.exact = gf_exact ? 1 : 0;
      if (!gf_cov.empty()) opt.min_coverage = gf_cov.c_str();
      LibString out;
      check(tc_gapfit_json(read_file(gf_in).c_str(), &opt, &out.p), "gapfit");
      write_output(gf_out, pretty(out.str()));
      return kOk;
    }

    if (render->parsed()) {
      InstancePtr inst = load_instance(rd_in);
      std::string thr;
      if (!rd_thr.empty()) thr = read_file(rd_thr);
      LibString out;
      check(tc_render_svg(inst.get(), rd_pipeline ? 1 : 0, rd_thr.empty() ? nullptr : thr.c_str(),
                          &out.p),
            "render");
      write_output(rd_svg, out.str());
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "transcut: " << e.what() << '\n';
    return kUsage;
  } catch (const ApiError& e) {
    std::cerr << "transcut: " << e.what() << '\n';
    const bool usage = e.status == TC_ERR_PARSE || e.status == TC_ERR_INVALID_ARGUMENT ||
                       e.status == TC_ERR_DEGENERATE || e.status == TC_ERR_UNSUPPORTED;
    return usage ? kUsage : kVerifyFailed;
  } catch (const std::exception& e) {
    std::cerr << "transcut: " << e.what() << '\n';
    return kVerifyFailed;
  }
  return kUsage;
}
