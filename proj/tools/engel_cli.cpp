// engel: command-line front end.
//
// Exit codes: 0 success, 1 numeric failure, 2 usage error.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "engel/acceptance.hpp"
#include "engel/cutlocus.hpp"
#include "engel/io.hpp"
#include "engel/synthesis.hpp"

using namespace engel;

namespace {

constexpr int kNumericFailure = 1;
constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return format_double(v);
}

// A point given either as four positionals or as --x/--y/--z/--w.
struct PointArgs {
  std::vector<double> positional;
  double x = 0.0, y = 0.0, z = 0.0, w = 0.0;
  std::vector<CLI::Option*> named;

  void attach(CLI::App* sub) {
    sub->add_option("point", positional, "x y z w")->expected(4)->allow_extra_args(false);
    named = {sub->add_option("--x", x), sub->add_option("--y", y), sub->add_option("--z", z),
             sub->add_option("--w", w)};
  }

  Point get() const {
    bool any_named = false;
    for (const CLI::Option* o : named) any_named = any_named || o->count() > 0;
    if (!positional.empty() && any_named) throw UsageError("give the point either positionally or with --x --y --z --w");
    if (!positional.empty()) return {positional[0], positional[1], positional[2], positional[3]};
    if (!any_named) throw UsageError("a point is required: x y z w");
    return {x, y, z, w};
  }
};

struct Overrides {
  std::string config_path;
  std::string format;
  double eps_class = 0.0, eps_strat = 0.0, eps_zero = 0.0, rtol = 0.0, atol = 0.0;
  std::uint64_t seed = 0;
  CLI::Option *o_eps_class{}, *o_eps_strat{}, *o_eps_zero{}, *o_rtol{}, *o_atol{}, *o_seed{}, *o_format{};

  Config resolve() const {
    Config c;
    std::string path = config_path;
    if (path.empty()) {
      if (const char* env = std::getenv(kConfigEnvVar)) path = env;
    }
    if (!path.empty()) c = load_config(path, c);
    if (o_format->count()) c.format = format;
    if (o_eps_class->count()) c.eps_class = eps_class;
    if (o_eps_strat->count()) c.eps_strat = eps_strat;
    if (o_eps_zero->count()) c.eps_zero = eps_zero;
    if (o_rtol->count()) c.ode_rtol = rtol;
    if (o_atol->count()) c.ode_atol = atol;
    if (o_seed->count()) c.seed = seed;
    return c;
  }
};

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_geodesic(const Config& cfg, const Covector& l, double t) {
  const auto samples = trajectory(l, t, cfg.samples, cfg.ode());
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const TrajectorySample& s : samples) {
      rows.push_back({{"t", s.t}, {"x", s.q.x}, {"y", s.q.y}, {"z", s.q.z}, {"w", s.q.w}, {"theta", s.theta}, {"c", s.c}});
    }
    print_json({{"covector", {{"theta", l.theta}, {"c", l.c}, {"alpha", l.alpha}}},
                {"class", to_string(classify(l, cfg.eps_class).tag)},
                {"samples", rows}});
    return 0;
  }
  std::cout << kTrajectoryCsvHeader << '\n';
  for (const TrajectorySample& s : samples) std::cout << to_csv_row(s) << '\n';
  return 0;
}

int cmd_cut_time(const Config& cfg, const Covector& l) {
  const CovectorClass cls = classify(l, cfg.eps_class);
  const double tc = t_cut(l, cfg.eps_class);
  if (cfg.format == "json") {
    Json j = {{"class", to_string(cls.tag)}, {"k", cls.k}};
    j["t_cut"] = std::isinf(tc) ? Json("inf") : Json(tc);
    print_json(j);
  } else {
    std::cout << "class,k,t_cut\n" << to_string(cls.tag) << ',' << num(cls.k) << ',' << num(tc) << '\n';
  }
  return 0;
}

int cmd_classify(const Config& cfg, const Point& q) {
  const Stratum s = classify_point(q, cfg.synthesis().strata);
  if (cfg.format == "json") {
    print_json(to_json(s));
  } else {
    std::cout << s.label() << ' ' << to_string(s.multiplicity) << '\n';
  }
  return 0;
}

int cmd_synthesize(const Config& cfg, const Point& q) {
  print_json(to_json(minimizers(q, cfg.synthesis())));
  return 0;
}

int cmd_curves(const Config& cfg, const std::string& which) {
  const auto id = curve_from_string(which);
  if (!id) throw UsageError("--which must be one of w1, w21, w22, fix3");
  const auto pts = sample_curve(*id, cfg.grid);
  const char* param = *id == CurveId::Fix3 ? "p" : "k";
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const CurveSample& s : pts) rows.push_back({{param, s.param}, {"Y", s.Y}, {"W", s.W}});
    print_json({{"curve", which}, {"samples", rows}});
    return 0;
  }
  std::cout << param << ",Y,W\n";
  for (const CurveSample& s : pts) std::cout << num(s.param) << ',' << num(s.Y) << ',' << num(s.W) << '\n';
  return 0;
}

int cmd_selftest(const Config& cfg, bool timing) {
  std::cout << "defaults " << to_json(Config{}).dump() << '\n';
  std::cout << "config   " << to_json(cfg).dump() << '\n';
  AcceptanceOptions opt;
  opt.seed = cfg.seed;
  opt.synthesis = cfg.synthesis();
  int passed = 0;
  run_acceptance(opt, [&](const CriterionResult& r) {
    passed += r.pass ? 1 : 0;
    std::cout << format_result(r, timing) << '\n' << std::flush;
  });
  std::cout << passed << '/' << kCriterionCount << " criteria passed\n";
  return passed == kCriterionCount ? 0 : kNumericFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sub-Riemannian geodesics, cut times and optimal synthesis on the Engel group"};
  app.require_subcommand(1);
  app.fallthrough();

  Overrides ov;
  app.add_option("--config", ov.config_path, std::string("JSON config file (default: $") + kConfigEnvVar + ")");
  ov.o_format = app.add_option("--format", ov.format, "tabular output: csv or json");
  ov.o_eps_class = app.add_option("--eps-class", ov.eps_class, "covector class tolerance");
  ov.o_eps_strat = app.add_option("--eps-strat", ov.eps_strat, "boundary curve tolerance on (Y, W)");
  ov.o_eps_zero = app.add_option("--eps-zero", ov.eps_zero, "relative zero test for x and z");
  ov.o_rtol = app.add_option("--rtol", ov.rtol, "ODE relative tolerance");
  ov.o_atol = app.add_option("--atol", ov.atol, "ODE absolute tolerance");
  ov.o_seed = app.add_option("--seed", ov.seed, "selftest random seed");

  Covector lam;
  double t = 0.0;
  int samples = 0;
  auto* geo = app.add_subcommand("geodesic", "sampled trajectory (t,x,y,z,w,theta,c)");
  geo->add_option("--theta", lam.theta)->required();
  geo->add_option("--c", lam.c)->required();
  geo->add_option("--alpha", lam.alpha)->required();
  geo->add_option("--t", t)->required();
  auto* o_samples = geo->add_option("--samples", samples, "number of samples (>= 2)");

  Covector lam_cut;
  auto* cut = app.add_subcommand("cut-time", "cut time and covector class");
  cut->add_option("--theta", lam_cut.theta)->required();
  cut->add_option("--c", lam_cut.c)->required();
  cut->add_option("--alpha", lam_cut.alpha)->required();

  PointArgs cls_pt, syn_pt;
  auto* cls = app.add_subcommand("classify", "stratum label and multiplicity");
  cls_pt.attach(cls);

  double tol = 0.0;
  int family = 0;
  auto* syn = app.add_subcommand("synthesize", "all minimizers as JSON");
  syn_pt.attach(syn);
  auto* o_tol = syn->add_option("--tol", tol, "endpoint residual tolerance");
  auto* o_family = syn->add_option("--family-samples", family, "samples on the figure-eight family");

  std::string which;
  int grid = 0;
  auto* curves = app.add_subcommand("curves", "boundary curve samples (param,Y,W)");
  curves->add_option("--which", which, "w1 | w21 | w22 | fix3")->required();
  auto* o_grid = curves->add_option("--grid", grid, "number of samples (>= 2)");

  auto* k0_cmd = app.add_subcommand("k0", "the modulus k0 to 12 digits");

  bool timing = false;
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_flag("--timing", timing, "append wall-clock times (output is then not reproducible)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    Config cfg = ov.resolve();
    if (o_samples->count()) cfg.samples = samples;
    if (o_tol->count()) cfg.tol = tol;
    if (o_family->count()) cfg.family_samples = family;
    if (o_grid->count()) cfg.grid = grid;
    cfg.validate();

    if (geo->parsed()) return cmd_geodesic(cfg, lam, t);
    if (cut->parsed()) return cmd_cut_time(cfg, lam_cut);
    if (cls->parsed()) return cmd_classify(cfg, cls_pt.get());
    if (syn->parsed()) return cmd_synthesize(cfg, syn_pt.get());
    if (curves->parsed()) return cmd_curves(cfg, which);
    if (k0_cmd->parsed()) {
      std::printf("%.12f\n", k0());
      return 0;
    }
    if (self->parsed()) return cmd_selftest(cfg, timing);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ConvergenceError& e) {
    std::cerr << "numeric failure: " << e.what() << " (best residual " << num(e.best_residual()) << ")\n";
    return kNumericFailure;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kUsageError;
}
