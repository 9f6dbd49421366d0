#include "cdk/cli/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <random>
#include <sstream>

#include "cdk/common/parallel.hpp"
#include "cdk/dunkl/suites.hpp"
#include "cdk/exactalg/errors.hpp"
#include "cdk/laxdyn/laxdyn.hpp"
#include "cdk/symbolcalc/symbolcalc.hpp"
#include "cdk/transport/plane_wave.hpp"

namespace cdk::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::vector<Rational> parse_rationals(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& s : items) out.push_back(parse_rational(s));
  return out;
}

std::vector<double> parse_doubles(const std::vector<std::string>& items) {
  std::vector<double> out;
  for (const auto& s : items) out.push_back(parse_rational(s).get_d());
  return out;
}

json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(to_fraction_string(q));
  return out;
}

void emit(const json& report, const std::string& path, std::ostream& out) {
  const std::string text = report.dump(2) + "\n";
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text;
}

struct Common {
  std::string out_path;
  std::size_t workers = default_worker_count();
  unsigned long long seed = Defaults::seed;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out_path, "Write the JSON report here instead of stdout");
  cmd->add_option("--workers", c.workers, "Worker threads (default: CDK_WORKERS or 1)")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", c.seed, "Seed for randomized points");
}

// ---- verify

struct VerifyConfig {
  std::size_t n = 3;
  unsigned degree = Defaults::degree;
  std::string suite = "all";
  std::string coupling = "formal";
  bool graded = false;
};

int cmd_verify(const VerifyConfig& cfg, const Common& common, std::ostream& out) {
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  if (cfg.degree < 1) throw UsageError("--deg must be at least 1");
  CouplingPoly c = CouplingPoly::formal();
  if (cfg.coupling != "formal") c = CouplingPoly(parse_rational(cfg.coupling));
  const dunkl::DunklContext ctx(cfg.n, cfg.degree, c);
  const dunkl::SuiteOptions opt{common.workers};
  const bool all = cfg.suite == "all";

  json suites = json::array();
  json reference = json::array();
  std::size_t cases = 0, failures = 0;
  auto asserted = [&](const dunkl::SuiteReport& r) {
    suites.push_back(dunkl::to_json(r));
    cases += r.case_count;
    failures += r.failure_count;
  };
  auto informational = [&](const dunkl::SuiteReport& r) { reference.push_back(dunkl::to_json(r)); };

  if (all || cfg.suite == "zerocurv") {
    asserted(dunkl::zero_curvature_suite(ctx, opt));
    if (cfg.graded) asserted(dunkl::graded_curvature_suite(ctx, opt));
  }
  if (all || cfg.suite == "intertwining") asserted(dunkl::intertwining_suite(ctx, opt));
  if (all || cfg.suite == "sumsq") {
    asserted(dunkl::sum_of_squares_suite(ctx, +1, opt));
    asserted(dunkl::sum_of_squares_graded_suite(ctx, opt));
    informational(dunkl::sum_of_squares_suite(ctx, -1, opt));
  }
  if (all || cfg.suite == "permrel") asserted(dunkl::permutation_relations_suite(ctx, opt));
  if (all || cfg.suite == "restriction") {
    for (auto sym : {dunkl::Symmetry::symmetric, dunkl::Symmetry::antisymmetric}) {
      asserted(dunkl::restriction_suite(ctx, sym, +1, opt));
      informational(dunkl::restriction_suite(ctx, sym, -1, opt));
    }
  }

  json report{{"schemaVersion", kSchemaVersion},
              {"command", "verify"},
              {"N", cfg.n},
              {"degree", cfg.degree},
              {"coupling", cfg.coupling},
              {"suite", cfg.suite},
              {"seed", common.seed},
              {"caseCount", cases},
              {"failureCount", failures},
              {"passed", failures == 0},
              {"suites", suites}};
  // Sign-corrected forms, reported next to the printed ones without affecting the exit code.
  if (!reference.empty()) report["reference"] = reference;
  emit(report, common.out_path, out);
  return failures == 0 ? kOk : kFailures;
}

// ---- transport

struct TransportConfig {
  std::string path_file;
  std::vector<std::string> momenta;
  std::string coupling = "1";
  std::string prefactor;
  double tol = Defaults::tol;
  double holonomy_tol = Defaults::holonomy_tol;
  std::vector<unsigned> compare_dyson;
  double dyson_tol = Defaults::dyson_tol;
  std::size_t flatness_points = 0;
  double lambda_max = 0.0;
  std::string simd = "auto";
};

int cmd_transport(const TransportConfig& cfg, const Common& common, std::ostream& out) {
  const transport::ChamberPath path = transport::ChamberPath::load(cfg.path_file);
  const std::size_t n = path.n();
  std::vector<Rational> p = parse_rationals(cfg.momenta);
  if (p.empty()) {
    // default generic momenta 1, 2, ..., N
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(static_cast<long>(i + 1));
  }
  if (p.size() != n) throw UsageError("--momenta needs " + std::to_string(n) + " entries");
  if (!(cfg.tol > 0.0)) throw UsageError("--tol must be positive");
  const Rational c = parse_rational(cfg.coupling);
  std::optional<Rational> prefactor;
  if (!cfg.prefactor.empty()) prefactor = parse_rational(cfg.prefactor);
  const transport::ConnectionMatrix omega = transport::build_local_system(n, p, c, prefactor);

  transport::OdeOptions ode;
  ode.tol = cfg.tol;
  if (cfg.simd == "scalar")
    ode.kernels = &simd::kernels(simd::Isa::scalar);
  else if (cfg.simd == "avx2")
    ode.kernels = &simd::kernels(simd::Isa::avx2);
  else if (cfg.simd != "auto")
    throw UsageError("--simd must be auto, scalar or avx2");
  const simd::KernelTable& table = ode.kernels ? *ode.kernels : simd::kernels();

  const transport::TransportResult result = transport::transport_ode(omega, path, ode);
  bool ok = true;
  json report{{"schemaVersion", kSchemaVersion},
              {"command", "transport"},
              {"method", transport::method_name(result.method)},
              {"N", n},
              {"p", rationals_to_json(p)},
              {"c", to_fraction_string(c)},
              {"prefactor", to_fraction_string(omega.prefactor())},
              {"tol", cfg.tol},
              {"isa", std::string(simd::isa_name(table.isa))},
              {"closed", path.is_closed()},
              {"matrix", transport::matrix_to_json(result.matrix)},
              {"stepStats", transport::to_json(result.stats)}};
  if (path.is_closed()) {
    const double dev = transport::identity_deviation(result.matrix, result.dim);
    report["holonomyDeviation"] = dev;
    ok = ok && dev <= cfg.holonomy_tol;
  } else {
    report["holonomyDeviation"] = nullptr;
  }
  if (!cfg.compare_dyson.empty()) {
    if (cfg.compare_dyson.size() != 2) throw UsageError("--compare-dyson takes ORDER STEPS");
    const auto dy = transport::transport_dyson(omega, path, cfg.compare_dyson[0], cfg.compare_dyson[1], &table);
    const double dev = transport::inf_norm_diff(dy.matrix, result.matrix, result.dim);
    report["dyson"] = {{"order", cfg.compare_dyson[0]}, {"steps", cfg.compare_dyson[1]}, {"deviation", dev}};
    ok = ok && dev <= cfg.dyson_tol;
  }
  if (cfg.flatness_points > 0) {
    std::mt19937_64 rng(common.seed);
    std::vector<std::vector<Rational>> points;
    for (std::size_t i = 0; i < cfg.flatness_points; ++i) points.push_back(transport::random_chamber_point(rng, n));
    const auto fr = transport::verify_flatness(omega, points);
    report["flatness"] = transport::to_json(fr);
    ok = ok && fr.passed();
  }
  if (cfg.lambda_max > 0.0) {
    transport::PlaneWaveOptions pw;
    pw.lambda_max = cfg.lambda_max;
    pw.ode = ode;
    report["planeWave"] = transport::to_json(transport::plane_wave_map(omega, path.waypoints().front(), pw));
  }
  emit(report, common.out_path, out);
  return ok ? kOk : kFailures;
}

// ---- simulate

struct SimulateConfig {
  std::vector<std::string> x;
  std::vector<std::string> p;
  double g2 = 1.0;
  double omega = 0.0;
  double duration = Defaults::duration;
  double dt = Defaults::dt;
  double drift_tol = Defaults::drift_tol;
  std::size_t sample_every = 100;
  std::string csv;
};

int cmd_simulate(const SimulateConfig& cfg, const Common& common, std::ostream& out) {
  laxdyn::PhasePoint s{parse_doubles(cfg.x), parse_doubles(cfg.p), cfg.g2, cfg.omega};
  try {
    laxdyn::validate(s);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(cfg.dt > 0.0) || !(cfg.duration >= 0.0)) throw UsageError("--dt must be positive and --T non-negative");
  const laxdyn::Trajectory traj = laxdyn::integrate(s, cfg.duration, cfg.dt, {cfg.sample_every});
  if (!cfg.csv.empty()) {
    std::ofstream file(cfg.csv);
    if (!file) throw UsageError("cannot write " + cfg.csv);
    laxdyn::write_csv(file, traj);
  }
  // The trace integrals are conserved for the unit-coupling, untrapped flow only.
  const bool lax_flow = cfg.g2 == 1.0 && cfg.omega == 0.0;
  bool ok = traj.energy_drift <= cfg.drift_tol;
  if (lax_flow)
    for (double d : traj.integral_drift) ok = ok && d <= cfg.drift_tol;

  json report = laxdyn::drift_summary(traj);
  report["schemaVersion"] = kSchemaVersion;
  report["command"] = "simulate";
  report["N"] = s.n();
  report["g2"] = cfg.g2;
  report["omega"] = cfg.omega;
  report["T"] = cfg.duration;
  report["dt"] = cfg.dt;
  report["driftTol"] = cfg.drift_tol;
  report["traceIntegralsAsserted"] = lax_flow;
  report["passed"] = ok;
  report["final"] = {{"x", traj.samples.back().x}, {"p", traj.samples.back().p}};
  if (cfg.g2 == 0.0 && cfg.omega == 0.0) {
    double err = 0.0;
    for (std::size_t i = 0; i < s.n(); ++i)
      err = std::max(err, std::abs(traj.samples.back().x[i] - (s.x[i] + s.p[i] * cfg.duration)));
    report["freeFlightError"] = err;
  }
  emit(report, common.out_path, out);
  return ok ? kOk : kFailures;
}

// ---- symbols

struct SymbolsConfig {
  std::size_t n = 3;
  unsigned degree = Defaults::degree;
  std::vector<std::size_t> symbol;
};

int cmd_symbols(const SymbolsConfig& cfg, const Common& common, std::ostream& out) {
  if (cfg.n < 2) throw UsageError("--n must be at least 2");
  const auto report = symbolcalc::normal_ordering_suite(cfg.n, cfg.degree, common.workers);
  json j = symbolcalc::to_json(report);
  j["schemaVersion"] = kSchemaVersion;
  j["command"] = "symbols";
  j["passed"] = report.all_hold();
  if (!cfg.symbol.empty()) {
    if (cfg.symbol.size() != 3 || cfg.symbol[0] < 1 || cfg.symbol[1] < 1 || cfg.symbol[0] > cfg.n ||
        cfg.symbol[1] > cfg.n || cfg.symbol[0] == cfg.symbol[1])
      throw UsageError("--symbol takes J K M with distinct 1-based J, K <= N");
    j["symbol"] = symbolcalc::symbol_to_json(symbolcalc::symbol_of_permutation(
        cfg.n, cfg.symbol[0] - 1, cfg.symbol[1] - 1, static_cast<unsigned>(cfg.symbol[2])));
  }
  emit(j, common.out_path, out);
  return report.all_hold() ? kOk : kFailures;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Dunkl-operator identities, flat transport and Lax dynamics", "cdk"};
  app.require_subcommand(1);

  Common common;
  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Check the operator identity suites exactly");
  add_common(verify, common);
  verify->add_option("--n", vc.n, "Number of coordinates N");
  verify->add_option("--deg", vc.degree, "Maximal total degree of the test polynomials");
  verify->add_option("--suite", vc.suite, "Identity suite")
      ->check(CLI::IsMember({"zerocurv", "intertwining", "sumsq", "permrel", "restriction", "all"}));
  verify->add_option("--coupling", vc.coupling, "\"formal\" or an exact rational");
  verify->add_flag("--graded", vc.graded, "Also check the c^1 and c^2 curvature pieces separately");

  TransportConfig tc;
  auto* trans = app.add_subcommand("transport", "Parallel transport of the local system along a chamber path");
  add_common(trans, common);
  trans->add_option("--path", tc.path_file, "Path JSON {N, margin, waypoints}")->required();
  trans->add_option("--momenta", tc.momenta, "Momenta p_1..p_N (default 1..N)")->delimiter(',');
  trans->add_option("--coupling", tc.coupling, "Coupling c");
  trans->add_option("--prefactor", tc.prefactor, "Connection prefactor (default: c)");
  trans->add_option("--tol", tc.tol, "ODE tolerance");
  trans->add_option("--holonomy-tol", tc.holonomy_tol, "Allowed holonomy deviation on closed paths");
  trans->add_option("--compare-dyson", tc.compare_dyson, "Also run the Dyson series with ORDER STEPS")
      ->expected(2);
  trans->add_option("--dyson-tol", tc.dyson_tol, "Allowed Dyson/ODE deviation");
  trans->add_option("--flatness-points", tc.flatness_points, "Exact flatness check at this many random points");
  trans->add_option("--plane-wave", tc.lambda_max, "Plane-wave map from the first waypoint up to this dilation");
  trans->add_option("--simd", tc.simd, "Kernel selection: auto, scalar or avx2");

  SimulateConfig sc;
  auto* sim = app.add_subcommand("simulate", "Classical N-body flow and drift of the trace integrals");
  add_common(sim, common);
  sim->add_option("--x", sc.x, "Initial coordinates, strictly increasing")->delimiter(',')->required();
  sim->add_option("--p", sc.p, "Initial momenta")->delimiter(',')->required();
  sim->add_option("--g2", sc.g2, "Coupling g^2");
  sim->add_option("--omega", sc.omega, "Trap frequency");
  sim->add_option("--T", sc.duration, "Duration");
  sim->add_option("--dt", sc.dt, "Step size");
  sim->add_option("--drift-tol", sc.drift_tol, "Allowed relative drift");
  sim->add_option("--sample-every", sc.sample_every, "Steps between stored samples");
  sim->add_option("--csv", sc.csv, "Trajectory CSV output");

  SymbolsConfig yc;
  auto* sym = app.add_subcommand("symbols", "Normal-ordering realizations of the coordinate exchange");
  add_common(sym, common);
  sym->add_option("--n", yc.n, "Number of coordinates N");
  sym->add_option("--deg", yc.degree, "Maximal total degree of the test monomials");
  sym->add_option("--symbol", yc.symbol, "Also emit the symbol of P_JK truncated at M")->expected(3);

  std::vector<std::string> argv_store{"cdk"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*verify) return cmd_verify(vc, common, out);
    if (*trans) return cmd_transport(tc, common, out);
    if (*sim) return cmd_simulate(sc, common, out);
    if (*sym) return cmd_symbols(yc, common, out);
  } catch (const transport::ChamberError& e) {
    err << "chamber error: " << e.what() << "\n";
    return kChamber;
  } catch (const laxdyn::CollisionError& e) {
    err << "collision: " << e.what() << "\n";
    return kCollision;
  } catch (const PoleError& e) {
    err << "chamber error: " << e.what() << "\n";
    return kChamber;
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace cdk::cli
