#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cdk/common/parallel.hpp"
#include "cdk/dunkl/suites.hpp"
#include "cdk/laxdyn/laxdyn.hpp"
#include "cdk/symbolcalc/symbolcalc.hpp"
#include "cdk/transport/chamber_path.hpp"
#include "cdk/transport/connection.hpp"
#include "cdk/transport/plane_wave.hpp"
#include "cdk/transport/transport.hpp"

namespace {

using namespace cdk;
using dunkl::DunklContext;
using dunkl::SuiteReport;
using dunkl::Symmetry;

struct Outcome {
  bool passed = true;
  std::vector<std::string> details;

  void require(bool ok, std::string line) {
    passed = passed && ok;
    details.push_back((ok ? "ok    " : "FAIL  ") + line);
  }
  void note(std::string line) { details.push_back("info  " + line); }
};

struct Sizes {
  std::size_t n;
  unsigned degree;
};

// N = 2, 3 at degree 6 and N = 4 at degree 4.
const std::vector<Sizes> kSpanningSets = {{2, 6}, {3, 6}, {4, 4}};

dunkl::SuiteOptions suite_options() {
  dunkl::SuiteOptions opt;
  opt.workers = default_worker_count();
  return opt;
}

std::string summary(const SuiteReport& r) {
  std::string s = r.identity + " N=" + std::to_string(r.n) + " deg=" + std::to_string(r.degree) + " c=" + r.coupling +
                  ": " + std::to_string(r.failure_count) + "/" + std::to_string(r.case_count) + " failing";
  if (!r.failure_cases.empty()) s += " (first: " + r.failure_cases.front() + ")";
  return s;
}

void require_suite(Outcome& out, const SuiteReport& r) { out.require(r.passed(), summary(r)); }
void note_suite(Outcome& out, const SuiteReport& r) { out.note(summary(r)); }

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

Outcome zero_curvature() {
  Outcome out;
  for (const auto& s : kSpanningSets) {
    const DunklContext ctx(s.n, s.degree);
    require_suite(out, dunkl::zero_curvature_suite(ctx, suite_options()));
    require_suite(out, dunkl::graded_curvature_suite(ctx, suite_options()));
  }
  return out;
}

Outcome intertwining() {
  Outcome out;
  for (const auto& s : kSpanningSets) {
    const DunklContext ctx(s.n, s.degree);
    require_suite(out, dunkl::intertwining_suite(ctx, suite_options()));
    require_suite(out, dunkl::permutation_relations_suite(ctx, suite_options()));
  }
  return out;
}

Outcome sum_of_squares() {
  Outcome out;
  for (const auto& s : kSpanningSets) {
    const DunklContext ctx(s.n, s.degree);
    require_suite(out, dunkl::sum_of_squares_suite(ctx, +1, suite_options()));
    require_suite(out, dunkl::sum_of_squares_graded_suite(ctx, suite_options()));
    note_suite(out, dunkl::sum_of_squares_suite(ctx, -1, suite_options()));
  }
  out.note("the -1 rows use minus signs on both coupling terms of the expansion");
  return out;
}

Outcome restriction() {
  Outcome out;
  for (const auto& s : kSpanningSets) {
    const DunklContext ctx(s.n, s.degree);
    for (const auto sym : {Symmetry::symmetric, Symmetry::antisymmetric}) {
      require_suite(out, dunkl::restriction_suite(ctx, sym, +1, suite_options()));
      note_suite(out, dunkl::restriction_suite(ctx, sym, -1, suite_options()));
    }
  }
  out.note("the -1 rows check sum nabla^2 f - Laplacian f + 2 g V2 f == 0");
  return out;
}

Outcome normal_ordering() {
  Outcome out;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto report = symbolcalc::normal_ordering_suite(n, 6, default_worker_count());
    for (const auto& e : report.entries) {
      const std::string line = fmt("N=%zu %s [%s]: %zu/%zu failing", n, e.name.c_str(), e.form.c_str(),
                                   e.failure_count, e.case_count);
      if (e.required) {
        out.require(e.holds(), line);
      } else {
        out.note(line + (e.holds() ? " (holds verbatim)" : " (does not hold verbatim)"));
      }
    }
  }
  return out;
}

Outcome flatness() {
  Outcome out;
  std::mt19937_64 rng(20240601);
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Rational> p;
    do {
      p.clear();
      for (std::size_t i = 0; i < n; ++i) p.push_back(transport::random_rational(rng, 9, 7));
    } while (!transport::is_generic(p));
    Rational c = 0;
    while (c == 0) c = transport::random_rational(rng, 9, 7);
    const auto omega = transport::build_local_system(n, p, c);
    std::vector<std::vector<Rational>> points;
    for (int i = 0; i < 25; ++i) points.push_back(transport::random_chamber_point(rng, n));
    const auto r = transport::verify_flatness(omega, points);
    out.require(r.passed(), fmt("N=%zu c=%s: %zu/%zu curvature entries nonzero (derivative part %zu, commutator %zu)", n,
                                c.get_str().c_str(), r.failure_count, r.pair_count, r.derivative_failures,
                                r.commutator_failures));
  }
  return out;
}

std::vector<double> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> start(-1.0, 1.0), gap(0.3, 1.5);
  std::vector<double> x{start(rng)};
  while (x.size() < n) x.push_back(x.back() + gap(rng));
  return x;
}

Outcome holonomy() {
  Outcome out;
  std::mt19937_64 rng(7);
  const std::vector<Rational> p = {Rational(1, 2), Rational(-1, 3), Rational(6, 5)};
  const auto omega = transport::build_local_system(3, p, 1);
  transport::OdeOptions opt;
  opt.tol = 1e-10;
  double worst = 0.0;
  for (int loop = 0; loop < 10; ++loop) {
    std::uniform_int_distribution<int> corners(3, 6);
    std::vector<std::vector<double>> w;
    const int k = corners(rng);
    for (int i = 0; i < k; ++i) w.push_back(random_point(rng, 3));
    w.push_back(w.front());
    const transport::ChamberPath path(3, w, 0.1);
    const auto r = transport::transport_ode(omega, path, opt);
    const double dev = transport::identity_deviation(r.matrix, r.dim);
    worst = std::max(worst, dev);
    out.require(dev <= 1e-8, fmt("loop %d with %d corners: |W - I| = %.3e", loop, k, dev));
  }
  const std::vector<double> a = {0.0, 1.0, 2.0}, b = {0.6, 1.4, 3.1};
  const transport::ChamberPath direct(3, {a, b}, 0.1);
  const transport::ChamberPath detour(3, {a, {-0.8, 0.5, 2.4}, {0.1, 2.2, 3.0}, b}, 0.1);
  const auto w1 = transport::transport_ode(omega, direct, opt);
  const auto w2 = transport::transport_ode(omega, detour, opt);
  const double diff = transport::inf_norm_diff(w1.matrix, w2.matrix, w1.dim);
  out.require(diff <= 1e-8, fmt("open paths with shared endpoints: |W1 - W2| = %.3e", diff));
  out.note(fmt("worst loop deviation %.3e", worst));
  return out;
}

Outcome dyson() {
  Outcome out;
  const std::vector<Rational> p = {Rational(1, 2), Rational(-1, 3), Rational(6, 5)};
  const auto omega = transport::build_local_system(3, p, 1);
  const transport::ChamberPath path(3, {{0.0, 1.0, 2.0}, {0.05, 1.1, 2.1}, {0.1, 1.15, 2.25}});
  const auto ode = transport::transport_ode(omega, path);
  for (unsigned m : {2u, 4u, 6u, 8u}) {
    const auto d = transport::transport_dyson(omega, path, m, 400);
    const double diff = transport::inf_norm_diff(ode.matrix, d.matrix, ode.dim);
    if (m == 8) {
      out.require(diff <= 1e-6, fmt("M=8 S=400: |W_dyson - W_ode| = %.3e", diff));
    } else {
      out.note(fmt("M=%u S=400: |W_dyson - W_ode| = %.3e", m, diff));
    }
  }
  return out;
}

Outcome lax() {
  Outcome out;
  const std::vector<laxdyn::PhasePoint> runs = {{{0.0, 1.0, 3.0}, {1.0, 0.0, -1.0}},
                                                {{-2.0, -0.5, 1.0, 2.5}, {0.5, -0.25, 0.3, -0.6}}};
  for (const auto& s : runs) {
    const auto t = laxdyn::integrate(s, 10.0, 1e-4, {.sample_every = 10000});
    for (int j = 0; j < 4; ++j) {
      out.require(t.integral_drift[j] <= 1e-8,
                  fmt("N=%zu I%d relative drift %.3e over %zu steps", s.n(), j + 1, t.integral_drift[j], t.steps));
    }
    out.note(fmt("N=%zu energy relative drift %.3e", s.n(), t.energy_drift));
  }

  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> mom(-2.0, 2.0);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 5;
    laxdyn::PhasePoint s{random_point(rng, n), {}};
    for (std::size_t k = 0; k < n; ++k) s.p.push_back(mom(rng));
    const double explicit_value = laxdyn::trace_p3_explicit(s);
    const double trace = laxdyn::trace_integrals(s, 3)[2];
    worst = std::max(worst, std::abs(explicit_value - trace) / std::max(1.0, std::abs(trace)));
  }
  out.require(worst <= 1e-12, fmt("p3 closed form vs tr P^3 at 100 configurations: max relative gap %.3e", worst));

  for (std::size_t n = 2; n <= 8; ++n) {
    const auto spectrum = laxdyn::noether_spectrum(n);
    const long shift = 1 - static_cast<long>(n);
    const bool ok = spectrum.irrational_degree == 0 && spectrum.rational_roots.size() == 2 &&
                    spectrum.rational_roots[0] == std::pair<Rational, std::size_t>{Rational(shift), 1} &&
                    spectrum.rational_roots[1] == std::pair<Rational, std::size_t>{Rational(1), n - 1};
    std::string roots;
    for (const auto& [v, m] : spectrum.rational_roots) roots += " " + v.get_str() + "^" + std::to_string(m);
    out.require(ok, fmt("N=%zu Noether spectrum:%s", n, roots.c_str()));
  }
  return out;
}

Outcome free_limit() {
  Outcome out;
  const auto zero = CouplingPoly(0);
  for (const auto& s : kSpanningSets) {
    const DunklContext ctx(s.n, s.degree, zero);
    const auto opt = suite_options();
    require_suite(out, dunkl::zero_curvature_suite(ctx, opt));
    require_suite(out, dunkl::graded_curvature_suite(ctx, opt));
    require_suite(out, dunkl::intertwining_suite(ctx, opt));
    require_suite(out, dunkl::permutation_relations_suite(ctx, opt));
    for (int sign : {+1, -1}) {
      require_suite(out, dunkl::sum_of_squares_suite(ctx, sign, opt));
      for (const auto sym : {Symmetry::symmetric, Symmetry::antisymmetric}) {
        require_suite(out, dunkl::restriction_suite(ctx, sym, sign, opt));
      }
    }
    require_suite(out, dunkl::sum_of_squares_graded_suite(ctx, opt));
  }

  std::mt19937_64 rng(3);
  for (std::size_t n = 2; n <= 4; ++n) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(Rational(static_cast<long>(2 * i + 1), 3));
    const auto omega = transport::build_local_system(n, p, 0);
    std::vector<std::vector<Rational>> points;
    for (int i = 0; i < 25; ++i) points.push_back(transport::random_chamber_point(rng, n));
    const auto flat = transport::verify_flatness(omega, points);
    out.require(flat.passed(), fmt("N=%zu c=0 flatness: %zu nonzero", n, flat.failure_count));

    const auto a = random_point(rng, n), b = random_point(rng, n);
    const transport::ChamberPath path(n, {a, random_point(rng, n), b});
    const auto w = transport::transport_ode(omega, path);
    std::vector<double> dx(n);
    for (std::size_t k = 0; k < n; ++k) dx[k] = b[k] - a[k];
    const auto phase = transport::free_phase(omega, dx);
    const double diff = transport::inf_norm_diff(w.matrix, phase, w.dim);
    out.require(diff <= 1e-8, fmt("N=%zu c=0 transport vs diagonal phase: %.3e", n, diff));
  }

  const laxdyn::PhasePoint s{{0.0, 1.0, 3.0}, {-1.0, 0.0, 1.0}, 0.0, 0.0};
  const auto t = laxdyn::integrate(s, 1.0, 1e-3, {.sample_every = 1000});
  double err = 0.0;
  for (std::size_t k = 0; k < 3; ++k) {
    err = std::max({err, std::abs(t.samples.back().x[k] - (s.x[k] + s.p[k])), std::abs(t.samples.back().p[k] - s.p[k])});
  }
  out.require(err <= 1e-12, fmt("g2=0 free flight error %.3e", err));
  return out;
}

struct Criterion {
  int id;
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria = {
    {1, "zero curvature, formal c", zero_curvature},
    {2, "intertwining and exchange relations, formal c", intertwining},
    {3, "sum of squares with graded pieces, formal c", sum_of_squares},
    {4, "restriction coefficients c(c+1) and c(c-1)", restriction},
    {5, "normal ordering realizations of the swap", normal_ordering},
    {6, "exact flatness of the vectorized system", flatness},
    {7, "holonomy and path independence", holonomy},
    {8, "Dyson series vs ODE transport", dyson},
    {9, "Lax integrals, p3 closed form, Noether spectrum", lax},
    {10, "free limit c = 0", free_limit},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  int only = 0;
  bool verbose = false;
  app.add_option("--criterion", only, "Run a single criterion")->check(CLI::Range(1, 10));
  app.add_flag("-v,--verbose", verbose, "Print every check");
  CLI11_PARSE(app, argc, argv);

  bool all_passed = true;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_passed = all_passed && o.passed;
    std::printf("%s criterion %d: %s (%.1fs)\n", o.passed ? "PASS" : "FAIL", c.id, c.title, secs);
    for (const auto& line : o.details) {
      if (verbose || !o.passed || line.rfind("info", 0) == 0) std::printf("    %s\n", line.c_str());
    }
    std::fflush(stdout);
  }
  return all_passed ? 0 : 1;
}
