#include "cdk/laxdyn/laxdyn.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <string>

namespace cdk::laxdyn {

namespace {

using Vec = std::vector<double>;

std::vector<Complex> matmul(const std::vector<Complex>& a, const std::vector<Complex>& b, std::size_t n) {
  std::vector<Complex> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

// dx/dt = p, dp_i/dt = -omega^2 x_i + sum_{j != i} 2 g2 / (x_i - x_j)^3
void derivative(const Vec& x, const Vec& p, double g2, double omega, Vec& dx, Vec& dp) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    dx[i] = p[i];
    double f = -omega * omega * x[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = x[i] - x[j];
      f += 2.0 * g2 / (d * d * d);
    }
    dp[i] = f;
  }
}

Sample make_sample(double t, const PhasePoint& s) {
  Sample out;
  out.t = t;
  out.x = s.x;
  out.p = s.p;
  out.energy = hamiltonian(s);
  const auto tr = trace_integrals(s, 4);
  std::copy(tr.begin(), tr.end(), out.integrals.begin());
  return out;
}

double relative(double now, double start) { return std::abs(now - start) / std::max(std::abs(start), 1.0); }

std::vector<Integer> divisors(Integer v) {
  v = abs(v);
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

// coefficients t^0..t^n; divides by (t - r), returns the remainder
Rational deflate(std::vector<Rational>& poly, const Rational& r) {
  const std::size_t deg = poly.size() - 1;
  std::vector<Rational> q(deg);
  Rational carry = poly[deg];
  for (std::size_t i = deg; i-- > 0;) {
    q[i] = carry;
    carry = poly[i] + carry * r;
  }
  poly = std::move(q);
  return carry;
}

Rational evaluate(const std::vector<Rational>& poly, const Rational& t) {
  Rational acc = 0;
  for (std::size_t i = poly.size(); i-- > 0;) acc = acc * t + poly[i];
  return acc;
}

}  // namespace

void validate(const PhasePoint& s) {
  if (s.x.size() < 2) throw std::invalid_argument("phase point needs N >= 2");
  if (s.p.size() != s.x.size()) throw std::invalid_argument("x and p differ in length");
  if (!(s.g2 >= 0.0) || !(s.omega >= 0.0)) throw std::invalid_argument("g2 and omega must be non-negative");
  for (std::size_t i = 0; i + 1 < s.x.size(); ++i)
    if (!(s.x[i] < s.x[i + 1]))
      throw std::invalid_argument("coordinates must be strictly increasing (x" + std::to_string(i + 1) + " >= x" +
                                  std::to_string(i + 2) + ")");
}

bool LaxMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

LaxMatrix build_lax(const PhasePoint& s) {
  validate(s);
  const std::size_t n = s.n();
  LaxMatrix out{n, std::vector<Complex>(n * n)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      out.entries[j * n + k] = j == k ? Complex(s.p[k], 0.0) : Complex(0.0, 1.0 / (s.x[j] - s.x[k]));
  return out;
}

std::vector<double> trace_integrals(const PhasePoint& s, unsigned jmax) {
  if (jmax < 1) throw std::invalid_argument("jmax must be at least 1");
  const LaxMatrix lax = build_lax(s);
  const std::size_t n = lax.n;
  std::vector<double> out;
  std::vector<Complex> power = lax.entries;
  for (unsigned j = 1; j <= jmax; ++j) {
    if (j > 1) power = matmul(power, lax.entries, n);
    double tr = 0.0;
    for (std::size_t i = 0; i < n; ++i) tr += power[i * n + i].real();
    out.push_back(tr);
  }
  return out;
}

double trace_p3_explicit(const PhasePoint& s) {
  validate(s);
  const std::size_t n = s.n();
  const auto& x = s.x;
  double kinetic = 0.0, pair = 0.0;
  Complex triple = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    kinetic += s.p[i] * s.p[i] * s.p[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const double d = x[i] - x[j];
      pair += s.p[i] / (d * d);
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        triple += Complex(0.0, -1.0) / ((x[i] - x[j]) * (x[j] - x[k]) * (x[k] - x[i]));
      }
    }
  }
  return kinetic + 3.0 * pair + triple.real();
}

double hamiltonian(const PhasePoint& s) {
  double h = 0.0;
  const std::size_t n = s.n();
  for (std::size_t i = 0; i < n; ++i) {
    h += 0.5 * s.p[i] * s.p[i] + 0.5 * s.omega * s.omega * s.x[i] * s.x[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = s.x[i] - s.x[j];
      h += s.g2 / (d * d);
    }
  }
  return h;
}

CollisionError::CollisionError(double time, std::size_t pair)
    : std::runtime_error("particles " + std::to_string(pair + 1) + " and " + std::to_string(pair + 2) +
                         " collided at t = " + std::to_string(time)),
      time_(time),
      pair_(pair) {}

Trajectory integrate(const PhasePoint& s0, double duration, double dt, const IntegrateOptions& options) {
  validate(s0);
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(duration >= 0.0)) throw std::invalid_argument("duration must be non-negative");
  const std::size_t n = s0.n();
  const std::size_t every = std::max<std::size_t>(options.sample_every, 1);
  const auto steps = static_cast<std::size_t>(std::llround(std::ceil(duration / dt - 1e-9)));

  Trajectory traj;
  PhasePoint s = s0;
  const Sample first = make_sample(0.0, s);
  traj.samples.push_back(first);

  Vec k1x(n), k1p(n), k2x(n), k2p(n), k3x(n), k3p(n), k4x(n), k4p(n), tx(n), tp(n);
  double t = 0.0;
  for (std::size_t step = 1; step <= steps; ++step) {
    const double h = std::min(dt, duration - t);
    derivative(s.x, s.p, s.g2, s.omega, k1x, k1p);
    for (std::size_t i = 0; i < n; ++i) tx[i] = s.x[i] + 0.5 * h * k1x[i], tp[i] = s.p[i] + 0.5 * h * k1p[i];
    derivative(tx, tp, s.g2, s.omega, k2x, k2p);
    for (std::size_t i = 0; i < n; ++i) tx[i] = s.x[i] + 0.5 * h * k2x[i], tp[i] = s.p[i] + 0.5 * h * k2p[i];
    derivative(tx, tp, s.g2, s.omega, k3x, k3p);
    for (std::size_t i = 0; i < n; ++i) tx[i] = s.x[i] + h * k3x[i], tp[i] = s.p[i] + h * k3p[i];
    derivative(tx, tp, s.g2, s.omega, k4x, k4p);
    for (std::size_t i = 0; i < n; ++i) {
      s.x[i] += h / 6.0 * (k1x[i] + 2.0 * k2x[i] + 2.0 * k3x[i] + k4x[i]);
      s.p[i] += h / 6.0 * (k1p[i] + 2.0 * k2p[i] + 2.0 * k3p[i] + k4p[i]);
    }
    t = step == steps ? duration : t + h;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(s.x[i] < s.x[i + 1])) throw CollisionError(t, i);

    const Sample now = make_sample(t, s);
    traj.energy_drift = std::max(traj.energy_drift, relative(now.energy, first.energy));
    for (std::size_t j = 0; j < 4; ++j)
      traj.integral_drift[j] = std::max(traj.integral_drift[j], relative(now.integrals[j], first.integrals[j]));
    if (step % every == 0 || step == steps) traj.samples.push_back(now);
  }
  traj.steps = steps;
  return traj;
}

void write_csv(std::ostream& out, const Trajectory& trajectory) {
  if (trajectory.samples.empty()) return;
  const std::size_t n = trajectory.samples.front().x.size();
  out << "t";
  for (std::size_t i = 1; i <= n; ++i) out << ",x" << i;
  for (std::size_t i = 1; i <= n; ++i) out << ",p" << i;
  out << ",H,I1,I2,I3,I4\n";
  out << std::setprecision(17);
  for (const auto& s : trajectory.samples) {
    out << s.t;
    for (double v : s.x) out << ',' << v;
    for (double v : s.p) out << ',' << v;
    out << ',' << s.energy;
    for (double v : s.integrals) out << ',' << v;
    out << '\n';
  }
}

nlohmann::json drift_summary(const Trajectory& trajectory) {
  nlohmann::json drift{{"H", trajectory.energy_drift}};
  for (std::size_t j = 0; j < 4; ++j) drift["I" + std::to_string(j + 1)] = trajectory.integral_drift[j];
  return {{"maxDrift", drift}, {"steps", trajectory.steps}, {"samples", trajectory.samples.size()}};
}

std::vector<Rational> noether_matrix(std::size_t n) {
  std::vector<Rational> m(n * n, Rational(-1));
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 0;
  return m;
}

std::vector<Rational> characteristic_polynomial(const std::vector<Rational>& m, std::size_t n) {
  if (m.size() != n * n) throw std::invalid_argument("matrix size does not match n");
  // M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k
  std::vector<Rational> coeff(n + 1);
  coeff[n] = 1;
  std::vector<Rational> mk(n * n, Rational(0));
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> am(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (sgn(m[i * n + l]) == 0) continue;
        for (std::size_t j = 0; j < n; ++j) am[i * n + j] += m[i * n + l] * mk[l * n + j];
      }
    for (std::size_t i = 0; i < n; ++i) am[i * n + i] += coeff[n - k + 1];
    mk = std::move(am);
    // trace of A M_k
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += m[i * n + l] * mk[l * n + i];
    coeff[n - k] = -tr / static_cast<long>(k);
  }
  return coeff;
}

Spectrum rational_spectrum(const std::vector<Rational>& m, std::size_t n) {
  std::vector<Rational> poly = characteristic_polynomial(m, n);
  Spectrum out;
  auto add_root = [&](const Rational& r) {
    for (auto& [v, mult] : out.rational_roots)
      if (v == r) {
        ++mult;
        return;
      }
    out.rational_roots.emplace_back(r, 1);
  };
  while (poly.size() > 1 && sgn(poly[0]) == 0) {
    deflate(poly, Rational(0));
    add_root(Rational(0));
  }
  bool found = true;
  while (poly.size() > 1 && found) {
    found = false;
    // integer coefficients with the same roots
    Integer lcm = 1;
    for (const auto& c : poly) lcm = lcm * c.get_den() / gcd(lcm, c.get_den());
    const Integer a0 = Rational(poly.front() * lcm).get_num();
    const Integer an = Rational(poly.back() * lcm).get_num();
    for (const auto& num : divisors(a0)) {
      for (const auto& den : divisors(an)) {
        for (int sign : {1, -1}) {
          Rational r(num * sign, den);
          r.canonicalize();
          if (sgn(evaluate(poly, r)) == 0) {
            deflate(poly, r);
            add_root(r);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  out.irrational_degree = poly.size() - 1;
  std::sort(out.rational_roots.begin(), out.rational_roots.end());
  return out;
}

Spectrum noether_spectrum(std::size_t n) {
  if (n < 2) throw std::invalid_argument("Noether spectrum needs N >= 2");
  return rational_spectrum(noether_matrix(n), n);
}

}  // namespace cdk::laxdyn
