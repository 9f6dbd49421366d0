#include "cdk/transport/connection.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "cdk/exactalg/errors.hpp"

namespace cdk::transport {

namespace {

double abs_d(const Rational& q) { return std::abs(q.get_d()); }

void check_chamber(std::span<const Rational> x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (x[i] == x[j]) throw PoleError(i, j);
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (!(x[i] < x[i + 1])) throw std::invalid_argument("point is not in the chamber x1 < ... < xN");
}

std::string point_label(std::span<const Rational> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].get_str();
  return s + ")";
}

}  // namespace

bool ExactMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const auto& e) { return e.is_zero(); });
}

std::size_t ExactMatrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const auto& e) { return !e.is_zero(); }));
}

double ExactMatrix::max_abs() const {
  double out = 0.0;
  for (const auto& e : entries_) out = std::max(out, abs_d(e.re) + abs_d(e.im));
  return out;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("matrix dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix dimension mismatch");
  const std::size_t d = a.dim_;
  ExactMatrix out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k) {
      const ExactComplex& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < d; ++j) {
        const ExactComplex& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  return out;
}

ConnectionMatrix::ConnectionMatrix(std::size_t n, std::vector<Rational> momentum, Rational prefactor)
    : n_(n), momentum_(std::move(momentum)), prefactor_(std::move(prefactor)), group_(n) {
  if (momentum_.size() != n_) throw std::invalid_argument("momentum needs one entry per coordinate");
  const std::size_t d = group_.order();
  diag_.assign(n_, std::vector<std::size_t>(d));
  off_.assign(n_, std::vector<std::vector<OffDiagonalEntry>>(d));
  for (std::size_t k = 0; k < n_; ++k) {
    for (std::size_t row = 0; row < d; ++row) {
      const Permutation& s = group_.element(row);
      const std::size_t m = s.inverse()(k);
      diag_[k][row] = m;
      for (std::size_t mp = 0; mp < n_; ++mp) {
        if (mp == m) continue;
        const Permutation t = s * Permutation::transposition(n_, mp, m);
        off_[k][row].push_back({group_.index_of(t), s(mp)});
      }
    }
  }
  momentum_d_.reserve(n_);
  for (const auto& p : momentum_) momentum_d_.push_back(p.get_d());
  prefactor_d_ = prefactor_.get_d();
}

void ConnectionMatrix::evaluate(std::size_t k, std::span<const double> x, Complex* out) const {
  std::vector<double> v(n_, 0.0);
  v.at(k) = 1.0;
  evaluate_along(x, v, out);
}

void ConnectionMatrix::evaluate_along(std::span<const double> x, std::span<const double> velocity,
                                      Complex* out) const {
  if (x.size() != n_ || velocity.size() != n_) throw std::invalid_argument("point has wrong arity");
  const std::size_t d = dim();
  std::fill(out, out + d * d, Complex(0.0, 0.0));
  for (std::size_t k = 0; k < n_; ++k) {
    const double vk = velocity[k];
    if (vk == 0.0) continue;
    for (std::size_t row = 0; row < d; ++row) {
      out[row * d + row] += Complex(0.0, vk * momentum_d_[diag_[k][row]]);
      for (const auto& e : off_[k][row]) out[row * d + e.column] += vk * prefactor_d_ / (x[e.wall] - x[k]);
    }
  }
}

ExactMatrix ConnectionMatrix::evaluate_exact(std::size_t k, std::span<const Rational> x) const {
  if (x.size() != n_) throw std::invalid_argument("point has wrong arity");
  const std::size_t d = dim();
  ExactMatrix out(d);
  for (std::size_t row = 0; row < d; ++row) {
    out(row, row).im += momentum_[diag_[k][row]];
    for (const auto& e : off_[k][row]) {
      const Rational gap = x[e.wall] - x[k];
      if (sgn(gap) == 0) throw PoleError(std::min(e.wall, k), std::max(e.wall, k));
      out(row, e.column).re += prefactor_ / gap;
    }
  }
  return out;
}

ExactMatrix ConnectionMatrix::derivative_exact(std::size_t k, std::size_t j, std::span<const Rational> x) const {
  if (x.size() != n_) throw std::invalid_argument("point has wrong arity");
  const std::size_t d = dim();
  ExactMatrix out(d);
  for (std::size_t row = 0; row < d; ++row) {
    for (const auto& e : off_[k][row]) {
      // d/dx_j of kappa / (x_w - x_k)
      const Rational gap = x[e.wall] - x[k];
      if (sgn(gap) == 0) throw PoleError(std::min(e.wall, k), std::max(e.wall, k));
      const Rational sq = gap * gap;
      if (j == e.wall) out(row, e.column).re -= prefactor_ / sq;
      if (j == k) out(row, e.column).re += prefactor_ / sq;
    }
  }
  return out;
}

ConnectionMatrix build_local_system(std::size_t n, std::vector<Rational> momentum, const Rational& coupling,
                                    std::optional<Rational> prefactor, std::size_t cap) {
  if (n < 2) throw std::invalid_argument("local system needs N >= 2");
  if (n > cap)
    throw std::invalid_argument("N = " + std::to_string(n) + " exceeds the cap of " + std::to_string(cap) +
                                " (N! components)");
  return ConnectionMatrix(n, std::move(momentum), prefactor.value_or(coupling));
}

bool is_generic(std::span<const Rational> momentum) {
  for (std::size_t i = 0; i < momentum.size(); ++i)
    for (std::size_t j = i + 1; j < momentum.size(); ++j)
      if (momentum[i] == momentum[j]) return false;
  return true;
}

FlatnessReport verify_flatness(const ConnectionMatrix& omega, const std::vector<std::vector<Rational>>& points) {
  FlatnessReport report;
  report.n = omega.n();
  report.point_count = points.size();
  const std::size_t n = omega.n();
  for (const auto& x : points) {
    if (x.size() != n) throw std::invalid_argument("point has wrong arity");
    check_chamber(x);
    std::vector<ExactMatrix> om;
    om.reserve(n);
    for (std::size_t k = 0; k < n; ++k) om.push_back(omega.evaluate_exact(k, x));
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        ++report.pair_count;
        ExactMatrix deriv = omega.derivative_exact(k, j, x);
        deriv -= omega.derivative_exact(j, k, x);
        ExactMatrix comm = om[j] * om[k];
        comm -= om[k] * om[j];
        if (!deriv.is_zero()) ++report.derivative_failures;
        if (!comm.is_zero()) ++report.commutator_failures;
        ExactMatrix curvature = deriv;
        curvature += comm;
        if (!curvature.is_zero()) {
          ++report.failure_count;
          report.max_residual = std::max(report.max_residual, curvature.max_abs());
          if (report.failure_cases.size() < 20)
            report.failure_cases.push_back("x=" + point_label(x) + " j=" + std::to_string(j + 1) +
                                           " k=" + std::to_string(k + 1));
        }
      }
    }
  }
  return report;
}

nlohmann::json to_json(const FlatnessReport& report) {
  return {{"N", report.n},
          {"pointCount", report.point_count},
          {"pairCount", report.pair_count},
          {"failureCount", report.failure_count},
          {"derivativeFailures", report.derivative_failures},
          {"commutatorFailures", report.commutator_failures},
          {"maxResidual", report.max_residual},
          {"failures", report.failure_cases},
          {"passed", report.passed()}};
}

Rational random_rational(std::mt19937_64& rng, long range, long max_den) {
  std::uniform_int_distribution<long> num(-range, range);
  std::uniform_int_distribution<long> den(1, max_den);
  return make_rational(num(rng), den(rng));
}

std::vector<Rational> random_chamber_point(std::mt19937_64& rng, std::size_t n) {
  std::set<Rational> values;
  while (values.size() < n) values.insert(random_rational(rng, 40, 7));
  return {values.begin(), values.end()};
}

std::vector<Rational> permute_momentum(const Permutation& sigma, std::span<const Rational> p) {
  if (sigma.size() != p.size()) throw std::invalid_argument("permutation and momentum differ in length");
  std::vector<Rational> out(p.size());
  for (std::size_t m = 0; m < p.size(); ++m) out[sigma(m)] = p[m];
  return out;
}

EquivarianceResult equivariance_check(const ConnectionMatrix& base, const ConnectionMatrix& permuted,
                                      const Permutation& sigma, const std::vector<std::vector<Rational>>& points) {
  if (base.n() != permuted.n() || sigma.size() != base.n())
    throw std::invalid_argument("equivariance check needs matching N");
  const std::size_t n = base.n();
  const std::size_t d = base.dim();
  const GroupElementIndex& group = base.group();

  std::vector<std::vector<ExactMatrix>> before, after;
  for (const auto& x : points) {
    check_chamber(x);
    std::vector<ExactMatrix> b, a;
    for (std::size_t k = 0; k < n; ++k) {
      b.push_back(base.evaluate_exact(k, x));
      a.push_back(permuted.evaluate_exact(k, x));
    }
    before.push_back(std::move(b));
    after.push_back(std::move(a));
  }

  std::optional<EquivarianceResult> best;
  for (const char* action : {"left", "right"}) {
    for (bool inv : {false, true}) {
      const Permutation g = inv ? sigma.inverse() : sigma;
      EquivarianceResult cand{action, inv, std::vector<std::size_t>(d), 0, 0.0};
      for (std::size_t t = 0; t < d; ++t) {
        const Permutation& e = group.element(t);
        cand.image[t] = group.index_of(std::string(action) == "left" ? g * e : e * g);
      }
      // (R M R^-1)[image r, image c] = M[r, c]
      for (std::size_t pt = 0; pt < points.size(); ++pt)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) {
              ExactComplex diff = after[pt][k](cand.image[r], cand.image[c]);
              diff -= before[pt][k](r, c);
              if (!diff.is_zero()) {
                ++cand.mismatches;
                cand.residual = std::max(cand.residual, abs_d(diff.re) + abs_d(diff.im));
              }
            }
      if (!best || cand.mismatches < best->mismatches) best = std::move(cand);
    }
  }
  if (best->mismatches != 0)
    throw std::runtime_error("no regular action conjugates the permuted system exactly (best: " + best->action +
                             (best->inverse ? " inverse" : "") + ", " + std::to_string(best->mismatches) +
                             " mismatched entries)");
  return *best;
}

}  // namespace cdk::transport
