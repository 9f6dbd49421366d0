#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdk/exactalg/permutation.hpp"
#include "cdk/exactalg/rational.hpp"
#include "cdk/simd/kernels.hpp"

namespace cdk::transport {

using simd::Complex;

/// Gaussian rational re + i im.
struct ExactComplex {
  Rational re;
  Rational im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Complex to_double() const { return {re.get_d(), im.get_d()}; }

  ExactComplex& operator+=(const ExactComplex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ExactComplex& operator-=(const ExactComplex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend ExactComplex operator*(const ExactComplex& a, const ExactComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) { return a.re == b.re && a.im == b.im; }
};

/// Dense square matrix over the Gaussian rationals, row-major.
class ExactMatrix {
 public:
  explicit ExactMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  std::size_t dim() const noexcept { return dim_; }
  ExactComplex& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const ExactComplex& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  bool is_zero() const;
  std::size_t nonzero_count() const;
  /// Largest |re| + |im| over all entries, rounded to double.
  double max_abs() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<ExactComplex> entries_;
};

/// One coupling entry of row sigma of Omega_k: prefactor / (x_wall - x_k) at column `column`.
struct OffDiagonalEntry {
  std::size_t column;
  std::size_t wall;
};

/// Local first-order system d_k Psi = Omega_k Psi for the component vector
/// Psi_sigma(x) = psi(x_sigma(1), ..., x_sigma(N)) of a joint eigenfunction of
/// the Dunkl operators with eigenvalues i p_k. Rows and columns are indexed by
/// the elements of S_N in lexicographic order.
///
///   Omega_k[s, t] = i p_{s^-1(k)} [s = t]
///                 + kappa sum_{m != s^-1(k)} [t = s o (m s^-1(k))] / (x_{s(m)} - x_k)
///
/// kappa is the coupling prefactor, equal to c unless overridden.
class ConnectionMatrix {
 public:
  ConnectionMatrix(std::size_t n, std::vector<Rational> momentum, Rational prefactor);

  std::size_t n() const noexcept { return n_; }
  std::size_t dim() const noexcept { return group_.order(); }
  const GroupElementIndex& group() const noexcept { return group_; }
  const std::vector<Rational>& momentum() const noexcept { return momentum_; }
  const Rational& prefactor() const noexcept { return prefactor_; }

  /// Index m = s^-1(k) of the momentum on the diagonal of row s.
  std::size_t diagonal_momentum(std::size_t k, std::size_t row) const { return diag_[k][row]; }
  const std::vector<OffDiagonalEntry>& off_diagonal(std::size_t k, std::size_t row) const { return off_[k][row]; }

  /// Omega_k(x) into out (dim x dim, row-major).
  void evaluate(std::size_t k, std::span<const double> x, Complex* out) const;
  /// sum_k velocity_k Omega_k(x) into out.
  void evaluate_along(std::span<const double> x, std::span<const double> velocity, Complex* out) const;

  /// Throws PoleError if x_i = x_j for some pair.
  ExactMatrix evaluate_exact(std::size_t k, std::span<const Rational> x) const;
  /// d_j Omega_k at x.
  ExactMatrix derivative_exact(std::size_t k, std::size_t j, std::span<const Rational> x) const;

 private:
  std::size_t n_;
  std::vector<Rational> momentum_;
  Rational prefactor_;
  GroupElementIndex group_;
  std::vector<std::vector<std::size_t>> diag_;
  std::vector<std::vector<std::vector<OffDiagonalEntry>>> off_;
  std::vector<double> momentum_d_;
  double prefactor_d_;
};

inline constexpr std::size_t kDefaultArityCap = 5;

/// Throws std::invalid_argument if n < 2, n > cap or p has the wrong length.
ConnectionMatrix build_local_system(std::size_t n, std::vector<Rational> momentum, const Rational& coupling,
                                    std::optional<Rational> prefactor = std::nullopt,
                                    std::size_t cap = kDefaultArityCap);

/// Momenta pairwise distinct.
bool is_generic(std::span<const Rational> momentum);

struct FlatnessReport {
  std::size_t n = 0;
  std::size_t point_count = 0;
  std::size_t pair_count = 0;
  /// Pairs (point, j<k) whose curvature d_j O_k - d_k O_j + [O_j, O_k] is not exactly zero.
  std::size_t failure_count = 0;
  /// Same count for the derivative part and the commutator taken separately.
  std::size_t derivative_failures = 0;
  std::size_t commutator_failures = 0;
  double max_residual = 0.0;
  std::vector<std::string> failure_cases;

  bool passed() const noexcept { return failure_count == 0; }
};

/// Exact curvature at each point. Points must lie in the open chamber: a point
/// on a diagonal throws PoleError, an unordered one std::invalid_argument.
FlatnessReport verify_flatness(const ConnectionMatrix& omega, const std::vector<std::vector<Rational>>& points);
nlohmann::json to_json(const FlatnessReport& report);

/// Random point x_1 < ... < x_N with small-denominator rational coordinates.
std::vector<Rational> random_chamber_point(std::mt19937_64& rng, std::size_t n);
/// Random rational with numerator in [-range, range] and denominator in [1, max_den].
Rational random_rational(std::mt19937_64& rng, long range, long max_den);

/// (sigma p)_{sigma(m)} = p_m.
std::vector<Rational> permute_momentum(const Permutation& sigma, std::span<const Rational> p);

struct EquivarianceResult {
  /// "left" or "right" regular action, by sigma or its inverse.
  std::string action;
  bool inverse = false;
  /// Column images: R e_t = e_{image[t]}.
  std::vector<std::size_t> image;
  /// Entries where Omega_k(x; sigma p) and R Omega_k(x; p) R^-1 differ, summed over points and k.
  std::size_t mismatches = 0;
  double residual = 0.0;
};

/// Searches the left and right regular actions of sigma and sigma^-1 for a
/// permutation matrix R with permuted.Omega_k = R base.Omega_k R^-1 at every
/// point, exactly. Throws std::runtime_error when no candidate matches.
EquivarianceResult equivariance_check(const ConnectionMatrix& base, const ConnectionMatrix& permuted,
                                      const Permutation& sigma, const std::vector<std::vector<Rational>>& points);

}  // namespace cdk::transport
