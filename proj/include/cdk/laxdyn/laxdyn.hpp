#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cdk/exactalg/rational.hpp"

namespace cdk::laxdyn {

using Complex = std::complex<double>;

/// State of H = sum (p^2/2 + omega^2 x^2/2) + sum_{i<j} g2 / (x_i - x_j)^2.
struct PhasePoint {
  std::vector<double> x;
  std::vector<double> p;
  double g2 = 1.0;
  double omega = 0.0;

  std::size_t n() const noexcept { return x.size(); }
};

/// Throws std::invalid_argument unless x is strictly increasing, p matches
/// x in length, N >= 2 and g2, omega >= 0.
void validate(const PhasePoint& s);

/// P_kk = p_k, P_jk = i / (x_j - x_k), row-major.
struct LaxMatrix {
  std::size_t n = 0;
  std::vector<Complex> entries;

  const Complex& operator()(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
  bool is_hermitian(double tol = 0.0) const;
};

LaxMatrix build_lax(const PhasePoint& s);

/// I_j = tr P^j for j = 1..jmax.
std::vector<double> trace_integrals(const PhasePoint& s, unsigned jmax);

/// sum p^3 + 3 sum_{i != j} p_i / (x_i - x_j)^2
///   - i sum_{i,j,k distinct} 1 / ((x_i - x_j)(x_j - x_k)(x_k - x_i)).
/// The last sum cancels pairwise; it is accumulated anyway and its real part dropped.
double trace_p3_explicit(const PhasePoint& s);

double hamiltonian(const PhasePoint& s);

/// Particles met or crossed during integration.
class CollisionError : public std::runtime_error {
 public:
  CollisionError(double time, std::size_t pair);
  double time() const noexcept { return time_; }
  /// Left particle of the offending neighbouring pair, 0-based.
  std::size_t pair() const noexcept { return pair_; }

 private:
  double time_;
  std::size_t pair_;
};

struct Sample {
  double t = 0.0;
  std::vector<double> x;
  std::vector<double> p;
  double energy = 0.0;
  std::array<double, 4> integrals{};
};

struct Trajectory {
  std::vector<Sample> samples;
  /// max_t |Q(t) - Q(0)| / max(|Q(0)|, 1) over every step, for H and I_1..I_4.
  double energy_drift = 0.0;
  std::array<double, 4> integral_drift{};
  std::size_t steps = 0;
};

struct IntegrateOptions {
  /// A sample is stored every `sample_every` steps and at the end.
  std::size_t sample_every = 100;
};

/// Fixed-step classical RK4. Throws CollisionError when ordering is lost.
Trajectory integrate(const PhasePoint& s, double duration, double dt, const IntegrateOptions& options = {});

/// t, x_1..x_N, p_1..p_N, H, I_1..I_4 with a header row.
void write_csv(std::ostream& out, const Trajectory& trajectory);
nlohmann::json drift_summary(const Trajectory& trajectory);

/// J_ij = delta_ij - w_i w_j with w = (1, ..., 1), exact.
std::vector<Rational> noether_matrix(std::size_t n);

/// Monic characteristic polynomial det(t I - M) of an n x n rational matrix,
/// coefficients from t^0 to t^n (Faddeev-LeVerrier).
std::vector<Rational> characteristic_polynomial(const std::vector<Rational>& m, std::size_t n);

struct Spectrum {
  /// (eigenvalue, algebraic multiplicity), ascending.
  std::vector<std::pair<Rational, std::size_t>> rational_roots;
  /// Degree of the factor left after removing the rational roots.
  std::size_t irrational_degree = 0;
};

/// Rational eigenvalues of the Noether matrix with multiplicities, exactly.
Spectrum noether_spectrum(std::size_t n);
Spectrum rational_spectrum(const std::vector<Rational>& m, std::size_t n);

}  // namespace cdk::laxdyn
