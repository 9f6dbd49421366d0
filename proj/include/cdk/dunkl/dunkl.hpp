#pragma once

#include <cstddef>

#include "cdk/exactalg/coupling_poly.hpp"
#include "cdk/exactalg/rational_section.hpp"

namespace cdk::dunkl {

/// Particle count, test-basis degree, and the coupling the operators carry.
/// The coupling defaults to the formal symbol c, so one run certifies every
/// value of c; a constant CouplingPoly pins a numeric coupling.
class DunklContext {
 public:
  /// Throws std::invalid_argument unless n >= 2 and basis_degree >= 1.
  DunklContext(std::size_t n, unsigned basis_degree, CouplingPoly coupling = CouplingPoly::formal());

  std::size_t n() const noexcept { return n_; }
  unsigned basis_degree() const noexcept { return basis_degree_; }
  const CouplingPoly& coupling() const noexcept { return coupling_; }

 private:
  std::size_t n_;
  unsigned basis_degree_;
  CouplingPoly coupling_;
};

enum class Symmetry { symmetric, antisymmetric };

/// nabla_k f = d_k f - c sum_{i != k} (x_i - x_k)^{-1} P_ik f
RationalSection apply_dunkl(const DunklContext& ctx, std::size_t k, const RationalSection& f);

/// P_ij f
RationalSection apply_transposition(const RationalSection& f, std::size_t i, std::size_t j);

/// (nabla_j nabla_k - nabla_k nabla_j) f
RationalSection commutator_dunkl(const DunklContext& ctx, std::size_t j, std::size_t k, const RationalSection& f);

/// Pieces of the commutator that are linear and quadratic in the coupling,
/// computed from the split nabla_k = d_k - c B_k with B_k = sum_i (x_i-x_k)^{-1} P_ik:
///   linear    = [d_k, B_j] - [d_j, B_k]
///   quadratic = [B_j, B_k]
/// so that [nabla_j, nabla_k] = c * linear + c^2 * quadratic.
struct GradedCommutator {
  RationalSection linear;
  RationalSection quadratic;
};
GradedCommutator graded_commutator(std::size_t n, std::size_t j, std::size_t k, const RationalSection& f);

/// Residual of the exchange relations applied to f.
///   l == k:        P_jk nabla_k f - nabla_j P_jk f
///   l == j:        P_jk nabla_j f - nabla_k P_jk f
///   l not in {j,k}: P_jk nabla_l f - nabla_l P_jk f
RationalSection verify_intertwining(const DunklContext& ctx, std::size_t j, std::size_t l, std::size_t k,
                                    const RationalSection& f);

/// sum_i nabla_i^2 f
RationalSection sum_of_squares(const DunklContext& ctx, const RationalSection& f);

/// V2 = sum_{i<j} (x_i - x_j)^{-2} applied by multiplication.
RationalSection inverse_square_potential(const RationalSection& f);

/// Pieces of the closed-form expansion of sum_i nabla_i^2 f:
///   laplacian = sum_i d_i^2 f
///   exchange  = sum_{i != j} (x_i - x_j)^{-2} P_ij f
///   diagonal  = sum_{i != j} (x_i - x_j)^{-2} f
struct SquareExpansionTerms {
  RationalSection laplacian;
  RationalSection exchange;
  RationalSection diagonal;
};
SquareExpansionTerms square_expansion_terms(const RationalSection& f);

/// laplacian + sign * (c * exchange + c^2 * diagonal) with c = ctx.coupling().
/// sign = +1 is the expansion as customarily printed; sign = -1 is the one the
/// operator definition actually produces.
RationalSection sum_of_squares_expansion(const DunklContext& ctx, const RationalSection& f, int sign);

/// Res(sum_i nabla_i^2) applied to f: every rightmost permutation is replaced
/// by +1 (symmetric) or by its sign (antisymmetric). Throws
/// std::invalid_argument when f does not have the declared symmetry.
RationalSection restricted_projection(const DunklContext& ctx, const RationalSection& f, Symmetry symmetry);

/// True iff sigma . f == f (symmetric) or sign(sigma) f (antisymmetric) for every sigma.
bool has_symmetry(const RationalSection& f, Symmetry symmetry);

/// -1/2 Laplacian f + g * V2 f
RationalSection calogero_apply(const RationalSection& f, const CouplingPoly& g);

/// c(c+1) for symmetric, c(c-1) for antisymmetric, with c = ctx.coupling().
CouplingPoly restriction_coupling(const DunklContext& ctx, Symmetry symmetry);

}  // namespace cdk::dunkl
