#pragma once

#include <cstddef>
#include <map>
#include <utility>

#include "cdk/dunkl/dunkl.hpp"
#include "cdk/exactalg/permutation.hpp"
#include "cdk/exactalg/rational_section.hpp"

namespace cdk::dunkl {

/// Operator written as sum r(x) d^alpha P_sigma, every coefficient left of
/// every derivative and every permutation at the right end.
///
/// Only what the restriction needs is provided: left composition with
/// d_k, P_ij and nabla_k, sums, application to a section, and replacing the
/// rightmost permutations by scalars.
class NormalOrderedOperator {
 public:
  using Key = std::pair<Permutation, Exponents>;
  using TermMap = std::map<Key, RationalSection>;

  explicit NormalOrderedOperator(std::size_t n) : n_(n) {}

  static NormalOrderedOperator identity(std::size_t n);
  static NormalOrderedOperator dunkl(const DunklContext& ctx, std::size_t k);
  /// sum_alpha coeff * d^alpha with no permutation part.
  static NormalOrderedOperator differential(std::size_t n, const std::map<Exponents, RationalSection>& coeffs);

  std::size_t n() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  void add_term(const Permutation& sigma, const Exponents& alpha, const RationalSection& coeff);

  NormalOrderedOperator after_derivative(std::size_t k) const;     // d_k o this
  NormalOrderedOperator after_transposition(std::size_t i, std::size_t j) const;  // P_ij o this
  NormalOrderedOperator after_multiplication(const RationalSection& r) const;     // r o this
  NormalOrderedOperator after_dunkl(const DunklContext& ctx, std::size_t k) const;  // nabla_k o this

  NormalOrderedOperator& operator+=(const NormalOrderedOperator& other);
  friend bool operator==(const NormalOrderedOperator& a, const NormalOrderedOperator& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  RationalSection apply(const RationalSection& f) const;
  /// Rightmost P_sigma -> 1 (symmetric) or sign(sigma) (antisymmetric).
  NormalOrderedOperator restricted(Symmetry symmetry) const;

 private:
  std::size_t n_;
  TermMap terms_;
};

/// sum_i nabla_i o nabla_i in normal order.
NormalOrderedOperator sum_of_squares_operator(const DunklContext& ctx);

/// Laplacian + potential_coeff * V2 as a normal-ordered operator.
NormalOrderedOperator laplacian_plus_potential(std::size_t n, const CouplingPoly& potential_coeff);

}  // namespace cdk::dunkl
