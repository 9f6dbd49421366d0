#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cdk/exactalg/multi_poly.hpp"
#include "cdk/exactalg/permutation.hpp"

namespace cdk {

/// num / prod_{i<j} (x_i - x_j)^{d_ij}.
///
/// Always kept reduced: no (x_i - x_j) with d_ij > 0 divides num, and the
/// zero section has an empty denominator. Reduced forms are unique, so
/// equality is structural.
class RationalSection {
 public:
  RationalSection() = default;
  explicit RationalSection(std::size_t arity);
  explicit RationalSection(MultiPoly num);
  /// denom_exponents is indexed by pair_index(); it is reduced on construction.
  RationalSection(MultiPoly num, std::vector<std::uint32_t> denom_exponents);

  /// Position of the pair {i, j} (order irrelevant, i != j) in the dense denominator vector.
  static std::size_t pair_index(std::size_t arity, std::size_t i, std::size_t j);
  static std::size_t pair_count(std::size_t arity) { return arity * (arity - 1) / 2; }

  std::size_t arity() const noexcept { return num_.arity(); }
  const MultiPoly& numerator() const noexcept { return num_; }
  std::span<const std::uint32_t> denominator_exponents() const noexcept { return den_; }
  std::uint32_t denominator_exponent(std::size_t i, std::size_t j) const;
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const;

  RationalSection& operator+=(const RationalSection& other);
  RationalSection& operator-=(const RationalSection& other);
  RationalSection operator-() const;
  friend RationalSection operator+(RationalSection a, const RationalSection& b) { return a += b; }
  friend RationalSection operator-(RationalSection a, const RationalSection& b) { return a -= b; }
  friend RationalSection operator*(const RationalSection& a, const RationalSection& b);
  friend bool operator==(const RationalSection& a, const RationalSection& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalSection scaled(const CouplingPoly& factor) const;
  /// Quotient-rule derivative d/dx_k.
  RationalSection derivative(std::size_t k) const;
  /// sigma . f; sign flips of the pair differences go into the numerator.
  RationalSection permuted(const Permutation& sigma) const;
  /// f / (x_i - x_j) for any ordered pair i != j.
  RationalSection divided_by_difference(std::size_t i, std::size_t j) const;

  RationalSection coupling_component(std::size_t power) const;
  RationalSection with_coupling(const Rational& c) const;
  /// Largest power of c in the numerator; -1 for zero.
  int coupling_degree() const { return num_.coupling_degree(); }

  /// Exact value; throws PoleError naming the first vanishing pair.
  Rational evaluate(std::span<const Rational> point, const Rational& c) const;

 private:
  void reduce();
  void require_same_arity(const RationalSection& other) const;
  /// num * prod (x_i - x_j)^{extra_ij}
  static MultiPoly lift(const MultiPoly& num, std::span<const std::uint32_t> extra);

  MultiPoly num_;
  std::vector<std::uint32_t> den_;
};

}  // namespace cdk
