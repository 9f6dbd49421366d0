#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdk/exactalg/coupling_poly.hpp"
#include "cdk/exactalg/permutation.hpp"
#include "cdk/exactalg/rational.hpp"

namespace cdk {

/// Linear form sum_m coeff[m] * x_m used as the image of a substituted variable.
struct LinearForm {
  std::vector<Rational> coeff;
};

/// Sparse exact polynomial in x_1..x_N with CouplingPoly coefficients.
///
/// Terms are keyed by exponent vectors of length exactly arity(); no stored
/// coefficient is zero.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, CouplingPoly>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t arity) : arity_(arity) {}

  static MultiPoly constant(std::size_t arity, CouplingPoly value);
  static MultiPoly constant(std::size_t arity, long value) { return constant(arity, CouplingPoly(value)); }
  /// x_k
  static MultiPoly variable(std::size_t arity, std::size_t k);
  static MultiPoly monomial(Exponents exps, CouplingPoly coeff = CouplingPoly(1));
  /// x_i - x_j
  static MultiPoly pair_difference(std::size_t arity, std::size_t i, std::size_t j);

  std::size_t arity() const noexcept { return arity_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  int degree_in(std::size_t k) const;
  /// Largest power of c appearing in any coefficient; -1 for zero.
  int coupling_degree() const;

  void add_term(const Exponents& exps, const CouplingPoly& coeff);

  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  MultiPoly scaled(const CouplingPoly& factor) const;
  MultiPoly derivative(std::size_t k) const;
  /// sigma . f, i.e. every x_m replaced by x_{sigma(m)}.
  MultiPoly permuted(const Permutation& sigma) const;
  MultiPoly times_pair_difference(std::size_t i, std::size_t j) const;
  /// f with x_k replaced by the linear form.
  MultiPoly substituted(std::size_t k, const LinearForm& image) const;

  /// f restricted to x_i = x_j is identically zero.
  bool vanishes_on_diagonal(std::size_t i, std::size_t j) const;
  /// Exact quotient by (x_i - x_j) via synthetic division in x_i, if it divides.
  std::optional<MultiPoly> divided_by_pair_difference(std::size_t i, std::size_t j) const;

  /// Only the c^power parts of the coefficients.
  MultiPoly coupling_component(std::size_t power) const;
  /// Substitutes a numeric value for c.
  MultiPoly with_coupling(const Rational& c) const;

  Rational evaluate(std::span<const Rational> point, const Rational& c) const;

 private:
  void require_same_arity(const MultiPoly& other) const;

  std::size_t arity_ = 0;
  TermMap terms_;
};

/// All monomials x^a with |a| <= max_degree, graded then lexicographic.
std::vector<Exponents> monomials_up_to(std::size_t arity, unsigned max_degree);
/// All monomials with |a| == degree.
std::vector<Exponents> monomials_of_degree(std::size_t arity, unsigned degree);

}  // namespace cdk
