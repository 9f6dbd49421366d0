#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cdk/exactalg/rational.hpp"

namespace cdk {

/// Exact polynomial in the formal coupling c. Index of a coefficient is the
/// power of c. The highest stored coefficient is never zero; the zero
/// polynomial stores nothing.
class CouplingPoly {
 public:
  CouplingPoly() = default;
  explicit CouplingPoly(Rational constant);
  explicit CouplingPoly(long constant) : CouplingPoly(Rational(constant)) {}
  explicit CouplingPoly(std::vector<Rational> coeffs);

  /// The polynomial c.
  static CouplingPoly formal();
  static CouplingPoly monomial(Rational coeff, std::size_t power);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coefficient(std::size_t power) const;
  std::span<const Rational> coefficients() const noexcept { return coeffs_; }

  /// Only the c^power part.
  CouplingPoly component(std::size_t power) const;
  Rational evaluate(const Rational& c) const;

  CouplingPoly& operator+=(const CouplingPoly& other);
  CouplingPoly& operator-=(const CouplingPoly& other);
  CouplingPoly& operator*=(const CouplingPoly& other);
  CouplingPoly operator-() const;

  friend CouplingPoly operator+(CouplingPoly a, const CouplingPoly& b) { return a += b; }
  friend CouplingPoly operator-(CouplingPoly a, const CouplingPoly& b) { return a -= b; }
  friend CouplingPoly operator*(const CouplingPoly& a, const CouplingPoly& b);
  friend bool operator==(const CouplingPoly& a, const CouplingPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-oriented form, e.g. "2*c^2 - 1/3".
  std::string to_string() const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace cdk
