#include "cdk/exactalg/coupling_poly.hpp"

#include <algorithm>
#include <utility>

namespace cdk {

CouplingPoly::CouplingPoly(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

CouplingPoly::CouplingPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

CouplingPoly CouplingPoly::formal() { return monomial(Rational(1), 1); }

CouplingPoly CouplingPoly::monomial(Rational coeff, std::size_t power) {
  CouplingPoly p;
  if (coeff == 0) return p;
  p.coeffs_.assign(power + 1, Rational(0));
  p.coeffs_[power] = std::move(coeff);
  return p;
}

Rational CouplingPoly::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

CouplingPoly CouplingPoly::component(std::size_t power) const {
  return power < coeffs_.size() ? monomial(coeffs_[power], power) : CouplingPoly();
}

Rational CouplingPoly::evaluate(const Rational& c) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * c + *it;
  return acc;
}

CouplingPoly& CouplingPoly::operator+=(const CouplingPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

CouplingPoly& CouplingPoly::operator-=(const CouplingPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

CouplingPoly operator*(const CouplingPoly& a, const CouplingPoly& b) {
  CouplingPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  out.trim();
  return out;
}

CouplingPoly& CouplingPoly::operator*=(const CouplingPoly& other) { return *this = *this * other; }

CouplingPoly CouplingPoly::operator-() const {
  CouplingPoly out(*this);
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

void CouplingPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::string CouplingPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& q = coeffs_[k];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (out.empty())
      out += q < 0 ? "-" : "";
    else
      out += q < 0 ? " - " : " + ";
    bool unit = mag == 1 && k > 0;
    if (!unit) out += mag.get_str();
    if (k > 0) {
      if (!unit) out += "*";
      out += "c";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace cdk
