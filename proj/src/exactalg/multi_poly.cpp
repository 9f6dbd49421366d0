#include "cdk/exactalg/multi_poly.hpp"

#include <algorithm>
#include <numeric>

#include "cdk/exactalg/errors.hpp"

namespace cdk {

namespace {

unsigned degree_of(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0u); }

void check_index(std::size_t arity, std::size_t k) {
  if (k >= arity) throw std::out_of_range("coordinate index " + std::to_string(k) + " out of range");
}

}  // namespace

MultiPoly MultiPoly::constant(std::size_t arity, CouplingPoly value) {
  MultiPoly p(arity);
  if (!value.is_zero()) p.terms_.emplace(Exponents(arity, 0), std::move(value));
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t k) {
  check_index(arity, k);
  Exponents e(arity, 0);
  e[k] = 1;
  return monomial(std::move(e));
}

MultiPoly MultiPoly::monomial(Exponents exps, CouplingPoly coeff) {
  MultiPoly p(exps.size());
  if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), std::move(coeff));
  return p;
}

MultiPoly MultiPoly::pair_difference(std::size_t arity, std::size_t i, std::size_t j) {
  return variable(arity, i) - variable(arity, j);
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, _] : terms_) d = std::max(d, static_cast<int>(degree_of(e)));
  return d;
}

int MultiPoly::degree_in(std::size_t k) const {
  check_index(arity_, k);
  int d = -1;
  for (const auto& [e, _] : terms_) d = std::max(d, static_cast<int>(e[k]));
  return d;
}

int MultiPoly::coupling_degree() const {
  int d = -1;
  for (const auto& [_, q] : terms_) d = std::max(d, q.degree());
  return d;
}

void MultiPoly::add_term(const Exponents& exps, const CouplingPoly& coeff) {
  if (exps.size() != arity_) throw ArityError("exponent vector length does not match arity");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::require_same_arity(const MultiPoly& other) const {
  if (arity_ != other.arity_)
    throw ArityError("arity mismatch: " + std::to_string(arity_) + " vs " + std::to_string(other.arity_));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  require_same_arity(other);
  for (const auto& [e, q] : other.terms_) add_term(e, q);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  require_same_arity(other);
  for (const auto& [e, q] : other.terms_) add_term(e, -q);
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& [_, q] : out.terms_) q = -q;
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.require_same_arity(b);
  MultiPoly out(a.arity_);
  Exponents e(a.arity_);
  for (const auto& [ea, qa] : a.terms_) {
    for (const auto& [eb, qb] : b.terms_) {
      for (std::size_t m = 0; m < e.size(); ++m) e[m] = ea[m] + eb[m];
      out.add_term(e, qa * qb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const CouplingPoly& factor) const {
  MultiPoly out(arity_);
  if (factor.is_zero()) return out;
  for (const auto& [e, q] : terms_) out.add_term(e, q * factor);
  return out;
}

MultiPoly MultiPoly::derivative(std::size_t k) const {
  check_index(arity_, k);
  MultiPoly out(arity_);
  for (const auto& [e, q] : terms_) {
    if (e[k] == 0) continue;
    Exponents d = e;
    --d[k];
    out.add_term(d, q * CouplingPoly(static_cast<long>(e[k])));
  }
  return out;
}

MultiPoly MultiPoly::permuted(const Permutation& sigma) const {
  if (sigma.size() != arity_) throw ArityError("permutation degree does not match arity");
  MultiPoly out(arity_);
  for (const auto& [e, q] : terms_) out.terms_.emplace(sigma.act_on_exponents(e), q);
  return out;
}

MultiPoly MultiPoly::times_pair_difference(std::size_t i, std::size_t j) const {
  check_index(arity_, i);
  check_index(arity_, j);
  MultiPoly out(arity_);
  if (i == j) return out;
  for (const auto& [e, q] : terms_) {
    Exponents ei = e;
    ++ei[i];
    out.add_term(ei, q);
    Exponents ej = e;
    ++ej[j];
    out.add_term(ej, -q);
  }
  return out;
}

MultiPoly MultiPoly::substituted(std::size_t k, const LinearForm& image) const {
  check_index(arity_, k);
  if (image.coeff.size() != arity_) throw ArityError("linear form length does not match arity");
  MultiPoly form(arity_);
  for (std::size_t m = 0; m < arity_; ++m) {
    if (image.coeff[m] == 0) continue;
    Exponents e(arity_, 0);
    e[m] = 1;
    form.add_term(e, CouplingPoly(image.coeff[m]));
  }
  std::vector<MultiPoly> powers{MultiPoly::constant(arity_, 1)};
  MultiPoly out(arity_);
  for (const auto& [e, q] : terms_) {
    while (powers.size() <= e[k]) powers.push_back(powers.back() * form);
    Exponents rest = e;
    rest[k] = 0;
    out += monomial(rest, q) * powers[e[k]];
  }
  return out;
}

bool MultiPoly::vanishes_on_diagonal(std::size_t i, std::size_t j) const {
  check_index(arity_, i);
  check_index(arity_, j);
  if (i == j) return is_zero();
  MultiPoly restricted(arity_);
  for (const auto& [e, q] : terms_) {
    Exponents r = e;
    r[j] += r[i];
    r[i] = 0;
    restricted.add_term(r, q);
  }
  return restricted.is_zero();
}

std::optional<MultiPoly> MultiPoly::divided_by_pair_difference(std::size_t i, std::size_t j) const {
  if (i == j || !vanishes_on_diagonal(i, j)) return std::nullopt;
  // Group by the power of x_i: f = sum_n a_n x_i^n, a_n free of x_i.
  const int top = degree_in(i);
  if (top < 0) return MultiPoly(arity_);
  std::vector<MultiPoly> a(static_cast<std::size_t>(top) + 1, MultiPoly(arity_));
  for (const auto& [e, q] : terms_) {
    Exponents r = e;
    r[i] = 0;
    a[e[i]].terms_.emplace(std::move(r), q);
  }
  // Synthetic division by (x_i - x_j): b_{n-1} = a_n, b_{m-1} = a_m + x_j b_m.
  MultiPoly quotient(arity_);
  MultiPoly carry(arity_);
  const MultiPoly xj = variable(arity_, j);
  for (int n = top; n >= 1; --n) {
    MultiPoly b = a[static_cast<std::size_t>(n)] + xj * carry;
    for (const auto& [e, q] : b.terms_) {
      Exponents r = e;
      r[i] = static_cast<std::uint32_t>(n - 1);
      quotient.terms_.emplace(std::move(r), q);
    }
    carry = std::move(b);
  }
  return quotient;
}

MultiPoly MultiPoly::coupling_component(std::size_t power) const {
  MultiPoly out(arity_);
  for (const auto& [e, q] : terms_) out.add_term(e, q.component(power));
  return out;
}

MultiPoly MultiPoly::with_coupling(const Rational& c) const {
  MultiPoly out(arity_);
  for (const auto& [e, q] : terms_) out.add_term(e, CouplingPoly(q.evaluate(c)));
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point, const Rational& c) const {
  if (point.size() != arity_) throw ArityError("point dimension does not match arity");
  std::vector<std::vector<Rational>> powers(arity_, std::vector<Rational>{Rational(1)});
  Rational acc(0);
  for (const auto& [e, q] : terms_) {
    Rational term = q.evaluate(c);
    if (term == 0) continue;
    for (std::size_t m = 0; m < arity_; ++m) {
      auto& pw = powers[m];
      while (pw.size() <= e[m]) pw.push_back(pw.back() * point[m]);
      term *= pw[e[m]];
    }
    acc += term;
  }
  return acc;
}

std::vector<Exponents> monomials_of_degree(std::size_t arity, unsigned degree) {
  std::vector<Exponents> out;
  if (arity == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponents e(arity, 0);
  // Enumerate compositions of `degree` into `arity` parts, lexicographically descending in e[0].
  auto rec = [&](auto&& self, std::size_t pos, unsigned remaining) -> void {
    if (pos + 1 == arity) {
      e[pos] = remaining;
      out.push_back(e);
      return;
    }
    for (unsigned v = remaining + 1; v-- > 0;) {
      e[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Exponents> monomials_up_to(std::size_t arity, unsigned max_degree) {
  std::vector<Exponents> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto layer = monomials_of_degree(arity, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace cdk
