#include "cdk/dunkl/normal_ordered.hpp"

#include <stdexcept>

namespace cdk::dunkl {

namespace {

RationalSection constant_section(std::size_t n, const CouplingPoly& value) {
  return RationalSection(MultiPoly::constant(n, value));
}

RationalSection apply_derivatives(RationalSection f, const Exponents& alpha) {
  for (std::size_t m = 0; m < alpha.size(); ++m)
    for (std::uint32_t r = 0; r < alpha[m]; ++r) f = f.derivative(m);
  return f;
}

}  // namespace

void NormalOrderedOperator::add_term(const Permutation& sigma, const Exponents& alpha, const RationalSection& coeff) {
  if (sigma.size() != n_ || alpha.size() != n_ || coeff.arity() != n_)
    throw std::invalid_argument("operator term arity mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{sigma, alpha}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

NormalOrderedOperator NormalOrderedOperator::identity(std::size_t n) {
  NormalOrderedOperator op(n);
  op.add_term(Permutation::identity(n), Exponents(n, 0), constant_section(n, CouplingPoly(1)));
  return op;
}

NormalOrderedOperator NormalOrderedOperator::dunkl(const DunklContext& ctx, std::size_t k) {
  return identity(ctx.n()).after_dunkl(ctx, k);
}

NormalOrderedOperator NormalOrderedOperator::differential(std::size_t n,
                                                          const std::map<Exponents, RationalSection>& coeffs) {
  NormalOrderedOperator op(n);
  const Permutation id = Permutation::identity(n);
  for (const auto& [alpha, r] : coeffs) op.add_term(id, alpha, r);
  return op;
}

NormalOrderedOperator NormalOrderedOperator::after_derivative(std::size_t k) const {
  // d_k r d^a P = (d_k r) d^a P + r d^{a+e_k} P
  NormalOrderedOperator out(n_);
  for (const auto& [key, r] : terms_) {
    out.add_term(key.first, key.second, r.derivative(k));
    Exponents raised = key.second;
    ++raised[k];
    out.add_term(key.first, raised, r);
  }
  return out;
}

NormalOrderedOperator NormalOrderedOperator::after_transposition(std::size_t i, std::size_t j) const {
  // P r d^a P_s = (P . r) d^{tau a} (P o P_s)
  const Permutation tau = Permutation::transposition(n_, i, j);
  NormalOrderedOperator out(n_);
  for (const auto& [key, r] : terms_)
    out.add_term(tau * key.first, tau.act_on_exponents(key.second), r.permuted(tau));
  return out;
}

NormalOrderedOperator NormalOrderedOperator::after_multiplication(const RationalSection& factor) const {
  NormalOrderedOperator out(n_);
  for (const auto& [key, r] : terms_) out.add_term(key.first, key.second, factor * r);
  return out;
}

NormalOrderedOperator NormalOrderedOperator::after_dunkl(const DunklContext& ctx, std::size_t k) const {
  if (ctx.n() != n_) throw std::invalid_argument("context arity mismatch");
  NormalOrderedOperator out = after_derivative(k);
  const CouplingPoly minus_c = -ctx.coupling();
  for (std::size_t i = 0; i < n_; ++i) {
    if (i == k) continue;
    // -c (x_i - x_k)^{-1}
    RationalSection weight = constant_section(n_, minus_c).divided_by_difference(i, k);
    out += after_transposition(i, k).after_multiplication(weight);
  }
  return out;
}

NormalOrderedOperator& NormalOrderedOperator::operator+=(const NormalOrderedOperator& other) {
  if (other.n_ != n_) throw std::invalid_argument("operator arity mismatch");
  for (const auto& [key, r] : other.terms_) add_term(key.first, key.second, r);
  return *this;
}

RationalSection NormalOrderedOperator::apply(const RationalSection& f) const {
  RationalSection out(n_);
  for (const auto& [key, r] : terms_) out += r * apply_derivatives(f.permuted(key.first), key.second);
  return out;
}

NormalOrderedOperator NormalOrderedOperator::restricted(Symmetry symmetry) const {
  const Permutation id = Permutation::identity(n_);
  NormalOrderedOperator out(n_);
  for (const auto& [key, r] : terms_) {
    const bool flip = symmetry == Symmetry::antisymmetric && key.first.sign() < 0;
    out.add_term(id, key.second, flip ? -r : r);
  }
  return out;
}

NormalOrderedOperator sum_of_squares_operator(const DunklContext& ctx) {
  NormalOrderedOperator total(ctx.n());
  for (std::size_t i = 0; i < ctx.n(); ++i) total += NormalOrderedOperator::dunkl(ctx, i).after_dunkl(ctx, i);
  return total;
}

NormalOrderedOperator laplacian_plus_potential(std::size_t n, const CouplingPoly& potential_coeff) {
  std::map<Exponents, RationalSection> coeffs;
  for (std::size_t i = 0; i < n; ++i) {
    Exponents alpha(n, 0);
    alpha[i] = 2;
    coeffs.emplace(alpha, constant_section(n, CouplingPoly(1)));
  }
  RationalSection one = constant_section(n, CouplingPoly(1));
  RationalSection v2 = inverse_square_potential(one).scaled(potential_coeff);
  if (!v2.is_zero()) coeffs.emplace(Exponents(n, 0), v2);
  return NormalOrderedOperator::differential(n, coeffs);
}

}  // namespace cdk::dunkl
