#include "cdk/dunkl/dunkl.hpp"

#include <stdexcept>

#include "cdk/dunkl/normal_ordered.hpp"

namespace cdk::dunkl {

namespace {

void check_index(std::size_t n, std::size_t k) {
  if (k >= n) throw std::out_of_range("Dunkl index " + std::to_string(k) + " out of range");
}

void check_arity(const DunklContext& ctx, const RationalSection& f) {
  if (f.arity() != ctx.n()) throw std::invalid_argument("section arity does not match context");
}

/// B_k f = sum_{i != k} (x_i - x_k)^{-1} P_ik f
RationalSection exchange_part(std::size_t k, const RationalSection& f) {
  const std::size_t n = f.arity();
  RationalSection out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (i == k) continue;
    out += apply_transposition(f, i, k).divided_by_difference(i, k);
  }
  return out;
}

}  // namespace

DunklContext::DunklContext(std::size_t n, unsigned basis_degree, CouplingPoly coupling)
    : n_(n), basis_degree_(basis_degree), coupling_(std::move(coupling)) {
  if (n < 2) throw std::invalid_argument("Dunkl context needs N >= 2");
  if (basis_degree < 1) throw std::invalid_argument("Dunkl context needs basis degree >= 1");
}

RationalSection apply_transposition(const RationalSection& f, std::size_t i, std::size_t j) {
  return f.permuted(Permutation::transposition(f.arity(), i, j));
}

RationalSection apply_dunkl(const DunklContext& ctx, std::size_t k, const RationalSection& f) {
  check_index(ctx.n(), k);
  check_arity(ctx, f);
  RationalSection out = f.derivative(k);
  if (ctx.coupling().is_zero()) return out;
  out -= exchange_part(k, f).scaled(ctx.coupling());
  return out;
}

RationalSection commutator_dunkl(const DunklContext& ctx, std::size_t j, std::size_t k, const RationalSection& f) {
  check_index(ctx.n(), j);
  check_index(ctx.n(), k);
  return apply_dunkl(ctx, j, apply_dunkl(ctx, k, f)) - apply_dunkl(ctx, k, apply_dunkl(ctx, j, f));
}

GradedCommutator graded_commutator(std::size_t n, std::size_t j, std::size_t k, const RationalSection& f) {
  check_index(n, j);
  check_index(n, k);
  if (f.arity() != n) throw std::invalid_argument("section arity mismatch");
  auto d_then_b = [&](std::size_t d, std::size_t b) {
    // [d_d, B_b] f = d_d(B_b f) - B_b(d_d f)
    return exchange_part(b, f).derivative(d) - exchange_part(b, f.derivative(d));
  };
  GradedCommutator out;
  out.linear = d_then_b(k, j) - d_then_b(j, k);
  out.quadratic = exchange_part(j, exchange_part(k, f)) - exchange_part(k, exchange_part(j, f));
  return out;
}

RationalSection verify_intertwining(const DunklContext& ctx, std::size_t j, std::size_t l, std::size_t k,
                                    const RationalSection& f) {
  check_index(ctx.n(), j);
  check_index(ctx.n(), l);
  check_index(ctx.n(), k);
  if (j == k) throw std::invalid_argument("intertwining needs j != k");
  check_arity(ctx, f);
  std::size_t left_index = l;
  std::size_t right_index = l;
  if (l == k) {
    right_index = j;
  } else if (l == j) {
    right_index = k;
  }
  RationalSection lhs = apply_transposition(apply_dunkl(ctx, left_index, f), j, k);
  RationalSection rhs = apply_dunkl(ctx, right_index, apply_transposition(f, j, k));
  return lhs - rhs;
}

RationalSection sum_of_squares(const DunklContext& ctx, const RationalSection& f) {
  check_arity(ctx, f);
  RationalSection out(ctx.n());
  for (std::size_t i = 0; i < ctx.n(); ++i) out += apply_dunkl(ctx, i, apply_dunkl(ctx, i, f));
  return out;
}

RationalSection inverse_square_potential(const RationalSection& f) {
  const std::size_t n = f.arity();
  RationalSection out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out += f.divided_by_difference(i, j).divided_by_difference(i, j);
  return out;
}

SquareExpansionTerms square_expansion_terms(const RationalSection& f) {
  const std::size_t n = f.arity();
  SquareExpansionTerms t{RationalSection(n), RationalSection(n), RationalSection(n)};
  for (std::size_t i = 0; i < n; ++i) {
    t.laplacian += f.derivative(i).derivative(i);
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      t.exchange += apply_transposition(f, i, j).divided_by_difference(i, j).divided_by_difference(i, j);
      t.diagonal += f.divided_by_difference(i, j).divided_by_difference(i, j);
    }
  }
  return t;
}

RationalSection sum_of_squares_expansion(const DunklContext& ctx, const RationalSection& f, int sign) {
  check_arity(ctx, f);
  if (sign != 1 && sign != -1) throw std::invalid_argument("expansion sign must be +1 or -1");
  const CouplingPoly& c = ctx.coupling();
  SquareExpansionTerms t = square_expansion_terms(f);
  RationalSection coupled = t.exchange.scaled(c) + t.diagonal.scaled(c * c);
  return sign > 0 ? t.laplacian + coupled : t.laplacian - coupled;
}

bool has_symmetry(const RationalSection& f, Symmetry symmetry) {
  const std::size_t n = f.arity();
  // Adjacent transpositions generate S_N.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    RationalSection swapped = apply_transposition(f, i, i + 1);
    if (symmetry == Symmetry::symmetric ? swapped != f : swapped != -f) return false;
  }
  return true;
}

RationalSection restricted_projection(const DunklContext& ctx, const RationalSection& f, Symmetry symmetry) {
  check_arity(ctx, f);
  if (!has_symmetry(f, symmetry))
    throw std::invalid_argument(symmetry == Symmetry::symmetric ? "section is not S_N-symmetric"
                                                                : "section is not S_N-antisymmetric");
  return sum_of_squares_operator(ctx).restricted(symmetry).apply(f);
}

RationalSection calogero_apply(const RationalSection& f, const CouplingPoly& g) {
  RationalSection lap(f.arity());
  for (std::size_t i = 0; i < f.arity(); ++i) lap += f.derivative(i).derivative(i);
  return lap.scaled(CouplingPoly(make_rational(-1, 2))) + inverse_square_potential(f).scaled(g);
}

CouplingPoly restriction_coupling(const DunklContext& ctx, Symmetry symmetry) {
  const CouplingPoly& c = ctx.coupling();
  const CouplingPoly shift(symmetry == Symmetry::symmetric ? 1L : -1L);
  return c * (c + shift);
}

}  // namespace cdk::dunkl
