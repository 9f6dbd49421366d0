#include "cdk/exactalg/rational_section.hpp"

#include <algorithm>
#include <stdexcept>

#include "cdk/exactalg/errors.hpp"

namespace cdk {

namespace {

struct Pair {
  std::size_t lo;
  std::size_t hi;
};

std::vector<Pair> pairs_of(std::size_t arity) {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < arity; ++i)
    for (std::size_t j = i + 1; j < arity; ++j) out.push_back({i, j});
  return out;
}

}  // namespace

RationalSection::RationalSection(std::size_t arity) : num_(arity), den_(pair_count(arity), 0) {}

RationalSection::RationalSection(MultiPoly num) : num_(std::move(num)), den_(pair_count(num_.arity()), 0) {}

RationalSection::RationalSection(MultiPoly num, std::vector<std::uint32_t> denom_exponents)
    : num_(std::move(num)), den_(std::move(denom_exponents)) {
  if (den_.size() != pair_count(num_.arity())) throw ArityError("denominator vector has wrong length");
  reduce();
}

std::size_t RationalSection::pair_index(std::size_t arity, std::size_t i, std::size_t j) {
  if (i == j || i >= arity || j >= arity) throw std::out_of_range("invalid coordinate pair");
  if (i > j) std::swap(i, j);
  return i * (2 * arity - i - 1) / 2 + (j - i - 1);
}

std::uint32_t RationalSection::denominator_exponent(std::size_t i, std::size_t j) const {
  return den_[pair_index(arity(), i, j)];
}

bool RationalSection::is_polynomial() const {
  return std::all_of(den_.begin(), den_.end(), [](std::uint32_t d) { return d == 0; });
}

void RationalSection::reduce() {
  if (num_.is_zero()) {
    std::fill(den_.begin(), den_.end(), 0u);
    return;
  }
  const auto pairs = pairs_of(arity());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    while (den_[p] > 0) {
      auto q = num_.divided_by_pair_difference(pairs[p].lo, pairs[p].hi);
      if (!q) break;
      num_ = std::move(*q);
      --den_[p];
    }
  }
}

void RationalSection::require_same_arity(const RationalSection& other) const {
  if (arity() != other.arity())
    throw ArityError("arity mismatch: " + std::to_string(arity()) + " vs " + std::to_string(other.arity()));
}

MultiPoly RationalSection::lift(const MultiPoly& num, std::span<const std::uint32_t> extra) {
  const auto pairs = pairs_of(num.arity());
  MultiPoly out = num;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    for (std::uint32_t r = 0; r < extra[p]; ++r) out = out.times_pair_difference(pairs[p].lo, pairs[p].hi);
  return out;
}

RationalSection& RationalSection::operator+=(const RationalSection& other) {
  require_same_arity(other);
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  std::vector<std::uint32_t> common(den_.size()), extra_a(den_.size()), extra_b(den_.size());
  for (std::size_t p = 0; p < den_.size(); ++p) {
    common[p] = std::max(den_[p], other.den_[p]);
    extra_a[p] = common[p] - den_[p];
    extra_b[p] = common[p] - other.den_[p];
  }
  num_ = lift(num_, extra_a) + lift(other.num_, extra_b);
  den_ = std::move(common);
  reduce();
  return *this;
}

RationalSection& RationalSection::operator-=(const RationalSection& other) { return *this += -other; }

RationalSection RationalSection::operator-() const {
  RationalSection out(*this);
  out.num_ = -out.num_;
  return out;
}

RationalSection operator*(const RationalSection& a, const RationalSection& b) {
  a.require_same_arity(b);
  std::vector<std::uint32_t> den(a.den_.size());
  for (std::size_t p = 0; p < den.size(); ++p) den[p] = a.den_[p] + b.den_[p];
  return RationalSection(a.num_ * b.num_, std::move(den));
}

RationalSection RationalSection::scaled(const CouplingPoly& factor) const {
  return RationalSection(num_.scaled(factor), den_);
}

RationalSection RationalSection::derivative(std::size_t k) const {
  const std::size_t n = arity();
  if (k >= n) throw std::out_of_range("derivative index out of range");
  const auto pairs = pairs_of(n);

  // Pairs touching k that sit in the denominator.
  std::vector<std::size_t> touching;
  for (std::size_t p = 0; p < pairs.size(); ++p)
    if (den_[p] > 0 && (pairs[p].lo == k || pairs[p].hi == k)) touching.push_back(p);

  if (touching.empty()) return RationalSection(num_.derivative(k), den_);

  // d/dx_k [num / prod D^d] = [num' * prod_K D - num * sum_q d_q s_q prod_{K\q} D] / (prod D^d * prod_K D)
  auto product_except = [&](std::size_t skip) {
    MultiPoly out = MultiPoly::constant(n, 1);
    for (std::size_t p : touching)
      if (p != skip) out = out.times_pair_difference(pairs[p].lo, pairs[p].hi);
    return out;
  };
  MultiPoly result = num_.derivative(k) * product_except(pairs.size());
  for (std::size_t q : touching) {
    const long sign = pairs[q].lo == k ? 1 : -1;
    const long weight = sign * static_cast<long>(den_[q]);
    result -= (num_ * product_except(q)).scaled(CouplingPoly(weight));
  }
  std::vector<std::uint32_t> den = den_;
  for (std::size_t p : touching) ++den[p];
  return RationalSection(std::move(result), std::move(den));
}

RationalSection RationalSection::permuted(const Permutation& sigma) const {
  const std::size_t n = arity();
  if (sigma.size() != n) throw ArityError("permutation degree does not match arity");
  const auto pairs = pairs_of(n);
  std::vector<std::uint32_t> den(den_.size(), 0);
  bool negate = false;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (den_[p] == 0) continue;
    const std::size_t a = sigma(pairs[p].lo);
    const std::size_t b = sigma(pairs[p].hi);
    den[pair_index(n, a, b)] = den_[p];
    if (a > b && den_[p] % 2 == 1) negate = !negate;
  }
  MultiPoly num = num_.permuted(sigma);
  if (negate) num = -num;
  RationalSection out(n);
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

RationalSection RationalSection::divided_by_difference(std::size_t i, std::size_t j) const {
  const std::size_t n = arity();
  std::vector<std::uint32_t> den = den_;
  ++den[pair_index(n, i, j)];
  return RationalSection(i < j ? num_ : -num_, std::move(den));
}

RationalSection RationalSection::coupling_component(std::size_t power) const {
  return RationalSection(num_.coupling_component(power), den_);
}

RationalSection RationalSection::with_coupling(const Rational& c) const {
  return RationalSection(num_.with_coupling(c), den_);
}

Rational RationalSection::evaluate(std::span<const Rational> point, const Rational& c) const {
  const std::size_t n = arity();
  if (point.size() != n) throw ArityError("point dimension does not match arity");
  const auto pairs = pairs_of(n);
  Rational den(1);
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (den_[p] == 0) continue;
    Rational diff = point[pairs[p].lo] - point[pairs[p].hi];
    if (diff == 0) throw PoleError(pairs[p].lo, pairs[p].hi);
    for (std::uint32_t r = 0; r < den_[p]; ++r) den *= diff;
  }
  return num_.evaluate(point, c) / den;
}

}  // namespace cdk
