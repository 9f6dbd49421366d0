#pragma once

#include <string>
#include <vector>

#include "cdk/exactalg/rational_section.hpp"

namespace cdk::test {

inline Rational q(const char* text) { return Rational(text); }

inline RationalSection constant(std::size_t n, long v) { return RationalSection(MultiPoly::constant(n, v)); }
inline RationalSection var(std::size_t n, std::size_t k) { return RationalSection(MultiPoly::variable(n, k)); }
inline RationalSection mono(Exponents e) { return RationalSection(MultiPoly::monomial(std::move(e))); }
inline RationalSection coupling(std::size_t n) { return RationalSection(MultiPoly::constant(n, CouplingPoly::formal())); }
/// 1 / (x_i - x_j)
inline RationalSection inv_diff(std::size_t n, std::size_t i, std::size_t j, std::uint32_t power = 1) {
  std::vector<std::uint32_t> den(RationalSection::pair_count(n), 0);
  den[RationalSection::pair_index(n, i, j)] = power;
  RationalSection out(MultiPoly::constant(n, (i > j && power % 2 == 1) ? -1 : 1), den);
  return out;
}
inline std::vector<Rational> point(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.emplace_back(s);
  return out;
}

}  // namespace cdk::test
