#include <gtest/gtest.h>

#include <random>

#include "cdk/exactalg/errors.hpp"
#include "cdk/exactalg/permutation.hpp"
#include "cdk/exactalg/text_form.hpp"
#include "helpers.hpp"

using namespace cdk;
using cdk::test::inv_diff;
using cdk::test::mono;
using cdk::test::point;
using cdk::test::q;
using cdk::test::var;

namespace {

RationalSection random_section(std::mt19937_64& rng, std::size_t n, unsigned max_deg) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, static_cast<int>(max_deg)), den(0, 2), cpow(0, 2);
  MultiPoly num(n);
  for (int t = 0; t < 4; ++t) {
    Exponents e(n, 0);
    int left = deg(rng);
    for (std::size_t k = 0; k < n && left > 0; ++k) {
      std::uniform_int_distribution<int> take(0, left);
      e[k] = static_cast<std::uint32_t>(take(rng));
      left -= static_cast<int>(e[k]);
    }
    num.add_term(e, CouplingPoly::monomial(Rational(coeff(rng)), static_cast<std::size_t>(cpow(rng))));
  }
  std::vector<std::uint32_t> d(RationalSection::pair_count(n));
  for (auto& v : d) v = static_cast<std::uint32_t>(den(rng));
  return RationalSection(num, d);
}

}  // namespace

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(parse_rational("3/6"), q("1/2"));
  EXPECT_EQ(parse_rational("-0.125"), q("-1/8"));
  EXPECT_EQ(parse_rational("1e-3"), q("1/1000"));
  EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(CouplingPoly, CanonicalFormAndArithmetic) {
  const CouplingPoly c = CouplingPoly::formal();
  EXPECT_TRUE((c - c).is_zero());
  EXPECT_EQ((c - c).degree(), -1);
  const CouplingPoly p = c * (c + CouplingPoly(1));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coefficient(1), 1);
  EXPECT_EQ(p.evaluate(q("2")), 6);
  EXPECT_EQ(p.component(2), CouplingPoly::monomial(Rational(1), 2));
}

TEST(MultiPoly, AdditiveInverse) {
  const MultiPoly x1 = MultiPoly::variable(2, 0);
  EXPECT_TRUE((x1 + (-x1)).is_zero());
}

TEST(MultiPoly, DifferenceOfSquares) {
  const MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
  EXPECT_EQ((x1 - x2) * (x1 + x2), MultiPoly::monomial({2, 0}) - MultiPoly::monomial({0, 2}));
}

TEST(MultiPoly, CouplingPowersMultiply) {
  const MultiPoly cx1 = MultiPoly::monomial({1, 0}, CouplingPoly::formal());
  EXPECT_EQ(cx1 * cx1, MultiPoly::monomial({2, 0}, CouplingPoly::monomial(Rational(1), 2)));
}

TEST(MultiPoly, ArityMismatchThrows) {
  EXPECT_THROW(MultiPoly::variable(2, 0) + MultiPoly::variable(3, 0), ArityError);
}

TEST(MultiPoly, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiPoly a = random_section(rng, 3, 3).numerator();
    const MultiPoly b = random_section(rng, 3, 3).numerator();
    const MultiPoly c = random_section(rng, 3, 3).numerator();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(MultiPoly, ExactDivisionByPairDifference) {
  const MultiPoly f = MultiPoly::monomial({3, 0, 1}) - MultiPoly::monomial({0, 3, 1});
  ASSERT_TRUE(f.vanishes_on_diagonal(0, 1));
  const auto quotient = f.divided_by_pair_difference(0, 1);
  ASSERT_TRUE(quotient.has_value());
  EXPECT_EQ(quotient->times_pair_difference(0, 1), f);
  EXPECT_FALSE(MultiPoly::monomial({1, 0, 0}).divided_by_pair_difference(0, 1).has_value());
}

TEST(Derivative, PowerRule) { EXPECT_EQ(mono({2, 0}).derivative(0), mono({1, 0}).scaled(CouplingPoly(2))); }

TEST(Derivative, InverseDifference) {
  EXPECT_EQ(inv_diff(2, 0, 1).derivative(0), -inv_diff(2, 0, 1, 2));
}

TEST(Derivative, QuotientRule) {
  const RationalSection f = var(2, 1) * inv_diff(2, 0, 1);
  EXPECT_EQ(f.derivative(0), -(var(2, 1) * inv_diff(2, 0, 1, 2)));
}

TEST(Permute, SwapsVariables) {
  EXPECT_EQ(var(2, 0).permuted(Permutation::transposition(2, 0, 1)), var(2, 1));
}

TEST(Permute, DifferenceIsAntisymmetric) {
  EXPECT_EQ(inv_diff(2, 0, 1).permuted(Permutation::transposition(2, 0, 1)), -inv_diff(2, 0, 1));
}

TEST(Permute, FusionOfTranspositions) {
  const RationalSection f = mono({1, 2, 3});
  const auto p12 = Permutation::transposition(3, 0, 1), p23 = Permutation::transposition(3, 1, 2),
             p13 = Permutation::transposition(3, 0, 2);
  // operator products act right to left
  EXPECT_EQ(f.permuted(p23).permuted(p12), f.permuted(p12).permuted(p13));
}

TEST(Permute, GroupActionOnS3) {
  std::mt19937_64 rng(5);
  const auto group = Permutation::all(3);
  for (int trial = 0; trial < 10; ++trial) {
    const RationalSection f = random_section(rng, 3, 4);
    for (const auto& s : group)
      for (const auto& t : group) EXPECT_EQ(f.permuted(t).permuted(s), f.permuted(s * t));
  }
}

TEST(Permute, TranspositionRelationsOnMonomials) {
  for (std::size_t n : {2u, 3u, 4u}) {
    for (const auto& e : monomials_up_to(n, n == 4 ? 4 : 6)) {
      const RationalSection f = mono(e);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          const auto pij = Permutation::transposition(n, i, j);
          EXPECT_EQ(f.permuted(pij).permuted(pij), f);
          EXPECT_EQ(f.permuted(pij), f.permuted(Permutation::transposition(n, j, i)));
          for (std::size_t k = 0; k < n; ++k) {
            if (k == i || k == j) continue;
            const auto pjk = Permutation::transposition(n, j, k), pik = Permutation::transposition(n, i, k);
            EXPECT_EQ(f.permuted(pjk).permuted(pij), f.permuted(pij).permuted(pik));
          }
        }
    }
  }
}

TEST(Permute, EvaluationCommutesWithAction) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  const auto group = Permutation::all(3);
  const RationalSection f = random_section(rng, 3, 4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> x(3);
    for (auto& v : x) v = make_rational(num(rng), den(rng));
    if (x[0] == x[1] || x[0] == x[2] || x[1] == x[2]) continue;
    const auto& s = group[static_cast<std::size_t>(trial) % group.size()];
    // (s . f)(x) = f(y) with y_m = x_{s(m)}
    std::vector<Rational> y(3);
    for (std::size_t m = 0; m < 3; ++m) y[m] = x[s(m)];
    EXPECT_EQ(f.permuted(s).evaluate(x, q("3/2")), f.evaluate(y, q("3/2")));
  }
}

TEST(Evaluate, RationalValue) {
  const RationalSection f = var(2, 0) * inv_diff(2, 0, 1);
  EXPECT_EQ(f.evaluate(point({"1", "3"}), Rational(0)), q("-1/2"));
}

TEST(Evaluate, PoleIdentifiesPair) {
  const RationalSection f = inv_diff(3, 1, 2);
  try {
    f.evaluate(point({"0", "2", "2"}), Rational(1));
    FAIL() << "expected a pole error";
  } catch (const PoleError& e) {
    EXPECT_EQ(e.first(), 1u);
    EXPECT_EQ(e.second(), 2u);
  }
}

TEST(Evaluate, CouplingSubstitution) {
  const RationalSection f = test::constant(2, 1) + test::coupling(2) * var(2, 1) * inv_diff(2, 0, 1);
  EXPECT_EQ(f.evaluate(point({"0", "1"}), Rational(2)), -1);
}

TEST(Reduction, CancelsCommonFactorsAndIsIdempotent) {
  std::vector<std::uint32_t> den(1, 2);
  const RationalSection f((MultiPoly::variable(2, 0) - MultiPoly::variable(2, 1)) * MultiPoly::variable(2, 0), den);
  EXPECT_EQ(f.denominator_exponent(0, 1), 1u);
  EXPECT_EQ(f, var(2, 0) * inv_diff(2, 0, 1));

  std::mt19937_64 rng(3);
  for (std::size_t n : {2u, 3u, 4u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const RationalSection g = random_section(rng, n, 6);
      const RationalSection again(g.numerator(), {g.denominator_exponents().begin(), g.denominator_exponents().end()});
      EXPECT_EQ(again, g);
      for (std::size_t p = 0; p < RationalSection::pair_count(n); ++p) {
        if (g.denominator_exponents()[p] == 0) continue;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if (RationalSection::pair_index(n, i, j) == p) EXPECT_FALSE(g.numerator().vanishes_on_diagonal(i, j));
      }
    }
  }
}

TEST(TextForm, RoundTrip) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const RationalSection f = random_section(rng, 3, 5);
    EXPECT_EQ(section_from_text(to_text(f)), f);
  }
  EXPECT_EQ(to_text(var(2, 0) * inv_diff(2, 0, 1, 2)), "N=2; 1/1*c^0*x^[1,0]; (x1-x2)^2");
  EXPECT_THROW(section_from_text("N=2; nonsense"), ParseError);
}
