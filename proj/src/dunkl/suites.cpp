#include "cdk/dunkl/suites.hpp"

#include <functional>
#include <set>

#include "cdk/common/parallel.hpp"
#include "cdk/dunkl/normal_ordered.hpp"
#include "cdk/exactalg/text_form.hpp"

namespace cdk::dunkl {

namespace {

struct Case {
  std::string label;
  std::function<std::vector<RationalSection>()> residuals;
};

std::string exps_label(const Exponents& e) {
  std::string s = "x^[";
  for (std::size_t m = 0; m < e.size(); ++m) s += (m ? "," : "") + std::to_string(e[m]);
  return s + "]";
}

std::string coupling_label(const CouplingPoly& c) { return c == CouplingPoly::formal() ? "formal" : c.to_string(); }

SuiteReport run_cases(std::string identity, std::size_t n, unsigned degree, const CouplingPoly& coupling,
                      const std::vector<Case>& cases, const SuiteOptions& opt) {
  std::vector<std::vector<RationalSection>> results(cases.size());
  parallel_for(cases.size(), opt.workers, [&](std::size_t i) { results[i] = cases[i].residuals(); });

  SuiteReport report;
  report.identity = std::move(identity);
  report.n = n;
  report.degree = degree;
  report.coupling = coupling_label(coupling);
  report.case_count = cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    for (const auto& r : results[i]) {
      if (r.is_zero()) continue;
      ++report.failure_count;
      if (report.failures.size() < opt.max_recorded) {
        report.failure_cases.push_back(cases[i].label);
        report.failures.push_back(to_text(r));
      }
    }
  }
  return report;
}

std::string pair_label(std::size_t j, std::size_t k) {
  return "(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

}  // namespace

nlohmann::json to_json(const SuiteReport& report) {
  return {{"identity", report.identity},       {"N", report.n},
          {"degree", report.degree},           {"coupling", report.coupling},
          {"caseCount", report.case_count},    {"failureCount", report.failure_count},
          {"failureCases", report.failure_cases}, {"failures", report.failures}};
}

std::vector<RationalSection> monomial_basis(const DunklContext& ctx) {
  std::vector<RationalSection> out;
  for (auto& e : monomials_up_to(ctx.n(), ctx.basis_degree())) out.emplace_back(MultiPoly::monomial(e));
  return out;
}

std::vector<RationalSection> symmetry_basis(std::size_t n, unsigned max_degree, Symmetry symmetry) {
  const auto group = Permutation::all(n);
  std::vector<RationalSection> out;
  std::set<Exponents> seen;
  for (auto& e : monomials_up_to(n, max_degree)) {
    Exponents sorted = e;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    if (!seen.insert(sorted).second) continue;
    MultiPoly sum(n);
    for (const auto& sigma : group) {
      const long s = symmetry == Symmetry::antisymmetric ? sigma.sign() : 1;
      sum.add_term(sigma.act_on_exponents(sorted), CouplingPoly(s));
    }
    if (!sum.is_zero()) out.emplace_back(std::move(sum));
  }
  return out;
}

SuiteReport zero_curvature_suite(const DunklContext& ctx, const SuiteOptions& opt) {
  const auto basis = monomials_up_to(ctx.n(), ctx.basis_degree());
  std::vector<Case> cases;
  for (std::size_t j = 0; j < ctx.n(); ++j)
    for (std::size_t k = j + 1; k < ctx.n(); ++k)
      for (const auto& e : basis)
        cases.push_back({pair_label(j, k) + " " + exps_label(e), [&ctx, j, k, e] {
                           return std::vector{commutator_dunkl(ctx, j, k, RationalSection(MultiPoly::monomial(e)))};
                         }});
  return run_cases("zero_curvature", ctx.n(), ctx.basis_degree(), ctx.coupling(), cases, opt);
}

SuiteReport graded_curvature_suite(const DunklContext& ctx, const SuiteOptions& opt) {
  const auto basis = monomials_up_to(ctx.n(), ctx.basis_degree());
  std::vector<Case> cases;
  for (std::size_t j = 0; j < ctx.n(); ++j)
    for (std::size_t k = j + 1; k < ctx.n(); ++k)
      for (const auto& e : basis)
        cases.push_back({pair_label(j, k) + " " + exps_label(e), [&ctx, j, k, e] {
                           auto g = graded_commutator(ctx.n(), j, k, RationalSection(MultiPoly::monomial(e)));
                           return std::vector{g.linear, g.quadratic};
                         }});
  return run_cases("zero_curvature_graded", ctx.n(), ctx.basis_degree(), ctx.coupling(), cases, opt);
}

SuiteReport intertwining_suite(const DunklContext& ctx, const SuiteOptions& opt) {
  const auto basis = monomials_up_to(ctx.n(), ctx.basis_degree());
  std::vector<Case> cases;
  const std::size_t n = ctx.n();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      for (std::size_t l = 0; l < n; ++l) {
        // two-index relation for every ordered pair; three-index relation once per unordered pair
        const bool two_index = l == k;
        const bool three_index = l != j && l != k && j < k;
        if (!two_index && !three_index) continue;
        for (const auto& e : basis) {
          std::string label = "P" + pair_label(j, k) + " nabla_" + std::to_string(l + 1) + " " + exps_label(e);
          cases.push_back({std::move(label), [&ctx, j, l, k, e] {
                             return std::vector{verify_intertwining(ctx, j, l, k, RationalSection(MultiPoly::monomial(e)))};
                           }});
        }
      }
    }
  }
  return run_cases("intertwining", n, ctx.basis_degree(), ctx.coupling(), cases, opt);
}

SuiteReport sum_of_squares_suite(const DunklContext& ctx, int sign, const SuiteOptions& opt) {
  const auto basis = monomials_up_to(ctx.n(), ctx.basis_degree());
  std::vector<Case> cases;
  for (const auto& e : basis)
    cases.push_back({exps_label(e), [&ctx, sign, e] {
                       RationalSection f(MultiPoly::monomial(e));
                       return std::vector{sum_of_squares(ctx, f) - sum_of_squares_expansion(ctx, f, sign)};
                     }});
  return run_cases(sign > 0 ? "sum_of_squares" : "sum_of_squares_signed", ctx.n(), ctx.basis_degree(),
                   ctx.coupling(), cases, opt);
}

SuiteReport sum_of_squares_graded_suite(const DunklContext& ctx, const SuiteOptions& opt) {
  const auto basis = monomials_up_to(ctx.n(), ctx.basis_degree());
  std::vector<Case> cases;
  for (const auto& e : basis)
    cases.push_back({exps_label(e), [&ctx, e] {
                       RationalSection f(MultiPoly::monomial(e));
                       RationalSection r = sum_of_squares(ctx, f) - sum_of_squares_expansion(ctx, f, +1);
                       return std::vector{r.coupling_component(1), r.coupling_component(2)};
                     }});
  return run_cases("sum_of_squares_graded", ctx.n(), ctx.basis_degree(), ctx.coupling(), cases, opt);
}

SuiteReport permutation_relations_suite(const DunklContext& ctx, const SuiteOptions& opt) {
  const std::size_t n = ctx.n();
  const auto basis = monomials_up_to(n, ctx.basis_degree());
  std::vector<Case> cases;
  auto P = [](const RationalSection& f, std::size_t i, std::size_t j) { return apply_transposition(f, i, j); };
  for (const auto& e : basis) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = i + 1; k < n; ++k) {
        cases.push_back({"involution P" + pair_label(i, k) + " " + exps_label(e), [=] {
                           RationalSection f(MultiPoly::monomial(e));
                           return std::vector{P(f, i, k) - P(f, k, i), P(P(f, i, k), i, k) - f};
                         }});
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = a + 1; b < n; ++b) {
            if (a == i || a == k || b == i || b == k || a < i) continue;
            cases.push_back({"commute P" + pair_label(i, k) + " P" + pair_label(a, b) + " " + exps_label(e), [=] {
                               RationalSection f(MultiPoly::monomial(e));
                               return std::vector{P(P(f, a, b), i, k) - P(P(f, i, k), a, b)};
                             }});
          }
      }
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
          if (i == k || k == l || i == l) continue;
          cases.push_back({"fusion " + pair_label(i, k) + pair_label(k, l) + " " + exps_label(e), [=] {
                             RationalSection f(MultiPoly::monomial(e));
                             RationalSection a = P(P(f, k, l), i, k);
                             RationalSection b = P(P(f, i, k), i, l);
                             RationalSection c = P(P(f, i, l), k, l);
                             return std::vector{a - b, b - c};
                           }});
        }
  }
  return run_cases("permutation_relations", n, ctx.basis_degree(), ctx.coupling(), cases, opt);
}

SuiteReport restriction_suite(const DunklContext& ctx, Symmetry symmetry, int sign, const SuiteOptions& opt) {
  const std::size_t n = ctx.n();
  const auto basis = symmetry_basis(n, ctx.basis_degree(), symmetry);
  const CouplingPoly g = restriction_coupling(ctx, symmetry);
  // sign * 2 g
  const CouplingPoly potential = g * CouplingPoly(2L * sign);
  const NormalOrderedOperator restricted = sum_of_squares_operator(ctx).restricted(symmetry);
  const NormalOrderedOperator expected = laplacian_plus_potential(n, potential);

  std::vector<Case> cases;
  cases.push_back({"operator", [&restricted, &expected, n] {
                     std::vector<RationalSection> out;
                     NormalOrderedOperator diff = restricted;
                     NormalOrderedOperator neg = expected.after_multiplication(
                         RationalSection(MultiPoly::constant(n, CouplingPoly(-1L))));
                     diff += neg;
                     for (const auto& [key, coeff] : diff.terms()) out.push_back(coeff);
                     return out;
                   }});
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const RationalSection& f = basis[b];
    cases.push_back({"basis[" + std::to_string(b) + "] " + to_text(f.numerator()),
                     [&ctx, &f, &restricted, potential] {
                       RationalSection target = f.derivative(0).derivative(0);
                       for (std::size_t i = 1; i < f.arity(); ++i) target += f.derivative(i).derivative(i);
                       target += inverse_square_potential(f).scaled(potential);
                       return std::vector{sum_of_squares(ctx, f) - target, restricted.apply(f) - target};
                     }});
  }
  std::string name = symmetry == Symmetry::symmetric ? "restriction_symmetric" : "restriction_antisymmetric";
  if (sign < 0) name += "_signed";
  return run_cases(std::move(name), n, ctx.basis_degree(), ctx.coupling(), cases, opt);
}

}  // namespace cdk::dunkl
