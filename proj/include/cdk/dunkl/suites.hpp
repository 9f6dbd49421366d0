#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdk/dunkl/dunkl.hpp"

namespace cdk::dunkl {

/// Outcome of one identity checked over a spanning set.
///
/// case_count counts every (index tuple, basis element) application. Only the
/// first max_recorded failures keep their residual text; failure_count is exact.
struct SuiteReport {
  std::string identity;
  std::size_t n = 0;
  unsigned degree = 0;
  std::string coupling;
  std::size_t case_count = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failure_cases;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failure_count == 0; }
};

nlohmann::json to_json(const SuiteReport& report);

struct SuiteOptions {
  std::size_t workers = 1;
  std::size_t max_recorded = 20;
};

/// Monomials x^a with |a| <= ctx.basis_degree().
std::vector<RationalSection> monomial_basis(const DunklContext& ctx);
/// Symmetrized (sum over S_N) or antisymmetrized monomials, one per orbit, nonzero only.
std::vector<RationalSection> symmetry_basis(std::size_t n, unsigned max_degree, Symmetry symmetry);

/// [nabla_j, nabla_k] f == 0 for all j < k.
SuiteReport zero_curvature_suite(const DunklContext& ctx, const SuiteOptions& opt = {});
/// The c^1 and c^2 pieces of [nabla_j, nabla_k] f vanish separately.
SuiteReport graded_curvature_suite(const DunklContext& ctx, const SuiteOptions& opt = {});
/// Both exchange relations, all admissible index triples.
SuiteReport intertwining_suite(const DunklContext& ctx, const SuiteOptions& opt = {});
/// sum_i nabla_i^2 f == sum_of_squares_expansion(ctx, f, sign).
SuiteReport sum_of_squares_suite(const DunklContext& ctx, int sign, const SuiteOptions& opt = {});
/// The c^1 and c^2 pieces of the residual for sign = +1 vanish separately.
SuiteReport sum_of_squares_graded_suite(const DunklContext& ctx, const SuiteOptions& opt = {});
/// Involution, symmetry, commutation of disjoint pairs, and fusion on monomials.
SuiteReport permutation_relations_suite(const DunklContext& ctx, const SuiteOptions& opt = {});
/// sum nabla^2 f - Laplacian f - sign * 2 g V2 f == 0 on the symmetry basis,
/// g = c(c+1) (symmetric) or c(c-1) (antisymmetric). Each basis element is
/// checked twice: by direct application and through the restricted
/// normal-ordered operator.
SuiteReport restriction_suite(const DunklContext& ctx, Symmetry symmetry, int sign, const SuiteOptions& opt = {});

}  // namespace cdk::dunkl
