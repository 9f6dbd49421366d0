#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cdk/exactalg/multi_poly.hpp"
#include "cdk/exactalg/rational_section.hpp"

namespace cdk::symbolcalc {

/// e^{alpha x_source d_target}: x_target <- x_target + alpha x_source
struct Substitute {
  std::size_t target;
  std::size_t source;
  Rational alpha;
};

/// (-1)^{x_k d_k}: x_k <- -x_k
struct SignFlip {
  std::size_t k;
};

/// q^{x_k d_k}: x_k <- q x_k
struct Scale {
  std::size_t k;
  Rational q;
};

using ShiftAtom = std::variant<Substitute, SignFlip, Scale>;

/// Operator product A1 A2 ... An written left to right; on a function the
/// rightmost atom acts first.
struct ShiftWord {
  std::vector<ShiftAtom> atoms;

  std::string to_string() const;
};

MultiPoly apply_atom(const ShiftAtom& atom, const MultiPoly& f);
MultiPoly apply_shift_word(const ShiftWord& word, const MultiPoly& f);
/// Throws std::invalid_argument unless f is a polynomial.
MultiPoly apply_shift_word(const ShiftWord& word, const RationalSection& f);

/// A way of writing the exchange of x_j and x_k as a product of shifts and
/// sign flips.
struct Realization {
  std::string name;
  ShiftWord word;
};

/// (-1)^{x_k d_k} e^{x_j d_k} e^{-x_k d_j} e^{x_j d_k}
Realization realization_flip_first(std::size_t j, std::size_t k);
/// e^{x_k d_j} e^{-x_j d_k} e^{x_k d_j} (-1)^{x_k d_k}
Realization realization_flip_last(std::size_t j, std::size_t k);
/// (-1)^{x_j d_j} e^{-x_j d_k} e^{x_k d_j} e^{-x_j d_k}
Realization realization_flip_first_reversed(std::size_t j, std::size_t k);
std::vector<Realization> shift_realizations(std::size_t j, std::size_t k);

/// sum_{n=0}^{M} (-2v)^n / n! d_v^n f for f univariate (arity 1).
MultiPoly sign_flip_series(const MultiPoly& f, unsigned truncation);

/// sum_{n=0}^{M} (x_j - x_k)^n / n! (d_k - d_j)^n f, coordinates left of derivatives.
MultiPoly permutation_series(std::size_t j, std::size_t k, const MultiPoly& f, unsigned truncation);

/// f with x_k <- q x_k.
MultiPoly scaling_apply(const Rational& q, std::size_t k, const MultiPoly& f);

/// coefficient * x^x_exponents * p^p_exponents
struct SymbolTerm {
  Exponents x_exponents;
  Exponents p_exponents;
  Rational coefficient;

  friend bool operator==(const SymbolTerm&, const SymbolTerm&) = default;
};

/// Normal-ordered symbol of the exchange of x_j and x_k truncated at order M:
/// sum_{n<=M} (x_j - x_k)^n (p_k - p_j)^n / n!, expanded into monomials and
/// sorted by (p exponents, x exponents).
std::vector<SymbolTerm> symbol_of_permutation(std::size_t n, std::size_t j, std::size_t k, unsigned truncation);

/// Each p_m becomes d_m, placed right of the x monomial.
MultiPoly quantize(const std::vector<SymbolTerm>& symbol, const MultiPoly& f);

nlohmann::json symbol_to_json(const std::vector<SymbolTerm>& symbol);
std::vector<SymbolTerm> symbol_from_json(const nlohmann::json& j);

/// One checked statement of the normal-ordering suite.
///
/// Required entries must hold for the suite to pass; the others are printed
/// variants whose status is only reported.
struct RealizationReport {
  std::string name;
  std::string form;
  bool required = true;
  std::size_t case_count = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failure_cases;

  bool holds() const noexcept { return failure_count == 0; }
};

struct NormalOrderingReport {
  std::size_t n = 0;
  unsigned degree = 0;
  std::vector<RealizationReport> entries;

  /// All required entries hold.
  bool all_hold() const;
  const RealizationReport* find(std::string_view name) const;
};

/// Compares every realization, the truncated series, the quantized symbol and
/// the dilation rules against the exact swap on all monomials of degree <= degree.
/// The shift-word realizations and the series with reversed difference
/// sum (x_k - x_j)^n / n! (d_k - d_j)^n are reported without being required.
NormalOrderingReport normal_ordering_suite(std::size_t n, unsigned degree, std::size_t workers = 1);
nlohmann::json to_json(const NormalOrderingReport& report);

}  // namespace cdk::symbolcalc
