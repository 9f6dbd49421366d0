#include "cdk/symbolcalc/symbolcalc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cdk/common/parallel.hpp"

namespace cdk::symbolcalc {

namespace {

LinearForm unit_form(std::size_t n, std::size_t k) {
  LinearForm form{std::vector<Rational>(n, Rational(0))};
  form.coeff[k] = 1;
  return form;
}

Rational factorial(unsigned n) {
  Integer f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return Rational(f);
}

Integer binomial(unsigned n, unsigned k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

std::string var(std::size_t k) { return "x" + std::to_string(k + 1); }

std::string exps_label(const Exponents& e) {
  std::string s = "x^[";
  for (std::size_t m = 0; m < e.size(); ++m) s += (m ? "," : "") + std::to_string(e[m]);
  return s + "]";
}

}  // namespace

std::string ShiftWord::to_string() const {
  std::string out;
  for (const auto& atom : atoms) {
    if (!out.empty()) out += " ";
    std::visit(
        [&](const auto& a) {
          using T = std::decay_t<decltype(a)>;
          if constexpr (std::is_same_v<T, Substitute>) {
            out += "exp(" + a.alpha.get_str() + "*" + var(a.source) + "*d" + std::to_string(a.target + 1) + ")";
          } else if constexpr (std::is_same_v<T, SignFlip>) {
            out += "(-1)^(" + var(a.k) + "*d" + std::to_string(a.k + 1) + ")";
          } else {
            out += "(" + a.q.get_str() + ")^(" + var(a.k) + "*d" + std::to_string(a.k + 1) + ")";
          }
        },
        atom);
  }
  return out.empty() ? "1" : out;
}

MultiPoly apply_atom(const ShiftAtom& atom, const MultiPoly& f) {
  const std::size_t n = f.arity();
  return std::visit(
      [&](const auto& a) -> MultiPoly {
        using T = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<T, Substitute>) {
          if (a.target == a.source) throw std::invalid_argument("shift must move one coordinate along another");
          LinearForm form = unit_form(n, a.target);
          form.coeff[a.source] += a.alpha;
          return f.substituted(a.target, form);
        } else if constexpr (std::is_same_v<T, SignFlip>) {
          return scaling_apply(Rational(-1), a.k, f);
        } else {
          return scaling_apply(a.q, a.k, f);
        }
      },
      atom);
}

MultiPoly apply_shift_word(const ShiftWord& word, const MultiPoly& f) {
  MultiPoly out = f;
  for (auto it = word.atoms.rbegin(); it != word.atoms.rend(); ++it) out = apply_atom(*it, out);
  return out;
}

MultiPoly apply_shift_word(const ShiftWord& word, const RationalSection& f) {
  if (!f.is_polynomial()) throw std::invalid_argument("shift words act exactly only on polynomials");
  return apply_shift_word(word, f.numerator());
}

Realization realization_flip_first(std::size_t j, std::size_t k) {
  return {"flip_first",
          {{SignFlip{k}, Substitute{k, j, Rational(1)}, Substitute{j, k, Rational(-1)}, Substitute{k, j, Rational(1)}}}};
}

Realization realization_flip_last(std::size_t j, std::size_t k) {
  return {"flip_last",
          {{Substitute{j, k, Rational(1)}, Substitute{k, j, Rational(-1)}, Substitute{j, k, Rational(1)}, SignFlip{k}}}};
}

Realization realization_flip_first_reversed(std::size_t j, std::size_t k) {
  return {"flip_first_reversed",
          {{SignFlip{j}, Substitute{k, j, Rational(-1)}, Substitute{j, k, Rational(1)}, Substitute{k, j, Rational(-1)}}}};
}

std::vector<Realization> shift_realizations(std::size_t j, std::size_t k) {
  return {realization_flip_first(j, k), realization_flip_last(j, k), realization_flip_first_reversed(j, k)};
}

MultiPoly sign_flip_series(const MultiPoly& f, unsigned truncation) {
  if (f.arity() != 1) throw std::invalid_argument("sign_flip_series expects a univariate polynomial");
  MultiPoly out(1);
  MultiPoly deriv = f;
  MultiPoly weight = MultiPoly::constant(1, 1);  // (-2v)^n
  const MultiPoly minus_two_v = MultiPoly::monomial({1}, CouplingPoly(-2L));
  for (unsigned n = 0; n <= truncation; ++n) {
    if (deriv.is_zero()) break;
    out += (weight * deriv).scaled(CouplingPoly(1 / factorial(n)));
    deriv = deriv.derivative(0);
    weight = weight * minus_two_v;
  }
  return out;
}

namespace {

// sum_{m<=M} (x_a - x_b)^m / m! (d_k - d_j)^m f
MultiPoly difference_series(std::size_t a, std::size_t b, std::size_t j, std::size_t k, const MultiPoly& f,
                            unsigned truncation) {
  const std::size_t n = f.arity();
  MultiPoly out(n);
  MultiPoly deriv = f;
  MultiPoly weight = MultiPoly::constant(n, 1);
  const MultiPoly diff = MultiPoly::pair_difference(n, a, b);
  for (unsigned m = 0; m <= truncation; ++m) {
    if (deriv.is_zero()) break;
    out += (weight * deriv).scaled(CouplingPoly(1 / factorial(m)));
    deriv = deriv.derivative(k) - deriv.derivative(j);
    weight = weight * diff;
  }
  return out;
}

}  // namespace

MultiPoly permutation_series(std::size_t j, std::size_t k, const MultiPoly& f, unsigned truncation) {
  const std::size_t n = f.arity();
  if (j >= n || k >= n) throw std::out_of_range("permutation_series index out of range");
  if (j == k) return f;
  return difference_series(j, k, j, k, f, truncation);
}

MultiPoly scaling_apply(const Rational& q, std::size_t k, const MultiPoly& f) {
  if (k >= f.arity()) throw std::out_of_range("scaling index out of range");
  LinearForm form{std::vector<Rational>(f.arity(), Rational(0))};
  form.coeff[k] = q;
  return f.substituted(k, form);
}

std::vector<SymbolTerm> symbol_of_permutation(std::size_t n, std::size_t j, std::size_t k, unsigned truncation) {
  if (j >= n || k >= n || j == k) throw std::invalid_argument("symbol_of_permutation needs distinct indices < n");
  std::map<std::pair<Exponents, Exponents>, Rational> acc;
  for (unsigned m = 0; m <= truncation; ++m) {
    const Rational inv_fact = 1 / factorial(m);
    // (x_j - x_k)^m = sum_a C(m,a) x_j^a (-x_k)^{m-a};  (p_k - p_j)^m = sum_b C(m,b) p_k^b (-p_j)^{m-b}
    for (unsigned a = 0; a <= m; ++a) {
      for (unsigned b = 0; b <= m; ++b) {
        Rational coeff = inv_fact * Rational(binomial(m, a) * binomial(m, b));
        if ((m - a + m - b) % 2 == 1) coeff = -coeff;
        Exponents xe(n, 0), pe(n, 0);
        xe[j] = a;
        xe[k] = m - a;
        pe[k] = b;
        pe[j] = m - b;
        acc[{pe, xe}] += coeff;
      }
    }
  }
  std::vector<SymbolTerm> out;
  for (auto& [key, coeff] : acc)
    if (coeff != 0) out.push_back({key.second, key.first, coeff});
  return out;
}

MultiPoly quantize(const std::vector<SymbolTerm>& symbol, const MultiPoly& f) {
  MultiPoly out(f.arity());
  for (const auto& term : symbol) {
    if (term.x_exponents.size() != f.arity() || term.p_exponents.size() != f.arity())
      throw std::invalid_argument("symbol arity does not match polynomial");
    MultiPoly d = f;
    for (std::size_t m = 0; m < f.arity() && !d.is_zero(); ++m)
      for (std::uint32_t r = 0; r < term.p_exponents[m]; ++r) d = d.derivative(m);
    if (d.is_zero()) continue;
    out += MultiPoly::monomial(term.x_exponents, CouplingPoly(term.coefficient)) * d;
  }
  return out;
}

nlohmann::json symbol_to_json(const std::vector<SymbolTerm>& symbol) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : symbol)
    arr.push_back({{"xExponents", t.x_exponents},
                   {"pExponents", t.p_exponents},
                   {"coefficient", to_fraction_string(t.coefficient)}});
  return arr;
}

std::vector<SymbolTerm> symbol_from_json(const nlohmann::json& j) {
  std::vector<SymbolTerm> out;
  for (const auto& t : j)
    out.push_back({t.at("xExponents").get<Exponents>(), t.at("pExponents").get<Exponents>(),
                   parse_rational(t.at("coefficient").get<std::string>())});
  return out;
}

bool NormalOrderingReport::all_hold() const {
  return std::all_of(entries.begin(), entries.end(), [](const auto& e) { return !e.required || e.holds(); });
}

const RealizationReport* NormalOrderingReport::find(std::string_view name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

NormalOrderingReport normal_ordering_suite(std::size_t n, unsigned degree, std::size_t workers) {
  if (n < 2) throw std::invalid_argument("normal_ordering_suite needs N >= 2");
  const auto basis = monomials_up_to(n, degree);

  struct Check {
    std::string entry;
    std::string form;
    std::string label;
    std::function<bool()> ok;
    bool required = true;
  };
  std::vector<Check> checks;

  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      const Permutation swap = Permutation::transposition(n, j, k);
      for (const auto& e : basis) {
        const std::string label = "(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ") " + exps_label(e);
        for (auto& r : shift_realizations(j, k)) {
          std::string form = r.name == "flip_first" ? "(-1)^{x_k d_k} e^{x_j d_k} e^{-x_k d_j} e^{x_j d_k}"
                             : r.name == "flip_last" ? "e^{x_k d_j} e^{-x_j d_k} e^{x_k d_j} (-1)^{x_k d_k}"
                                                     : "(-1)^{x_j d_j} e^{-x_j d_k} e^{x_k d_j} e^{-x_j d_k}";
          checks.push_back({r.name, std::move(form), label,
                            [word = r.word, e, swap] {
                              MultiPoly f = MultiPoly::monomial(e);
                              return apply_shift_word(word, f) == f.permuted(swap);
                            },
                            false});
        }
        const unsigned deg = std::accumulate(e.begin(), e.end(), 0u);
        checks.push_back({"half_difference_flip_series", "(-1)^{(x_k-x_j)(d_k-d_j)/2} as sum (x_j-x_k)^n/n! (d_k-d_j)^n, M = deg f",
                          label, [j, k, e, swap, deg] {
                            MultiPoly f = MultiPoly::monomial(e);
                            return permutation_series(j, k, f, deg) == f.permuted(swap);
                          }});
        checks.push_back({"reversed_difference_series", "sum (x_k-x_j)^n/n! (d_k-d_j)^n, M = deg f", label,
                          [j, k, e, swap, deg] {
                            MultiPoly f = MultiPoly::monomial(e);
                            return difference_series(k, j, j, k, f, deg) == f.permuted(swap);
                          },
                          false});
        checks.push_back({"quantized_symbol", "quantize(symbol of P_jk, M = deg f)", label, [n, j, k, e, swap, deg] {
                            MultiPoly f = MultiPoly::monomial(e);
                            return quantize(symbol_of_permutation(n, j, k, deg), f) == f.permuted(swap);
                          }});
      }
    }
  }
  for (unsigned d = 0; d <= degree; ++d) {
    checks.push_back({"sign_flip_series", "(-1)^{v d_v} f = sum (-2v)^n/n! d_v^n f, M = deg f",
                      "v^" + std::to_string(d), [d] {
                        MultiPoly f = MultiPoly::monomial({d});
                        return sign_flip_series(f, d) == scaling_apply(Rational(-1), 0, f);
                      }});
  }
  const std::vector<Rational> qs{Rational(-1), Rational(2), make_rational(-3, 2), make_rational(1, 3)};
  for (const auto& e : basis) {
    for (std::size_t k = 0; k < n; ++k) {
      for (const auto& q : qs) {
        checks.push_back({"dilation", "q^{x_k d_k} x^a = q^{a_k} x^a", exps_label(e) + " q=" + q.get_str(), [e, k, q] {
                            MultiPoly f = MultiPoly::monomial(e);
                            Rational expected(1);
                            for (std::uint32_t r = 0; r < e[k]; ++r) expected *= q;
                            return scaling_apply(q, k, f) == f.scaled(CouplingPoly(expected));
                          }});
      }
    }
  }

  std::vector<char> ok(checks.size(), 0);
  parallel_for(checks.size(), workers, [&](std::size_t i) { ok[i] = checks[i].ok() ? 1 : 0; });

  NormalOrderingReport report;
  report.n = n;
  report.degree = degree;
  std::map<std::string, std::size_t> slot;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    auto [it, inserted] = slot.try_emplace(checks[i].entry, report.entries.size());
    if (inserted) report.entries.push_back({checks[i].entry, checks[i].form, checks[i].required});
    auto& entry = report.entries[it->second];
    ++entry.case_count;
    if (!ok[i]) {
      ++entry.failure_count;
      if (entry.failure_cases.size() < 20) entry.failure_cases.push_back(checks[i].label);
    }
  }
  return report;
}

nlohmann::json to_json(const NormalOrderingReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries)
    entries.push_back({{"name", e.name},
                       {"form", e.form},
                       {"holds", e.holds()},
                       {"required", e.required},
                       {"caseCount", e.case_count},
                       {"failureCount", e.failure_count},
                       {"failureCases", e.failure_cases}});
  return {{"N", report.n}, {"degree", report.degree}, {"allHold", report.all_hold()}, {"entries", entries}};
}

}  // namespace cdk::symbolcalc
