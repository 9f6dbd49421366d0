#include "cdk/exactalg/text_form.hpp"

#include <cctype>
#include <charconv>

#include "cdk/exactalg/errors.hpp"

namespace cdk {

namespace {

std::string numerator_text(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, q] : f.terms()) {
    auto coeffs = q.coefficients();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      if (!out.empty()) out += " + ";
      out += to_fraction_string(coeffs[k]);
      out += "*c^" + std::to_string(k) + "*x^[";
      for (std::size_t m = 0; m < e.size(); ++m) {
        if (m) out += ",";
        out += std::to_string(e[m]);
      }
      out += "]";
    }
  }
  return out;
}

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  bool peek(std::string_view lit) {
    skip_ws();
    return s_.substr(pos_, lit.size()) == lit;
  }
  void expect(std::string_view lit) {
    if (!peek(lit)) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  bool accept(std::string_view lit) {
    if (!peek(lit)) return false;
    pos_ += lit.size();
    return true;
  }
  unsigned long number() {
    skip_ws();
    unsigned long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected a non-negative integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  Rational fraction() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    return parse_rational(s_.substr(start, pos_ - start));
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_text(const MultiPoly& f) { return to_text(RationalSection(f)); }

std::string to_text(const RationalSection& f) {
  const std::size_t n = f.arity();
  std::string out = "N=" + std::to_string(n) + "; " + numerator_text(f.numerator()) + "; ";
  std::string den;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto d = f.denominator_exponent(i, j);
      if (d == 0) continue;
      if (!den.empty()) den += "*";
      den += "(x" + std::to_string(i + 1) + "-x" + std::to_string(j + 1) + ")^" + std::to_string(d);
    }
  }
  return out + (den.empty() ? "1" : den);
}

RationalSection section_from_text(std::string_view text) {
  Cursor cur(text);
  cur.expect("N=");
  const std::size_t n = cur.number();
  if (n == 0) cur.fail("arity must be positive");
  cur.expect(";");

  MultiPoly num(n);
  if (!cur.accept("0;")) {
    do {
      Rational q = cur.fraction();
      cur.expect("*c^");
      auto k = cur.number();
      cur.expect("*x^[");
      Exponents e;
      do {
        e.push_back(static_cast<std::uint32_t>(cur.number()));
      } while (cur.accept(","));
      cur.expect("]");
      if (e.size() != n) cur.fail("exponent vector length differs from N");
      num.add_term(e, CouplingPoly::monomial(q, k));
    } while (cur.accept("+"));
    cur.expect(";");
  }

  std::vector<std::uint32_t> den(RationalSection::pair_count(n), 0);
  if (!cur.accept("1")) {
    do {
      cur.expect("(x");
      auto i = cur.number();
      cur.expect("-x");
      auto j = cur.number();
      cur.expect(")^");
      auto d = cur.number();
      if (i < 1 || j <= i || j > n) cur.fail("bad pair in denominator");
      den[RationalSection::pair_index(n, i - 1, j - 1)] += static_cast<std::uint32_t>(d);
    } while (cur.accept("*"));
  }
  if (!cur.done()) cur.fail("trailing characters");
  return RationalSection(std::move(num), std::move(den));
}

}  // namespace cdk
