#include "cdk/exactalg/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "cdk/exactalg/errors.hpp"

namespace cdk {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

Integer parse_signed_integer(std::string_view s) {
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  if (!all_digits(body)) throw ParseError("not an integer: '" + std::string(s) + "'");
  std::string buf(s.front() == '+' ? s.substr(1) : s);
  return Integer(buf, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_signed_integer(text.substr(0, slash));
    Integer den = parse_signed_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  // decimal with optional exponent
  std::string_view mant = text;
  long exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    mant = text.substr(0, e);
    Integer ex = parse_signed_integer(text.substr(e + 1));
    if (!ex.fits_slong_p()) throw ParseError("exponent out of range");
    exponent = ex.get_si();
  }
  bool negative = false;
  if (!mant.empty() && (mant.front() == '-' || mant.front() == '+')) {
    negative = mant.front() == '-';
    mant.remove_prefix(1);
  }
  std::string digits;
  long frac_len = 0;
  if (auto dot = mant.find('.'); dot != std::string_view::npos) {
    std::string_view ip = mant.substr(0, dot);
    std::string_view fp = mant.substr(dot + 1);
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
      throw ParseError("bad decimal literal '" + std::string(text) + "'");
    digits = std::string(ip) + std::string(fp);
    frac_len = static_cast<long>(fp.size());
  } else {
    if (!all_digits(mant)) throw ParseError("bad rational literal '" + std::string(text) + "'");
    digits = std::string(mant);
  }
  Integer value(digits, 10);
  if (negative) value = -value;
  long shift = exponent - frac_len;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
  Rational r = shift >= 0 ? Rational(value * scale) : Rational(value, scale);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace cdk
