#include "kirwanlab/rational.hpp"

#include <cctype>

#include "kirwanlab/error.hpp"

namespace kirwanlab {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

}  // namespace

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
  if (!all_digits(num) || (slash != std::string_view::npos && !all_digits(den)))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Rational r;
  r.get_num() = mpz_class(std::string(num), 10);
  r.get_den() = slash == std::string_view::npos ? mpz_class(1) : mpz_class(std::string(den), 10);
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (text.front() == '-') r.get_num() = -r.get_num();
  r.canonicalize();
  return r;
}

std::string to_decimal(const Rational& r, int digits) {
  mpz_class scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round half away from zero.
  mpz_class num = abs(r.get_num()) * scale * 2 + r.get_den();
  mpz_class scaled_abs = num / (r.get_den() * 2);
  std::string s = scaled_abs.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (r < 0 && scaled_abs != 0) s.insert(0, "-");
  return s;
}

}  // namespace kirwanlab
