#include "steklov/rational.hpp"

#include <charconv>

#include "steklov/error.hpp"

namespace steklov {

std::int64_t floor(const Rational& q) {
  const std::int64_t n = q.numerator();
  const std::int64_t d = q.denominator();  // always positive
  std::int64_t f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

std::int64_t ceil(const Rational& q) {
  return -floor(-q);
}

Rational frac(const Rational& q) {
  return q - Rational(floor(q));
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  if (s.empty()) fail(ErrorCode::ParseError, "empty number in '" + std::string(whole) + "'");
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    fail(ErrorCode::ParseError, "not a rational number: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = parse_int(text.substr(0, slash), text);
    const std::int64_t den = parse_int(text.substr(slash + 1), text);
    if (den == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15) fail(ErrorCode::ParseError, "too many decimals: '" + std::string(text) + "'");
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac_part.size(); ++k) scale *= 10;
    const bool negative = !int_part.empty() && int_part.front() == '-';
    const std::int64_t whole = (int_part.empty() || int_part == "-" || int_part == "+") ? 0 : parse_int(int_part, text);
    const std::int64_t fraction = frac_part.empty() ? 0 : parse_int(frac_part, text);
    Rational q(whole);
    q += Rational(negative ? -fraction : fraction, scale);
    return q;
  }
  return Rational(parse_int(text, text));
}

std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace steklov
