#include "mihull/rat.hpp"

#include <cctype>

namespace mihull {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) raise(Errc::DivisionByZero, "rational with zero denominator");
  Rat q;
  if (den < 0) {
    q = Rat(-num, Int(-den));
  } else {
    q = Rat(num, den);
  }
  return q;
}

Int floor_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int quot = n / d;  // truncated
  if (n % d != 0 && n < 0) --quot;
  return quot;
}

Int ceil_rat(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int quot = n / d;
  if (n % d != 0 && n > 0) ++quot;
  return quot;
}

std::string format_rat(const Rat& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

Rat parse_rat(std::string_view token) {
  auto bad = [&]() -> Rat {
    throw Error(Errc::Parse, "invalid rational token '" + std::string(token) + "'");
  };
  if (token.empty()) return bad();
  std::size_t pos = 0;
  auto read_int = [&](bool allow_sign) -> Int {
    bool negative = false;
    if (allow_sign && pos < token.size() && (token[pos] == '-' || token[pos] == '+')) {
      negative = token[pos] == '-';
      ++pos;
    }
    std::size_t digits = pos;
    while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos == digits) bad();
    Int v(std::string(token.substr(digits, pos - digits)));
    return negative ? Int(-v) : v;
  };
  Int num = read_int(true);
  Int den = 1;
  if (pos < token.size()) {
    if (token[pos] != '/') bad();
    ++pos;
    den = read_int(false);
    if (den == 0) bad();
  }
  if (pos != token.size()) bad();
  return make_rat(num, den);
}

std::size_t bit_length(const Int& x) {
  Int v = abs(x);
  if (v == 0) return 1;  // zero still occupies one bit
  return boost::multiprecision::msb(v) + 1;
}

std::size_t encoding_size(const Rat& q) {
  return 1 + bit_length(numerator(q)) + bit_length(denominator(q));
}

Int lcm_all(std::span<const Int> values) {
  if (values.empty()) raise(Errc::EmptyList, "lcm of empty list");
  Int acc = 1;
  for (const Int& v : values) {
    if (v == 0) raise(Errc::DivisionByZero, "lcm of zero");
    acc = boost::multiprecision::lcm(acc, abs(v));
  }
  return acc;
}

Int int_pow(const Int& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

}  // namespace mihull
