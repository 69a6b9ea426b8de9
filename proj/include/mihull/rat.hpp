#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "mihull/errors.hpp"

namespace mihull {

using Int = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, kept in canonical reduced form
/// (denominator > 0, gcd(|num|, den) = 1) by the GMP backend.
using Rat = boost::multiprecision::mpq_rational;

/// Guarded construction: rejects zero denominators (GMP would SIGFPE)
/// and fixes the denominator sign.
Rat make_rat(const Int& num, const Int& den);
inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

inline Int rat_num(const Rat& q) { return numerator(q); }
inline Int rat_den(const Rat& q) { return denominator(q); }
inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);

/// Serialized form "p/q", denominator omitted when 1.
std::string format_rat(const Rat& q);

/// Parses "p", "p/q", optional sign; rejects zero denominators.
Rat parse_rat(std::string_view token);

/// Bits to write x >= 0 in binary: ceil(log2(x+1)), with zero taking one bit.
std::size_t bit_length(const Int& x);

/// Encoding size of p/q: 1 + bits(|p|) + bits(q).
std::size_t encoding_size(const Rat& q);

/// lcm of absolute values; all inputs must be nonzero.
Int lcm_all(std::span<const Int> values);

Int int_pow(const Int& base, unsigned exp);

}  // namespace mihull
