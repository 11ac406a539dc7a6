#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace fsig {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt ipow(const BigInt& base, std::uint64_t exponent);
BigInt ipow(std::uint64_t base, std::uint64_t exponent);

/// r in lowest terms with a positive denominator.
Rational canonical(Rational r);

BigInt floor(const Rational& r);
BigInt ceil(const Rational& r);

/// "n" for integers, "n/d" otherwise.
std::string to_string(const BigInt& v);
std::string to_string(const Rational& r);

/// Decimal rounding of an exact rational (half away from zero), computed in
/// integer arithmetic so the text is identical on every platform.
std::string to_decimal(const Rational& r, int places);

/// Parses "n", "-n", or "n/d". Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

}  // namespace fsig
