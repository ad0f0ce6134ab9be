#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace dihom {

// Homomorphism counts and degree moments; exact, never wraps.
using BigCount = mpz_class;
// Signed differences such as Delta(H).
using BigInt = mpz_class;
using Rational = mpq_class;

BigCount pow(const BigCount& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

// Degree-power term with 0^0 = 1.
BigCount degree_power(long degree, unsigned long exponent);

BigCount from_u64(std::uint64_t value);

std::string to_decimal(const BigCount& value);
// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& value);

// Accepts "p/q", "p", and finite decimals such as "0.25".
Rational parse_rational(std::string_view text);

double to_double(const Rational& value);

} // namespace dihom
