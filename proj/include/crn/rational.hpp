#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace crn {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Arbitrary-precision rational. GMP keeps results of arithmetic in
/// canonical form (gcd 1, positive denominator, zero as 0/1).
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Builds num/den in canonical form. Throws std::domain_error when den is 0.
Rational make_rational(const Integer& num, const Integer& den);

/// "p/q" form, or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

Integer lcm_of_denominators(const RationalVector& v);

RationalVector to_rational(const IntVector& v);

/// Scales a rational vector to the primitive integer vector on the same ray.
IntVector primitive_integer_vector(const RationalVector& v);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

bool is_zero(const RationalVector& v);
bool is_zero(const IntVector& v);

IntVector unit_vector(std::size_t n, std::size_t i);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);

std::string to_string(const IntVector& v);
std::string to_string(const RationalVector& v);

}  // namespace crn
