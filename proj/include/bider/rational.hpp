#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace bider {

/// Exact rational number. Arithmetic results are always kept in lowest
/// terms with a positive denominator.
using Rational = mpq_class;

/// Coordinate vector over the rationals.
using Vector = std::vector<Rational>;

/// Formats as `p` or `p/q`.
std::string to_string(const Rational& q);

/// Parses `p` or `p/q` (optional sign, decimal digits only). Throws
/// std::invalid_argument on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);

/// Readable element formatting in the basis e1..en, e.g. `-e1`, `2*e1 - 1/2*e3`.
std::string format_element(const Vector& v);

}  // namespace bider
