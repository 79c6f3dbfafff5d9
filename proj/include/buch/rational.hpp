#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace buch {

using Int = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored in lowest terms with a positive
/// denominator (the backend canonicalizes after every operation).
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational rat(long long n, long long d = 1) { return Rational(n, d); }

double to_double(const Rational& q);

/// Exact conversion; every finite double is a dyadic rational.
Rational rational_from_double(double x);

/// "p" or "p/q", canonical form.
std::string to_string(const Rational& q);

/// Strict parse of "p" or "p/q" with optional leading '-'. Rejects
/// decimals, whitespace and empty strings.
std::optional<Rational> parse_rational(std::string_view s);

/// If q == 2^-k for an integer k >= 1, returns k.
std::optional<int> dyadic_reciprocal_exponent(const Rational& q);

Rational pow_rational(const Rational& base, unsigned exp);

/// Floor of the k-th root of a non-negative integer.
Int iroot_floor(const Int& v, int k);

/// Exact k-th root if it exists as a rational (k >= 1; for even k the
/// argument must be non-negative, checked by the caller).
std::optional<Rational> exact_root(const Rational& q, int k);

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
inline int sgn(const Rational& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

}  // namespace buch
