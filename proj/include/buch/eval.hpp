#pragma once

#include <span>
#include <vector>

#include "buch/circuit.hpp"
#include "buch/rational.hpp"

namespace buch {

struct ExactEvalOptions {
  /// Root gates normally raise InexactRoot in exact mode. When set, a
  /// root gate is evaluated iff the rational k-th root exists exactly.
  bool allow_exact_roots = false;
};

/// Bit-exact evaluation. Truncated gates clamp to [lo, hi]. Throws
/// DivisionByZero, EvenRootOfNegative or InexactRoot.
std::vector<Rational> evaluate_exact(const Circuit& c, std::span<const Rational> x,
                                     const ExactEvalOptions& opt = {});

/// Same, but returns every gate value (instrumented runs).
std::vector<Rational> evaluate_exact_all(const Circuit& c, std::span<const Rational> x,
                                         const ExactEvalOptions& opt = {});

/// Double-precision evaluation; root gates permitted. Throws
/// NonFiniteValue on overflow or NaN.
std::vector<double> evaluate_float(const Circuit& c, std::span<const double> x);

std::vector<double> evaluate_float_all(const Circuit& c, std::span<const double> x);

}  // namespace buch
