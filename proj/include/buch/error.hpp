#pragma once

#include <stdexcept>
#include <string>

namespace buch {

enum class Errc {
  DivisionByZero,
  EvenRootOfNegative,
  InexactRoot,
  NonFiniteValue,
  NonPositiveDelta,
  ArityMismatch,
  UnsupportedGate,
  UnsupportedP,
  EpsilonNotDyadic,
  BadConstantRange,
  NotDecreasing,
  DimensionMismatch,
  DimensionTooLarge,
  NormViolation,
  DomainViolation,
  NotNormalized,
  EmptyOracleSet,
  Format,
  InvalidArgument,
};

const char* errc_name(Errc c);

/// All throwing paths in the library use this type so callers can branch
/// on code() without string matching.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace buch
