#include "buch/rational.hpp"

#include <cctype>
#include <cmath>

namespace buch {

double to_double(const Rational& q) { return q.convert_to<double>(); }

Rational rational_from_double(double x) {
  if (x == 0.0) return Rational(0);
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  // 53 doublings make the mantissa integral.
  Int m = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(m);
  if (exp > 0) {
    r *= pow_rational(Rational(2), static_cast<unsigned>(exp));
  } else if (exp < 0) {
    r /= pow_rational(Rational(2), static_cast<unsigned>(-exp));
  }
  return r;
}

std::string to_string(const Rational& q) {
  Int d = den(q);
  if (d == 1) return num(q).str();
  return num(q).str() + "/" + d.str();
}

std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  auto is_int = [](std::string_view t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(s)) return std::nullopt;
    return Rational(Int(std::string(s)));
  }
  std::string_view p = s.substr(0, slash);
  std::string_view q = s.substr(slash + 1);
  if (!is_int(p) || !is_int(q) || q[0] == '-') return std::nullopt;
  Int dq(std::string(q));
  if (dq == 0) return std::nullopt;
  return Rational(Int(std::string(p)), dq);
}

std::optional<int> dyadic_reciprocal_exponent(const Rational& q) {
  if (num(q) != 1) return std::nullopt;
  Int d = den(q);
  int k = 0;
  while (d > 1) {
    if (d % 2 != 0) return std::nullopt;
    d /= 2;
    ++k;
  }
  return k >= 1 ? std::optional<int>(k) : std::nullopt;
}

Rational pow_rational(const Rational& base, unsigned exp) {
  Rational acc(1), b = base;
  while (exp) {
    if (exp & 1u) acc *= b;
    exp >>= 1u;
    if (exp) b *= b;
  }
  return acc;
}

Int iroot_floor(const Int& v, int k) {
  if (v < 0 || k < 1) return Int(0);
  if (v == 0 || v == 1 || k == 1) return v;
  Int lo = 0, hi = v;
  // Shrink hi to a coarse upper bound first.
  while (boost::multiprecision::pow(hi, k) > v) {
    Int mid = hi / 2 + 1;
    if (boost::multiprecision::pow(mid, k) > v)
      hi = mid - 1;
    else
      break;
  }
  lo = hi / 2;
  while (lo < hi) {
    Int mid = (lo + hi + 1) / 2;
    if (boost::multiprecision::pow(mid, k) <= v)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

std::optional<Rational> exact_root(const Rational& q, int k) {
  if (k < 1) return std::nullopt;
  if (k == 1) return q;
  bool neg = q < 0;
  if (neg && k % 2 == 0) return std::nullopt;
  Int n = num(neg ? Rational(-q) : q);
  Int d = den(q);
  Int rn = iroot_floor(n, k);
  Int rd = iroot_floor(d, k);
  if (boost::multiprecision::pow(rn, k) != n) return std::nullopt;
  if (boost::multiprecision::pow(rd, k) != d) return std::nullopt;
  Rational r(rn, rd);
  return neg ? Rational(-r) : r;
}

}  // namespace buch
