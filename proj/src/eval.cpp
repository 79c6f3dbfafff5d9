#include "buch/eval.hpp"

#include <cmath>

#include "buch/error.hpp"

namespace buch {

std::vector<Rational> evaluate_exact_all(const Circuit& c, std::span<const Rational> x,
                                         const ExactEvalOptions& opt) {
  if (x.size() != static_cast<std::size_t>(c.n_inputs))
    fail(Errc::DimensionMismatch,
         "point has " + std::to_string(x.size()) + " coords, circuit takes " +
             std::to_string(c.n_inputs));
  std::vector<Rational> v(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    switch (g.op) {
      case Op::Input: v[i] = x[g.input_index]; break;
      case Op::Const: v[i] = g.value; break;
      case Op::Add: v[i] = v[g.args[0]] + v[g.args[1]]; break;
      case Op::Sub: v[i] = v[g.args[0]] - v[g.args[1]]; break;
      case Op::Mul: v[i] = v[g.args[0]] * v[g.args[1]]; break;
      case Op::Div: {
        const Rational& d = v[g.args[1]];
        if (d == 0) fail(Errc::DivisionByZero, "gate " + std::to_string(i));
        v[i] = v[g.args[0]] / d;
        break;
      }
      case Op::Max: v[i] = std::max(v[g.args[0]], v[g.args[1]]); break;
      case Op::Min: v[i] = std::min(v[g.args[0]], v[g.args[1]]); break;
      case Op::Root: {
        const Rational& a = v[g.args[0]];
        if (g.root_k % 2 == 0 && a < 0)
          fail(Errc::EvenRootOfNegative, "gate " + std::to_string(i));
        if (!opt.allow_exact_roots)
          fail(Errc::InexactRoot, "root gate " + std::to_string(i) + " in exact mode");
        auto r = exact_root(a, g.root_k);
        if (!r)
          fail(Errc::InexactRoot,
               "gate " + std::to_string(i) + ": " + to_string(a) + " has no exact root");
        v[i] = *r;
        break;
      }
      case Op::TAdd: v[i] = std::clamp(v[g.args[0]] + v[g.args[1]], g.lo, g.hi); break;
      case Op::TSub: v[i] = std::clamp(v[g.args[0]] - v[g.args[1]], g.lo, g.hi); break;
    }
  }
  return v;
}

std::vector<Rational> evaluate_exact(const Circuit& c, std::span<const Rational> x,
                                     const ExactEvalOptions& opt) {
  auto v = evaluate_exact_all(c, x, opt);
  std::vector<Rational> out;
  out.reserve(c.outputs.size());
  for (GateId o : c.outputs) out.push_back(v[o]);
  return out;
}

std::vector<double> evaluate_float_all(const Circuit& c, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(c.n_inputs))
    fail(Errc::DimensionMismatch,
         "point has " + std::to_string(x.size()) + " coords, circuit takes " +
             std::to_string(c.n_inputs));
  std::vector<double> v(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    switch (g.op) {
      case Op::Input: v[i] = x[g.input_index]; break;
      case Op::Const: v[i] = to_double(g.value); break;
      case Op::Add: v[i] = v[g.args[0]] + v[g.args[1]]; break;
      case Op::Sub: v[i] = v[g.args[0]] - v[g.args[1]]; break;
      case Op::Mul: v[i] = v[g.args[0]] * v[g.args[1]]; break;
      case Op::Div: v[i] = v[g.args[0]] / v[g.args[1]]; break;
      case Op::Max: v[i] = std::max(v[g.args[0]], v[g.args[1]]); break;
      case Op::Min: v[i] = std::min(v[g.args[0]], v[g.args[1]]); break;
      case Op::Root: {
        double a = v[g.args[0]];
        if (g.root_k % 2 == 0) {
          if (a < 0) fail(Errc::EvenRootOfNegative, "gate " + std::to_string(i));
          v[i] = (g.root_k == 2) ? std::sqrt(a) : std::pow(a, 1.0 / g.root_k);
        } else {
          v[i] = a < 0 ? -std::pow(-a, 1.0 / g.root_k) : std::pow(a, 1.0 / g.root_k);
        }
        break;
      }
      case Op::TAdd:
        v[i] = std::clamp(v[g.args[0]] + v[g.args[1]], to_double(g.lo), to_double(g.hi));
        break;
      case Op::TSub:
        v[i] = std::clamp(v[g.args[0]] - v[g.args[1]], to_double(g.lo), to_double(g.hi));
        break;
    }
    if (!std::isfinite(v[i])) fail(Errc::NonFiniteValue, "gate " + std::to_string(i));
  }
  return v;
}

std::vector<double> evaluate_float(const Circuit& c, std::span<const double> x) {
  auto v = evaluate_float_all(c, x);
  std::vector<double> out;
  out.reserve(c.outputs.size());
  for (GateId o : c.outputs) out.push_back(v[o]);
  return out;
}

}  // namespace buch
