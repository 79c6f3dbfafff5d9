#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "buch/rational.hpp"

namespace buch {

enum class Op : std::uint8_t {
  Input,
  Const,
  Add,
  Sub,
  Mul,
  Div,
  Max,
  Min,
  Root,
  TAdd,
  TSub,
};

const char* op_name(Op op);
int op_arity(Op op);

using GateId = std::uint32_t;

struct Gate {
  Op op = Op::Const;
  std::vector<GateId> args;
  std::uint32_t input_index = 0;  // Op::Input
  int root_k = 0;                 // Op::Root, k >= 2
  Rational value;                 // Op::Const
  Rational lo, hi;                // truncation bounds for TAdd/TSub
};

/// Gate list is the topological order: every argument refers to an
/// earlier gate. Outputs may repeat gate ids.
struct Circuit {
  int n_inputs = 0;
  std::vector<Gate> gates;
  std::vector<GateId> outputs;

  int n_outputs() const { return static_cast<int>(outputs.size()); }
  std::size_t size() const { return gates.size(); }
};

enum class ViolationKind {
  CycleOrForwardRef,
  DanglingRef,
  ArityMismatch,
  BadInputIndex,
  BadRootIndex,
  BadTruncationBounds,
  BadOutputRef,
};

const char* violation_name(ViolationKind k);

struct Violation {
  ViolationKind kind;
  std::uint32_t where;  // gate index, or output slot for BadOutputRef
  std::string detail;
};

/// Structural checks only; an empty result means the circuit is valid.
std::vector<Violation> validate(const Circuit& c);

struct Metrics {
  std::size_t size = 0;  // gate count, inputs and constants included
  int depth = 0;         // longest path, in arcs
};

Metrics metrics(const Circuit& c);

/// Per-gate depth (inputs and constants at 0).
std::vector<int> gate_depths(const Circuit& c);

/// Incremental construction helper. Gate ids returned by the emit
/// functions are stable; input gates are created on first use.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(int n_inputs);

  GateId input(int k);
  GateId constant(const Rational& v);
  GateId op2(Op op, GateId a, GateId b);
  GateId add(GateId a, GateId b) { return op2(Op::Add, a, b); }
  GateId sub(GateId a, GateId b) { return op2(Op::Sub, a, b); }
  GateId mul(GateId a, GateId b) { return op2(Op::Mul, a, b); }
  GateId div(GateId a, GateId b) { return op2(Op::Div, a, b); }
  GateId max(GateId a, GateId b) { return op2(Op::Max, a, b); }
  GateId min(GateId a, GateId b) { return op2(Op::Min, a, b); }
  GateId root(int k, GateId a);
  GateId trunc(Op op, const Rational& lo, const Rational& hi, GateId a, GateId b);

  GateId neg(GateId a);                    // 0 - a, reuses a shared zero constant
  GateId abs(GateId a);                    // max(a, -a)
  GateId mul_const(const Rational& c, GateId a);
  GateId add_const(const Rational& c, GateId a);

  /// Splices another circuit in, wiring its inputs to existing gates.
  /// Returns the spliced circuit's output gate ids.
  std::vector<GateId> splice(const Circuit& c, std::span<const GateId> input_wires);

  void set_outputs(std::vector<GateId> outs);
  const Circuit& peek() const { return c_; }
  Circuit take();

 private:
  GateId push(Gate g);
  Circuit c_;
  std::vector<GateId> input_gate_;  // per input index, kNone until created
};

/// Composition: inner circuits' outputs feed outer's inputs in order;
/// the result takes the concatenation of the inner circuits' inputs.
Circuit substitute(const Circuit& outer, const std::vector<Circuit>& inner);

/// The identity circuit on n wires.
Circuit identity_circuit(int n);

/// delta-approximate selection of the third argument's sign: inputs
/// (x, y, z), one output; exactly x for z <= -delta/2, exactly y for
/// z >= delta/2, linear in between. Division-free: 1/delta is folded
/// into a constant, so the basis is {+,-,*,max,min}.
Circuit build_sel(const Rational& delta);

}  // namespace buch
