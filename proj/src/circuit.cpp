#include "buch/circuit.hpp"

#include <algorithm>
#include <limits>

#include "buch/error.hpp"

namespace buch {

namespace {
constexpr GateId kNone = std::numeric_limits<GateId>::max();
}

const char* op_name(Op op) {
  switch (op) {
    case Op::Input: return "input";
    case Op::Const: return "const";
    case Op::Add: return "add";
    case Op::Sub: return "sub";
    case Op::Mul: return "mul";
    case Op::Div: return "div";
    case Op::Max: return "max";
    case Op::Min: return "min";
    case Op::Root: return "root";
    case Op::TAdd: return "tadd";
    case Op::TSub: return "tsub";
  }
  return "?";
}

int op_arity(Op op) {
  switch (op) {
    case Op::Input:
    case Op::Const: return 0;
    case Op::Root: return 1;
    default: return 2;
  }
}

const char* violation_name(ViolationKind k) {
  switch (k) {
    case ViolationKind::CycleOrForwardRef: return "CycleOrForwardRef";
    case ViolationKind::DanglingRef: return "DanglingRef";
    case ViolationKind::ArityMismatch: return "ArityMismatch";
    case ViolationKind::BadInputIndex: return "BadInputIndex";
    case ViolationKind::BadRootIndex: return "BadRootIndex";
    case ViolationKind::BadTruncationBounds: return "BadTruncationBounds";
    case ViolationKind::BadOutputRef: return "BadOutputRef";
  }
  return "?";
}

std::vector<Violation> validate(const Circuit& c) {
  std::vector<Violation> out;
  for (std::uint32_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (static_cast<int>(g.args.size()) != op_arity(g.op)) {
      out.push_back({ViolationKind::ArityMismatch, i,
                     std::string(op_name(g.op)) + " takes " + std::to_string(op_arity(g.op)) +
                         " args, got " + std::to_string(g.args.size())});
    }
    for (GateId a : g.args) {
      if (a >= c.gates.size())
        out.push_back({ViolationKind::DanglingRef, i, "arg " + std::to_string(a)});
      else if (a >= i)
        out.push_back({ViolationKind::CycleOrForwardRef, i, "arg " + std::to_string(a)});
    }
    if (g.op == Op::Input && g.input_index >= static_cast<std::uint32_t>(c.n_inputs))
      out.push_back({ViolationKind::BadInputIndex, i, "x" + std::to_string(g.input_index)});
    if (g.op == Op::Root && g.root_k < 2)
      out.push_back({ViolationKind::BadRootIndex, i, "k=" + std::to_string(g.root_k)});
    if ((g.op == Op::TAdd || g.op == Op::TSub) && g.lo > g.hi)
      out.push_back({ViolationKind::BadTruncationBounds, i,
                     to_string(g.lo) + " > " + to_string(g.hi)});
  }
  for (std::uint32_t s = 0; s < c.outputs.size(); ++s) {
    if (c.outputs[s] >= c.gates.size())
      out.push_back({ViolationKind::BadOutputRef, s, "output " + std::to_string(s)});
  }
  return out;
}

std::vector<int> gate_depths(const Circuit& c) {
  std::vector<int> d(c.gates.size(), 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    int m = -1;
    for (GateId a : c.gates[i].args) m = std::max(m, d[a]);
    d[i] = m + 1;
  }
  return d;
}

Metrics metrics(const Circuit& c) {
  Metrics m;
  m.size = c.gates.size();
  auto d = gate_depths(c);
  m.depth = d.empty() ? 0 : *std::max_element(d.begin(), d.end());
  return m;
}

CircuitBuilder::CircuitBuilder(int n_inputs) {
  c_.n_inputs = n_inputs;
  input_gate_.assign(static_cast<std::size_t>(n_inputs), kNone);
}

GateId CircuitBuilder::push(Gate g) {
  c_.gates.push_back(std::move(g));
  return static_cast<GateId>(c_.gates.size() - 1);
}

GateId CircuitBuilder::input(int k) {
  if (k < 0 || k >= c_.n_inputs)
    fail(Errc::InvalidArgument, "input index " + std::to_string(k));
  if (input_gate_[k] == kNone) {
    Gate g;
    g.op = Op::Input;
    g.input_index = static_cast<std::uint32_t>(k);
    input_gate_[k] = push(std::move(g));
  }
  return input_gate_[k];
}

GateId CircuitBuilder::constant(const Rational& v) {
  Gate g;
  g.op = Op::Const;
  g.value = v;
  return push(std::move(g));
}

GateId CircuitBuilder::op2(Op op, GateId a, GateId b) {
  if (op_arity(op) != 2) fail(Errc::InvalidArgument, "op2 with non-binary op");
  Gate g;
  g.op = op;
  g.args = {a, b};
  return push(std::move(g));
}

GateId CircuitBuilder::root(int k, GateId a) {
  Gate g;
  g.op = Op::Root;
  g.root_k = k;
  g.args = {a};
  return push(std::move(g));
}

GateId CircuitBuilder::trunc(Op op, const Rational& lo, const Rational& hi, GateId a, GateId b) {
  if (op != Op::TAdd && op != Op::TSub) fail(Errc::InvalidArgument, "trunc expects tadd/tsub");
  Gate g;
  g.op = op;
  g.lo = lo;
  g.hi = hi;
  g.args = {a, b};
  return push(std::move(g));
}

GateId CircuitBuilder::neg(GateId a) { return sub(constant(Rational(0)), a); }

GateId CircuitBuilder::abs(GateId a) { return max(a, neg(a)); }

GateId CircuitBuilder::mul_const(const Rational& c, GateId a) { return mul(constant(c), a); }

GateId CircuitBuilder::add_const(const Rational& c, GateId a) { return add(constant(c), a); }

std::vector<GateId> CircuitBuilder::splice(const Circuit& c, std::span<const GateId> input_wires) {
  if (input_wires.size() != static_cast<std::size_t>(c.n_inputs))
    fail(Errc::ArityMismatch, "splice wires " + std::to_string(input_wires.size()) + " vs inputs " +
                                  std::to_string(c.n_inputs));
  std::vector<GateId> map(c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    if (g.op == Op::Input) {
      map[i] = input_wires[g.input_index];
      continue;
    }
    Gate h = g;
    for (GateId& a : h.args) a = map[a];
    map[i] = push(std::move(h));
  }
  std::vector<GateId> outs;
  outs.reserve(c.outputs.size());
  for (GateId o : c.outputs) outs.push_back(map[o]);
  return outs;
}

void CircuitBuilder::set_outputs(std::vector<GateId> outs) { c_.outputs = std::move(outs); }

Circuit CircuitBuilder::take() { return std::move(c_); }

Circuit substitute(const Circuit& outer, const std::vector<Circuit>& inner) {
  int total_outputs = 0, total_inputs = 0;
  for (const Circuit& c : inner) {
    total_outputs += c.n_outputs();
    total_inputs += c.n_inputs;
  }
  if (total_outputs != outer.n_inputs)
    fail(Errc::ArityMismatch, "inner outputs " + std::to_string(total_outputs) +
                                  " vs outer inputs " + std::to_string(outer.n_inputs));
  CircuitBuilder b(total_inputs);
  std::vector<GateId> feed;
  int offset = 0;
  for (const Circuit& c : inner) {
    std::vector<GateId> wires;
    wires.reserve(c.n_inputs);
    for (int k = 0; k < c.n_inputs; ++k) wires.push_back(b.input(offset + k));
    offset += c.n_inputs;
    auto outs = b.splice(c, wires);
    feed.insert(feed.end(), outs.begin(), outs.end());
  }
  auto outs = b.splice(outer, feed);
  b.set_outputs(std::move(outs));
  return b.take();
}

Circuit identity_circuit(int n) {
  CircuitBuilder b(n);
  std::vector<GateId> outs;
  outs.reserve(n);
  for (int k = 0; k < n; ++k) outs.push_back(b.input(k));
  b.set_outputs(std::move(outs));
  return b.take();
}

Circuit build_sel(const Rational& delta) {
  if (delta <= 0) fail(Errc::NonPositiveDelta, "delta = " + to_string(delta));
  CircuitBuilder b(3);
  GateId x = b.input(0), y = b.input(1), z = b.input(2);
  GateId one = b.constant(Rational(1));
  GateId none = b.constant(Rational(-1));
  GateId half = b.constant(Rational(1, 2));
  // t = max(min(z * 2/delta, 1), -1)
  GateId zt = b.mul(z, b.constant(Rational(2) / delta));
  GateId t = b.max(b.min(zt, one), none);
  GateId wx = b.mul(b.sub(one, t), half);
  GateId wy = b.mul(b.add(one, t), half);
  GateId out = b.add(b.mul(wx, x), b.mul(wy, y));
  b.set_outputs({out});
  return b.take();
}

}  // namespace buch
