#include "buch/circuit_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "buch/error.hpp"

namespace buch {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char ch : s)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
  return true;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::istringstream ss(line);
  std::string t;
  while (ss >> t) {
    if (t[0] == '#') break;
    // A token may still have a trailing comment glued on.
    auto hash = t.find('#');
    if (hash != std::string::npos) {
      if (hash > 0) toks.push_back(t.substr(0, hash));
      break;
    }
    toks.push_back(t);
  }
  return toks;
}

[[noreturn]] void bad(int lineno, const std::string& what) {
  fail(Errc::Format, "line " + std::to_string(lineno) + ": " + what);
}

Rational parse_rat_or_die(const std::string& tok, int lineno) {
  auto r = parse_rational(tok);
  if (!r) bad(lineno, "expected rational, got '" + tok + "'");
  return *r;
}

long parse_int_or_die(const std::string& tok, int lineno) {
  try {
    std::size_t pos = 0;
    long v = std::stol(tok, &pos);
    if (pos != tok.size()) bad(lineno, "expected integer, got '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    bad(lineno, "expected integer, got '" + tok + "'");
  }
}

}  // namespace

NamedCircuit parse_circuit(std::istream& in) {
  NamedCircuit nc;
  Circuit& c = nc.circuit;
  std::unordered_map<std::string, GateId> ids;
  bool header_seen = false, outputs_seen = false;
  int declared_outputs = 0;
  std::string line;
  int lineno = 0;

  auto lookup = [&](const std::string& name, int ln) -> GateId {
    auto it = ids.find(name);
    if (it == ids.end()) bad(ln, "undefined id '" + name + "'");
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!header_seen) {
      if (toks[0] != "circuit" || toks.size() != 4) bad(lineno, "expected circuit header");
      nc.name = toks[1];
      if (!valid_identifier(nc.name)) bad(lineno, "bad circuit name '" + nc.name + "'");
      if (toks[2].rfind("inputs=", 0) != 0 || toks[3].rfind("outputs=", 0) != 0)
        bad(lineno, "expected inputs=<n> outputs=<m>");
      c.n_inputs = static_cast<int>(parse_int_or_die(toks[2].substr(7), lineno));
      declared_outputs = static_cast<int>(parse_int_or_die(toks[3].substr(8), lineno));
      if (c.n_inputs < 0 || declared_outputs < 0) bad(lineno, "negative count");
      header_seen = true;
      continue;
    }
    if (outputs_seen) bad(lineno, "content after outputs line");
    if (toks[0] == "outputs") {
      for (std::size_t i = 1; i < toks.size(); ++i)
        c.outputs.push_back(lookup(toks[i], lineno));
      if (static_cast<int>(c.outputs.size()) != declared_outputs)
        bad(lineno, "outputs count mismatch: declared " + std::to_string(declared_outputs) +
                        ", listed " + std::to_string(c.outputs.size()));
      outputs_seen = true;
      continue;
    }
    if (toks.size() < 3 || toks[1] != "=") bad(lineno, "expected '<id> = <op> ...'");
    const std::string& id = toks[0];
    if (!valid_identifier(id)) bad(lineno, "bad identifier '" + id + "'");
    if (ids.count(id)) bad(lineno, "redefinition of '" + id + "'");
    const std::string& op = toks[2];
    Gate g;
    if (op == "input") {
      if (toks.size() != 4) bad(lineno, "input takes one index");
      g.op = Op::Input;
      long k = parse_int_or_die(toks[3], lineno);
      if (k < 0 || k >= c.n_inputs) bad(lineno, "input index out of range");
      g.input_index = static_cast<std::uint32_t>(k);
    } else if (op == "const") {
      if (toks.size() != 4) bad(lineno, "const takes one rational");
      g.op = Op::Const;
      g.value = parse_rat_or_die(toks[3], lineno);
    } else if (op == "add" || op == "sub" || op == "mul" || op == "div" || op == "max" ||
               op == "min") {
      if (toks.size() != 5) bad(lineno, op + " takes two args");
      g.op = op == "add"   ? Op::Add
             : op == "sub" ? Op::Sub
             : op == "mul" ? Op::Mul
             : op == "div" ? Op::Div
             : op == "max" ? Op::Max
                           : Op::Min;
      g.args = {lookup(toks[3], lineno), lookup(toks[4], lineno)};
    } else if (op == "root") {
      if (toks.size() != 5) bad(lineno, "root takes index and arg");
      g.op = Op::Root;
      g.root_k = static_cast<int>(parse_int_or_die(toks[3], lineno));
      if (g.root_k < 2) bad(lineno, "root index must be >= 2");
      g.args = {lookup(toks[4], lineno)};
    } else if (op == "tadd" || op == "tsub") {
      if (toks.size() != 7) bad(lineno, op + " takes lo hi a b");
      g.op = op == "tadd" ? Op::TAdd : Op::TSub;
      g.lo = parse_rat_or_die(toks[3], lineno);
      g.hi = parse_rat_or_die(toks[4], lineno);
      if (g.lo > g.hi) bad(lineno, "truncation bounds out of order");
      g.args = {lookup(toks[5], lineno), lookup(toks[6], lineno)};
    } else {
      bad(lineno, "unknown op '" + op + "'");
    }
    ids.emplace(id, static_cast<GateId>(c.gates.size()));
    c.gates.push_back(std::move(g));
  }
  if (!header_seen) fail(Errc::Format, "empty circuit file");
  if (!outputs_seen) fail(Errc::Format, "missing outputs line");
  return nc;
}

NamedCircuit parse_circuit_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_circuit(ss);
}

NamedCircuit load_circuit(const std::string& path) {
  std::ifstream f(path);
  if (!f) fail(Errc::Format, "cannot open " + path);
  return parse_circuit(f);
}

std::string serialize_circuit(const Circuit& c, const std::string& name) {
  std::ostringstream out;
  out << "circuit " << name << " inputs=" << c.n_inputs << " outputs=" << c.outputs.size()
      << "\n";
  auto gname = [](GateId i) { return "g" + std::to_string(i); };
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    out << gname(static_cast<GateId>(i)) << " = " << op_name(g.op);
    switch (g.op) {
      case Op::Input: out << " " << g.input_index; break;
      case Op::Const: out << " " << to_string(g.value); break;
      case Op::Root: out << " " << g.root_k << " " << gname(g.args[0]); break;
      case Op::TAdd:
      case Op::TSub:
        out << " " << to_string(g.lo) << " " << to_string(g.hi) << " " << gname(g.args[0]) << " "
            << gname(g.args[1]);
        break;
      default: out << " " << gname(g.args[0]) << " " << gname(g.args[1]); break;
    }
    out << "\n";
  }
  out << "outputs";
  for (GateId o : c.outputs) out << " " << gname(o);
  out << "\n";
  return out.str();
}

void save_circuit(const Circuit& c, const std::string& name, const std::string& path) {
  std::ofstream f(path);
  if (!f) fail(Errc::Format, "cannot write " + path);
  f << serialize_circuit(c, name);
}

}  // namespace buch
