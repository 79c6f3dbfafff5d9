#pragma once

#include <iosfwd>
#include <string>

#include "buch/circuit.hpp"

namespace buch {

struct NamedCircuit {
  std::string name;
  Circuit circuit;
};

/// Line-based text format:
///   circuit <name> inputs=<n> outputs=<m>
///   <id> = input <k>
///   <id> = const <p>/<q>
///   <id> = add <a> <b>            (sub, mul, div, max, min likewise)
///   <id> = root <k> <a>
///   <id> = tadd <lo> <hi> <a> <b> (tsub likewise; bounds are rationals)
///   outputs <id> ... <id>
/// '#' starts a comment. Identifiers match [A-Za-z_][A-Za-z0-9_]*.
/// Parsing is strict: unknown ops, redefinitions, references to
/// undefined ids and count mismatches all throw Errc::Format.
NamedCircuit parse_circuit(std::istream& in);
NamedCircuit parse_circuit_string(const std::string& text);
NamedCircuit load_circuit(const std::string& path);

std::string serialize_circuit(const Circuit& c, const std::string& name);
void save_circuit(const Circuit& c, const std::string& name, const std::string& path);

}  // namespace buch
