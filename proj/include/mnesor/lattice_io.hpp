#pragma once

#include <string>

#include "mnesor/lattice.hpp"

namespace mnesor {

/// Loads a lattice description from a JSON file. Kinds:
///   {"kind":"powerset","atoms":[...]}          {"kind":"chain","n":4}
///   {"kind":"two"}  {"kind":"m3"}  {"kind":"n5"}
///   {"kind":"product","factors":[<lattice>,<lattice>]}
///   {"kind":"cover","elements":[...],"edges":[["lo","hi"],...]}
///   {"kind":"table","labels":[...],"join":[[...]],"meet":[[...]],
///    "top":"label","bottom":"label"?}
/// Table entries are labels. A table without "bottom" declares no bottom
/// element (the action by bot is then undefined and T-BOT is skipped).
/// Loaded tables and covers are validated; violations are errors.
FiniteLattice load_lattice(const std::string& path);

/// Parses a CLI lattice specifier: chain:N, powerset:N, two, m3, n5,
/// file:<path>. Throws std::invalid_argument for anything else.
FiniteLattice lattice_from_spec(const std::string& spec);

}  // namespace mnesor
