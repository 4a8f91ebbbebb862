#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "dra2dpa/automaton.hpp"

namespace dra2dpa {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses an HOA v1 document describing a deterministic Rabin, generalized
/// Rabin, Streett or parity automaton with explicit labels.  State-based
/// acceptance marks are normalized onto transitions, edge labels are expanded
/// to explicit letters, and determinism is validated.  Aliases, multiple
/// initial states and unrecognized acceptance shapes are rejected.
Automaton parse_hoa(std::istream& in);
Automaton parse_hoa_string(std::string_view text);

struct HoaEmitOptions {
  /// Emit parity output with state-based acceptance (splitting states by
  /// incoming priority).  Only supported for parity automata.
  bool state_based = false;
};

/// Emits HOA v1.  Parity automata declare `parity max even c` with one
/// acceptance set per priority; Rabin declares `Rabin k` with pair i on sets
/// 2i (fin) and 2i+1 (inf); Streett and generalized Rabin follow the
/// standard acc-name layouts.
void emit_hoa(const Automaton& aut, std::ostream& out,
              const HoaEmitOptions& options = {});
std::string emit_hoa_string(const Automaton& aut,
                            const HoaEmitOptions& options = {});

/// Graphviz rendering for inspection; states show their names and edges show
/// "letter priority" (or the acceptance marks for non-parity automata).
void emit_dot(const Automaton& aut, std::ostream& out);

}  // namespace dra2dpa
