#pragma once

// Batch scripts for the workbench.
//
//   script := { stmt } ; one statement per line, `#` starts a comment
//   stmt   := "group"  NAME "=" expr
//           | "sub"    NAME "=" expr      generate(G; elems) | whole(G) | trivial(G)
//           | "action" NAME "=" expr      conjugation(G) | trivial(B; X) | indexed(B; X; k) | of(E)
//           | "ext"    NAME "=" expr      semidirect(A) | decomposition(K; B)
//           | "core"   expr               normal(H) | action(H; A) | split(H; E) | commutator(H; K)
//           | "check"  expr               a checker name applied to bound names
//   expr   := IDENT [ "(" [ arg { (";" | ",") arg } ] ")" ]
//   arg    := term { term }
//   term   := expr | NUMBER | STRING | cycle word such as (1 2)(3 4) or ()
//
// Group expressions use the catalog constructors plus previously bound
// group names. Element words are indices or cycle words.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "selab/report.hpp"

namespace selab {

enum class TermKind { name, number, string, cycle, call };

struct Call;

struct Term {
  TermKind kind = TermKind::name;
  /// Identifier, digits, string contents or canonical cycle word.
  std::string text;
  /// Exactly one element when kind is `call`.
  std::vector<Call> call;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct Call {
  std::string head;
  /// A bare identifier with no argument list.
  bool bare = false;
  std::vector<std::vector<Term>> args;
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Positions are not part of equality.
bool operator==(const Term& a, const Term& b);
bool operator==(const Call& a, const Call& b);

enum class StmtKind { group, sub, action, ext, core, check };

struct Statement {
  StmtKind kind = StmtKind::group;
  /// Bound name; empty for core and check.
  std::string name;
  Call value;
  std::size_t line = 0;
  std::size_t column = 0;

  friend bool operator==(const Statement& a, const Statement& b) {
    return a.kind == b.kind && a.name == b.name && a.value == b.value;
  }
};

struct Script {
  std::vector<Statement> statements;
  friend bool operator==(const Script&, const Script&) = default;
};

/// Throws ParseError for lexical, syntactic and binding errors; syntactic
/// messages list the expected tokens.
Script parse_script(std::string_view text);
/// Canonical form: one statement per line, `; ` between arguments of
/// statement heads, `, ` inside nested group expressions.
std::string print_script(const Script& script);

/// A statement that parsed but could not be evaluated.
class ScriptError : public std::runtime_error {
 public:
  ScriptError(const std::string& message, std::size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ScriptOptions {
  std::uint64_t seed = 0xC0FFEE;
  /// Relative from_table paths resolve against this directory.
  std::filesystem::path base_dir;
};

struct ScriptResult {
  /// One line per statement.
  std::vector<std::string> lines;
  std::vector<CheckReport> reports;
};

/// Throws ScriptError; errors from the kernel are rethrown with the line.
ScriptResult run_script(const Script& script, const ScriptOptions& options = {});

}  // namespace selab
