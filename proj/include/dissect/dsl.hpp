#pragma once

#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "dissect/report.hpp"

namespace dissect {
namespace dsl {

struct Pos {
  int line = 1, col = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, Pos pos)
      : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + msg),
        pos(pos) {}
  Pos pos;
};

struct AlgebraExpr {
  enum Kind { So, Sl2R, Su2, Sl2C, Sum, Constants } kind = So;
  std::size_t p = 0, q = 0;            // So
  std::string left, right;             // Sum
  // Constants: entries (i, j, k, c) meaning [b_i, b_j] has coefficient c on
  // b_k, 1-based; the dimension is the largest index used.
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Rational>> triples;
  bool operator==(const AlgebraExpr&) const = default;
};

struct InvExpr {
  enum Kind { Reflect, Signs, Flip, SwapTwist, MatrixLit } kind = Reflect;
  std::size_t index = 0;               // Reflect, 1-based
  std::vector<int> signs;              // Signs
  std::string ref;                     // SwapTwist: name of a bound involution
  std::vector<Vec> rows;               // MatrixLit
  bool operator==(const InvExpr&) const = default;
};

struct Command {
  enum Kind { CheckDissecting, DualCartan, DualCompact, Classify, VerifyPaper } kind =
      CheckDissecting;
  std::vector<std::string> names;      // operands / "with" arguments
  std::size_t p = 0, q = 0;            // Classify
  std::size_t n = 0;                   // VerifyPaper
  bool operator==(const Command&) const = default;
};

struct Statement {
  enum Kind { Algebra, Involution, Cmd } kind = Cmd;
  Pos pos;
  std::string name;                    // binding name
  std::string on;                      // Involution: algebra name
  AlgebraExpr alg;
  InvExpr inv;
  Command cmd;
  bool operator==(const Statement& o) const {
    return kind == o.kind && name == o.name && on == o.on && alg == o.alg && inv == o.inv &&
           cmd == o.cmd;
  }
};

struct SpecFile {
  std::vector<Statement> statements;
  std::string source;
  bool operator==(const SpecFile& o) const { return statements == o.statements; }
};

/// Throws ParseError with a line/column diagnostic.
SpecFile parse_spec(const std::string& text);

/// Canonical formatting; parse_spec(pretty_print(f)) == f.
std::string pretty_print(const SpecFile& f);

struct RunOptions {
  unsigned jobs = 1;
};

/// Executes commands in order. Binding problems (unbound or duplicate names,
/// an involution form that does not fit its algebra) raise ParseError; errors
/// inside commands become failed reports.
ReportDocument run(const SpecFile& f, const RunOptions& opts = {});

}  // namespace dsl
}  // namespace dissect
