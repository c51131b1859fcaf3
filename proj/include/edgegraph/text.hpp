#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "edgegraph/error.hpp"
#include "edgegraph/flow.hpp"
#include "edgegraph/term.hpp"

// Textual surface of the library, instantiated at string labels: the
// expression grammar, the FlowDocument and WeightTable formats, and DOT
// export. All output is byte-deterministic.
namespace edgegraph::text {

using Term = EdgeTerm<std::string>;
using Flow = FlowGraph<std::string>;

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error("SyntaxError",
              std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

class DocumentError : public Error {
 public:
  explicit DocumentError(const std::string& message)
      : Error("DocumentError", message) {}
};

// Grammar: labels are nonempty alphanumeric tokens or double-quoted strings
// (\" and \\ escapes); the bare token `e` is the empty graph. Operators,
// tightest first: `<>` (pits), `><` (tips), `>>` (into), `+` (overlay); all
// left-associative; parentheses group. The unicode spellings ε ≫ ⋄ × are
// accepted as input aliases.
Term parse_expr(std::string_view src);

// Minimal-parentheses rendering; parse_expr(render_expr(t)) == t.
std::string render_expr(const Term& t);

// A label as the expression grammar spells it: bare when it can be read
// back as a bare token, quoted otherwise.
std::string render_label(const std::string& label);

// FlowDocument: a JSON object {"nodes": [{"tips": [...], "pits": [...]}]}
// with labels sorted and nodes in canonical order.
std::string flow_to_doc(const Flow& g);
Flow flow_from_doc(std::string_view doc);  // throws DocumentError / ValidationError

// One DOT node per flow node (canonical order, ids n0, n1, ...), one
// labelled arc per edge from its pit node to its tip node.
std::string export_dot(const Flow& g);

// Label-to-weight table with an optional declared default.
struct WeightTable {
  std::map<std::string, double> weights;
  std::optional<double> fallback;

  double at(const std::string& label) const;  // throws Error("WeightMissing")
};

// A JSON object, either flat {"label": w, ...} or
// {"weights": {...}, "default": w}.
WeightTable weights_from_doc(std::string_view doc);

// Shortest text that reads back as the same value ("7", "0.5", "inf").
std::string format_weight(double w);

}  // namespace edgegraph::text
