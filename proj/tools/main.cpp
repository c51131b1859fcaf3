#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "edgegraph/canon.hpp"
#include "edgegraph/paths.hpp"
#include "edgegraph/text.hpp"

namespace {

using edgegraph::text::Flow;
using edgegraph::text::Term;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw edgegraph::Error("IoError", "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

edgegraph::SemiringSpec<double> semiring_by_name(const std::string& name) {
  if (name == "minmax") return edgegraph::min_max_semiring();
  if (name == "maxmin") return edgegraph::max_min_semiring();
  return edgegraph::tropical_semiring();
}

std::string end_text(const edgegraph::End<std::string>& e) {
  using Kind = edgegraph::End<std::string>::Kind;
  return std::string(e.kind == Kind::Pit ? "Pit " : "Tip ") +
         edgegraph::text::render_label(e.label);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"edge graph algebra: evaluate, normalize and query expressions"};
  app.require_subcommand(1);

  std::string expr, expr_rhs, file, weights_path;
  std::string semiring = "tropical";

  auto* eval_cmd = app.add_subcommand("eval", "print the flow document of an expression");
  eval_cmd->add_option("expr", expr, "graph expression")->required();

  auto* canon_cmd = app.add_subcommand("canon", "print the canonical form of an expression");
  canon_cmd->add_option("expr", expr, "graph expression")->required();

  auto* equal_cmd =
      app.add_subcommand("equal", "semantic equality of two expressions (exit 0/1)");
  equal_cmd->add_option("lhs", expr, "graph expression")->required();
  equal_cmd->add_option("rhs", expr_rhs, "graph expression")->required();

  auto* paths_cmd = app.add_subcommand("paths", "algebraic path weights between edge ends");
  paths_cmd->add_option("expr", expr, "graph expression")->required();
  paths_cmd->add_option("--weights", weights_path, "weight table file (JSON)")->required();
  paths_cmd->add_option("--semiring", semiring, "tropical, minmax or maxmin")
      ->check(CLI::IsMember({"tropical", "minmax", "maxmin"}));

  auto* dot_cmd = app.add_subcommand("dot", "print the graph in DOT format");
  dot_cmd->add_option("expr", expr, "graph expression")->required();

  auto* validate_cmd = app.add_subcommand("validate", "check a flow document file");
  validate_cmd->add_option("file", file, "flow document")->required();

  auto* fromflow_cmd =
      app.add_subcommand("from-flow", "print the canonical expression of a flow document");
  fromflow_cmd->add_option("file", file, "flow document")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) {
      std::cout << edgegraph::text::flow_to_doc(edgegraph::eval(edgegraph::text::parse_expr(expr)));
    } else if (canon_cmd->parsed()) {
      std::cout << edgegraph::text::render_expr(
                       edgegraph::normalize(edgegraph::text::parse_expr(expr)))
                << "\n";
    } else if (equal_cmd->parsed()) {
      bool same = edgegraph::equivalent(edgegraph::text::parse_expr(expr),
                                        edgegraph::text::parse_expr(expr_rhs));
      std::cout << (same ? "true" : "false") << "\n";
      return same ? 0 : 1;
    } else if (paths_cmd->parsed()) {
      Term t = edgegraph::text::parse_expr(expr);
      auto table = edgegraph::text::weights_from_doc(read_file(weights_path));
      auto weight = [&table](const std::string& label) { return table.at(label); };
      auto result = edgegraph::semiring_paths<std::string, double>(
          t, weight, semiring_by_name(semiring));
      for (const auto& [key, w] : result) {
        std::cout << end_text(key.first) << " " << end_text(key.second) << " "
                  << edgegraph::text::format_weight(w) << "\n";
      }
    } else if (dot_cmd->parsed()) {
      std::cout << edgegraph::text::export_dot(edgegraph::eval(edgegraph::text::parse_expr(expr)));
    } else if (validate_cmd->parsed()) {
      edgegraph::text::flow_from_doc(read_file(file));
      std::cout << "valid\n";
    } else if (fromflow_cmd->parsed()) {
      std::cout << edgegraph::text::render_expr(
                       edgegraph::canonical_term(edgegraph::text::flow_from_doc(read_file(file))))
                << "\n";
    }
  } catch (const edgegraph::Error& e) {
    std::cerr << e.code() << ": " << e.what() << "\n";
    return 2;
  }
  return 0;
}
