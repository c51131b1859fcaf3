// Acceptance runner: executes every contract criterion at its stated count
// and tolerance and prints one PASS/FAIL line per criterion. The CLI binary
// under test is argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "edgegraph/builders.hpp"
#include "edgegraph/canon.hpp"
#include "edgegraph/multigraph.hpp"
#include "edgegraph/paths.hpp"
#include "edgegraph/text.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"
#include "support/oracles.hpp"
#include "support/rewrite.hpp"

using namespace testsupport;
using edgegraph::eval;
using edgegraph::overlay;
using edgegraph::precedes;
using T = IntTerm;

namespace {

struct Criterion {
  bool ok = true;
  long checks = 0;
  std::string first_failure;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond) {
      if (ok) first_failure = what;
      ok = false;
    }
  }
};

// ---- criterion 1: fixture exactness -------------------------------------

const char* kUnionLeftDoc = R"({"nodes": [
  {"tips": [], "pits": ["1"]},
  {"tips": ["1"], "pits": ["2"]},
  {"tips": ["2"], "pits": []}
]})";

const char* kUnionRightDoc = R"({"nodes": [
  {"tips": [], "pits": ["1"]},
  {"tips": ["1"], "pits": ["3"]},
  {"tips": ["3"], "pits": []}
]})";

const char* kUnionResultDoc = R"({
  "nodes": [
    {
      "pits": [
        "1"
      ],
      "tips": []
    },
    {
      "pits": [
        "2",
        "3"
      ],
      "tips": [
        "1"
      ]
    },
    {
      "pits": [],
      "tips": [
        "2"
      ]
    },
    {
      "pits": [],
      "tips": [
        "3"
      ]
    }
  ]
}
)";

Criterion criterion1() {
  Criterion c;
  c.expect(eval(example_term()) == example_flow(),
           "canonical example term does not evaluate to the example flow set");

  auto left = edgegraph::text::flow_from_doc(kUnionLeftDoc);
  auto right = edgegraph::text::flow_from_doc(kUnionRightDoc);
  c.expect(edgegraph::text::flow_to_doc(overlay(left, right)) == kUnionResultDoc,
           "pairwise-union example is not byte-exact");

  c.expect(eval(edgegraph::normalize(walkthrough_term())) == walkthrough_flow(),
           "walkthrough term does not normalize onto the final flow set");
  return c;
}

// ---- criterion 2: axiom suite --------------------------------------------

Criterion criterion2() {
  Criterion c;
  Rng rng(20001);
  auto alphabet = int_alphabet(5);
  for (const auto& eq : axiom_equations()) {
    for (int i = 0; i < 500; ++i) {
      auto [lhs, rhs] = instantiate<int>(eq, rng, alphabet, 4);
      c.expect(eval(lhs) == eval(rhs), eq.name);
    }
  }
  return c;
}

// ---- criterion 3: derived laws -------------------------------------------

Criterion criterion3() {
  Criterion c;
  Rng rng(20003);
  auto alphabet = int_alphabet(5);
  auto some_term = [&] { return gen_term<int>(rng, 3, alphabet); };
  auto nonempty = [&] {
    for (;;) {
      T t = some_term();
      if (!eval(t).is_empty()) return t;
    }
  };

  for (int i = 0; i < 200; ++i) {
    T a = nonempty(), b = some_term(), cc = some_term(), d = some_term(), f = some_term();
    // extended transitive law, both equalities
    c.expect(eval(T::overlay(T::into(T::tips(a, b), cc), T::into(T::tips(a, d), f))) ==
                 eval(T::into(T::tips(T::tips(a, b), d), T::pits(cc, f))),
             "extended transitive law, shared tips side");
    c.expect(eval(T::overlay(T::into(b, T::pits(a, cc)), T::into(d, T::pits(a, f)))) ==
                 eval(T::into(T::tips(b, d), T::pits(T::pits(a, cc), f))),
             "extended transitive law, shared pits side");
  }

  for (int i = 0; i < 200; ++i) {
    T a = some_term(), b = some_term(), cc = some_term();
    // self-loop law (holds for empty a as well)
    T loop = T::into(a, a);
    c.expect(eval(T::overlay(T::into(T::tips(a, b), cc), loop)) ==
                 eval(T::overlay(T::into(b, T::pits(a, cc)), loop)),
             "self-loop law");
  }

  for (int i = 0; i < 200; ++i) {
    T a = some_term(), b = some_term();
    auto contain = [&](T joined, const char* what) {
      auto g = eval(joined);
      c.expect(eval(T::overlay(joined, a)) == g, std::string(what) + " + left operand");
      c.expect(eval(T::overlay(joined, b)) == g, std::string(what) + " + right operand");
      c.expect(eval(T::overlay(T::overlay(joined, a), b)) == g,
               std::string(what) + " + both operands");
    };
    contain(T::into(a, b), "containment of >>");
    contain(T::pits(a, b), "containment of <>");
    contain(T::tips(a, b), "containment of ><");
  }

  for (int i = 0; i < 200; ++i) {
    auto g = gen_nonempty_flow(rng);
    auto edges = edgegraph::underlying(g);
    auto it = edges.begin();
    std::advance(it, rand_int(rng, 0, static_cast<int>(edges.size()) - 1));
    c.expect(overlay(g, edgegraph::edge_flow(*it)) == g,
             "adding an already-present edge must be absorbed");
  }
  return c;
}

// ---- criterion 4: soundness / completeness --------------------------------

Criterion criterion4() {
  Criterion c;
  Rng rng(20004);
  auto rules = axiom_rules();
  auto alphabet = int_alphabet(5);
  auto check_pair = [&](const T& t, const T& r, const std::string& what) {
    c.expect(eval(t) == eval(r), what + ": evaluations differ");
    c.expect(edgegraph::normalize(t) == edgegraph::normalize(r),
             what + ": normal forms differ");
  };
  // random walks over the whole rule set
  for (int i = 0; i < 300; ++i) {
    T t = gen_int_term(rng, 7, 5);
    check_pair(t, rewrite_random(t, rng, 1 + rand_int(rng, 0, 4), rules),
               "random rewrite walk");
  }
  // every axiom family applied in a random context, plus walk steps
  for (const auto& eq : axiom_equations()) {
    for (int i = 0; i < 7; ++i) {
      auto [t, r] = instantiate_in_context<int>(eq, rng, alphabet);
      check_pair(t, rewrite_random(r, rng, rand_int(rng, 0, 2), rules), eq.name);
    }
  }
  for (int i = 0; i < 300; ++i) {
    T t = gen_int_term(rng, 7, 5);
    auto g = eval(t);
    c.expect(eval(edgegraph::canonical_term(g)) == g,
             "canonical term round trip through eval");
  }
  return c;
}

// ---- criterion 5: representation isomorphisms -----------------------------

Criterion criterion5() {
  Criterion c;
  Rng rng(20005);
  for (int i = 0; i < 200; ++i) {
    auto g = gen_multigraph(rng);
    c.expect(from_nodal_flow(to_nodal_flow(g)) == g, "multigraph -> nodal flow -> multigraph");
    auto nf = gen_nodal_flow(rng);
    c.expect(to_nodal_flow(from_nodal_flow(nf)) == nf, "nodal flow -> multigraph -> nodal flow");
    auto fg = gen_flow(rng);
    c.expect(to_flow(edgegraph::from_flow(fg)) == fg, "flow -> multigraph -> flow");
    c.expect(equivalent_multigraphs(edgegraph::from_flow(to_flow(g)), g),
             "multigraph -> flow -> multigraph stays in the same class");
  }
  return c;
}

// ---- criterion 6: path oracle ---------------------------------------------

Criterion criterion6() {
  Criterion c;
  Rng rng(20006);
  struct Named {
    const char* name;
    edgegraph::SemiringSpec<double> spec;
  };
  const Named semirings[] = {{"tropical", edgegraph::tropical_semiring()},
                             {"minmax", edgegraph::min_max_semiring()},
                             {"maxmin", edgegraph::max_min_semiring()}};
  for (int i = 0; i < 200; ++i) {
    T t = gen_small_term(rng, 6);
    std::map<int, double> w;
    for (int x = 1; x <= 6; ++x) w[x] = rand_int(rng, 0, 20);
    std::function<double(const int&)> weight = [&w](const int& x) { return w.at(x); };
    for (const auto& [name, spec] : semirings) {
      c.expect(edgegraph::semiring_paths<int, double>(t, weight, spec) ==
                   paths_oracle<int, double>(t, weight, spec),
               std::string(name) + " disagrees with the brute-force oracle");
    }
  }

  auto rules = axiom_rules();
  std::function<double(const int&)> weight = [](const int& x) { return double(x); };
  auto check_pair = [&](const T& t, const T& r) {
    for (const auto& [name, spec] : semirings) {
      c.expect(edgegraph::semiring_paths<int, double>(t, weight, spec) ==
                   edgegraph::semiring_paths<int, double>(r, weight, spec),
               std::string("representation independence under ") + name);
    }
  };
  for (int i = 0; i < 100; ++i) {
    T t = gen_small_term(rng, 6);
    check_pair(t, rewrite_random(t, rng, 1 + rand_int(rng, 0, 3), rules));
  }
  auto alphabet = int_alphabet(5);
  for (const auto& eq : axiom_equations()) {
    auto [t, r] = instantiate_in_context<int>(eq, rng, alphabet);
    check_pair(t, r);
  }
  return c;
}

// ---- criterion 7: subtraction and order -----------------------------------

Criterion criterion7() {
  Criterion c;
  Rng rng(20007);
  using G = edgegraph::FlowGraph<int>;
  const G empty = edgegraph::empty_flow<int>();
  using Op = G (*)(G, G);
  const Op ops[] = {&overlay<int>, &edgegraph::connect_into<int>,
                    &edgegraph::connect_pits<int>, &edgegraph::connect_tips<int>};

  for (int i = 0; i < 200; ++i) {
    auto a = gen_flow(rng, 5);
    auto b = gen_flow(rng, 5);
    auto d = gen_flow(rng, 4);
    c.expect(edgegraph::subtract(a, empty) == a, "a - empty = a");
    c.expect(edgegraph::subtract(a, a) == empty, "a - a = empty");
    c.expect(precedes(edgegraph::subtract(a, b), a), "a - b precedes a");

    c.expect(precedes(empty, a), "empty is the least element");
    for (Op op : ops) {
      c.expect(precedes(a, op(a, b)), "a precedes a op b");
      c.expect(precedes(a, op(b, a)), "a precedes b op a");
      // monotony, with a <= bigger forced as bigger := a + d
      auto bigger = overlay(a, d);
      c.expect(precedes(op(a, b), op(bigger, b)), "left monotony");
      c.expect(precedes(op(b, a), op(b, bigger)), "right monotony");
    }

    c.expect(precedes(a, b) == (overlay(a, b) == b), "containment and join-absorption orders coincide");
    auto above = overlay(a, d);
    c.expect(precedes(a, above) == (overlay(a, above) == above),
             "containment and join-absorption orders coincide on related pairs");
  }
  return c;
}

// ---- criterion 8: connect oracle -------------------------------------------

Criterion criterion8() {
  Criterion c;
  Rng rng(20008);
  for (int i = 0; i < 200; ++i) {
    auto g = eval(gen_small_term(rng, 5));
    auto h = eval(gen_small_term(rng, 5));
    c.expect(edgegraph::connect_into(g, h) == connect_literal<int>(g, h, &c_into<int>),
             "into differs from the literal pairwise construction");
    c.expect(edgegraph::connect_pits(g, h) == connect_literal<int>(g, h, &c_pits<int>),
             "pits differs from the literal pairwise construction");
    c.expect(edgegraph::connect_tips(g, h) == connect_literal<int>(g, h, &c_tips<int>),
             "tips differs from the literal pairwise construction");
  }
  return c;
}

// ---- criterion 9: CLI contract ----------------------------------------------

struct CliResult {
  std::string output;
  int exit_code = -1;
};

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'') out += "'\\''";
    else out.push_back(ch);
  }
  out.push_back('\'');
  return out;
}

CliResult run_cli(const std::string& bin, const std::vector<std::string>& args,
                  bool merge_stderr = false) {
  std::string cmd = shell_quote(bin);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += merge_stderr ? " 2>&1" : " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Criterion criterion9(const std::string& cli) {
  Criterion c;
  Rng rng(20009);

  for (int i = 0; i < 200; ++i) {
    auto t = gen_string_term(rng);
    c.expect(edgegraph::text::parse_expr(edgegraph::text::render_expr(t)) == t,
             "parse(render(term)) is not the identity");
    auto g = eval(gen_string_term(rng));
    c.expect(edgegraph::text::flow_from_doc(edgegraph::text::flow_to_doc(g)) == g,
             "flow document round trip is not the identity");
  }

  if (cli.empty() || !std::filesystem::exists(cli)) {
    c.expect(false, "CLI binary not found: '" + cli + "'");
    return c;
  }

  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / ("edgegraph_accept_" + std::to_string(getpid()));
  fs::create_directories(dir);
  auto write = [&](const char* name, const std::string& content) {
    std::ofstream(dir / name) << content;
    return (dir / name).string();
  };
  std::string weights = write("w.json", "{\"1\": 3, \"2\": 4}\n");
  std::string sparse_weights = write("w1.json", "{\"1\": 3}\n");
  std::string edge_doc =
      write("edge.json", edgegraph::text::flow_to_doc(edgegraph::edge_flow<std::string>("1")));

  struct Fixture {
    std::vector<std::string> args;
    std::string expected_output;  // empty: only check stability
    int expected_exit;
  };
  const Fixture fixtures[] = {
      {{"equal", "1<>2 + 2<>3", "1<>2 + 1<>3"}, "true\n", 0},
      {{"equal", "1 >> 2", "2 >> 1"}, "false\n", 1},
      {{"canon", "1 + e"}, "e >> 1 + 1 >> e\n", 0},
      {{"canon", "e>>1<>3 + 1><2>>4<>5 + 6>>2 + 3><4>>7 + 5><7>>6"},
       "e >> 1 <> 3 + 1 >< 2 >> 4 <> 5 + 3 >< 4 >> 7 + 5 >< 7 >> 6 + 6 >> 2\n", 0},
      {{"paths", "1 >> 2", "--weights", weights},
       "Pit 1 Pit 1 0\n"
       "Pit 1 Pit 2 3\n"
       "Pit 1 Tip 1 3\n"
       "Pit 1 Tip 2 7\n"
       "Pit 2 Pit 2 0\n"
       "Pit 2 Tip 1 0\n"
       "Pit 2 Tip 2 4\n"
       "Tip 1 Pit 2 0\n"
       "Tip 1 Tip 1 0\n"
       "Tip 1 Tip 2 4\n"
       "Tip 2 Tip 2 0\n",
       0},
      {{"paths", "1 >> 2", "--weights", weights, "--semiring", "minmax"}, "", 0},
      {{"paths", "1 >> 2", "--weights", weights, "--semiring", "maxmin"}, "", 0},
      {{"dot", "1 >> 1"},
       "digraph flow {\n  n0 [shape=point];\n  n0 -> n0 [label=\"1\"];\n}\n", 0},
      {{"dot", "e>>1<>3 + 1><2>>4<>5 + 6>>2 + 3><4>>7 + 5><7>>6"}, "", 0},
      {{"eval", "1 >> 2"}, "", 0},
      {{"validate", edge_doc}, "valid\n", 0},
      {{"from-flow", edge_doc}, "e >> 1 + 1 >> e\n", 0},
  };
  for (const auto& f : fixtures) {
    auto first = run_cli(cli, f.args);
    auto second = run_cli(cli, f.args);
    std::string what = "cli";
    for (const auto& a : f.args) what += " " + a;
    c.expect(first.output == second.output && first.exit_code == second.exit_code,
             what + ": output not byte-stable across runs");
    c.expect(first.exit_code == f.expected_exit, what + ": unexpected exit code");
    if (!f.expected_output.empty())
      c.expect(first.output == f.expected_output, what + ": unexpected output");
  }

  // `equal` agrees with the library's equivalence on random pairs
  for (int i = 0; i < 20; ++i) {
    auto t1 = gen_string_term(rng, 4);
    auto t2 = rand_int(rng, 0, 1) ? gen_string_term(rng, 4)
                                  : edgegraph::normalize(t1);
    auto r = run_cli(cli, {"equal", edgegraph::text::render_expr(t1),
                           edgegraph::text::render_expr(t2)});
    bool same = edgegraph::equivalent(t1, t2);
    c.expect(r.exit_code == (same ? 0 : 1) && r.output == (same ? "true\n" : "false\n"),
             "cli equal disagrees with the library equivalence");
  }

  // eval output must load back as the evaluated graph
  auto evaled = run_cli(cli, {"eval", "1 >> 2"});
  c.expect(edgegraph::text::flow_from_doc(evaled.output) ==
               eval(edgegraph::text::parse_expr("1 >> 2")),
           "cli eval output does not load back");

  // machine-parseable error codes on stderr, exit 2
  auto syntax = run_cli(cli, {"canon", "1 +"}, /*merge_stderr=*/true);
  c.expect(syntax.exit_code == 2 && syntax.output.rfind("SyntaxError", 0) == 0,
           "syntax errors must exit 2 with a SyntaxError code line");
  auto missing = run_cli(cli, {"paths", "1 >> 2", "--weights", sparse_weights},
                         /*merge_stderr=*/true);
  c.expect(missing.exit_code == 2 && missing.output.rfind("WeightMissing", 0) == 0,
           "missing weights must exit 2 with a WeightMissing code line");
  auto invalid = run_cli(
      cli, {"validate", write("bad.json", "{\"nodes\": [{\"tips\": [\"1\"], \"pits\": []}]}")},
      /*merge_stderr=*/true);
  c.expect(invalid.exit_code == 2 && invalid.output.rfind("Condition1Violation", 0) == 0,
           "invalid documents must exit 2 with the violated condition code");

  std::error_code ec;
  fs::remove_all(dir, ec);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Entry {
    int number;
    const char* title;
    Criterion result;
  };
  const Entry entries[] = {
      {1, "fixture exactness", criterion1()},
      {2, "axiom suite", criterion2()},
      {3, "derived laws", criterion3()},
      {4, "soundness and completeness", criterion4()},
      {5, "representation isomorphisms", criterion5()},
      {6, "path oracle", criterion6()},
      {7, "subtraction and order", criterion7()},
      {8, "connect oracle", criterion8()},
      {9, "CLI contract", criterion9(cli)},
  };
  int failed = 0;
  for (const auto& entry : entries) {
    std::cout << "criterion " << entry.number << " "
              << (entry.result.ok ? "PASS" : "FAIL") << " " << entry.title << " ("
              << entry.result.checks << " checks)";
    if (!entry.result.ok) {
      std::cout << " first failure: " << entry.result.first_failure;
      ++failed;
    }
    std::cout << "\n";
  }
  if (failed != 0) {
    std::cout << failed << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
