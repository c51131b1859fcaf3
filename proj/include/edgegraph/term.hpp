#pragma once

#include <cassert>
#include <concepts>
#include <cstddef>
#include <functional>
#include <memory>
#include <utility>

namespace edgegraph {

// Edge labels need decidable equality and a total order; the order makes
// every set-valued result iterate (and serialize) deterministically.
template <typename L>
concept EdgeLabel = std::regular<L> && std::totally_ordered<L>;

// The deep embedding of the edge graph algebra: an immutable term over the
// six constructors. No simplification happens at build time; semantics are
// reinstated by folding (see fold below) or by evaluating to a FlowGraph.
template <EdgeLabel L>
class EdgeTerm {
 public:
  enum class Kind { Empty, Edge, Overlay, Into, Pits, Tips };

  // Default-constructed terms are the empty graph.
  EdgeTerm() : rep_(empty_rep()) {}

  static EdgeTerm empty() { return EdgeTerm(); }

  static EdgeTerm edge(L label) {
    return EdgeTerm(std::make_shared<const Rep>(
        Rep{Kind::Edge, std::move(label), nullptr, nullptr}));
  }

  static EdgeTerm overlay(EdgeTerm left, EdgeTerm right) {
    return binary(Kind::Overlay, std::move(left), std::move(right));
  }

  static EdgeTerm into(EdgeTerm left, EdgeTerm right) {
    return binary(Kind::Into, std::move(left), std::move(right));
  }

  static EdgeTerm pits(EdgeTerm left, EdgeTerm right) {
    return binary(Kind::Pits, std::move(left), std::move(right));
  }

  static EdgeTerm tips(EdgeTerm left, EdgeTerm right) {
    return binary(Kind::Tips, std::move(left), std::move(right));
  }

  Kind kind() const { return rep_->kind; }

  bool is_empty() const { return kind() == Kind::Empty; }
  bool is_edge() const { return kind() == Kind::Edge; }
  bool is_binary() const { return !is_empty() && !is_edge(); }

  // Edge terms only.
  const L& label() const {
    assert(is_edge());
    return rep_->label;
  }

  // Binary terms only.
  EdgeTerm left() const {
    assert(is_binary());
    return EdgeTerm(rep_->left);
  }

  EdgeTerm right() const {
    assert(is_binary());
    return EdgeTerm(rep_->right);
  }

  // Node count, leaves included.
  std::size_t size() const {
    if (!is_binary()) return 1;
    return 1 + left().size() + right().size();
  }

  // Structural (syntactic) equality. Semantic equality lives in canon.hpp.
  friend bool operator==(const EdgeTerm& a, const EdgeTerm& b) {
    if (a.rep_ == b.rep_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Empty: return true;
      case Kind::Edge: return a.label() == b.label();
      default: return a.left() == b.left() && a.right() == b.right();
    }
  }

 private:
  struct Rep {
    Kind kind;
    L label{};  // Edge only
    std::shared_ptr<const Rep> left, right;  // binary only
  };

  explicit EdgeTerm(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  static EdgeTerm binary(Kind kind, EdgeTerm left, EdgeTerm right) {
    return EdgeTerm(std::make_shared<const Rep>(
        Rep{kind, L{}, std::move(left.rep_), std::move(right.rep_)}));
  }

  static std::shared_ptr<const Rep> empty_rep() {
    static const std::shared_ptr<const Rep> rep =
        std::make_shared<const Rep>(Rep{Kind::Empty, L{}, nullptr, nullptr});
    return rep;
  }

  std::shared_ptr<const Rep> rep_;
};

// A six-function bundle defining a catamorphism target: a carrier value for
// the empty graph, an injection for single edges, and one binary function per
// connect/overlay constructor. Fold results are representation-independent
// exactly when these satisfy the edge graph axioms on the carrier; that is a
// documented contract, checked per instance by tests rather than enforced
// structurally.
template <EdgeLabel L, typename B>
struct GraphAlgebra {
  B on_empty;
  std::function<B(const L&)> on_edge;
  std::function<B(B, B)> on_overlay;
  std::function<B(B, B)> on_into;
  std::function<B(B, B)> on_pits;
  std::function<B(B, B)> on_tips;
};

// Structural recursion over a term. Total: every term is a finite tree.
template <EdgeLabel L, typename B>
B fold(const EdgeTerm<L>& t, const GraphAlgebra<L, B>& alg) {
  using Kind = typename EdgeTerm<L>::Kind;
  switch (t.kind()) {
    case Kind::Empty: return alg.on_empty;
    case Kind::Edge: return alg.on_edge(t.label());
    case Kind::Overlay: return alg.on_overlay(fold(t.left(), alg), fold(t.right(), alg));
    case Kind::Into: return alg.on_into(fold(t.left(), alg), fold(t.right(), alg));
    case Kind::Pits: return alg.on_pits(fold(t.left(), alg), fold(t.right(), alg));
    case Kind::Tips: return alg.on_tips(fold(t.left(), alg), fold(t.right(), alg));
  }
  assert(false);
  return alg.on_empty;
}

}  // namespace edgegraph
