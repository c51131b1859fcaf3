#pragma once

#include <optional>
#include <set>

#include "edgegraph/flow.hpp"
#include "edgegraph/term.hpp"

namespace edgegraph {

namespace detail {

// Left-folded chain over the labels of a set in ascending order; Empty
// stands in for an empty set.
template <EdgeLabel L, typename Join>
EdgeTerm<L> label_chain(const std::set<L>& labels, Join join) {
  std::optional<EdgeTerm<L>> acc;
  for (const L& x : labels) {
    auto e = EdgeTerm<L>::edge(x);
    acc = acc ? join(*acc, e) : e;
  }
  return acc.value_or(EdgeTerm<L>::empty());
}

}  // namespace detail

// The canonical term of a flow graph: the overlay, over nodes in canonical
// order, of (tips ×-chain) ≫ (pits ⋄-chain). An isolated edge therefore
// renders as the two summands ε≫x + x≫ε rather than the shorter x.
// eval(canonical_term(g)) == g.
template <EdgeLabel L>
EdgeTerm<L> canonical_term(const FlowGraph<L>& g) {
  std::optional<EdgeTerm<L>> acc;
  for (const auto& n : g.nodes()) {
    auto node_term = EdgeTerm<L>::into(
        detail::label_chain<L>(n.tips, &EdgeTerm<L>::tips),
        detail::label_chain<L>(n.pits, &EdgeTerm<L>::pits));
    acc = acc ? EdgeTerm<L>::overlay(*acc, node_term) : node_term;
  }
  return acc.value_or(EdgeTerm<L>::empty());
}

// The normal form of a term: two terms are semantically equal exactly when
// their normal forms are syntactically identical. Idempotent.
template <EdgeLabel L>
EdgeTerm<L> normalize(const EdgeTerm<L>& t) {
  return canonical_term(eval(t));
}

// Decidable semantic equality.
template <EdgeLabel L>
bool equivalent(const EdgeTerm<L>& a, const EdgeTerm<L>& b) {
  return eval(a) == eval(b);
}

}  // namespace edgegraph
