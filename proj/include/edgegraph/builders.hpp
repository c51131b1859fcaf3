#pragma once

#include <vector>

#include "edgegraph/term.hpp"

namespace edgegraph {

// A node described by the edges terminating at it and originating from it.
// Overlapping specs are legal: evaluation unifies the nodes as required.
template <EdgeLabel L>
struct NodeSpec {
  std::vector<L> terminating;  // tips side
  std::vector<L> originating;  // pits side
};

namespace detail {

template <EdgeLabel L, typename Join>
EdgeTerm<L> foldr_edges(const std::vector<L>& xs, Join join, EdgeTerm<L> init) {
  EdgeTerm<L> acc = std::move(init);
  for (auto it = xs.rbegin(); it != xs.rend(); ++it)
    acc = join(EdgeTerm<L>::edge(*it), std::move(acc));
  return acc;
}

}  // namespace detail

// Every edge isolated.
template <EdgeLabel L>
EdgeTerm<L> discrete_graph(const std::vector<L>& xs) {
  return detail::foldr_edges(xs, &EdgeTerm<L>::overlay, EdgeTerm<L>::empty());
}

// An into-chain over all edges closing back on the first: every edge ends
// up looped through one shared node.
template <EdgeLabel L>
EdgeTerm<L> flower_graph(const std::vector<L>& xs) {
  if (xs.empty()) return EdgeTerm<L>::empty();
  return detail::foldr_edges(xs, &EdgeTerm<L>::into, EdgeTerm<L>::edge(xs.front()));
}

// All edges joined at a common originating node.
template <EdgeLabel L>
EdgeTerm<L> pit_graph(const std::vector<L>& xs) {
  return detail::foldr_edges(xs, &EdgeTerm<L>::pits, EdgeTerm<L>::empty());
}

// All edges joined at a common terminating node.
template <EdgeLabel L>
EdgeTerm<L> tip_graph(const std::vector<L>& xs) {
  return detail::foldr_edges(xs, &EdgeTerm<L>::tips, EdgeTerm<L>::empty());
}

// One central node with tips `ts` and pits `ps`.
template <EdgeLabel L>
EdgeTerm<L> into_graph(const std::vector<L>& ts, const std::vector<L>& ps) {
  return EdgeTerm<L>::into(tip_graph(ts), pit_graph(ps));
}

// An arbitrary graph from a list of node specs; specs sharing an edge end
// unify into one node when evaluated.
template <EdgeLabel L>
EdgeTerm<L> mk_edge_graph(const std::vector<NodeSpec<L>>& specs) {
  EdgeTerm<L> acc = EdgeTerm<L>::empty();
  for (auto it = specs.rbegin(); it != specs.rend(); ++it)
    acc = EdgeTerm<L>::overlay(into_graph(it->terminating, it->originating), std::move(acc));
  return acc;
}

}  // namespace edgegraph
