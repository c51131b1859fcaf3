#pragma once

#include <concepts>
#include <map>
#include <set>
#include <tuple>

#include "edgegraph/flow.hpp"

namespace edgegraph {

template <typename N>
concept NodeId = std::regular<N> && std::totally_ordered<N>;

// The classical multigraph tuple (N, E, π, τ): explicit nodes, and two total
// maps selecting the origin (pit) and destination (tip) node of each edge.
template <EdgeLabel L, NodeId N>
struct Multigraph {
  std::set<N> nodes;
  std::set<L> edges;
  std::map<L, N> pit_of;
  std::map<L, N> tip_of;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

// pit_of/tip_of defined on exactly the edge set, landing in the node set.
template <EdgeLabel L, NodeId N>
bool is_valid(const Multigraph<L, N>& g) {
  if (g.pit_of.size() != g.edges.size() || g.tip_of.size() != g.edges.size())
    return false;
  for (const L& e : g.edges) {
    auto p = g.pit_of.find(e);
    auto t = g.tip_of.find(e);
    if (p == g.pit_of.end() || t == g.tip_of.end()) return false;
    if (!g.nodes.contains(p->second) || !g.nodes.contains(t->second)) return false;
  }
  return true;
}

// One entry of a nodal flow representation: a flow node that still carries
// its node identity. Isolated nodes (both sides empty) are representable.
template <EdgeLabel L, NodeId N>
struct NodalEntry {
  std::set<L> tips;
  std::set<L> pits;
  N node;

  friend bool operator==(const NodalEntry&, const NodalEntry&) = default;
  friend bool operator<(const NodalEntry& a, const NodalEntry& b) {
    return std::tie(a.node, a.tips, a.pits) < std::tie(b.node, b.tips, b.pits);
  }
};

template <EdgeLabel L, NodeId N>
struct NodalFlow {
  std::set<NodalEntry<L, N>> entries;

  friend bool operator==(const NodalFlow&, const NodalFlow&) = default;
};

// One entry per node, holding that node's tip and pit preimages.
template <EdgeLabel L, NodeId N>
NodalFlow<L, N> to_nodal_flow(const Multigraph<L, N>& g) {
  std::map<N, NodalEntry<L, N>> per_node;
  for (const N& n : g.nodes) per_node[n] = NodalEntry<L, N>{{}, {}, n};
  for (const auto& [e, n] : g.tip_of) per_node[n].tips.insert(e);
  for (const auto& [e, n] : g.pit_of) per_node[n].pits.insert(e);
  NodalFlow<L, N> out;
  for (auto& [n, entry] : per_node) out.entries.insert(std::move(entry));
  return out;
}

// Inverse of to_nodal_flow: each edge's pit/tip is the unique entry carrying
// it in the respective component.
template <EdgeLabel L, NodeId N>
Multigraph<L, N> from_nodal_flow(const NodalFlow<L, N>& nf) {
  Multigraph<L, N> g;
  for (const auto& entry : nf.entries) {
    g.nodes.insert(entry.node);
    for (const L& e : entry.tips) {
      g.edges.insert(e);
      g.tip_of[e] = entry.node;
    }
    for (const L& e : entry.pits) {
      g.edges.insert(e);
      g.pit_of[e] = entry.node;
    }
  }
  return g;
}

// Drops node identities and filters out isolated nodes.
template <EdgeLabel L, NodeId N>
FlowGraph<L> restrict_to_flow(const NodalFlow<L, N>& nf) {
  typename FlowGraph<L>::NodeSet out;
  for (const auto& entry : nf.entries) {
    FlowNode<L> n{entry.tips, entry.pits};
    if (!n.is_empty()) out.insert(std::move(n));
  }
  return FlowGraph<L>::unchecked(std::move(out));
}

template <EdgeLabel L, NodeId N>
FlowGraph<L> to_flow(const Multigraph<L, N>& g) {
  return restrict_to_flow(to_nodal_flow(g));
}

// Canonical representative of the flow graph's equivalence class: node ids
// are indices in the canonical node order.
template <EdgeLabel L>
Multigraph<L, int> from_flow(const FlowGraph<L>& fg) {
  Multigraph<L, int> g;
  int id = 0;
  for (const auto& n : fg.nodes()) {
    g.nodes.insert(id);
    for (const L& e : n.tips) {
      g.edges.insert(e);
      g.tip_of[e] = id;
    }
    for (const L& e : n.pits) {
      g.edges.insert(e);
      g.pit_of[e] = id;
    }
    ++id;
  }
  return g;
}

// Equality up to node renaming, isolated nodes ignored: decided via the
// canonical flow forms rather than by searching for a renaming witness.
template <EdgeLabel L, NodeId N1, NodeId N2>
bool equivalent_multigraphs(const Multigraph<L, N1>& g, const Multigraph<L, N2>& h) {
  return to_flow(g) == to_flow(h);
}

}  // namespace edgegraph
