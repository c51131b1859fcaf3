#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>

#include "edgegraph/error.hpp"
#include "edgegraph/term.hpp"

namespace edgegraph {

// One node of a flow representation: the edges terminating here (tips) and
// the edges originating here (pits). Nodes carry no identity of their own.
template <EdgeLabel L>
struct FlowNode {
  std::set<L> tips;
  std::set<L> pits;

  bool is_empty() const { return tips.empty() && pits.empty(); }

  friend bool operator==(const FlowNode&, const FlowNode&) = default;
};

// Canonical node order: (min tip, min pit), an empty side sorting first.
// On a valid graph this is total already (tips sets are pairwise disjoint,
// as are pits sets); the full lexicographic tie-break only matters for raw
// node sets that have not passed validation.
template <EdgeLabel L>
bool operator<(const FlowNode<L>& a, const FlowNode<L>& b) {
  auto head = [](const std::set<L>& s) {
    return s.empty() ? std::optional<L>{} : std::optional<L>{*s.begin()};
  };
  auto ka = std::make_tuple(head(a.tips), head(a.pits));
  auto kb = std::make_tuple(head(b.tips), head(b.pits));
  if (ka != kb) return ka < kb;
  return std::tie(a.tips, a.pits) < std::tie(b.tips, b.pits);
}

template <EdgeLabel L>
FlowNode<L> union_nodes(const FlowNode<L>& a, const FlowNode<L>& b) {
  FlowNode<L> out = a;
  out.tips.insert(b.tips.begin(), b.tips.end());
  out.pits.insert(b.pits.begin(), b.pits.end());
  return out;
}

template <EdgeLabel L>
bool intersects(const std::set<L>& a, const std::set<L>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) ++ia;
    else if (*ib < *ia) ++ib;
    else return true;
  }
  return false;
}

// True when the nodes share no tip and no pit.
template <EdgeLabel L>
bool disjoint_nodes(const FlowNode<L>& a, const FlowNode<L>& b) {
  return !intersects(a.tips, b.tips) && !intersects(a.pits, b.pits);
}

// Component-wise containment.
template <EdgeLabel L>
bool node_within(const FlowNode<L>& a, const FlowNode<L>& b) {
  return std::includes(b.tips.begin(), b.tips.end(), a.tips.begin(), a.tips.end()) &&
         std::includes(b.pits.begin(), b.pits.end(), a.pits.begin(), a.pits.end());
}

// Raised by validate; code() is one of Condition1Violation,
// Condition2Violation, Condition3Violation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A flow representation: a finite set of (tips, pits) nodes such that
//   1. the union of all tips equals the union of all pits (the edge set),
//   2. distinct nodes have disjoint tips and disjoint pits,
//   3. no node is empty on both sides.
// Values are immutable; every operation below preserves validity. The only
// checked entry point from raw data is validate().
template <EdgeLabel L>
class FlowGraph {
 public:
  using NodeSet = std::set<FlowNode<L>>;

  FlowGraph() = default;  // the empty graph

  // Wraps a node set the caller guarantees already satisfies the three
  // conditions (operation outputs, test oracles). Use validate() otherwise.
  static FlowGraph unchecked(NodeSet nodes) { return FlowGraph(std::move(nodes)); }

  const NodeSet& nodes() const { return nodes_; }
  bool is_empty() const { return nodes_.empty(); }

  // Moves the node set out, leaving the graph empty.
  NodeSet into_nodes() && { return std::move(nodes_); }

  friend bool operator==(const FlowGraph&, const FlowGraph&) = default;

 private:
  explicit FlowGraph(NodeSet nodes) : nodes_(std::move(nodes)) {}

  NodeSet nodes_;
};

namespace detail {

template <EdgeLabel L>
std::string describe_label(const L& x) {
  if constexpr (requires(std::ostringstream os) { os << x; }) {
    std::ostringstream os;
    os << x;
    return os.str();
  } else {
    return "<label>";
  }
}

template <EdgeLabel L>
std::string describe_labels(const std::set<L>& xs) {
  std::string out;
  for (const L& x : xs) {
    if (!out.empty()) out += ", ";
    out += describe_label<L>(x);
  }
  return out;
}

}  // namespace detail

template <EdgeLabel L>
FlowGraph<L> validate(const std::set<FlowNode<L>>& raw) {
  std::set<L> all_tips, all_pits, dup_tips, dup_pits;
  for (const auto& n : raw) {
    for (const L& x : n.tips)
      if (!all_tips.insert(x).second) dup_tips.insert(x);
    for (const L& x : n.pits)
      if (!all_pits.insert(x).second) dup_pits.insert(x);
  }
  if (all_tips != all_pits) {
    std::set<L> missing_pit, missing_tip;
    std::set_difference(all_tips.begin(), all_tips.end(), all_pits.begin(),
                        all_pits.end(), std::inserter(missing_pit, missing_pit.end()));
    std::set_difference(all_pits.begin(), all_pits.end(), all_tips.begin(),
                        all_tips.end(), std::inserter(missing_tip, missing_tip.end()));
    std::string msg = "edge cover broken:";
    if (!missing_pit.empty())
      msg += " tip without pit for {" + detail::describe_labels<L>(missing_pit) + "}";
    if (!missing_tip.empty())
      msg += std::string(missing_pit.empty() ? " " : ";") +
             " pit without tip for {" + detail::describe_labels<L>(missing_tip) + "}";
    throw ValidationError("Condition1Violation", msg);
  }
  if (!dup_tips.empty() || !dup_pits.empty()) {
    std::string msg;
    if (!dup_tips.empty())
      msg += "two nodes share a tip: {" + detail::describe_labels<L>(dup_tips) + "}";
    if (!dup_pits.empty())
      msg += std::string(msg.empty() ? "" : "; ") + "two nodes share a pit: {" +
             detail::describe_labels<L>(dup_pits) + "}";
    throw ValidationError("Condition2Violation", msg);
  }
  for (const auto& n : raw) {
    if (n.is_empty())
      throw ValidationError("Condition3Violation",
                            "a node with no tips and no pits is present");
  }
  return FlowGraph<L>::unchecked(raw);
}

template <EdgeLabel L>
FlowGraph<L> empty_flow() {
  return FlowGraph<L>();
}

// A single edge: its tip node and its pit node.
template <EdgeLabel L>
FlowGraph<L> edge_flow(const L& x) {
  typename FlowGraph<L>::NodeSet nodes;
  nodes.insert(FlowNode<L>{{x}, {}});
  nodes.insert(FlowNode<L>{{}, {x}});
  return FlowGraph<L>::unchecked(std::move(nodes));
}

namespace detail {

// Inserts a node into a pairwise-disjoint accumulator, aggregating every
// node that shares a tip or pit with it (the union-find-flavoured fold of
// the flow instantiation). Empty nodes are skipped, which keeps the merge
// total on raw node sets as well.
template <EdgeLabel L>
void merge_node(std::set<FlowNode<L>>& acc, FlowNode<L> n) {
  if (n.is_empty()) return;
  for (auto it = acc.begin(); it != acc.end();) {
    if (disjoint_nodes(*it, n)) {
      ++it;
    } else {
      n = union_nodes(n, *it);
      it = acc.erase(it);
    }
  }
  acc.insert(std::move(n));
}

}  // namespace detail

// Overlay: the least upper bound under the containment order (see precedes).
// Nodes sharing an incoming or outgoing edge are unified, transitively.
// Arguments are taken by value so folds can move their accumulators through;
// the smaller side is merged into the larger one.
template <EdgeLabel L>
FlowGraph<L> overlay(FlowGraph<L> g, FlowGraph<L> h) {
  if (g.nodes().size() < h.nodes().size()) std::swap(g, h);
  auto acc = std::move(g).into_nodes();
  auto rest = std::move(h).into_nodes();
  while (!rest.empty()) {
    auto handle = rest.extract(rest.begin());
    detail::merge_node(acc, std::move(handle.value()));
  }
  return FlowGraph<L>::unchecked(std::move(acc));
}

// The underlying edge set: the union of all tips (equal, by condition 1, to
// the union of all pits).
template <EdgeLabel L>
std::set<L> underlying(const FlowGraph<L>& g) {
  std::set<L> out;
  for (const auto& n : g.nodes()) out.insert(n.tips.begin(), n.tips.end());
  return out;
}

namespace detail {

enum class ConnectKind { Into, Pits, Tips };

// Single-merge form of the connect operators. Semantically equal to
// overlaying the |g|·|h| pairwise helper graphs of the definition: when both
// sides are non-empty, every node carrying a connected end collapses into
// one hub node of overlay(g, h). Into joins g's tips with h's pits; Pits
// joins the pits of both sides; Tips the tips of both sides.
template <EdgeLabel L>
FlowGraph<L> connect(FlowGraph<L> g, FlowGraph<L> h, ConnectKind kind) {
  const std::set<L> eg = underlying(g);
  const std::set<L> eh = underlying(h);
  FlowGraph<L> base = overlay(std::move(g), std::move(h));
  if (eg.empty() || eh.empty()) return base;

  auto hit = [&](const FlowNode<L>& n) {
    switch (kind) {
      case ConnectKind::Into: return intersects(n.tips, eg) || intersects(n.pits, eh);
      case ConnectKind::Pits: return intersects(n.pits, eg) || intersects(n.pits, eh);
      case ConnectKind::Tips: return intersects(n.tips, eg) || intersects(n.tips, eh);
    }
    return false;
  };

  FlowNode<L> hub;
  typename FlowGraph<L>::NodeSet out;
  auto nodes = std::move(base).into_nodes();
  while (!nodes.empty()) {
    auto handle = nodes.extract(nodes.begin());
    if (hit(handle.value())) {
      hub.tips.merge(handle.value().tips);
      hub.pits.merge(handle.value().pits);
    } else {
      out.insert(std::move(handle));
    }
  }
  out.insert(std::move(hub));  // non-empty: both sides have edges
  return FlowGraph<L>::unchecked(std::move(out));
}

}  // namespace detail

// g ≫ h: every edge of g points into every edge of h.
template <EdgeLabel L>
FlowGraph<L> connect_into(FlowGraph<L> g, FlowGraph<L> h) {
  return detail::connect(std::move(g), std::move(h), detail::ConnectKind::Into);
}

// g ⋄ h: all edges of both sides share one originating node.
template <EdgeLabel L>
FlowGraph<L> connect_pits(FlowGraph<L> g, FlowGraph<L> h) {
  return detail::connect(std::move(g), std::move(h), detail::ConnectKind::Pits);
}

// g × h: all edges of both sides share one terminating node.
template <EdgeLabel L>
FlowGraph<L> connect_tips(FlowGraph<L> g, FlowGraph<L> h) {
  return detail::connect(std::move(g), std::move(h), detail::ConnectKind::Tips);
}

// The poset relation: every node of g is component-wise contained in some
// node of h. Antisymmetric on valid graphs.
template <EdgeLabel L>
bool precedes(const FlowGraph<L>& g, const FlowGraph<L>& h) {
  for (const auto& x : g.nodes()) {
    bool found = false;
    for (const auto& y : h.nodes()) {
      if (node_within(x, y)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

// Reverses every edge: each (tips, pits) node becomes (pits, tips).
template <EdgeLabel L>
FlowGraph<L> transpose_flow(const FlowGraph<L>& g) {
  typename FlowGraph<L>::NodeSet out;
  for (const auto& n : g.nodes()) out.insert(FlowNode<L>{n.pits, n.tips});
  return FlowGraph<L>::unchecked(std::move(out));
}

// Edge-removal subtraction: drops every edge of h from g, then drops nodes
// that became empty. Total; edges of h absent from g are ignored.
template <EdgeLabel L>
FlowGraph<L> subtract(const FlowGraph<L>& g, const FlowGraph<L>& h) {
  const std::set<L> drop = underlying(h);
  typename FlowGraph<L>::NodeSet out;
  for (const auto& n : g.nodes()) {
    FlowNode<L> m;
    std::set_difference(n.tips.begin(), n.tips.end(), drop.begin(), drop.end(),
                        std::inserter(m.tips, m.tips.end()));
    std::set_difference(n.pits.begin(), n.pits.end(), drop.begin(), drop.end(),
                        std::inserter(m.pits, m.pits.end()));
    if (!m.is_empty()) out.insert(std::move(m));
  }
  return FlowGraph<L>::unchecked(std::move(out));
}

// The flow instantiation of the algebra; folding with it is eval.
template <EdgeLabel L>
GraphAlgebra<L, FlowGraph<L>> flow_algebra() {
  using G = FlowGraph<L>;
  return GraphAlgebra<L, G>{
      empty_flow<L>(),
      [](const L& x) { return edge_flow<L>(x); },
      [](G a, G b) { return overlay(std::move(a), std::move(b)); },
      [](G a, G b) { return connect_into(std::move(a), std::move(b)); },
      [](G a, G b) { return connect_pits(std::move(a), std::move(b)); },
      [](G a, G b) { return connect_tips(std::move(a), std::move(b)); },
  };
}

// Term semantics: the unique homomorphism from terms onto flow graphs.
template <EdgeLabel L>
FlowGraph<L> eval(const EdgeTerm<L>& t) {
  return fold(t, flow_algebra<L>());
}

}  // namespace edgegraph
