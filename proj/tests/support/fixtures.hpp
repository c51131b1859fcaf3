#pragma once

// Frozen fixtures: worked examples the implementation must reproduce
// exactly (a five-node reference graph and its canonical term, a pairwise
// union, and a normal-form walkthrough).

#include <set>

#include "edgegraph/flow.hpp"
#include "edgegraph/term.hpp"

namespace testsupport {

using IntTerm = edgegraph::EdgeTerm<int>;
using IntFlow = edgegraph::FlowGraph<int>;
using IntNode = edgegraph::FlowNode<int>;

inline IntNode node(std::set<int> tips, std::set<int> pits) {
  return IntNode{std::move(tips), std::move(pits)};
}

// Builds through validate so a bad fixture fails loudly.
inline IntFlow graph(std::initializer_list<IntNode> nodes) {
  return edgegraph::validate<int>(std::set<IntNode>(nodes));
}

inline IntTerm e(int x) { return IntTerm::edge(x); }

// The five-node, seven-edge directed example graph.
inline IntFlow example_flow() {
  return graph({node({}, {1, 3}), node({1, 2}, {4, 5}), node({6}, {2}),
                node({3, 4}, {7}), node({5, 7}, {6})});
}

// Its canonical algebraic form: ε≫1⋄3 + 1×2≫4⋄5 + 6≫2 + 3×4≫7 + 5×7≫6.
inline IntTerm example_term() {
  using T = IntTerm;
  T n1 = T::into(T::empty(), T::pits(e(1), e(3)));
  T n2 = T::into(T::tips(e(1), e(2)), T::pits(e(4), e(5)));
  T n3 = T::into(e(6), e(2));
  T n4 = T::into(T::tips(e(3), e(4)), e(7));
  T n5 = T::into(T::tips(e(5), e(7)), e(6));
  return T::overlay(T::overlay(T::overlay(T::overlay(n1, n2), n3), n4), n5);
}

// The worked pairwise-union example: its operands and result.
inline IntFlow union_example_left() {
  return graph({node({}, {1}), node({1}, {2}), node({2}, {})});
}
inline IntFlow union_example_right() {
  return graph({node({}, {1}), node({1}, {3}), node({3}, {})});
}
inline IntFlow union_example_result() {
  return graph({node({}, {1}), node({1}, {2, 3}), node({2}, {}), node({3}, {})});
}

// The normal-form walkthrough: 1⋄(2≫3) + 1×(4⋄5+ε) + 3⋄1 + 6×6 and the
// flow set its final step produces.
inline IntTerm walkthrough_term() {
  using T = IntTerm;
  T a = T::pits(e(1), T::into(e(2), e(3)));
  T b = T::tips(e(1), T::overlay(T::pits(e(4), e(5)), T::empty()));
  T c = T::pits(e(3), e(1));
  T d = T::tips(e(6), e(6));
  return T::overlay(T::overlay(T::overlay(a, b), c), d);
}

inline IntFlow walkthrough_flow() {
  return graph({node({2}, {1, 2, 3}), node({3}, {}), node({1, 4, 5}, {}),
                node({}, {4, 5}), node({}, {6}), node({6}, {})});
}

}  // namespace testsupport
