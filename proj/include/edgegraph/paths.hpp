#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <set>
#include <utility>

#include "edgegraph/error.hpp"
#include "edgegraph/flow.hpp"
#include "edgegraph/term.hpp"

namespace edgegraph {

// Public entry point for folding a term with an algebra.
template <EdgeLabel L, typename B>
B cata(const EdgeTerm<L>& t, const GraphAlgebra<L, B>& alg) {
  return fold(t, alg);
}

// The identity catamorphism: rebuilds the term.
template <EdgeLabel L>
GraphAlgebra<L, EdgeTerm<L>> identity_algebra() {
  using T = EdgeTerm<L>;
  return GraphAlgebra<L, T>{
      T::empty(),
      [](const L& x) { return T::edge(x); },
      &T::overlay, &T::into, &T::pits, &T::tips,
  };
}

// Reduces a graph to its underlying edge set.
template <EdgeLabel L>
GraphAlgebra<L, std::set<L>> underlying_algebra() {
  using S = std::set<L>;
  auto set_union = [](S a, S b) {
    if (a.size() < b.size()) std::swap(a, b);
    a.merge(b);
    return a;
  };
  return GraphAlgebra<L, S>{
      S{},
      [](const L& x) { return S{x}; },
      set_union, set_union, set_union, set_union,
  };
}

// Reverses every edge: into flips its arguments, pits and tips swap.
template <EdgeLabel L>
GraphAlgebra<L, EdgeTerm<L>> transpose_algebra() {
  using T = EdgeTerm<L>;
  return GraphAlgebra<L, T>{
      T::empty(),
      [](const L& x) { return T::edge(x); },
      &T::overlay,
      [](const T& a, const T& b) { return T::into(b, a); },
      &T::tips,
      &T::pits,
  };
}

// One end of an edge. Pit sorts before Tip, then by label.
template <EdgeLabel L>
struct End {
  enum class Kind { Pit, Tip };

  Kind kind;
  L label;

  static End pit(L x) { return End{Kind::Pit, std::move(x)}; }
  static End tip(L x) { return End{Kind::Tip, std::move(x)}; }

  friend auto operator<=>(const End&, const End&) = default;
};

// Finite map from ordered end pairs to path weights. Absent pairs stand for
// the semiring sum identity (unreachable); it is never stored.
template <EdgeLabel L, typename W>
using PathMap = std::map<std::pair<End<L>, End<L>>, W>;

// A pluggable semiring: plus picks among paths, times composes along one.
// Contract: plus commutative, associative, idempotent, with unit zero;
// times associative with unit one, distributing over plus. Idempotent plus
// is what makes the closure's fixpoint reachable.
template <typename W>
struct SemiringSpec {
  W zero;  // sum identity: unreachable
  W one;   // product identity: zero-length path
  std::function<W(W, W)> plus;
  std::function<W(W, W)> times;
};

// Shortest paths: choose by min, compose by numeric +. Supported weight
// domain: nonnegative (negative cycles have no least fixpoint).
inline SemiringSpec<double> tropical_semiring() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return SemiringSpec<double>{
      inf, 0.0,
      [](double a, double b) { return a < b ? a : b; },
      [](double a, double b) { return a + b; },
  };
}

// Min-max: the path minimizing its largest edge (fuel-capacity problem).
inline SemiringSpec<double> min_max_semiring() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return SemiringSpec<double>{
      inf, -inf,
      [](double a, double b) { return a < b ? a : b; },
      [](double a, double b) { return a > b ? a : b; },
  };
}

// Max-min: the path maximizing its smallest edge (the "low bridge" problem).
inline SemiringSpec<double> max_min_semiring() {
  constexpr double inf = std::numeric_limits<double>::infinity();
  return SemiringSpec<double>{
      -inf, inf,
      [](double a, double b) { return a > b ? a : b; },
      [](double a, double b) { return a < b ? a : b; },
  };
}

// The zygomorphism state: path map folded in tandem with the underlying
// edge set (the connect cases need the operand edge sets).
template <EdgeLabel L, typename W>
struct UspState {
  std::set<L> edges;
  PathMap<L, W> paths;

  friend bool operator==(const UspState&, const UspState&) = default;
};

class NonConvergenceError : public Error {
 public:
  explicit NonConvergenceError(const std::string& message)
      : Error("NonConvergence", message) {}
};

namespace detail {

// Combine a candidate weight into the map under the semiring sum, keeping
// the no-stored-zero invariant.
template <EdgeLabel L, typename W>
void combine_path(PathMap<L, W>& m, std::pair<End<L>, End<L>> key, const W& w,
                  const SemiringSpec<W>& s) {
  if (w == s.zero) return;
  auto [it, fresh] = m.try_emplace(std::move(key), w);
  if (!fresh) {
    it->second = s.plus(it->second, w);
    if (it->second == s.zero) m.erase(it);
  }
}

}  // namespace detail

// Union of edge sets; path maps merged, combining collisions with plus.
// The first argument is the accumulator and may be moved in.
template <EdgeLabel L, typename W>
UspState<L, W> usp_overlay(UspState<L, W> a, const UspState<L, W>& b,
                           const SemiringSpec<W>& s) {
  a.edges.insert(b.edges.begin(), b.edges.end());
  for (const auto& [key, w] : b.paths) detail::combine_path(a.paths, key, w, s);
  return a;
}

// usp_overlay plus a one-weight (zero-distance) hop, both directions,
// between the chosen end of every edge of a and the chosen end of every
// edge of b — the ends being identified at the new shared node.
template <EdgeLabel L, typename W>
UspState<L, W> usp_connect(typename End<L>::Kind end_of_left,
                           typename End<L>::Kind end_of_right, UspState<L, W> a,
                           const UspState<L, W>& b, const SemiringSpec<W>& s) {
  const std::set<L> left_edges = a.edges;
  UspState<L, W> out = usp_overlay(std::move(a), b, s);
  for (const L& x : left_edges) {
    End<L> u{end_of_left, x};
    for (const L& y : b.edges) {
      End<L> v{end_of_right, y};
      detail::combine_path(out.paths, {u, v}, s.one, s);
      detail::combine_path(out.paths, {v, u}, s.one, s);
    }
  }
  return out;
}

// Transitive closure of the path map: repeatedly compose adjacent entries
// under times, combining with plus, until a full pass changes nothing.
// A semiring violating the idempotency/stability contract never reaches the
// fixpoint; the pass cap turns that into NonConvergence instead of a hang.
template <EdgeLabel L, typename W>
UspState<L, W> usp_closure(UspState<L, W> st, const SemiringSpec<W>& s) {
  const std::size_t end_count = 2 * st.edges.size();
  const std::size_t cap = end_count * end_count + 1;
  for (std::size_t pass = 0;; ++pass) {
    if (pass >= cap)
      throw NonConvergenceError("path closure did not reach a fixpoint within " +
                                std::to_string(cap) + " passes");
    PathMap<L, W> next = st.paths;
    for (const auto& [uv, w1] : st.paths) {
      for (const auto& [vw, w2] : st.paths) {
        if (uv.second == vw.first)
          detail::combine_path(next, {uv.first, vw.second}, s.times(w1, w2), s);
      }
    }
    if (next == st.paths) break;
    st.paths = std::move(next);
  }
  return st;
}

namespace detail {

template <EdgeLabel L, typename W>
GraphAlgebra<L, UspState<L, W>> usp_algebra(std::function<W(const L&)> weight,
                                            const SemiringSpec<W>& s) {
  using U = UspState<L, W>;
  using Kind = typename End<L>::Kind;
  return GraphAlgebra<L, U>{
      U{},
      [weight = std::move(weight), s](const L& x) {
        U u;
        u.edges.insert(x);
        combine_path(u.paths, {End<L>::pit(x), End<L>::pit(x)}, s.one, s);
        combine_path(u.paths, {End<L>::pit(x), End<L>::tip(x)}, weight(x), s);
        combine_path(u.paths, {End<L>::tip(x), End<L>::tip(x)}, s.one, s);
        return u;
      },
      [s](U a, U b) { return usp_overlay(std::move(a), b, s); },
      [s](U a, U b) { return usp_connect<L, W>(Kind::Tip, Kind::Pit, std::move(a), b, s); },
      [s](U a, U b) { return usp_connect<L, W>(Kind::Pit, Kind::Pit, std::move(a), b, s); },
      [s](U a, U b) { return usp_connect<L, W>(Kind::Tip, Kind::Tip, std::move(a), b, s); },
  };
}

}  // namespace detail

// The algebraic path problem: fold with the USP algebra, then close once at
// the end (equivalent to closing at every step, cheaper).
template <EdgeLabel L, typename W>
PathMap<L, W> semiring_paths(const EdgeTerm<L>& t,
                             const std::function<W(const L&)>& weight,
                             const SemiringSpec<W>& s) {
  return usp_closure(fold(t, detail::usp_algebra<L, W>(weight, s)), s).paths;
}

// Tropical instance: minimum distances between navigable edge ends.
template <EdgeLabel L>
PathMap<L, double> shortest_paths(const EdgeTerm<L>& t,
                                  const std::function<double(const L&)>& weight) {
  return semiring_paths<L, double>(t, weight, tropical_semiring());
}

}  // namespace edgegraph
