#pragma once

#include <string>

#include "becurv/errors.hpp"
#include "becurv/graph.hpp"

namespace becurv {

/// Vertex degree k of the regular triangular tiling {3,k}.
class TilingOrder {
 public:
  explicit TilingOrder(int k) : k_(k) {
    if (k < 3) throw InvalidOrderError(k);
  }
  int value() const noexcept { return k_; }
  friend bool operator==(TilingOrder, TilingOrder) = default;

 private:
  int k_;
};

namespace detail {

inline std::string u_label(int i) { return "u" + std::to_string(i); }
inline std::string w_label(int i) { return "w" + std::to_string(i); }
inline std::string p_label(int i, int j) { return "p" + std::to_string(i) + "_" + std::to_string(j); }

}  // namespace detail

/// 2-ball around a vertex `x` of the {3,k} tiling.
///
/// S1 is the k-cycle u0..u(k-1), all adjacent to x. For k >= 5 each cycle edge
/// u_i u_(i+1) carries a second triangle with apex w_i in S2, and every u_i
/// gets k - 5 private S2 neighbours p<i>_<j>, so all of S1 has degree k.
/// k = 3 is the tetrahedron (S2 empty); k = 4 is the octahedron, where the
/// four apexes coincide in the single vertex w0. Edges inside S2 are omitted.
inline Graph two_ball_of_order(TilingOrder order) {
  const int k = order.value();
  Graph g;
  g.add_vertex("x");
  for (int i = 0; i < k; ++i) g.add_edge("x", detail::u_label(i));
  if (k == 3) {
    g.add_edge("u0", "u1");
    g.add_edge("u1", "u2");
    g.add_edge("u2", "u0");
    return g;
  }
  for (int i = 0; i < k; ++i) g.add_edge(detail::u_label(i), detail::u_label((i + 1) % k));
  if (k == 4) {
    for (int i = 0; i < k; ++i) g.add_edge(detail::u_label(i), "w0");
    return g;
  }
  for (int i = 0; i < k; ++i) {
    g.add_edge(detail::u_label(i), detail::w_label(i));
    g.add_edge(detail::u_label((i + 1) % k), detail::w_label(i));
  }
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k - 5; ++j) g.add_edge(detail::u_label(i), detail::p_label(i, j));
  return g;
}

inline Graph two_ball_of_order(int k) { return two_ball_of_order(TilingOrder(k)); }

/// Full 1-skeleton of the spherical tilings: tetrahedron (k = 3),
/// octahedron (k = 4) and icosahedron (k = 5). Vertex names follow
/// two_ball_of_order, with the icosahedron's antipode of x named "y".
inline Graph platonic(int k) {
  if (k < 3 || k > 5) throw InvalidOrderError(k);
  Graph g = two_ball_of_order(k);
  if (k == 5) {
    // Close the apex pentagon and cap it with the antipode.
    for (int i = 0; i < 5; ++i) {
      g.add_edge(detail::w_label(i), detail::w_label((i + 1) % 5));
      g.add_edge(detail::w_label(i), "y");
    }
  }
  return g;
}

}  // namespace becurv
