#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "becurv/errors.hpp"

namespace becurv {

using Vertex = std::size_t;

/// Finite simple undirected graph with string labels.
///
/// Vertices are numbered in order of first appearance; neighbour lists are
/// kept sorted by that number so every traversal is deterministic.
class Graph {
 public:
  Vertex add_vertex(std::string_view label) {
    if (auto it = index_.find(label); it != index_.end()) return it->second;
    const Vertex v = labels_.size();
    labels_.emplace_back(label);
    index_.emplace(labels_.back(), v);
    adjacency_.emplace_back();
    return v;
  }

  /// Adds the edge {u, v}; repeated edges are merged.
  void add_edge(std::string_view u, std::string_view v) {
    if (u == v) throw SelfLoopError(std::string(u));
    const Vertex a = add_vertex(u);
    const Vertex b = add_vertex(v);
    if (insert_sorted(adjacency_[a], b)) {
      insert_sorted(adjacency_[b], a);
      ++edge_count_;
    }
  }

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(Vertex v) const { return labels_.at(v); }

  std::optional<Vertex> find(std::string_view label) const {
    if (auto it = index_.find(label); it != index_.end()) return it->second;
    return std::nullopt;
  }

  Vertex id(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw UnknownVertexError(std::string(label));
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& n = adjacency_.at(u);
    return std::binary_search(n.begin(), n.end(), v);
  }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::size_t degree(std::string_view label) const { return degree(id(label)); }

  /// All edges as (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  static bool insert_sorted(std::vector<Vertex>& list, Vertex v) {
    auto it = std::lower_bound(list.begin(), list.end(), v);
    if (it != list.end() && *it == v) return false;
    list.insert(it, v);
    return true;
  }

  std::vector<std::string> labels_;
  std::map<std::string, Vertex, std::less<>> index_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// The 2-ball around a center vertex, restricted to edges that touch the
/// closed 1-ball. Edges between two vertices of the outer sphere never enter
/// Gamma_2 at the center and are dropped.
///
/// Local numbering: 0 is the center, 1..|S1| the inner sphere, then the
/// outer sphere. Coordinate i of a quadratic form is local vertex i + 1.
class LocalBall {
 public:
  using Index = std::size_t;

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t s1_size() const noexcept { return s1_size_; }
  std::size_t s2_size() const noexcept { return labels_.size() - 1 - s1_size_; }
  std::size_t coordinate_count() const noexcept { return labels_.size() - 1; }

  const std::string& center() const { return labels_.front(); }
  std::span<const std::string> s1() const {
    return std::span<const std::string>(labels_).subspan(1, s1_size_);
  }
  std::span<const std::string> s2() const {
    return std::span<const std::string>(labels_).subspan(1 + s1_size_);
  }
  std::span<const std::string> labels() const noexcept { return labels_; }
  const std::string& label(Index i) const { return labels_.at(i); }

  std::optional<Index> find(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<Index>(it - labels_.begin());
  }

  bool in_s1(Index i) const noexcept { return i >= 1 && i <= s1_size_; }
  bool in_s2(Index i) const noexcept { return i > s1_size_ && i < labels_.size(); }
  /// Center or inner sphere: every neighbour of such a vertex lies in the ball.
  bool is_interior(Index i) const noexcept { return i <= s1_size_; }

  std::span<const Index> neighbors(Index i) const { return adjacency_.at(i); }

  /// Edges (u, v), u < v in local numbering.
  std::vector<std::pair<Index, Index>> edges() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index u = 0; u < adjacency_.size(); ++u)
      for (Index v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  friend LocalBall two_ball(const Graph& g, std::string_view x);

  std::vector<std::string> labels_;
  std::size_t s1_size_ = 0;
  std::vector<std::vector<Index>> adjacency_;
};

inline LocalBall two_ball(const Graph& g, std::string_view x) {
  const Vertex c = g.id(x);
  if (g.degree(c) == 0) throw IsolatedVertexError(std::string(x));

  constexpr std::size_t kOutside = static_cast<std::size_t>(-1);
  std::vector<std::size_t> local(g.vertex_count(), kOutside);
  std::vector<Vertex> order{c};
  local[c] = 0;
  for (Vertex u : g.neighbors(c)) {
    local[u] = order.size();
    order.push_back(u);
  }
  const std::size_t s1_size = order.size() - 1;

  std::vector<Vertex> outer;
  for (std::size_t i = 1; i <= s1_size; ++i)
    for (Vertex w : g.neighbors(order[i]))
      if (local[w] == kOutside) {
        local[w] = 0;  // placeholder until sorted
        outer.push_back(w);
      }
  std::sort(outer.begin(), outer.end());
  for (Vertex w : outer) {
    local[w] = order.size();
    order.push_back(w);
  }

  LocalBall ball;
  ball.s1_size_ = s1_size;
  ball.labels_.reserve(order.size());
  for (Vertex v : order) ball.labels_.push_back(g.label(v));
  ball.adjacency_.resize(order.size());
  for (std::size_t i = 0; i <= s1_size; ++i)
    for (Vertex w : g.neighbors(order[i])) {
      const std::size_t j = local[w];
      ball.adjacency_[i].push_back(j);
      if (j > s1_size) ball.adjacency_[j].push_back(i);
    }
  for (auto& n : ball.adjacency_) std::sort(n.begin(), n.end());
  return ball;
}

inline std::size_t degree(const Graph& g, std::string_view v) { return g.degree(v); }

}  // namespace becurv
