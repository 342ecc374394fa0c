#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace cyclepack {

using Vertex = std::uint32_t;

/// An unordered pair of distinct vertices, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 1;

  Edge() = default;
  /// Throws Error(DuplicateVertex) when a == b.
  Edge(Vertex a, Vertex b);

  auto operator<=>(const Edge&) const = default;
};

/// Dense index of an edge within the triangular layout used by EdgeSet.
inline std::size_t edge_index(Edge e) noexcept {
  return static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u;
}

/// Number of edges of the complete graph on n vertices.
constexpr std::size_t complete_edge_count(std::size_t n) noexcept {
  return n < 2 ? 0 : n * (n - 1) / 2;
}

/// Set of edges over the vertex universe {0, ..., universe-1} with O(1)
/// membership. Iteration order is lexicographic on (u, v).
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Throws Error(LabelOutOfRange) if an endpoint is outside the universe.
  bool contains(Edge e) const;
  /// Returns false when the edge was already present.
  bool insert(Edge e);
  bool erase(Edge e);

  std::vector<Edge> edges() const;

  /// Degree of every vertex within this set.
  std::vector<std::size_t> degrees() const;

  bool operator==(const EdgeSet& other) const noexcept;

  /// All edges of K_universe.
  static EdgeSet complete(std::size_t universe);

 private:
  void check(Edge e) const;

  std::size_t universe_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace cyclepack
