#pragma once

#include <array>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>

#include "cyclepack/edge_set.hpp"

namespace cyclepack {

/// An 8-cycle held in canonical form: the smallest vertex first, and the
/// neighbour after it smaller than the neighbour before it. Two OctCycles
/// compare equal iff they describe the same cycle.
class OctCycle {
 public:
  static constexpr std::size_t kLength = 8;

  /// Canonicalizes a raw cyclic sequence. Throws Error(WrongLength) unless
  /// exactly 8 vertices are given and Error(DuplicateVertex) on repeats.
  static OctCycle canonicalize(std::span<const Vertex> raw);
  static OctCycle canonicalize(std::initializer_list<Vertex> raw);

  const std::array<Vertex, kLength>& vertices() const noexcept { return v_; }
  Vertex operator[](std::size_t i) const noexcept { return v_[i]; }
  Vertex min_vertex() const noexcept { return v_[0]; }
  Vertex max_vertex() const noexcept;

  /// Edge i joins position i and position i+1 (mod 8).
  std::array<Edge, kLength> edges() const noexcept;
  bool has_edge(Edge e) const noexcept;
  bool contains(Vertex x) const noexcept;

  /// Same vertex set as `other` (order ignored).
  bool same_vertex_set(const OctCycle& other) const noexcept;

  /// Applies new = map[old] to every vertex and re-canonicalizes.
  OctCycle relabel(std::span<const Vertex> map) const;

  std::string to_string() const;

  auto operator<=>(const OctCycle&) const = default;

 private:
  OctCycle() = default;
  std::array<Vertex, kLength> v_{};
};

}  // namespace cyclepack
