#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "cyclepack/edge_set.hpp"
#include "cyclepack/oct_cycle.hpp"

namespace cyclepack {

/// A set of 8-cycles in K_order together with the uncovered edges.
///
/// `holes` lists pairwise disjoint vertex subsets whose internal edges are
/// not part of the host graph, so a packing of K_n \ K_h has one hole and a
/// decomposition of K_{a,b} (viewed inside K_{a+b}) has two. Each hole is
/// sorted and the list of holes is sorted. The type itself does not enforce
/// packing validity; see verify_packing.
struct Packing {
  std::size_t order = 0;
  std::vector<OctCycle> cycles;
  EdgeSet leave;
  std::vector<std::vector<Vertex>> holes;

  bool has_holes() const noexcept { return !holes.empty(); }

  /// True when u and v lie in a common hole (the edge is not in the host).
  bool in_hole(Edge e) const noexcept;

  /// Number of edges of the host graph: C(n,2) minus hole-internal edges.
  std::size_t host_edge_count() const noexcept;

  /// Edges of the host graph not covered by any cycle. Does not consult
  /// `leave`; overlapping cycles are treated as covering once.
  EdgeSet uncovered_edges() const;

  bool operator==(const Packing&) const = default;
};

enum class CertMode { Strict, Relaxed };

std::string_view to_string(CertMode mode);

struct CertPair {
  OctCycle original;
  OctCycle inside;
  bool operator==(const CertPair&) const = default;
};

/// Index-aligned choice of one inside cycle per cycle of a packing.
/// `induced_leave` is the set of host edges left uncovered by the inside
/// cycles. Strict certificates reuse exactly the original covered edges, so
/// their induced leave equals the packing's leave.
struct A2PCertificate {
  std::vector<CertPair> pairs;
  EdgeSet induced_leave;
  CertMode mode = CertMode::Strict;

  /// Packing formed by the inside cycles on the same host graph.
  Packing inside_packing(const Packing& host) const;

  bool operator==(const A2PCertificate&) const = default;
};

/// Builds a certificate for `host` from inside cycles aligned with
/// host.cycles, computing the induced leave.
A2PCertificate make_certificate(const Packing& host,
                                std::vector<OctCycle> inside, CertMode mode);

}  // namespace cyclepack
