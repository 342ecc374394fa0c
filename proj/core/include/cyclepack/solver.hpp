#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "cyclepack/catalog.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

/// Identifies the candidate ordering and branching rule. Unsat results are
/// exhaustion claims, so reruns are only comparable under the same version.
inline constexpr std::string_view kSolverOrderVersion = "lex177-mrv-v1";

struct SearchBudget {
  std::uint64_t max_nodes = 1'000'000'000;
  double max_seconds = 300.0;
};

/// Candidate inside cycles per cycle of a packing. Strict candidates use
/// only edges covered by the packing; relaxed candidates may also use leave
/// edges. Hole edges are never available.
struct A2PInstance {
  const Packing* packing = nullptr;
  CertMode mode = CertMode::Relaxed;
  std::vector<std::vector<OctCycle>> candidates;

  static A2PInstance make(const Packing& p, CertMode mode);
  bool trivially_unsat() const noexcept;
};

enum class Outcome { Sat, Unsat, Timeout };

std::string_view to_string(Outcome outcome);

struct A2PResult {
  Outcome outcome = Outcome::Timeout;
  std::optional<A2PCertificate> certificate;  // Sat only
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  std::string_view order_version = kSolverOrderVersion;
};

/// Searches for one inside cycle per packing cycle such that the chosen
/// cycles are pairwise edge-disjoint. Requires p to be structurally valid
/// (cycle labels, disjointness, exact coverage); throws
/// Error(InvalidPacking) otherwise. Maximality is not required, so partial
/// packings are accepted.
A2PResult decide_a2p(const Packing& p, CertMode mode = CertMode::Relaxed,
                     SearchBudget budget = {});

/// Looks for a catalog NotA2P packing embedded in p (a subset of p's
/// cycles equal to the relabeled catalog cycles). A hint is checked first.
/// An empty result does not mean p is A2P.
std::optional<Witness> find_bad_subpacking(
    const Packing& p, const std::optional<Witness>& hint = std::nullopt);

/// Whether p contains the catalog cycles of w.key under w.relabel.
bool witness_matches(const Packing& p, const Witness& w);

}  // namespace cyclepack
