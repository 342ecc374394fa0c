#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclepack/packing.hpp"

namespace cyclepack {

enum class Clause {
  // packing clauses
  CycleValid,       // labels in range, holes disjoint and in range
  EdgeDisjoint,     // no edge used by two cycles
  Coverage,         // cycles + leave = host edges exactly
  LeaveCount,       // |leave| equals the maximum-packing leave size
  LeaveStructure,   // leave isomorphic to the tabulated shape
  // certificate clauses
  Alignment,        // one pair per cycle, originals match the packing
  SameVertexSet,
  NoSharedEdge,
  InsideInHost,     // inside edges are host edges (and not leave in strict mode)
  InsideDisjoint,
  InducedLeave,     // recorded induced leave matches the inside cycles
  InducedLeaveSize,
  SameLeave,        // strict only
};

std::string_view to_string(Clause clause);

enum class Status { Pass, Fail, Skipped };

struct Finding {
  Clause clause;
  Status status;
  std::string detail;
  std::optional<std::size_t> index;  // offending cycle/pair index, if any
};

/// Ordered clause results. A clause that holds produces one Pass finding;
/// a violated clause produces one Fail finding per violation (capped).
class VerificationReport {
 public:
  void pass(Clause c, std::string detail = {});
  void skip(Clause c, std::string detail);
  void fail(Clause c, std::string detail, std::optional<std::size_t> index = {});

  /// Adds a Pass for `c` if no Fail was recorded for it.
  void close(Clause c);

  bool ok() const noexcept;
  bool passed(Clause c) const noexcept;
  std::size_t failure_count(Clause c) const noexcept;
  const std::vector<Finding>& findings() const noexcept { return findings_; }

  void append(const VerificationReport& other);

  std::string to_string() const;

  static constexpr std::size_t kMaxFailuresPerClause = 16;

 private:
  std::vector<Finding> findings_;
};

/// Checks validity, disjointness, exact coverage and (hole-free packings
/// only) the maximum leave size. With strict_leave also checks the leave's
/// isomorphism type. Never throws on malformed input.
VerificationReport verify_packing(const Packing& p, bool strict_leave = false);

/// Checks a certificate against its packing in the certificate's own mode.
VerificationReport verify_certificate(const Packing& p,
                                      const A2PCertificate& cert);

}  // namespace cyclepack
