#include "cyclepack/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cyclepack/leave_spec.hpp"

namespace cyclepack {

std::string_view to_string(Clause clause) {
  switch (clause) {
    case Clause::CycleValid: return "cycle-valid";
    case Clause::EdgeDisjoint: return "edge-disjoint";
    case Clause::Coverage: return "coverage";
    case Clause::LeaveCount: return "leave-count";
    case Clause::LeaveStructure: return "leave-structure";
    case Clause::Alignment: return "alignment";
    case Clause::SameVertexSet: return "same-vertex-set";
    case Clause::NoSharedEdge: return "no-shared-edge";
    case Clause::InsideInHost: return "inside-in-host";
    case Clause::InsideDisjoint: return "inside-disjoint";
    case Clause::InducedLeave: return "induced-leave";
    case Clause::InducedLeaveSize: return "induced-leave-size";
    case Clause::SameLeave: return "same-leave";
  }
  return "unknown";
}

void VerificationReport::pass(Clause c, std::string detail) {
  findings_.push_back({c, Status::Pass, std::move(detail), std::nullopt});
}

void VerificationReport::skip(Clause c, std::string detail) {
  findings_.push_back({c, Status::Skipped, std::move(detail), std::nullopt});
}

void VerificationReport::fail(Clause c, std::string detail,
                              std::optional<std::size_t> index) {
  const std::size_t already = failure_count(c);
  if (already == kMaxFailuresPerClause) {
    findings_.push_back({c, Status::Fail, "further violations suppressed", std::nullopt});
  }
  if (already >= kMaxFailuresPerClause) return;
  findings_.push_back({c, Status::Fail, std::move(detail), index});
}

void VerificationReport::close(Clause c) {
  if (failure_count(c) == 0) pass(c);
}

bool VerificationReport::ok() const noexcept {
  return std::none_of(findings_.begin(), findings_.end(),
                      [](const Finding& f) { return f.status == Status::Fail; });
}

bool VerificationReport::passed(Clause c) const noexcept {
  bool seen = false;
  for (const auto& f : findings_) {
    if (f.clause != c) continue;
    if (f.status == Status::Fail) return false;
    seen = seen || f.status == Status::Pass;
  }
  return seen;
}

std::size_t VerificationReport::failure_count(Clause c) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      findings_.begin(), findings_.end(),
      [c](const Finding& f) { return f.clause == c && f.status == Status::Fail; }));
}

void VerificationReport::append(const VerificationReport& other) {
  findings_.insert(findings_.end(), other.findings_.begin(), other.findings_.end());
}

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  for (const auto& f : findings_) {
    os << (f.status == Status::Pass ? "PASS " : f.status == Status::Fail ? "FAIL " : "SKIP ")
       << cyclepack::to_string(f.clause);
    if (f.index) os << " [" << *f.index << "]";
    if (!f.detail.empty()) os << ": " << f.detail;
    os << '\n';
  }
  return os.str();
}

namespace {

std::string edge_str(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Structural checks shared by both verifiers; false if labels are unusable.
bool check_labels(const Packing& p, VerificationReport& r) {
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    if (p.cycles[i].max_vertex() >= p.order) {
      r.fail(Clause::CycleValid,
             "cycle " + p.cycles[i].to_string() + " has a label >= order " +
                 std::to_string(p.order),
             i);
    }
  }
  if (p.leave.universe() != p.order) {
    r.fail(Clause::CycleValid, "leave universe " + std::to_string(p.leave.universe()) +
                                   " differs from order " + std::to_string(p.order));
  }
  std::vector<bool> in_some_hole(p.order, false);
  for (std::size_t h = 0; h < p.holes.size(); ++h) {
    const auto& hole = p.holes[h];
    if (!std::is_sorted(hole.begin(), hole.end()) ||
        std::adjacent_find(hole.begin(), hole.end()) != hole.end()) {
      r.fail(Clause::CycleValid, "hole " + std::to_string(h) + " is not a sorted set");
    }
    for (Vertex x : hole) {
      if (x >= p.order) {
        r.fail(Clause::CycleValid, "hole vertex " + std::to_string(x) + " out of range");
      } else if (in_some_hole[x]) {
        r.fail(Clause::CycleValid, "vertex " + std::to_string(x) + " lies in two holes");
      } else {
        in_some_hole[x] = true;
      }
    }
  }
  const bool ok = r.failure_count(Clause::CycleValid) == 0;
  r.close(Clause::CycleValid);
  return ok;
}

}  // namespace

VerificationReport verify_packing(const Packing& p, bool strict_leave) {
  VerificationReport r;
  if (!check_labels(p, r)) {
    for (Clause c : {Clause::EdgeDisjoint, Clause::Coverage, Clause::LeaveCount,
                     Clause::LeaveStructure}) {
      r.skip(c, "labels invalid");
    }
    return r;
  }

  // (b) disjointness, remembering which cycle owns each edge
  std::vector<std::size_t> owner(complete_edge_count(p.order), kNone);
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    for (const Edge& e : p.cycles[i].edges()) {
      std::size_t& o = owner[edge_index(e)];
      if (o != kNone) {
        r.fail(Clause::EdgeDisjoint,
               "edge " + edge_str(e) + " in cycles " + std::to_string(o) + " and " +
                   std::to_string(i),
               i);
      } else {
        o = i;
      }
    }
  }
  r.close(Clause::EdgeDisjoint);

  // (c) cycles + leave = host edges, exactly once
  for (Vertex v = 1; v < p.order; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      const Edge e(u, v);
      const bool covered = owner[edge_index(e)] != kNone;
      const bool left = p.leave.contains(e);
      if (p.in_hole(e)) {
        if (covered) r.fail(Clause::Coverage, "hole edge " + edge_str(e) + " covered by a cycle");
        if (left) r.fail(Clause::Coverage, "hole edge " + edge_str(e) + " listed in leave");
      } else if (covered && left) {
        r.fail(Clause::Coverage, "edge " + edge_str(e) + " both covered and in leave");
      } else if (!covered && !left) {
        r.fail(Clause::Coverage, "edge " + edge_str(e) + " neither covered nor in leave");
      }
    }
  }
  r.close(Clause::Coverage);

  // (d)/(e) maximality and leave shape
  if (p.has_holes()) {
    r.skip(Clause::LeaveCount, "packing has holes");
    r.skip(Clause::LeaveStructure, "packing has holes");
    return r;
  }
  if (p.order < 8) {
    r.fail(Clause::LeaveCount, "no maximum 8-cycle packing of order " + std::to_string(p.order));
    r.skip(Clause::LeaveStructure, "order below 8");
    return r;
  }
  const LeaveSpec spec = leave_spec(p.order);
  if (p.leave.size() != spec.edge_count) {
    r.fail(Clause::LeaveCount, "leave has " + std::to_string(p.leave.size()) +
                                   " edges, maximum packing leaves " +
                                   std::to_string(spec.edge_count));
  } else {
    r.pass(Clause::LeaveCount, std::to_string(spec.edge_count) + " edges");
  }
  if (!strict_leave) {
    r.skip(Clause::LeaveStructure, "not requested");
  } else if (leave_matches_shape(p.leave, spec.shape)) {
    r.pass(Clause::LeaveStructure, std::string(to_string(spec.shape)));
  } else {
    r.fail(Clause::LeaveStructure,
           "leave is not a " + std::string(to_string(spec.shape)));
  }
  return r;
}

VerificationReport verify_certificate(const Packing& p, const A2PCertificate& cert) {
  VerificationReport r;
  if (!check_labels(p, r)) {
    r.skip(Clause::Alignment, "packing labels invalid");
    return r;
  }
  const bool strict = cert.mode == CertMode::Strict;

  if (cert.pairs.size() != p.cycles.size()) {
    r.fail(Clause::Alignment, std::to_string(cert.pairs.size()) + " pairs for " +
                                  std::to_string(p.cycles.size()) + " cycles");
  }
  const std::size_t n = std::min(cert.pairs.size(), p.cycles.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (!(cert.pairs[i].original == p.cycles[i])) {
      r.fail(Clause::Alignment, "original " + cert.pairs[i].original.to_string() +
                                    " differs from cycle " + p.cycles[i].to_string(),
             i);
    }
  }
  r.close(Clause::Alignment);

  std::vector<std::size_t> owner(complete_edge_count(p.order), kNone);
  bool labels_ok = true;
  for (std::size_t i = 0; i < cert.pairs.size(); ++i) {
    const auto& [orig, inside] = cert.pairs[i];
    if (!orig.same_vertex_set(inside)) {
      r.fail(Clause::SameVertexSet,
             inside.to_string() + " is not on the vertices of " + orig.to_string(), i);
    }
    for (const Edge& e : inside.edges()) {
      if (orig.has_edge(e)) {
        r.fail(Clause::NoSharedEdge,
               inside.to_string() + " shares " + edge_str(e) + " with " + orig.to_string(), i);
      }
    }
    if (inside.max_vertex() >= p.order) {
      r.fail(Clause::InsideInHost, inside.to_string() + " has a label >= order", i);
      labels_ok = false;
      continue;
    }
    for (const Edge& e : inside.edges()) {
      if (p.in_hole(e)) {
        r.fail(Clause::InsideInHost, "inside edge " + edge_str(e) + " lies in a hole", i);
      } else if (strict && p.leave.universe() == p.order && p.leave.contains(e)) {
        r.fail(Clause::InsideInHost, "strict inside cycle uses leave edge " + edge_str(e), i);
      }
      std::size_t& o = owner[edge_index(e)];
      if (o != kNone) {
        r.fail(Clause::InsideDisjoint,
               "edge " + edge_str(e) + " in inside cycles " + std::to_string(o) + " and " +
                   std::to_string(i),
               i);
      } else {
        o = i;
      }
    }
  }
  for (Clause c : {Clause::SameVertexSet, Clause::NoSharedEdge, Clause::InsideInHost,
                   Clause::InsideDisjoint}) {
    r.close(c);
  }

  if (!labels_ok) {
    r.skip(Clause::InducedLeave, "inside labels invalid");
  } else {
    Packing induced;
    induced.order = p.order;
    induced.holes = p.holes;
    for (const auto& pair : cert.pairs) induced.cycles.push_back(pair.inside);
    if (!(induced.uncovered_edges() == cert.induced_leave)) {
      r.fail(Clause::InducedLeave, "recorded induced leave does not match inside cycles");
    } else {
      r.pass(Clause::InducedLeave);
    }
  }

  if (cert.induced_leave.size() != p.leave.size()) {
    r.fail(Clause::InducedLeaveSize, "induced leave has " +
                                         std::to_string(cert.induced_leave.size()) +
                                         " edges, packing leave has " +
                                         std::to_string(p.leave.size()));
  } else {
    r.pass(Clause::InducedLeaveSize);
  }

  if (!strict) {
    r.skip(Clause::SameLeave, "relaxed certificate");
  } else if (cert.induced_leave == p.leave) {
    r.pass(Clause::SameLeave);
  } else {
    r.fail(Clause::SameLeave, "induced leave differs from packing leave");
  }
  return r;
}

}  // namespace cyclepack
