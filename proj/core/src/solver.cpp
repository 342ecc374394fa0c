#include "cyclepack/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>

#include "cyclepack/error.hpp"
#include "cyclepack/inside.hpp"
#include "cyclepack/verify.hpp"

namespace cyclepack {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Sat: return "sat";
    case Outcome::Unsat: return "unsat";
    case Outcome::Timeout: return "timeout";
  }
  return "unknown";
}

A2PInstance A2PInstance::make(const Packing& p, CertMode mode) {
  A2PInstance inst;
  inst.packing = &p;
  inst.mode = mode;
  inst.candidates.reserve(p.cycles.size());
  for (const auto& c : p.cycles) {
    std::vector<OctCycle> keep;
    for (const auto& m : enumerate_inside(c).members) {
      const auto edges = m.edges();
      const bool usable = std::none_of(edges.begin(), edges.end(), [&](const Edge& e) {
        return p.in_hole(e) || (mode == CertMode::Strict && p.leave.contains(e));
      });
      if (usable) keep.push_back(m);
    }
    inst.candidates.push_back(std::move(keep));
  }
  return inst;
}

bool A2PInstance::trivially_unsat() const noexcept {
  return std::any_of(candidates.begin(), candidates.end(),
                     [](const auto& list) { return list.empty(); });
}

namespace {

using Clock = std::chrono::steady_clock;

// Exact-choice search: one candidate per slot, each edge used at most once,
// at most `slack` available edges left unused.
class Search {
 public:
  Search(const A2PInstance& inst, SearchBudget budget)
      : inst_(inst), budget_(budget), start_(Clock::now()) {
    const Packing& p = *inst.packing;
    const std::size_t slots = inst.candidates.size();
    std::vector<std::int32_t> compact(complete_edge_count(p.order), -1);

    slot_begin_.push_back(0);
    for (std::size_t s = 0; s < slots; ++s) {
      for (const auto& m : inst.candidates[s]) {
        std::array<std::uint32_t, 8> ids{};
        const auto edges = m.edges();
        for (std::size_t i = 0; i < 8; ++i) {
          std::int32_t& id = compact[edge_index(edges[i])];
          if (id < 0) {
            id = static_cast<std::int32_t>(edge_count_++);
            edge_cands_.emplace_back();
          }
          ids[i] = static_cast<std::uint32_t>(id);
          edge_cands_[ids[i]].push_back(static_cast<std::uint32_t>(cand_edges_.size()));
        }
        cand_edges_.push_back(ids);
        cand_slot_.push_back(static_cast<std::uint32_t>(s));
      }
      slot_begin_.push_back(cand_edges_.size());
    }

    std::size_t available = p.host_edge_count();
    if (inst.mode == CertMode::Strict) available -= std::min(available, p.leave.size());
    const std::size_t needed = 8 * slots;
    feasible_ = available >= needed;
    slack_ = feasible_ ? available - needed : 0;

    kill_.assign(cand_edges_.size(), 0);
    alive_.resize(slots);
    for (std::size_t s = 0; s < slots; ++s) alive_[s] = slot_begin_[s + 1] - slot_begin_[s];
    cover_.resize(edge_count_);
    for (std::size_t e = 0; e < edge_count_; ++e) cover_[e] = edge_cands_[e].size();
    used_.assign(edge_count_, 0);
    assigned_.assign(slots, 0);
    choice_.assign(slots, 0);
    // available edges that no candidate touches can never be used
    dead_ = available - std::min(available, edge_count_);
  }

  Outcome run() {
    if (!feasible_ || dead_ > slack_) return Outcome::Unsat;
    if (descend(0)) return Outcome::Sat;
    return timed_out_ ? Outcome::Timeout : Outcome::Unsat;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  double seconds() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  std::vector<OctCycle> solution() const {
    std::vector<OctCycle> out;
    for (std::size_t s = 0; s < choice_.size(); ++s) {
      out.push_back(inst_.candidates[s][choice_[s] - slot_begin_[s]]);
    }
    return out;
  }

 private:
  bool out_of_budget() {
    if (nodes_ >= budget_.max_nodes) return timed_out_ = true;
    if ((nodes_ & 1023) == 0 && seconds() >= budget_.max_seconds) return timed_out_ = true;
    return false;
  }

  bool descend(std::size_t depth) {
    if (depth == assigned_.size()) return true;
    ++nodes_;
    if (out_of_budget()) return false;

    std::size_t best = assigned_.size();
    std::size_t best_alive = std::numeric_limits<std::size_t>::max();
    for (std::size_t s = 0; s < assigned_.size(); ++s) {
      if (!assigned_[s] && alive_[s] < best_alive) {
        best = s;
        best_alive = alive_[s];
        if (best_alive == 0) return false;
      }
    }

    for (std::size_t c = slot_begin_[best]; c < slot_begin_[best + 1]; ++c) {
      if (kill_[c] != 0) continue;
      commit(best, c);
      if (dead_ <= slack_ && descend(depth + 1)) return true;
      undo(best, c);
      if (timed_out_) return false;
    }
    return false;
  }

  void drop_cover(std::size_t cand) {
    for (std::uint32_t f : cand_edges_[cand]) {
      if (--cover_[f] == 0 && !used_[f]) ++dead_;
    }
  }

  void restore_cover(std::size_t cand) {
    for (std::uint32_t f : cand_edges_[cand]) {
      if (cover_[f]++ == 0 && !used_[f]) --dead_;
    }
  }

  void commit(std::size_t s, std::size_t c) {
    assigned_[s] = 1;
    choice_[s] = c;
    for (std::size_t d = slot_begin_[s]; d < slot_begin_[s + 1]; ++d) {
      if (kill_[d] == 0) drop_cover(d);
    }
    for (std::uint32_t e : cand_edges_[c]) {
      used_[e] = 1;
      if (cover_[e] == 0) --dead_;
    }
    for (std::uint32_t e : cand_edges_[c]) {
      for (std::uint32_t d : edge_cands_[e]) {
        if (assigned_[cand_slot_[d]]) continue;
        if (kill_[d]++ == 0) {
          --alive_[cand_slot_[d]];
          drop_cover(d);
        }
      }
    }
  }

  void undo(std::size_t s, std::size_t c) {
    const auto& edges = cand_edges_[c];
    for (auto e = edges.rbegin(); e != edges.rend(); ++e) {
      const auto& list = edge_cands_[*e];
      for (auto d = list.rbegin(); d != list.rend(); ++d) {
        if (assigned_[cand_slot_[*d]]) continue;
        if (--kill_[*d] == 0) {
          ++alive_[cand_slot_[*d]];
          restore_cover(*d);
        }
      }
    }
    for (std::uint32_t e : edges) {
      if (cover_[e] == 0) ++dead_;
      used_[e] = 0;
    }
    for (std::size_t d = slot_begin_[s]; d < slot_begin_[s + 1]; ++d) {
      if (kill_[d] == 0) restore_cover(d);
    }
    assigned_[s] = 0;
  }

  const A2PInstance& inst_;
  SearchBudget budget_;
  Clock::time_point start_;

  std::size_t edge_count_ = 0;
  std::vector<std::array<std::uint32_t, 8>> cand_edges_;
  std::vector<std::uint32_t> cand_slot_;
  std::vector<std::size_t> slot_begin_;
  std::vector<std::vector<std::uint32_t>> edge_cands_;

  bool feasible_ = true;
  std::size_t slack_ = 0;
  std::size_t dead_ = 0;
  std::vector<std::uint32_t> kill_;
  std::vector<std::size_t> alive_;
  std::vector<std::size_t> cover_;
  std::vector<std::uint8_t> used_;
  std::vector<std::uint8_t> assigned_;
  std::vector<std::size_t> choice_;

  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

}  // namespace

A2PResult decide_a2p(const Packing& p, CertMode mode, SearchBudget budget) {
  const VerificationReport report = verify_packing(p);
  for (Clause c : {Clause::CycleValid, Clause::EdgeDisjoint, Clause::Coverage}) {
    if (!report.passed(c)) {
      throw Error(ErrorCode::InvalidPacking, "packing fails " + std::string(to_string(c)) +
                                                 ":\n" + report.to_string());
    }
  }

  const A2PInstance inst = A2PInstance::make(p, mode);
  A2PResult result;
  if (inst.trivially_unsat()) {
    result.outcome = Outcome::Unsat;
    return result;
  }
  Search search(inst, budget);
  result.outcome = search.run();
  result.nodes = search.nodes();
  result.seconds = search.seconds();
  if (result.outcome == Outcome::Sat) {
    result.certificate = make_certificate(p, search.solution(), mode);
  }
  return result;
}

}  // namespace cyclepack
