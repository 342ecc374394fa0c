#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>

#include "cyclepack/solver.hpp"

namespace cyclepack {

bool witness_matches(const Packing& p, const Witness& w) {
  if (!catalog::contains(w.key)) return false;
  const CatalogEntry& entry = catalog::get(w.key);
  if (w.relabel.size() != entry.packing.order) return false;
  auto image = w.support();
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  if (!image.empty() && image.back() >= p.order) return false;

  const std::set<OctCycle> present(p.cycles.begin(), p.cycles.end());
  return std::all_of(entry.packing.cycles.begin(), entry.packing.cycles.end(),
                     [&](const OctCycle& c) { return present.count(c.relabel(w.relabel)) > 0; });
}

namespace {

constexpr std::int64_t kUnmapped = -1;

// Backtracking embedding of a catalog packing's cycles onto cycles of p.
class Embedder {
 public:
  Embedder(const Packing& p, const Packing& pattern)
      : p_(p), pattern_(pattern), phi_(pattern.order, kUnmapped), inv_(p.order, kUnmapped),
        taken_(p.cycles.size(), false), by_vertex_(p.order),
      owner_(complete_edge_count(p.order), kUnmapped) {
    for (std::size_t i = 0; i < p.cycles.size(); ++i) {
      for (Vertex x : p.cycles[i].vertices()) by_vertex_[x].push_back(i);
      for (const Edge& e : p.cycles[i].edges()) owner_[edge_index(e)] = static_cast<std::int64_t>(i);
    }
    order_pattern_cycles();
  }

  std::optional<std::vector<Vertex>> run() {
    if (pattern_.cycles.empty() || !extend(0)) return std::nullopt;
    std::vector<Vertex> relabel(phi_.size());
    for (std::size_t i = 0; i < phi_.size(); ++i) relabel[i] = static_cast<Vertex>(phi_[i]);
    return relabel;
  }

 private:
  // Each next pattern cycle shares as many vertices as possible with the
  // ones already placed.
  void order_pattern_cycles() {
    const std::size_t count = pattern_.cycles.size();
    std::vector<bool> placed(count, false), seen(pattern_.order, false);
    for (std::size_t step = 0; step < count; ++step) {
      std::size_t best = count;
      int best_overlap = -1;
      for (std::size_t j = 0; j < count; ++j) {
        if (placed[j]) continue;
        int overlap = 0;
        for (Vertex x : pattern_.cycles[j].vertices()) overlap += seen[x] ? 1 : 0;
        if (overlap > best_overlap) {
          best = j;
          best_overlap = overlap;
        }
      }
      placed[best] = true;
      for (Vertex x : pattern_.cycles[best].vertices()) seen[x] = true;
      sequence_.push_back(best);
    }
  }

  bool extend(std::size_t depth) {
    if (depth == sequence_.size()) return true;
    const OctCycle& pat = pattern_.cycles[sequence_[depth]];

    // cycles of p are edge-disjoint, so a pattern edge with both ends mapped
    // names its target cycle
    for (std::size_t i = 0; i < 8; ++i) {
      const std::int64_t a = phi_[pat[i]];
      const std::int64_t b = phi_[pat[(i + 1) % 8]];
      if (a == kUnmapped || b == kUnmapped) continue;
      const std::int64_t q =
          owner_[edge_index(Edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))];
      if (q == kUnmapped) return false;
      pinned_ = static_cast<std::size_t>(q);
      break;
    }
    const std::vector<std::size_t>* pool = nullptr;
    std::size_t mapped = 0;
    for (Vertex x : pat.vertices()) {
      if (phi_[x] == kUnmapped) continue;
      ++mapped;
      const auto& list = by_vertex_[static_cast<std::size_t>(phi_[x])];
      if (!pool || list.size() < pool->size()) pool = &list;
    }
    const auto try_cycle = [&](std::size_t q) {
      if (taken_[q]) return false;
      const OctCycle& cand = p_.cycles[q];
      std::size_t hits = 0;
      for (Vertex x : pat.vertices()) {
        if (phi_[x] != kUnmapped && cand.contains(static_cast<Vertex>(phi_[x]))) ++hits;
      }
      if (hits != mapped) return false;
      const auto& target = cand.vertices();
      for (std::size_t rot = 0; rot < 8; ++rot) {
        for (int dir : {1, -1}) {
          std::vector<Vertex> fresh;
          bool ok = true;
          for (std::size_t i = 0; i < 8 && ok; ++i) {
            const Vertex a = pat[i];
            const Vertex b = target[(rot + 8 + dir * static_cast<int>(i)) % 8];
            if (phi_[a] == kUnmapped) {
              if (inv_[b] != kUnmapped) {
                ok = false;
              } else {
                phi_[a] = b;
                inv_[b] = a;
                fresh.push_back(a);
              }
            } else {
              ok = phi_[a] == static_cast<std::int64_t>(b);
            }
          }
          if (ok) {
            taken_[q] = true;
            if (extend(depth + 1)) return true;
            taken_[q] = false;
          }
          for (Vertex a : fresh) {
            inv_[static_cast<std::size_t>(phi_[a])] = kUnmapped;
            phi_[a] = kUnmapped;
          }
        }
      }
      return false;
    };

    if (pinned_) {
      const std::size_t q = *pinned_;
      pinned_.reset();
      return try_cycle(q);
    }
    if (pool) {
      for (std::size_t q : *pool) {
        if (try_cycle(q)) return true;
      }
    } else {
      for (std::size_t q = 0; q < p_.cycles.size(); ++q) {
        if (try_cycle(q)) return true;
      }
    }
    return false;
  }

  const Packing& p_;
  const Packing& pattern_;
  std::vector<std::int64_t> phi_;
  std::vector<std::int64_t> inv_;
  std::vector<bool> taken_;
  std::vector<std::vector<std::size_t>> by_vertex_;
  std::vector<std::int64_t> owner_;
  std::vector<std::size_t> sequence_;
  std::optional<std::size_t> pinned_;
};

}  // namespace

std::optional<Witness> find_bad_subpacking(const Packing& p, const std::optional<Witness>& hint) {
  if (hint && witness_matches(p, *hint)) return hint;
  for (const auto& p_cycle : p.cycles) {
    if (p_cycle.max_vertex() >= p.order) return std::nullopt;
  }
  for (const CatalogKey& key : catalog::not_a2p_keys()) {
    const CatalogEntry& entry = catalog::get(key);
    if (entry.packing.order > p.order || entry.packing.cycles.size() > p.cycles.size()) continue;
    Embedder embed(p, entry.packing);
    if (auto relabel = embed.run()) return Witness{key, std::move(*relabel)};
  }
  return std::nullopt;
}

}  // namespace cyclepack
