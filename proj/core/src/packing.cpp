#include "cyclepack/packing.hpp"

#include <algorithm>

namespace cyclepack {

namespace {

// hole index + 1 per vertex, 0 when the vertex lies in no hole
std::vector<std::size_t> hole_ids(const Packing& p) {
  std::vector<std::size_t> id(p.order, 0);
  for (std::size_t h = 0; h < p.holes.size(); ++h) {
    for (Vertex x : p.holes[h]) {
      if (x < p.order) id[x] = h + 1;
    }
  }
  return id;
}

}  // namespace

bool Packing::in_hole(Edge e) const noexcept {
  for (const auto& hole : holes) {
    if (std::binary_search(hole.begin(), hole.end(), e.u) &&
        std::binary_search(hole.begin(), hole.end(), e.v)) {
      return true;
    }
  }
  return false;
}

std::size_t Packing::host_edge_count() const noexcept {
  std::size_t total = complete_edge_count(order);
  for (const auto& hole : holes) total -= complete_edge_count(hole.size());
  return total;
}

EdgeSet Packing::uncovered_edges() const {
  const auto id = hole_ids(*this);
  EdgeSet out(order);
  for (Vertex v = 1; v < order; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (id[u] != 0 && id[u] == id[v]) continue;
      out.insert(Edge(u, v));
    }
  }
  for (const auto& c : cycles) {
    for (const Edge& e : c.edges()) {
      if (e.v < order) out.erase(e);
    }
  }
  return out;
}

std::string_view to_string(CertMode mode) {
  return mode == CertMode::Strict ? "strict" : "relaxed";
}

Packing A2PCertificate::inside_packing(const Packing& host) const {
  Packing p;
  p.order = host.order;
  p.holes = host.holes;
  p.cycles.reserve(pairs.size());
  for (const auto& pair : pairs) p.cycles.push_back(pair.inside);
  p.leave = induced_leave;
  return p;
}

A2PCertificate make_certificate(const Packing& host,
                                std::vector<OctCycle> inside, CertMode mode) {
  A2PCertificate cert;
  cert.mode = mode;
  const std::size_t n = std::min(inside.size(), host.cycles.size());
  cert.pairs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    cert.pairs.push_back({host.cycles[i], inside[i]});
  }
  Packing induced;
  induced.order = host.order;
  induced.holes = host.holes;
  induced.cycles = std::move(inside);
  cert.induced_leave = induced.uncovered_edges();
  return cert;
}

}  // namespace cyclepack
