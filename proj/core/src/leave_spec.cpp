#include "cyclepack/leave_spec.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cyclepack/error.hpp"

namespace cyclepack {

std::string_view to_string(LeaveShape shape) {
  switch (shape) {
    case LeaveShape::Empty: return "Empty";
    case LeaveShape::C3: return "C3";
    case LeaveShape::K5: return "K5";
    case LeaveShape::C5: return "C5";
    case LeaveShape::C4: return "C4";
    case LeaveShape::C3plusC4: return "C3plusC4";
    case LeaveShape::Bowtie: return "Bowtie";
    case LeaveShape::C4plusC5: return "C4plusC5";
    case LeaveShape::OneFactor: return "OneFactor";
    case LeaveShape::K4plusOneFactor: return "K4plusOneFactor";
  }
  return "Unknown";
}

std::size_t leave_edge_count(LeaveShape shape, std::size_t n) {
  switch (shape) {
    case LeaveShape::Empty: return 0;
    case LeaveShape::C3: return 3;
    case LeaveShape::K5: return 10;
    case LeaveShape::C5: return 5;
    case LeaveShape::C4: return 4;
    case LeaveShape::C3plusC4: return 7;
    case LeaveShape::Bowtie: return 6;
    case LeaveShape::C4plusC5: return 9;
    case LeaveShape::OneFactor: return n / 2;
    case LeaveShape::K4plusOneFactor: return 6 + (n - 4) / 2;
  }
  return 0;
}

LeaveSpec leave_spec(std::size_t n) {
  if (n < 8) {
    throw Error(ErrorCode::OrderTooSmall,
                "maximum 8-cycle packings need order >= 8, got " + std::to_string(n));
  }
  LeaveSpec s;
  s.order = n;
  s.residue = n % 16;
  switch (s.residue) {
    case 1: s.shape = LeaveShape::Empty; break;
    case 3: s.shape = LeaveShape::C3; break;
    case 5: s.shape = LeaveShape::K5; break;
    case 7: s.shape = LeaveShape::C5; break;
    case 9: s.shape = LeaveShape::C4; break;
    case 11: s.shape = LeaveShape::C3plusC4; break;
    case 13: s.shape = LeaveShape::Bowtie; break;
    case 15: s.shape = LeaveShape::C4plusC5; break;
    case 0: case 2: case 8: case 10: s.shape = LeaveShape::OneFactor; break;
    default: s.shape = LeaveShape::K4plusOneFactor; break;  // 4, 6, 12, 14
  }
  s.edge_count = leave_edge_count(s.shape, n);
  return s;
}

bool admissible_system_order(std::size_t n) noexcept {
  return n >= 8 && n % 16 == 1;
}

namespace {

enum class Component { K2, C3, C4, C5, K4, K5, Bowtie, Other };

Component classify(std::size_t vertices, std::size_t edges,
                   const std::vector<std::size_t>& degs) {
  const auto all = [&](std::size_t d) {
    return std::all_of(degs.begin(), degs.end(), [d](std::size_t x) { return x == d; });
  };
  if (vertices == 2 && edges == 1) return Component::K2;
  if (all(2) && vertices == edges) {
    switch (vertices) {
      case 3: return Component::C3;
      case 4: return Component::C4;
      case 5: return Component::C5;
      default: return Component::Other;
    }
  }
  if (vertices == 4 && edges == 6 && all(3)) return Component::K4;
  if (vertices == 5 && edges == 10 && all(4)) return Component::K5;
  if (vertices == 5 && edges == 6) {
    // one centre of degree 4 and four vertices of degree 2 forces a bowtie
    auto sorted = degs;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == std::vector<std::size_t>{2, 2, 2, 2, 4}) return Component::Bowtie;
  }
  return Component::Other;
}

}  // namespace

bool leave_matches_shape(const EdgeSet& leave, LeaveShape shape) {
  const std::size_t n = leave.universe();
  const auto edges = leave.edges();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) parent[find(e.u)] = find(e.v);

  const auto deg = leave.degrees();
  std::map<std::size_t, std::vector<std::size_t>> comp_degrees;
  std::map<std::size_t, std::size_t> comp_edges;
  std::size_t isolated = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (deg[x] == 0) {
      ++isolated;
      continue;
    }
    comp_degrees[find(x)].push_back(deg[x]);
  }
  for (const Edge& e : edges) ++comp_edges[find(e.u)];

  std::map<Component, std::size_t> counts;
  for (const auto& [root, degs] : comp_degrees) {
    ++counts[classify(degs.size(), comp_edges[root], degs)];
  }
  const auto exactly = [&](std::map<Component, std::size_t> want) {
    return counts == want;
  };

  switch (shape) {
    case LeaveShape::Empty: return edges.empty();
    case LeaveShape::C3: return exactly({{Component::C3, 1}});
    case LeaveShape::C4: return exactly({{Component::C4, 1}});
    case LeaveShape::C5: return exactly({{Component::C5, 1}});
    case LeaveShape::K5: return exactly({{Component::K5, 1}});
    case LeaveShape::Bowtie: return exactly({{Component::Bowtie, 1}});
    case LeaveShape::C3plusC4: return exactly({{Component::C3, 1}, {Component::C4, 1}});
    case LeaveShape::C4plusC5: return exactly({{Component::C4, 1}, {Component::C5, 1}});
    case LeaveShape::OneFactor:
      return isolated == 0 && n % 2 == 0 && exactly({{Component::K2, n / 2}});
    case LeaveShape::K4plusOneFactor:
      return isolated == 0 && n >= 4 && n % 2 == 0 &&
             (n == 4 ? exactly({{Component::K4, 1}})
                     : exactly({{Component::K4, 1}, {Component::K2, (n - 4) / 2}}));
  }
  return false;
}

}  // namespace cyclepack
