#include "cyclepack/inside.hpp"

#include <algorithm>
#include <numeric>

namespace cyclepack {

namespace {

bool adjacent_on_ring(Vertex a, Vertex b) {
  const Vertex d = a > b ? a - b : b - a;
  return d == 1 || d == 7;
}

std::vector<std::array<Vertex, 8>> compute_templates() {
  std::vector<std::array<Vertex, 8>> out;
  std::array<Vertex, 8> perm{};
  std::iota(perm.begin(), perm.end(), Vertex{0});
  // position 0 fixed first; perm[1] < perm[7] picks one direction
  do {
    if (perm[1] > perm[7]) continue;
    bool disjoint = true;
    for (std::size_t i = 0; i < 8 && disjoint; ++i) {
      disjoint = !adjacent_on_ring(perm[i], perm[(i + 1) % 8]);
    }
    if (disjoint) out.push_back(perm);
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return out;
}

}  // namespace

std::span<const std::array<Vertex, 8>> inside_templates() {
  static const std::vector<std::array<Vertex, 8>> templates = compute_templates();
  return templates;
}

InsideCycleSet enumerate_inside(const OctCycle& c) {
  InsideCycleSet set{c, {}};
  const auto& verts = c.vertices();
  set.members.reserve(kInsideCycleCount);
  for (const auto& positions : inside_templates()) {
    std::array<Vertex, 8> raw{};
    for (std::size_t i = 0; i < 8; ++i) raw[i] = verts[positions[i]];
    set.members.push_back(OctCycle::canonicalize(raw));
  }
  std::sort(set.members.begin(), set.members.end());
  return set;
}

std::size_t count_inside(const OctCycle& c) {
  return enumerate_inside(c).members.size();
}

}  // namespace cyclepack
