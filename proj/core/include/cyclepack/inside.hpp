#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "cyclepack/oct_cycle.hpp"

namespace cyclepack {

/// Number of inside 8-cycles of any 8-cycle.
inline constexpr std::size_t kInsideCycleCount = 177;

struct InsideCycleSet {
  OctCycle source;
  std::vector<OctCycle> members;  // canonical, sorted ascending
};

/// Inside cycles of the 8-cycle on positions 0..7 in order (0,1,...,7),
/// computed once and shared. Each entry lists positions, not vertices.
std::span<const std::array<Vertex, 8>> inside_templates();

/// All Hamiltonian cycles on c's vertex set sharing no edge with c.
InsideCycleSet enumerate_inside(const OctCycle& c);

std::size_t count_inside(const OctCycle& c);

}  // namespace cyclepack
