#include "cyclepack/oct_cycle.hpp"

#include <algorithm>
#include <sstream>

#include "cyclepack/error.hpp"

namespace cyclepack {

OctCycle OctCycle::canonicalize(std::span<const Vertex> raw) {
  if (raw.size() != kLength) {
    throw Error(ErrorCode::WrongLength,
                "an 8-cycle needs 8 vertices, got " + std::to_string(raw.size()));
  }
  std::array<Vertex, kLength> sorted{};
  std::copy(raw.begin(), raw.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DuplicateVertex, "repeated vertex in cycle");
  }

  const auto start = static_cast<std::size_t>(
      std::min_element(raw.begin(), raw.end()) - raw.begin());
  const Vertex next = raw[(start + 1) % kLength];
  const Vertex prev = raw[(start + kLength - 1) % kLength];
  const bool forward = next < prev;

  OctCycle c;
  for (std::size_t i = 0; i < kLength; ++i) {
    const std::size_t j = forward ? (start + i) % kLength
                                  : (start + kLength - i) % kLength;
    c.v_[i] = raw[j];
  }
  return c;
}

OctCycle OctCycle::canonicalize(std::initializer_list<Vertex> raw) {
  return canonicalize(std::span<const Vertex>(raw.begin(), raw.size()));
}

Vertex OctCycle::max_vertex() const noexcept {
  return *std::max_element(v_.begin(), v_.end());
}

std::array<Edge, OctCycle::kLength> OctCycle::edges() const noexcept {
  std::array<Edge, kLength> out;
  for (std::size_t i = 0; i < kLength; ++i) {
    const Vertex a = v_[i];
    const Vertex b = v_[(i + 1) % kLength];
    out[i].u = std::min(a, b);
    out[i].v = std::max(a, b);
  }
  return out;
}

bool OctCycle::has_edge(Edge e) const noexcept {
  for (std::size_t i = 0; i < kLength; ++i) {
    const Vertex a = v_[i];
    const Vertex b = v_[(i + 1) % kLength];
    if ((a == e.u && b == e.v) || (a == e.v && b == e.u)) return true;
  }
  return false;
}

bool OctCycle::contains(Vertex x) const noexcept {
  return std::find(v_.begin(), v_.end(), x) != v_.end();
}

bool OctCycle::same_vertex_set(const OctCycle& other) const noexcept {
  auto a = v_;
  auto b = other.v_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

OctCycle OctCycle::relabel(std::span<const Vertex> map) const {
  std::array<Vertex, kLength> raw{};
  for (std::size_t i = 0; i < kLength; ++i) {
    if (v_[i] >= map.size()) {
      throw Error(ErrorCode::LabelOutOfRange,
                  "relabel map has no image for " + std::to_string(v_[i]));
    }
    raw[i] = map[v_[i]];
  }
  return canonicalize(raw);
}

std::string OctCycle::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < kLength; ++i) os << (i ? "," : "") << v_[i];
  os << ')';
  return os.str();
}

}  // namespace cyclepack
