#include "cyclepack/edge_set.hpp"

#include <string>

#include "cyclepack/error.hpp"

namespace cyclepack {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::WrongLength: return "WrongLength";
    case ErrorCode::LabelOutOfRange: return "LabelOutOfRange";
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::NotInCatalog: return "NotInCatalog";
    case ErrorCode::ShapeUnsupported: return "ShapeUnsupported";
    case ErrorCode::HubTooLarge: return "HubTooLarge";
    case ErrorCode::LabelCollision: return "LabelCollision";
    case ErrorCode::LeaveNotOneFactor: return "LeaveNotOneFactor";
    case ErrorCode::InvalidPacking: return "InvalidPacking";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::SemanticError: return "SemanticError";
  }
  return "Unknown";
}

Edge::Edge(Vertex a, Vertex b) {
  if (a == b) {
    throw Error(ErrorCode::DuplicateVertex,
                "edge {" + std::to_string(a) + "," + std::to_string(b) + "} is a loop");
  }
  u = a < b ? a : b;
  v = a < b ? b : a;
}

EdgeSet::EdgeSet(std::size_t universe)
    : universe_(universe),
      bits_((complete_edge_count(universe) + 63) / 64, 0) {}

void EdgeSet::check(Edge e) const {
  if (e.v >= universe_) {
    throw Error(ErrorCode::LabelOutOfRange,
                "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                    "} outside universe of " + std::to_string(universe_));
  }
}

bool EdgeSet::contains(Edge e) const {
  check(e);
  const std::size_t i = edge_index(e);
  return (bits_[i >> 6] >> (i & 63)) & 1u;
}

bool EdgeSet::insert(Edge e) {
  check(e);
  const std::size_t i = edge_index(e);
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (bits_[i >> 6] & mask) return false;
  bits_[i >> 6] |= mask;
  ++size_;
  return true;
}

bool EdgeSet::erase(Edge e) {
  check(e);
  const std::size_t i = edge_index(e);
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (!(bits_[i >> 6] & mask)) return false;
  bits_[i >> 6] &= ~mask;
  --size_;
  return true;
}

std::vector<Edge> EdgeSet::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex u = 0; u < universe_; ++u) {
    for (Vertex v = u + 1; v < universe_; ++v) {
      Edge e;
      e.u = u;
      e.v = v;
      const std::size_t i = edge_index(e);
      if ((bits_[i >> 6] >> (i & 63)) & 1u) out.push_back(e);
    }
  }
  return out;
}

std::vector<std::size_t> EdgeSet::degrees() const {
  std::vector<std::size_t> deg(universe_, 0);
  for (const Edge& e : edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

bool EdgeSet::operator==(const EdgeSet& other) const noexcept {
  return universe_ == other.universe_ && size_ == other.size_ &&
         bits_ == other.bits_;
}

EdgeSet EdgeSet::complete(std::size_t universe) {
  EdgeSet s(universe);
  const std::size_t total = complete_edge_count(universe);
  for (std::size_t i = 0; i < total; ++i) s.bits_[i >> 6] |= std::uint64_t{1} << (i & 63);
  s.size_ = total;
  return s;
}

}  // namespace cyclepack
