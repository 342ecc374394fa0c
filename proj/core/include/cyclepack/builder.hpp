#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cyclepack/catalog.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

/// Output of every builder. A2P builds carry a certificate; NotA2P builds
/// carry the location of an embedded catalog packing that is not A2P.
struct Construction {
  Packing packing;
  std::optional<A2PCertificate> certificate;
  std::optional<Witness> witness;
};

enum class PartKind {
  Base,         // packing of K_b on the hub
  HoleFiller,   // packing of K_{b+16} \ K_b on hub + one group
  GroupBridge,  // decomposition of K_{16,16} between two groups
};

/// One placement of a sub-construction; part label i goes to map[i].
struct Placement {
  PartKind kind;
  std::size_t size;  // base order / hub size; 16 for bridges
  Variant variant;
  std::vector<Vertex> map;
};

/// Order n = base_order + 16 * group_count with base_order in [8, 23]. The
/// hub is 0..base_order-1 and group i (1-based) is the next block of 16.
struct Recipe {
  std::size_t order = 0;
  std::size_t base_order = 0;
  std::size_t group_count = 0;
  std::vector<Placement> steps;
};

/// Throws Error(OrderTooSmall) for n < 8, or n < 10 when variant is NotA2P.
Recipe make_recipe(std::size_t n, Variant variant = Variant::A2P);

/// Decomposition of K_{a,b} with X = 0..a-1 and Y = a..a+b-1 (two holes),
/// tiled from K_{4,4} and, when b = 2 mod 4, one K_{4,6} column.
/// Requires a = 0 mod 4, a >= 4, b even, b >= 4; else Error(ShapeUnsupported).
Construction build_bipartite(std::size_t a, std::size_t b);

/// Packing of K_{b+16} \ K_b with the hole on 0..b-1 (no hole when b = 0).
/// Odd b: order-17 system on {0} + group and K_{16,b-1} to the rest of the
/// hub, empty leave. Even b: order-16 packing on the group and K_{16,b},
/// leaving a 1-factor on the group. b in {2, 3} is Error(ShapeUnsupported),
/// b > 23 is Error(HubTooLarge). NotA2P swaps the order-16/17 seed.
Construction build_hole_filler(std::size_t b, Variant variant = Variant::A2P);

/// Packing of order r+s: p1 on 0..r-1, p2 on r..r+s-1, and bridge (a
/// decomposition of K_{r,s} with X = 0..r-1) between them. Both packings
/// need 1-factor leaves (Error(LeaveNotOneFactor)); the bridge must match
/// the part sizes (Error(LabelCollision)).
Construction compose(const Construction& p1, const Construction& p2,
                     const Construction& bridge);

/// Maximum packing of K_b for 8 <= b <= 23, from the catalog and the small
/// composite recipes.
Construction build_base(std::size_t b, Variant variant = Variant::A2P);

Construction main_construction(const Recipe& recipe);

/// Maximum packing of K_n. Throws Error(OrderTooSmall) for n < 8 (A2P) or
/// n < 10 (NotA2P).
Construction build(std::size_t n, Variant variant = Variant::A2P);

}  // namespace cyclepack
