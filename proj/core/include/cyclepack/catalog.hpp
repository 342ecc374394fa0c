#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclepack/packing.hpp"

namespace cyclepack {

enum class Variant { A2P, NotA2P, BipartiteA2P };

/// Identifies a stored seed: an order-n packing (A2P or not), or a
/// decomposition of K_{a,b} labelled X = 0..a-1, Y = a..a+b-1.
struct CatalogKey {
  Variant variant = Variant::A2P;
  std::size_t order = 0;   // n, or a for bipartite keys
  std::size_t part_b = 0;  // b for bipartite keys, else 0

  static CatalogKey a2p(std::size_t n) { return {Variant::A2P, n, 0}; }
  static CatalogKey not_a2p(std::size_t n) { return {Variant::NotA2P, n, 0}; }
  static CatalogKey bipartite(std::size_t a, std::size_t b) {
    return {Variant::BipartiteA2P, a, b};
  }

  /// "a2p:8", "not-a2p:12", "bipartite:4x6".
  std::string to_string() const;
  /// Inverse of to_string; throws Error(NotInCatalog) on malformed keys.
  static CatalogKey parse(const std::string& text);

  auto operator<=>(const CatalogKey&) const = default;
};

struct CatalogEntry {
  CatalogKey key;
  Packing packing;
  std::optional<A2PCertificate> certificate;
  std::string provenance;
};

/// A copy of a catalog NotA2P packing inside a larger packing: catalog
/// label i sits on vertex relabel[i].
struct Witness {
  CatalogKey key;
  std::vector<Vertex> relabel;

  std::vector<Vertex> support() const;  // sorted image of relabel
  bool operator==(const Witness&) const = default;
};

/// Translates of `base` by 0..modulus-1 (mod modulus), canonicalized.
/// Throws Error(LabelOutOfRange) if a base label is >= modulus and
/// Error(OrderTooSmall) if modulus < 9.
std::vector<OctCycle> develop_base_cycle(const OctCycle& base,
                                         std::size_t modulus);

namespace catalog {

/// All stored entries in a fixed order. Built once on first use.
std::span<const CatalogEntry> entries();

/// Throws Error(NotInCatalog) for unknown keys.
const CatalogEntry& get(const CatalogKey& key);

bool contains(const CatalogKey& key);

/// NotA2P keys in ascending order.
std::vector<CatalogKey> not_a2p_keys();

}  // namespace catalog

}  // namespace cyclepack
