#include "cyclepack/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "cyclepack/error.hpp"

namespace cyclepack {

std::string CatalogKey::to_string() const {
  switch (variant) {
    case Variant::A2P: return "a2p:" + std::to_string(order);
    case Variant::NotA2P: return "not-a2p:" + std::to_string(order);
    case Variant::BipartiteA2P:
      return "bipartite:" + std::to_string(order) + "x" + std::to_string(part_b);
  }
  return "?";
}

CatalogKey CatalogKey::parse(const std::string& text) {
  const auto colon = text.find(':');
  const auto bad = [&] { return Error(ErrorCode::NotInCatalog, "malformed key '" + text + "'"); };
  if (colon == std::string::npos) throw bad();
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  const auto number = [&](const std::string& s) -> std::size_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw bad();
    return std::stoul(s);
  };
  if (kind == "a2p") return a2p(number(rest));
  if (kind == "not-a2p") return not_a2p(number(rest));
  if (kind == "bipartite") {
    const auto x = rest.find('x');
    if (x == std::string::npos) throw bad();
    return bipartite(number(rest.substr(0, x)), number(rest.substr(x + 1)));
  }
  throw bad();
}

std::vector<Vertex> Witness::support() const {
  std::vector<Vertex> s = relabel;
  std::sort(s.begin(), s.end());
  return s;
}

std::vector<OctCycle> develop_base_cycle(const OctCycle& base, std::size_t modulus) {
  if (modulus < 9) {
    throw Error(ErrorCode::OrderTooSmall,
                "development needs modulus >= 9, got " + std::to_string(modulus));
  }
  if (base.max_vertex() >= modulus) {
    throw Error(ErrorCode::LabelOutOfRange,
                "base cycle " + base.to_string() + " has a label >= " + std::to_string(modulus));
  }
  std::vector<OctCycle> out;
  out.reserve(modulus);
  for (std::size_t shift = 0; shift < modulus; ++shift) {
    std::array<Vertex, 8> raw{};
    for (std::size_t i = 0; i < 8; ++i) {
      raw[i] = static_cast<Vertex>((base[i] + shift) % modulus);
    }
    out.push_back(OctCycle::canonicalize(raw));
  }
  return out;
}

namespace {

using Raw = std::array<Vertex, 8>;

std::vector<OctCycle> cycles_of(std::initializer_list<Raw> raw) {
  std::vector<OctCycle> out;
  for (const Raw& r : raw) out.push_back(OctCycle::canonicalize(r));
  return out;
}

EdgeSet edges_of(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  EdgeSet s(n);
  for (auto [u, v] : pairs) s.insert(Edge(u, v));
  return s;
}

// Closed walk v0-v1-...-vk-v0 as edges.
void add_ring(EdgeSet& s, std::initializer_list<Vertex> ring) {
  const std::vector<Vertex> r(ring);
  for (std::size_t i = 0; i < r.size(); ++i) s.insert(Edge(r[i], r[(i + 1) % r.size()]));
}

CatalogEntry packing_entry(CatalogKey key, std::size_t n, std::vector<OctCycle> cycles,
                           EdgeSet leave, std::vector<OctCycle> inside,
                           std::string provenance) {
  CatalogEntry e;
  e.key = key;
  e.packing.order = n;
  e.packing.cycles = std::move(cycles);
  e.packing.leave = std::move(leave);
  if (!inside.empty()) {
    e.certificate = make_certificate(e.packing, std::move(inside), CertMode::Strict);
  }
  e.provenance = std::move(provenance);
  return e;
}

// K_{a,b} inside K_{a+b}: X = 0..a-1, Y = a..a+b-1.
Packing bipartite_host(std::size_t a, std::size_t b) {
  Packing p;
  p.order = a + b;
  p.leave = EdgeSet(a + b);
  std::vector<Vertex> x(a), y(b);
  std::iota(x.begin(), x.end(), Vertex{0});
  std::iota(y.begin(), y.end(), static_cast<Vertex>(a));
  p.holes = {x, y};
  return p;
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> out;

  // ---- A2P seeds -------------------------------------------------------
  {
    const OctCycle base = OctCycle::canonicalize({0, 16, 2, 6, 11, 1, 3, 9});
    const OctCycle inside = OctCycle::canonicalize({0, 2, 1, 6, 9, 16, 3, 11});
    out.push_back(packing_entry(CatalogKey::a2p(17), 17, develop_base_cycle(base, 17),
                                EdgeSet(17), develop_base_cycle(inside, 17),
                                "cyclic system of order 17, base cycle developed mod 17"));
  }
  out.push_back(packing_entry(
      CatalogKey::a2p(8), 8,
      cycles_of({Raw{1, 4, 3, 6, 5, 2, 0, 7}, Raw{1, 3, 2, 4, 7, 5, 0, 6},
                 Raw{1, 2, 7, 6, 4, 5, 3, 0}}),
      edges_of(8, {{1, 5}, {3, 7}, {2, 6}, {4, 0}}),
      cycles_of({Raw{1, 3, 2, 4, 7, 5, 0, 6}, Raw{1, 0, 3, 5, 4, 6, 7, 2},
                 Raw{1, 7, 0, 2, 5, 6, 3, 4}}),
      "order 8, 1-factor leave"));
  {
    EdgeSet leave(11);
    add_ring(leave, {0, 1, 2});
    add_ring(leave, {3, 4, 5, 6});
    out.push_back(packing_entry(
        CatalogKey::a2p(11), 11,
        cycles_of({Raw{0, 3, 1, 4, 2, 5, 7, 6}, Raw{0, 4, 6, 1, 5, 8, 9, 10},
                   Raw{0, 5, 3, 2, 8, 10, 7, 9}, Raw{0, 7, 1, 9, 2, 10, 3, 8},
                   Raw{1, 8, 6, 9, 3, 7, 4, 10}, Raw{2, 6, 10, 5, 9, 4, 8, 7}}),
        leave,
        cycles_of({Raw{0, 4, 6, 2, 3, 5, 1, 7}, Raw{0, 6, 8, 4, 10, 1, 9, 5},
                   Raw{0, 3, 7, 5, 10, 2, 9, 8}, Raw{0, 9, 3, 1, 8, 2, 7, 10},
                   Raw{1, 6, 10, 3, 8, 7, 9, 4}, Raw{2, 5, 8, 10, 9, 6, 7, 4}}),
        "order 11, leave C3 (0,1,2) + C4 (3,4,5,6)"));
  }
  {
    EdgeSet leave(9);
    add_ring(leave, {0, 1, 2, 3});
    out.push_back(packing_entry(
        CatalogKey::a2p(9), 9,
        cycles_of({Raw{0, 2, 4, 1, 5, 6, 7, 8}, Raw{0, 4, 3, 1, 6, 8, 5, 7},
                   Raw{0, 5, 2, 7, 3, 8, 4, 6}, Raw{1, 7, 4, 5, 3, 6, 2, 8}}),
        leave,
        cycles_of({Raw{0, 4, 5, 2, 8, 6, 1, 7}, Raw{0, 6, 4, 1, 8, 7, 3, 5},
                   Raw{0, 2, 6, 3, 4, 7, 5, 8}, Raw{1, 5, 6, 7, 2, 4, 8, 3}}),
        "order 9, leave C4 (0,1,2,3)"));
  }
  {
    EdgeSet leave(15);
    add_ring(leave, {6, 11, 12, 13, 14});
    add_ring(leave, {7, 8, 9, 10});
    out.push_back(packing_entry(
        CatalogKey::a2p(15), 15,
        cycles_of({Raw{0, 1, 8, 14, 4, 5, 6, 12}, Raw{0, 2, 11, 3, 10, 13, 4, 9},
                   Raw{0, 3, 6, 1, 5, 12, 7, 4}, Raw{0, 5, 8, 13, 7, 3, 9, 6},
                   Raw{0, 8, 2, 6, 13, 9, 1, 10}, Raw{0, 11, 14, 12, 2, 9, 5, 13},
                   Raw{9, 12, 3, 1, 4, 10, 2, 14}, Raw{1, 13, 2, 4, 8, 10, 5, 14},
                   Raw{0, 7, 1, 11, 4, 6, 10, 14}, Raw{1, 2, 3, 5, 7, 11, 10, 12},
                   Raw{2, 5, 11, 13, 3, 8, 6, 7}, Raw{3, 4, 12, 8, 11, 9, 7, 14}}),
        leave,
        cycles_of({Raw{0, 4, 6, 8, 12, 1, 14, 5}, Raw{0, 11, 4, 10, 2, 9, 13, 3},
                   Raw{0, 1, 3, 4, 12, 6, 5, 7}, Raw{0, 8, 3, 5, 9, 7, 6, 13},
                   Raw{0, 2, 1, 13, 8, 10, 6, 9}, Raw{0, 14, 9, 11, 13, 2, 5, 12},
                   Raw{9, 1, 10, 12, 14, 3, 2, 4}, Raw{1, 8, 2, 14, 10, 13, 4, 5},
                   Raw{0, 6, 1, 4, 14, 7, 11, 10}, Raw{1, 7, 2, 12, 3, 10, 5, 11},
                   Raw{2, 11, 8, 5, 13, 7, 3, 6}, Raw{3, 11, 14, 8, 4, 7, 12, 9}}),
        "order 15, leave C5 (6,11,12,13,14) + C4 (7,8,9,10)"));
  }
  out.push_back(packing_entry(
      CatalogKey::a2p(10), 10,
      cycles_of({Raw{0, 1, 3, 2, 4, 5, 8, 6}, Raw{0, 2, 5, 1, 4, 7, 9, 3},
                 Raw{0, 4, 6, 3, 8, 9, 2, 7}, Raw{0, 5, 3, 7, 6, 9, 1, 8},
                 Raw{1, 6, 2, 8, 4, 9, 5, 7}}),
      edges_of(10, {{1, 2}, {3, 4}, {5, 6}, {7, 8}, {9, 0}}),
      cycles_of({Raw{0, 4, 1, 5, 3, 6, 2, 8}, Raw{0, 5, 4, 9, 2, 3, 7, 1},
                 Raw{0, 3, 9, 7, 6, 8, 4, 2}, Raw{0, 7, 5, 9, 8, 3, 1, 6},
                 Raw{1, 8, 5, 2, 7, 4, 6, 9}}),
      "order 10, 1-factor leave"));

  // ---- bipartite seeds: x_i = i, y_j = 4 + j -----------------------------
  {
    CatalogEntry e;
    e.key = CatalogKey::bipartite(4, 4);
    e.packing = bipartite_host(4, 4);
    e.packing.cycles = cycles_of({Raw{0, 4, 1, 5, 2, 6, 3, 7}, Raw{0, 6, 1, 7, 2, 4, 3, 5}});
    e.certificate = make_certificate(
        e.packing, cycles_of({Raw{1, 6, 0, 5, 3, 4, 2, 7}, Raw{1, 5, 2, 6, 3, 7, 0, 4}}),
        CertMode::Strict);
    e.provenance = "K_{4,4} decomposition";
    out.push_back(std::move(e));
  }
  {
    CatalogEntry e;
    e.key = CatalogKey::bipartite(4, 6);
    e.packing = bipartite_host(4, 6);
    e.packing.cycles = cycles_of({Raw{0, 8, 1, 5, 2, 6, 3, 7}, Raw{0, 4, 1, 7, 2, 8, 3, 9},
                                  Raw{0, 5, 3, 4, 2, 9, 1, 6}});
    e.certificate = make_certificate(
        e.packing,
        cycles_of({Raw{1, 6, 0, 5, 3, 8, 2, 7}, Raw{1, 8, 0, 7, 3, 4, 2, 9},
                   Raw{1, 5, 2, 6, 3, 9, 0, 4}}),
        CertMode::Strict);
    e.provenance = "K_{4,6} decomposition";
    out.push_back(std::move(e));
  }

  // ---- packings that are not A2P ---------------------------------------
  out.push_back(packing_entry(
      CatalogKey::not_a2p(10), 10,
      cycles_of({Raw{0, 2, 1, 3, 4, 6, 5, 7}, Raw{0, 3, 5, 1, 4, 8, 2, 9},
                 Raw{0, 4, 2, 7, 9, 3, 6, 8}, Raw{0, 5, 8, 3, 7, 1, 9, 6},
                 Raw{1, 6, 2, 5, 9, 4, 7, 8}}),
      edges_of(10, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9}}), {},
      "not A2P, order 10, 1-factor leave"));
  out.push_back(packing_entry(
      CatalogKey::not_a2p(11), 11,
      cycles_of({Raw{0, 3, 1, 4, 2, 5, 7, 6}, Raw{0, 4, 6, 1, 5, 8, 9, 10},
                 Raw{0, 5, 3, 2, 8, 10, 7, 9}, Raw{0, 7, 1, 9, 2, 10, 4, 8},
                 Raw{1, 8, 6, 9, 4, 7, 3, 10}, Raw{2, 6, 10, 5, 9, 3, 8, 7}}),
      edges_of(11, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}}), {},
      "not A2P, order 11, leave C3 (0,1,2) + C4 (3,4,5,6)"));
  out.push_back(packing_entry(
      CatalogKey::not_a2p(12), 12,
      cycles_of({Raw{0, 11, 5, 1, 7, 8, 10, 9}, Raw{0, 4, 6, 2, 9, 11, 3, 10},
                 Raw{0, 5, 2, 4, 1, 6, 3, 7}, Raw{0, 6, 5, 3, 4, 7, 2, 8},
                 Raw{1, 8, 3, 9, 4, 10, 2, 11}, Raw{1, 9, 5, 7, 11, 8, 6, 10},
                 Raw{4, 8, 5, 10, 7, 9, 6, 11}}),
      edges_of(12, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                    {4, 5}, {6, 7}, {8, 9}, {10, 11}}),
      {}, "not A2P, order 12, leave K4 on {0,1,2,3} + 1-factor"));
  out.push_back(packing_entry(
      CatalogKey::not_a2p(13), 13,
      cycles_of({Raw{0, 11, 5, 1, 7, 8, 10, 9}, Raw{0, 4, 6, 2, 9, 11, 3, 10},
                 Raw{0, 2, 4, 1, 3, 5, 6, 7}, Raw{0, 3, 6, 1, 8, 2, 5, 12},
                 Raw{0, 6, 9, 1, 10, 2, 12, 8}, Raw{1, 11, 2, 7, 3, 8, 4, 12},
                 Raw{3, 9, 4, 7, 5, 10, 11, 12}, Raw{4, 10, 6, 8, 9, 12, 7, 11},
                 Raw{5, 8, 11, 6, 12, 10, 7, 9}}),
      edges_of(13, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}}), {},
      "not A2P, order 13, leave C6 (0,1,2,3,4,5)"));
  out.push_back(packing_entry(
      CatalogKey::not_a2p(15), 15,
      cycles_of({Raw{0, 1, 8, 14, 4, 5, 6, 12}, Raw{0, 2, 11, 3, 10, 13, 4, 9},
                 Raw{0, 3, 6, 1, 5, 12, 7, 4}, Raw{0, 5, 8, 13, 7, 3, 9, 6},
                 Raw{0, 8, 2, 6, 13, 9, 1, 10}, Raw{0, 11, 14, 12, 2, 9, 5, 13},
                 Raw{9, 12, 3, 1, 4, 10, 2, 14}, Raw{1, 13, 2, 4, 8, 10, 5, 14},
                 Raw{0, 7, 1, 11, 4, 6, 10, 14}, Raw{1, 2, 3, 5, 7, 11, 8, 12},
                 Raw{2, 5, 11, 13, 3, 8, 6, 7}, Raw{3, 4, 12, 10, 11, 9, 7, 14}}),
      edges_of(15, {{7, 8}, {8, 9}, {9, 10}, {7, 10}, {11, 12}, {12, 13}, {13, 14},
                    {14, 6}, {6, 11}}),
      {}, "not A2P, order 15, leave C4 (7,8,9,10) + C5 (6,11,12,13,14)"));
  {
    // order 12 on 0..11 (K4 leave on 0..3), the order-8 A2P seed on
    // {0,1,2,3,12,13,14,15} covering that K4, and K_{8,4} between
    // {4..11} and {12..15} from two K_{4,4} blocks
    const auto find = [&out](const CatalogKey& k) -> const CatalogEntry& {
      return *std::find_if(out.begin(), out.end(),
                           [&](const CatalogEntry& e) { return e.key == k; });
    };
    const CatalogEntry& n12 = find(CatalogKey::not_a2p(12));
    const CatalogEntry& a8 = find(CatalogKey::a2p(8));
    const CatalogEntry& k44 = find(CatalogKey::bipartite(4, 4));
    Packing p;
    p.order = 16;
    for (const auto& c : n12.packing.cycles) p.cycles.push_back(c);
    const std::vector<Vertex> map8 = {0, 1, 2, 3, 12, 13, 14, 15};
    for (const auto& c : a8.packing.cycles) p.cycles.push_back(c.relabel(map8));
    for (const std::vector<Vertex>& map : {std::vector<Vertex>{4, 5, 6, 7, 12, 13, 14, 15},
                                           std::vector<Vertex>{8, 9, 10, 11, 12, 13, 14, 15}}) {
      for (const auto& c : k44.packing.cycles) p.cycles.push_back(c.relabel(map));
    }
    p.leave = p.uncovered_edges();
    CatalogEntry e;
    e.key = CatalogKey::not_a2p(16);
    e.packing = std::move(p);
    e.provenance = "not A2P, order 16: order-12 NotA2P + order-8 over its K4 + K_{8,4}";
    out.push_back(std::move(e));
  }
  {
    const OctCycle base = OctCycle::canonicalize({0, 16, 1, 4, 8, 13, 2, 9});
    CatalogEntry e;
    e.key = CatalogKey::not_a2p(17);
    e.packing.order = 17;
    e.packing.cycles = develop_base_cycle(base, 17);
    e.packing.leave = EdgeSet(17);
    e.provenance = "not A2P, cyclic system of order 17 from base block (0,16,1,4,8,13,2,9)";
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

namespace catalog {

std::span<const CatalogEntry> entries() {
  static const std::vector<CatalogEntry> all = make_entries();
  return all;
}

const CatalogEntry& get(const CatalogKey& key) {
  for (const auto& e : entries()) {
    if (e.key == key) return e;
  }
  throw Error(ErrorCode::NotInCatalog, key.to_string());
}

bool contains(const CatalogKey& key) {
  const auto all = entries();
  return std::any_of(all.begin(), all.end(), [&](const CatalogEntry& e) { return e.key == key; });
}

std::vector<CatalogKey> not_a2p_keys() {
  std::vector<CatalogKey> keys;
  for (const auto& e : entries()) {
    if (e.key.variant == Variant::NotA2P) keys.push_back(e.key);
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace catalog

}  // namespace cyclepack
