#include "cyclepack/builder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "cyclepack/error.hpp"
#include "cyclepack/leave_spec.hpp"

namespace cyclepack {

namespace {

std::vector<Vertex> iota_labels(std::size_t count, std::size_t first = 0) {
  std::vector<Vertex> v(count);
  std::iota(v.begin(), v.end(), static_cast<Vertex>(first));
  return v;
}

// Collects relabeled parts into one packing, rejecting any edge placed twice.
class Assembler {
 public:
  explicit Assembler(std::size_t order) : order_(order), covered_(order) {}

  void place(const Construction& part, std::span<const Vertex> map) {
    if (map.size() != part.packing.order) {
      throw Error(ErrorCode::LabelCollision,
                  "placement map has " + std::to_string(map.size()) + " labels for a part of order " +
                      std::to_string(part.packing.order));
    }
    for (const auto& c : part.packing.cycles) {
      const OctCycle mapped = c.relabel(map);
      for (const Edge& e : mapped.edges()) {
        if (!covered_.insert(e)) {
          throw Error(ErrorCode::LabelCollision,
                      "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                          "} placed twice");
        }
      }
      cycles_.push_back(mapped);
    }
    if (part.certificate) {
      for (const auto& pair : part.certificate->pairs) inside_.push_back(pair.inside.relabel(map));
      all_strict_ = all_strict_ && part.certificate->mode == CertMode::Strict;
    } else {
      all_certified_ = false;
    }
    if (part.witness && !witness_) {
      Witness w;
      w.key = part.witness->key;
      for (Vertex x : part.witness->relabel) w.relabel.push_back(map[x]);
      witness_ = std::move(w);
    }
  }

  // K_{|left|,|right|} between two disjoint label lists.
  void place_bipartite(std::span<const Vertex> left, std::span<const Vertex> right) {
    const bool left_first = left.size() % 4 == 0;
    const auto x = left_first ? left : right;
    const auto y = left_first ? right : left;
    const Construction bridge = build_bipartite(x.size(), y.size());
    std::vector<Vertex> map(x.begin(), x.end());
    map.insert(map.end(), y.begin(), y.end());
    place(bridge, map);
  }

  Construction finish(std::vector<std::vector<Vertex>> holes = {}) && {
    Construction out;
    out.packing.order = order_;
    out.packing.cycles = std::move(cycles_);
    out.packing.holes = std::move(holes);
    out.packing.leave = out.packing.uncovered_edges();
    if (all_certified_) {
      out.certificate = make_certificate(out.packing, std::move(inside_),
                                         all_strict_ ? CertMode::Strict : CertMode::Relaxed);
    }
    out.witness = std::move(witness_);
    return out;
  }

 private:
  std::size_t order_;
  EdgeSet covered_;
  std::vector<OctCycle> cycles_;
  std::vector<OctCycle> inside_;
  bool all_certified_ = true;
  bool all_strict_ = true;
  std::optional<Witness> witness_;
};

Construction from_catalog(const CatalogKey& key) {
  const CatalogEntry& e = catalog::get(key);
  Construction c{e.packing, e.certificate, std::nullopt};
  if (key.variant == Variant::NotA2P) {
    // the order-16 entry is certified through the order-12 packing it contains
    if (key.order == 16) {
      c.witness = Witness{CatalogKey::not_a2p(12), iota_labels(12)};
    } else {
      c.witness = Witness{key, iota_labels(key.order)};
    }
  }
  return c;
}

// Hole edges become leave edges: a packing of K_n \ K_s read as one of K_n.
Construction close_holes(Construction c) {
  for (const auto& hole : c.packing.holes) {
    for (std::size_t i = 0; i < hole.size(); ++i) {
      for (std::size_t j = i + 1; j < hole.size(); ++j) {
        const Edge e(hole[i], hole[j]);
        c.packing.leave.insert(e);
        if (c.certificate) c.certificate->induced_leave.insert(e);
      }
    }
  }
  c.packing.holes.clear();
  return c;
}

// Packing of K_{s+r} \ K_s: hole on 0..s-1, `base` (order r) on s..s+r-1,
// and K_{s,r} between them.
Construction bipartite_extension(const Construction& base, std::size_t s) {
  const std::size_t r = base.packing.order;
  Assembler a(s + r);
  const auto hole = iota_labels(s);
  const auto body = iota_labels(r, s);
  a.place(base, body);
  a.place_bipartite(hole, body);
  return std::move(a).finish({hole});
}

// Packing of K_{r+s+1} \ K_{s+1} from a system of order r+1: hole on
// 0..s with the system's label 0 on vertex 0, the rest of the system on
// s+1..s+r, and K_{r,s} between 1..s and s+1..s+r.
Construction cone_extension(const Construction& system, std::size_t s) {
  const std::size_t r = system.packing.order - 1;
  Assembler a(r + s + 1);
  std::vector<Vertex> map = {0};
  for (std::size_t i = 1; i <= r; ++i) map.push_back(static_cast<Vertex>(s + i));
  a.place(system, map);
  a.place_bipartite(iota_labels(s, 1), iota_labels(r, s + 1));
  return std::move(a).finish({iota_labels(s + 1)});
}

Variant seed_variant(Variant v) { return v == Variant::NotA2P ? Variant::NotA2P : Variant::A2P; }

Construction order16(Variant v) {
  if (v == Variant::NotA2P) return from_catalog(CatalogKey::not_a2p(16));
  const Construction eight = from_catalog(CatalogKey::a2p(8));
  return compose(eight, eight, build_bipartite(8, 8));
}

Construction order17(Variant v) {
  return from_catalog(v == Variant::NotA2P ? CatalogKey::not_a2p(17) : CatalogKey::a2p(17));
}

// Order-8 seed on four x's and four y's, its 1-factor leave being
// {x1,x3}, {x2,x4}, {y1,y3}, {y2,y4}; the catalog leave is
// {0,4}, {1,5}, {2,6}, {3,7}.
std::vector<Vertex> eight_on(std::span<const Vertex, 4> x, std::span<const Vertex, 4> y) {
  return {x[0], x[1], y[0], y[1], x[2], x[3], y[2], y[3]};
}

// Order 19: two order-11 packings sharing their C3 leave on 0,1,2, with the
// C4 leaves on x1..x4 = 3..6 and y1..y4 = 11..14 covered by an order-8 seed.
Construction base19(Variant v) {
  const Construction eleven = from_catalog(v == Variant::NotA2P ? CatalogKey::not_a2p(11)
                                                                : CatalogKey::a2p(11));
  const Construction eight = from_catalog(CatalogKey::a2p(8));
  const auto x = iota_labels(8, 3);
  const auto y = iota_labels(8, 11);
  Assembler a(19);
  std::vector<Vertex> on_x = {0, 1, 2};
  on_x.insert(on_x.end(), x.begin(), x.end());
  std::vector<Vertex> on_y = {0, 1, 2};
  on_y.insert(on_y.end(), y.begin(), y.end());
  a.place(eleven, on_x);
  a.place(eleven, on_y);
  a.place(eight, eight_on(std::span<const Vertex, 4>(x.data(), 4),
                          std::span<const Vertex, 4>(y.data(), 4)));
  const std::span<const Vertex> x_lo(x.data(), 4), x_hi(x.data() + 4, 4);
  const std::span<const Vertex> y_lo(y.data(), 4), y_hi(y.data() + 4, 4);
  a.place_bipartite(x_lo, y_hi);
  a.place_bipartite(x_hi, y_lo);
  a.place_bipartite(x_hi, y_hi);
  return std::move(a).finish();
}

// Order-9 seed on {inf} + x1..x8 with its C4 leave (0,1,2,3) on x1..x4.
std::vector<Vertex> nine_on(Vertex inf, std::span<const Vertex> x) {
  return {x[0], x[1], x[2], x[3], inf, x[4], x[5], x[6], x[7]};
}

// Order 13: inf = 0, x1..x8 = 1..8, y1..y4 = 9..12; bowtie leave on
// inf, y1..y4.
Construction base13() {
  const auto x = iota_labels(8, 1);
  const auto y = iota_labels(4, 9);
  Assembler a(13);
  a.place(from_catalog(CatalogKey::a2p(9)), nine_on(0, x));
  a.place(from_catalog(CatalogKey::a2p(8)),
          eight_on(std::span<const Vertex, 4>(x.data(), 4), std::span<const Vertex, 4>(y.data(), 4)));
  a.place_bipartite(std::span<const Vertex>(x.data() + 4, 4), y);
  return std::move(a).finish();
}

// Order 23: inf = 0, x1..x8 = 1..8, y1..y14 = 9..22. The order-15 seed has
// its C4 leave on y1..y4 and its C5 leave on y9..y13.
Construction base23(Variant v) {
  const Construction fifteen = from_catalog(v == Variant::NotA2P ? CatalogKey::not_a2p(15)
                                                                 : CatalogKey::a2p(15));
  const auto x = iota_labels(8, 1);
  const auto y = iota_labels(14, 9);
  const auto yj = [&](std::size_t j) { return y[j - 1]; };
  // catalog labels: C4 leave 7-8-9-10, C5 leave 6-11-12-13-14, rest 0..5
  const std::vector<Vertex> map15 = {0,      yj(5),  yj(6),  yj(7),  yj(8),
                                     yj(14), yj(9),  yj(1),  yj(2),  yj(3),
                                     yj(4),  yj(10), yj(11), yj(12), yj(13)};
  Assembler a(23);
  a.place(from_catalog(CatalogKey::a2p(9)), nine_on(0, x));
  a.place(fifteen, map15);
  a.place(from_catalog(CatalogKey::a2p(8)),
          eight_on(std::span<const Vertex, 4>(x.data(), 4), std::span<const Vertex, 4>(y.data(), 4)));
  const std::span<const Vertex> x_lo(x.data(), 4), x_hi(x.data() + 4, 4);
  const std::span<const Vertex> y_lo(y.data(), 4), y_mid(y.data() + 4, 4), y_hi(y.data() + 8, 6);
  a.place_bipartite(x_lo, y_mid);
  a.place_bipartite(x_hi, y_lo);
  a.place_bipartite(x_hi, y_mid);
  a.place_bipartite(x_lo, y_hi);
  a.place_bipartite(x_hi, y_hi);
  return std::move(a).finish();
}

}  // namespace

Construction build_bipartite(std::size_t a, std::size_t b) {
  if (a < 4 || a % 4 != 0 || b < 4 || b % 2 != 0) {
    throw Error(ErrorCode::ShapeUnsupported,
                "no construction for K_{" + std::to_string(a) + "," + std::to_string(b) + "}");
  }
  const Construction k44 = from_catalog(CatalogKey::bipartite(4, 4));
  const Construction k46 = from_catalog(CatalogKey::bipartite(4, 6));
  Assembler out(a + b);
  const auto y_label = [a](std::size_t j) { return static_cast<Vertex>(a + j); };
  for (std::size_t i = 0; i < a / 4; ++i) {
    std::vector<Vertex> x = iota_labels(4, 4 * i);
    std::size_t next = 0;
    if (b % 4 == 2) {
      std::vector<Vertex> map = x;
      for (std::size_t j = 0; j < 6; ++j) map.push_back(y_label(j));
      out.place(k46, map);
      next = 6;
    }
    for (; next < b; next += 4) {
      std::vector<Vertex> map = x;
      for (std::size_t j = 0; j < 4; ++j) map.push_back(y_label(next + j));
      out.place(k44, map);
    }
  }
  return std::move(out).finish({iota_labels(a), iota_labels(b, a)});
}

Construction build_hole_filler(std::size_t b, Variant variant) {
  const Variant v = seed_variant(variant);
  if (b > 23) {
    throw Error(ErrorCode::HubTooLarge, "hub of size " + std::to_string(b) + " exceeds 23");
  }
  if (b == 2 || b == 3) {
    throw Error(ErrorCode::ShapeUnsupported,
                "filler for hub " + std::to_string(b) + " needs K_{16,2}, which has no 8-cycles");
  }
  if (b == 0) return order16(v);
  if (b == 1) {
    // a one-vertex hole removes no edges, so the certificate carries over
    Construction c = order17(v);
    c.packing.holes = {{0}};
    return c;
  }
  if (b % 2 == 1) return cone_extension(order17(v), b - 1);
  return bipartite_extension(order16(v), b);
}

Construction compose(const Construction& p1, const Construction& p2, const Construction& bridge) {
  for (const Construction* p : {&p1, &p2}) {
    if (p->packing.has_holes() || !leave_matches_shape(p->packing.leave, LeaveShape::OneFactor)) {
      throw Error(ErrorCode::LeaveNotOneFactor,
                  "order-" + std::to_string(p->packing.order) + " part lacks a 1-factor leave");
    }
  }
  const std::size_t r = p1.packing.order;
  const std::size_t s = p2.packing.order;
  const std::vector<std::vector<Vertex>> expected = {iota_labels(r), iota_labels(s, r)};
  if (bridge.packing.order != r + s || bridge.packing.holes != expected) {
    throw Error(ErrorCode::LabelCollision, "bridge is not K_{" + std::to_string(r) + "," +
                                               std::to_string(s) + "} on the composed labels");
  }
  Assembler a(r + s);
  a.place(p1, iota_labels(r));
  a.place(p2, iota_labels(s, r));
  a.place(bridge, iota_labels(r + s));
  return std::move(a).finish();
}

Construction build_base(std::size_t b, Variant variant) {
  const Variant v = seed_variant(variant);
  const bool bad = v == Variant::NotA2P;
  const auto seed = [&](std::size_t n) {
    return from_catalog(bad ? CatalogKey::not_a2p(n) : CatalogKey::a2p(n));
  };
  switch (b) {
    case 8:
    case 9:
      if (bad) {
        throw Error(ErrorCode::NotInCatalog,
                    "every maximum packing of order " + std::to_string(b) + " is A2P");
      }
      return from_catalog(CatalogKey::a2p(b));
    case 10:
    case 11:
    case 15:
    case 17:
      return seed(b);
    case 12:
      if (bad) return seed(12);
      return close_holes(bipartite_extension(from_catalog(CatalogKey::a2p(8)), 4));
    case 13:
      if (bad) return seed(13);
      return base13();
    case 14:
      return close_holes(bipartite_extension(seed(10), 4));
    case 16:
      return order16(v);
    case 18:
      return compose(from_catalog(CatalogKey::a2p(8)), seed(10), build_bipartite(8, 10));
    case 19:
      return base19(v);
    case 20:
      return close_holes(bipartite_extension(order16(v), 4));
    case 21:
      return close_holes(cone_extension(order17(v), 4));
    case 22:
      return close_holes(bipartite_extension(build_base(18, v), 4));
    case 23:
      return base23(v);
    default:
      break;
  }
  throw Error(ErrorCode::OrderTooSmall,
              "base orders are 8..23, got " + std::to_string(b));
}

Recipe make_recipe(std::size_t n, Variant variant) {
  const bool bad = variant == Variant::NotA2P;
  if (n < 8 || (bad && n < 10)) {
    throw Error(ErrorCode::OrderTooSmall,
                std::string(bad ? "non-A2P packings need order >= 10" : "order must be >= 8") +
                    ", got " + std::to_string(n));
  }
  Recipe r;
  r.order = n;
  r.base_order = 8 + (n - 8) % 16;
  r.group_count = (n - r.base_order) / 16;
  const std::size_t b = r.base_order;
  // orders 8 and 9 have no non-A2P seed; the first filler carries it instead
  const bool bad_base = bad && b != 8 && b != 9;

  r.steps.push_back({PartKind::Base, b, bad_base ? Variant::NotA2P : Variant::A2P, iota_labels(b)});
  const auto group_start = [&](std::size_t i) { return b + 16 * (i - 1); };
  for (std::size_t i = 1; i <= r.group_count; ++i) {
    std::vector<Vertex> map = iota_labels(b);
    const auto g = iota_labels(16, group_start(i));
    map.insert(map.end(), g.begin(), g.end());
    const bool bad_filler = bad && !bad_base && i == 1;
    r.steps.push_back({PartKind::HoleFiller, b, bad_filler ? Variant::NotA2P : Variant::A2P,
                       std::move(map)});
  }
  for (std::size_t x = 1; x <= r.group_count; ++x) {
    for (std::size_t y = x + 1; y <= r.group_count; ++y) {
      std::vector<Vertex> map = iota_labels(16, group_start(x));
      const auto g = iota_labels(16, group_start(y));
      map.insert(map.end(), g.begin(), g.end());
      r.steps.push_back({PartKind::GroupBridge, 16, Variant::A2P, std::move(map)});
    }
  }
  return r;
}

Construction main_construction(const Recipe& recipe) {
  std::map<std::tuple<PartKind, std::size_t, Variant>, Construction> parts;
  const auto part = [&](const Placement& step) -> const Construction& {
    const auto key = std::make_tuple(step.kind, step.size, step.variant);
    auto it = parts.find(key);
    if (it == parts.end()) {
      Construction c;
      switch (step.kind) {
        case PartKind::Base: c = build_base(step.size, step.variant); break;
        case PartKind::HoleFiller: c = build_hole_filler(step.size, step.variant); break;
        case PartKind::GroupBridge: c = build_bipartite(step.size, step.size); break;
      }
      it = parts.emplace(key, std::move(c)).first;
    }
    return it->second;
  };
  Assembler a(recipe.order);
  for (const auto& step : recipe.steps) a.place(part(step), step.map);
  return std::move(a).finish();
}

Construction build(std::size_t n, Variant variant) {
  return main_construction(make_recipe(n, variant));
}

}  // namespace cyclepack
