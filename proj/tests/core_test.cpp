#include <gtest/gtest.h>

#include <random>

#include "cyclepack/catalog.hpp"
#include "cyclepack/error.hpp"
#include "cyclepack/leave_spec.hpp"
#include "cyclepack/verify.hpp"

using namespace cyclepack;

namespace {

const OctCycle kIdentity = OctCycle::canonicalize({0, 1, 2, 3, 4, 5, 6, 7});

Packing order8() {
  Packing p;
  p.order = 8;
  p.cycles = {OctCycle::canonicalize({1, 4, 3, 6, 5, 2, 0, 7}),
              OctCycle::canonicalize({1, 3, 2, 4, 7, 5, 0, 6}),
              OctCycle::canonicalize({1, 2, 7, 6, 4, 5, 3, 0})};
  p.leave = EdgeSet(8);
  for (auto [u, v] : {std::pair{1, 5}, {3, 7}, {2, 6}, {4, 0}}) p.leave.insert(Edge(u, v));
  return p;
}

template <class F>
void expect_code(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Canonicalize, RotationAndReflection) {
  EXPECT_EQ(OctCycle::canonicalize({3, 2, 1, 0, 7, 6, 5, 4}), kIdentity);
  EXPECT_EQ(OctCycle::canonicalize({0, 7, 6, 5, 4, 3, 2, 1}), kIdentity);
  const std::array<Vertex, 8> expect{0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(kIdentity.vertices(), expect);
}

TEST(Canonicalize, PrintedFormOfOrderEightCycle) {
  const std::array<Vertex, 8> expect{0, 2, 5, 6, 3, 4, 1, 7};
  EXPECT_EQ(OctCycle::canonicalize({1, 4, 3, 6, 5, 2, 0, 7}).vertices(), expect);
}

TEST(Canonicalize, AllSixteenPresentationsAgree) {
  std::array<Vertex, 8> base{12, 3, 40, 7, 9, 0, 21, 5};
  const OctCycle c = OctCycle::canonicalize(base);
  for (int rot = 0; rot < 8; ++rot) {
    std::array<Vertex, 8> r{};
    for (int i = 0; i < 8; ++i) r[i] = base[(rot + i) % 8];
    EXPECT_EQ(OctCycle::canonicalize(r), c);
    std::reverse(r.begin(), r.end());
    EXPECT_EQ(OctCycle::canonicalize(r), c);
  }
  EXPECT_EQ(c.min_vertex(), 0u);
  EXPECT_LT(c[1], c[7]);
}

TEST(Canonicalize, Errors) {
  expect_code(ErrorCode::DuplicateVertex, [] { OctCycle::canonicalize({0, 1, 2, 3, 4, 5, 6, 0}); });
  expect_code(ErrorCode::WrongLength, [] { OctCycle::canonicalize({0, 1, 2, 3, 4, 5, 6}); });
  expect_code(ErrorCode::WrongLength,
              [] { OctCycle::canonicalize({0, 1, 2, 3, 4, 5, 6, 7, 8}); });
}

TEST(OctCycle, EdgesAndRelabel) {
  const auto edges = kIdentity.edges();
  EXPECT_EQ(edges[0], Edge(0, 1));
  EXPECT_EQ(edges[7], Edge(0, 7));
  EXPECT_TRUE(kIdentity.has_edge(Edge(7, 6)));
  EXPECT_FALSE(kIdentity.has_edge(Edge(0, 2)));

  const std::vector<Vertex> shift{10, 11, 12, 13, 14, 15, 16, 17};
  EXPECT_EQ(kIdentity.relabel(shift), OctCycle::canonicalize({10, 11, 12, 13, 14, 15, 16, 17}));
  const std::vector<Vertex> short_map{1, 2, 3};
  expect_code(ErrorCode::LabelOutOfRange, [&] { kIdentity.relabel(short_map); });
  EXPECT_EQ(kIdentity.to_string(), "(0,1,2,3,4,5,6,7)");
}

TEST(EdgeSet, Basics) {
  EdgeSet s(5);
  EXPECT_TRUE(s.insert(Edge(3, 1)));
  EXPECT_FALSE(s.insert(Edge(1, 3)));
  EXPECT_TRUE(s.contains(Edge(1, 3)));
  EXPECT_EQ(s.size(), 1u);
  EXPECT_TRUE(s.erase(Edge(1, 3)));
  EXPECT_TRUE(s.empty());
  expect_code(ErrorCode::LabelOutOfRange, [&] { s.insert(Edge(1, 5)); });
  expect_code(ErrorCode::DuplicateVertex, [] { Edge(2, 2); });

  const EdgeSet k5 = EdgeSet::complete(5);
  EXPECT_EQ(k5.size(), 10u);
  for (std::size_t d : k5.degrees()) EXPECT_EQ(d, 4u);
  const auto e = k5.edges();
  EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
}

TEST(LeaveSpec, TabulatedRows) {
  EXPECT_EQ(leave_spec(17).shape, LeaveShape::Empty);
  EXPECT_EQ(leave_spec(17).edge_count, 0u);
  EXPECT_EQ(leave_spec(13).shape, LeaveShape::Bowtie);
  EXPECT_EQ(leave_spec(13).edge_count, 6u);
  EXPECT_EQ(leave_spec(12).shape, LeaveShape::K4plusOneFactor);
  EXPECT_EQ(leave_spec(12).edge_count, 10u);
  EXPECT_EQ(leave_spec(9).shape, LeaveShape::C4);
  EXPECT_EQ(leave_spec(21).shape, LeaveShape::K5);
  EXPECT_EQ(leave_spec(23).shape, LeaveShape::C5);
  EXPECT_EQ(leave_spec(27).shape, LeaveShape::C3plusC4);
  EXPECT_EQ(leave_spec(31).shape, LeaveShape::C4plusC5);
  EXPECT_EQ(leave_spec(19).shape, LeaveShape::C3);
  EXPECT_EQ(leave_spec(26).shape, LeaveShape::OneFactor);
  EXPECT_EQ(leave_spec(26).edge_count, 13u);
  expect_code(ErrorCode::OrderTooSmall, [] { leave_spec(7); });
}

// The covered edge count must be a multiple of 8.
TEST(LeaveSpec, EdgeCountArithmetic) {
  for (std::size_t n = 8; n <= 10000; ++n) {
    const LeaveSpec s = leave_spec(n);
    ASSERT_EQ(s.residue, n % 16);
    const std::size_t total = n * (n - 1) / 2;
    ASSERT_GE(total, s.edge_count) << n;
    ASSERT_EQ((total - s.edge_count) % 8, 0u) << n;
    ASSERT_EQ(s.edge_count, leave_edge_count(s.shape, n));
  }
}

TEST(Admissible, SystemOrders) {
  EXPECT_TRUE(admissible_system_order(17));
  EXPECT_FALSE(admissible_system_order(16));
  EXPECT_TRUE(admissible_system_order(33));
  EXPECT_FALSE(admissible_system_order(1));
  for (std::size_t n = 2; n < 300; ++n) {
    // odd, and n(n-1)/2 divisible by 8
    const bool direct = n >= 8 && n % 2 == 1 && (n * (n - 1) / 2) % 8 == 0;
    EXPECT_EQ(admissible_system_order(n), direct) << n;
  }
}

TEST(LeaveShape, Matching) {
  EXPECT_TRUE(leave_matches_shape(order8().leave, LeaveShape::OneFactor));
  EXPECT_FALSE(leave_matches_shape(order8().leave, LeaveShape::C4));

  EdgeSet bowtie(7);
  for (auto [u, v] : {std::pair{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}) {
    bowtie.insert(Edge(u, v));
  }
  EXPECT_TRUE(leave_matches_shape(bowtie, LeaveShape::Bowtie));
  EXPECT_FALSE(leave_matches_shape(bowtie, LeaveShape::C3plusC4));

  EdgeSet c6(13);
  for (Vertex i = 0; i < 6; ++i) c6.insert(Edge(i, (i + 1) % 6));
  EXPECT_FALSE(leave_matches_shape(c6, LeaveShape::Bowtie));

  // a one-factor must saturate every vertex
  EdgeSet partial(6);
  partial.insert(Edge(0, 1));
  partial.insert(Edge(2, 3));
  EXPECT_FALSE(leave_matches_shape(partial, LeaveShape::OneFactor));

  EXPECT_TRUE(leave_matches_shape(EdgeSet(17), LeaveShape::Empty));
}

TEST(VerifyPacking, OrderEightPasses) {
  const auto report = verify_packing(order8(), true);
  EXPECT_TRUE(report.ok()) << report.to_string();
  EXPECT_TRUE(report.passed(Clause::LeaveStructure));
}

TEST(VerifyPacking, SixCycleLeaveHasTheRightCountButNotTheShape) {
  const Packing& p = catalog::get(CatalogKey::not_a2p(13)).packing;
  const auto loose = verify_packing(p);
  EXPECT_TRUE(loose.ok()) << loose.to_string();
  const auto strict = verify_packing(p, true);
  EXPECT_FALSE(strict.ok());
  EXPECT_TRUE(strict.passed(Clause::LeaveCount));
  EXPECT_FALSE(strict.passed(Clause::LeaveStructure));
}

TEST(VerifyPacking, DuplicatedCycle) {
  Packing p = order8();
  p.cycles.push_back(p.cycles[0]);
  const auto report = verify_packing(p);
  EXPECT_FALSE(report.passed(Clause::EdgeDisjoint));
  bool named = false;
  for (const auto& f : report.findings()) {
    if (f.clause == Clause::EdgeDisjoint && f.status == Status::Fail) {
      named = named || f.detail.find("{0,2}") != std::string::npos;
    }
  }
  EXPECT_TRUE(named) << report.to_string();
}

TEST(VerifyPacking, CoverageAndCount) {
  Packing p = order8();
  p.leave.erase(Edge(1, 5));
  auto report = verify_packing(p);
  EXPECT_FALSE(report.passed(Clause::Coverage));
  EXPECT_FALSE(report.passed(Clause::LeaveCount));

  Packing bad_label = order8();
  bad_label.order = 7;
  report = verify_packing(bad_label);
  EXPECT_FALSE(report.passed(Clause::CycleValid));
}

TEST(VerifyCertificate, OrderEightPrintedPairing) {
  const Packing p = order8();
  const std::vector<OctCycle> inside{OctCycle::canonicalize({1, 3, 2, 4, 7, 5, 0, 6}),
                                     OctCycle::canonicalize({1, 0, 3, 5, 4, 6, 7, 2}),
                                     OctCycle::canonicalize({1, 7, 0, 2, 5, 6, 3, 4})};
  const auto cert = make_certificate(p, inside, CertMode::Strict);
  const auto report = verify_certificate(p, cert);
  EXPECT_TRUE(report.ok()) << report.to_string();
  EXPECT_EQ(cert.induced_leave, p.leave);
  EXPECT_TRUE(verify_packing(cert.inside_packing(p)).ok());
}

TEST(VerifyCertificate, OrderSeventeenSystem) {
  Packing p;
  p.order = 17;
  p.leave = EdgeSet(17);
  p.cycles = develop_base_cycle(OctCycle::canonicalize({0, 16, 2, 6, 11, 1, 3, 9}), 17);
  ASSERT_TRUE(verify_packing(p).ok());
  const auto inside = develop_base_cycle(OctCycle::canonicalize({0, 2, 1, 6, 9, 16, 3, 11}), 17);
  const auto report = verify_certificate(p, make_certificate(p, inside, CertMode::Strict));
  EXPECT_TRUE(report.ok()) << report.to_string();
}

TEST(VerifyCertificate, SelfPairingFails) {
  const Packing p = order8();
  const auto cert = make_certificate(p, p.cycles, CertMode::Relaxed);
  const auto report = verify_certificate(p, cert);
  EXPECT_FALSE(report.ok());
  EXPECT_GE(report.failure_count(Clause::NoSharedEdge), 3u);
}

TEST(VerifyCertificate, StrictRejectsLeaveEdges) {
  const Packing p = catalog::get(CatalogKey::not_a2p(10)).packing;
  // an inside cycle of the first cycle through the leave edge {0,1}
  std::vector<OctCycle> inside = p.cycles;
  inside[0] = OctCycle::canonicalize({0, 1, 4, 2, 5, 3, 7, 6});
  const auto cert = make_certificate(p, inside, CertMode::Strict);
  EXPECT_FALSE(verify_certificate(p, cert).passed(Clause::InsideInHost));
}
