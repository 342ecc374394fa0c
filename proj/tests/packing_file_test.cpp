#include <gtest/gtest.h>

#include "cyclepack/builder.hpp"
#include "cyclepack/catalog.hpp"
#include "cyclepack/packing_file.hpp"

using namespace cyclepack;

namespace {

struct Failure {
  ErrorCode code;
  std::size_t line;
};

Failure parse_failure(const std::string& text) {
  try {
    parse_packing_file(text);
  } catch (const ParseError& e) {
    return {e.code(), e.line()};
  }
  ADD_FAILURE() << "parsed:\n" << text;
  return {ErrorCode::InvalidPacking, 0};
}

std::size_t count_lines(const std::string& text, const std::string& prefix) {
  std::size_t n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find('\n', pos);
    if (text.compare(pos, prefix.size(), prefix) == 0) ++n;
    pos = end == std::string::npos ? text.size() : end + 1;
  }
  return n;
}

}  // namespace

TEST(Serialize, OrderEight) {
  const CatalogEntry& e = catalog::get(CatalogKey::a2p(8));
  const std::string text = serialize_packing(e.packing);
  EXPECT_EQ(text.rfind("cyclepack v1\norder 8\n", 0), 0u);
  EXPECT_NE(text.find("cycle 0 2 5 6 3 4 1 7\n"), std::string::npos);
  EXPECT_EQ(count_lines(text, "leave "), 4u);
  EXPECT_EQ(count_lines(text, "inside "), 0u);

  const std::string with_cert = serialize_packing(e.packing, e.certificate);
  EXPECT_EQ(count_lines(with_cert, "inside "), 3u);
  EXPECT_NE(with_cert.find("mode strict\n"), std::string::npos);
}

TEST(Serialize, SystemAndHoles) {
  const std::string system = serialize_packing(catalog::get(CatalogKey::a2p(17)).packing);
  EXPECT_EQ(count_lines(system, "leave "), 0u);
  EXPECT_EQ(count_lines(system, "cycle "), 17u);

  // K_21 minus K_5, from the order-17 system and K_{16,4}
  const std::string holed = serialize_packing(build_hole_filler(5).packing);
  EXPECT_NE(holed.find("\nhole 0 1 2 3 4\n"), std::string::npos);
  EXPECT_EQ(count_lines(holed, "leave "), 0u);
}

TEST(Parse, RoundTrip) {
  for (std::size_t n : {8, 13, 21, 30, 47}) {
    const Construction c = build(n);
    const auto doc = parse_packing_file(serialize_packing(c.packing, c.certificate));
    EXPECT_EQ(doc.packing, c.packing) << n;
    EXPECT_EQ(doc.certificate, c.certificate) << n;
  }
  for (const CatalogEntry& e : catalog::entries()) {
    const auto doc = parse_packing_file(serialize_packing(e.packing, e.certificate));
    EXPECT_EQ(doc.packing, e.packing) << e.key.to_string();
    EXPECT_EQ(doc.certificate, e.certificate) << e.key.to_string();
  }
}

TEST(Parse, CommentsAndBlankLines) {
  const auto doc = parse_packing_file(
      "# exported\n\ncyclepack v1\norder 9\n  # the only cycle\ncycle 7 6 5 4 3 2 1 0\n");
  ASSERT_EQ(doc.packing.cycles.size(), 1u);
  EXPECT_EQ(doc.packing.cycles[0], OctCycle::canonicalize({0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_TRUE(doc.packing.leave.empty());
  EXPECT_FALSE(doc.certificate.has_value());
}

TEST(Parse, SemanticErrors) {
  auto f = parse_failure("cyclepack v1\norder 9\ncycle 0 1 2 3 4 5 6 0\n");
  EXPECT_EQ(f.code, ErrorCode::SemanticError);
  EXPECT_EQ(f.line, 3u);

  f = parse_failure("cyclepack v1\norder 10\ncycle 0 1 2 3 4 5 6 10\n");
  EXPECT_EQ(f.code, ErrorCode::SemanticError);
  EXPECT_EQ(f.line, 3u);

  f = parse_failure("cyclepack v1\norder 10\nleave 1 2\nleave 2 1\n");
  EXPECT_EQ(f.code, ErrorCode::SemanticError);
  EXPECT_EQ(f.line, 4u);

  f = parse_failure("cyclepack v1\norder 10\nleave 3 3\n");
  EXPECT_EQ(f.code, ErrorCode::SemanticError);

  f = parse_failure("cyclepack v1\norder 10\nhole 0 1\nhole 1 2\n");
  EXPECT_EQ(f.code, ErrorCode::SemanticError);
  EXPECT_EQ(f.line, 4u);

  f = parse_failure("cyclepack v1\norder 9\ncycle 0 1 2 3 4 5 6 7\ninside 0 2 4 6 1 3 5 7\n");
  EXPECT_EQ(f.code, ErrorCode::SemanticError);

  f = parse_failure("cyclepack v1\norder 9\ncycle 0 1 2 3 4 5 6 7\nmode strict\n");
  EXPECT_EQ(f.code, ErrorCode::SemanticError);

  f = parse_failure(
      "cyclepack v1\norder 9\ncycle 0 1 2 3 4 5 6 7\ncycle 0 2 4 6 1 3 5 7\n"
      "inside 0 2 4 6 1 3 5 7\nmode relaxed\n");
  EXPECT_EQ(f.code, ErrorCode::SemanticError);
}

TEST(Parse, SyntaxErrors) {
  auto f = parse_failure("order 9\n");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);
  EXPECT_EQ(f.line, 1u);

  f = parse_failure("cyclepack v2\n");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);

  f = parse_failure("cyclepack v1\norder 9\ntriangle 0 1 2\n");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);
  EXPECT_EQ(f.line, 3u);

  f = parse_failure("cyclepack v1\norder 9\ncycle 0 1 2 3 4 5 6\n");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);

  f = parse_failure("cyclepack v1\norder 9\ncycle 0 1 2 3 4 5 6 x\n");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);

  f = parse_failure("cyclepack v1\norder 9\ncycle 0 1 2 3 4 5 6 -7\n");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);

  f = parse_failure("cyclepack v1\ncycle 0 1 2 3 4 5 6 7\n");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);
  EXPECT_EQ(f.line, 2u);

  f = parse_failure("cyclepack v1\norder 9\norder 10\n");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);

  f = parse_failure("cyclepack v1\norder 9\ncycle 0 1 2 3 4 5 6 7\nmode lenient\n");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);

  f = parse_failure("cyclepack v1\n");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);

  f = parse_failure("");
  EXPECT_EQ(f.code, ErrorCode::SyntaxError);
}
