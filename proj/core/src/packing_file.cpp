#include "cyclepack/packing_file.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <string_view>
#include <vector>

namespace cyclepack {

namespace {

void write_cycle(std::ostringstream& os, std::string_view tag, const OctCycle& c) {
  os << tag;
  for (Vertex x : c.vertices()) os << ' ' << x;
  os << '\n';
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

std::string serialize_certificate(const A2PCertificate& cert) {
  std::ostringstream os;
  for (const auto& pair : cert.pairs) write_cycle(os, "inside", pair.inside);
  os << "mode " << to_string(cert.mode) << '\n';
  return os.str();
}

std::string serialize_packing(const Packing& p, const std::optional<A2PCertificate>& cert) {
  std::ostringstream os;
  os << "cyclepack v1\n";
  os << "order " << p.order << '\n';
  for (const auto& hole : p.holes) {
    os << "hole";
    for (Vertex x : hole) os << ' ' << x;
    os << '\n';
  }
  for (const auto& c : p.cycles) write_cycle(os, "cycle", c);
  for (const Edge& e : p.leave.edges()) os << "leave " << e.u << ' ' << e.v << '\n';
  if (cert) os << serialize_certificate(*cert);
  return os.str();
}

PackingDocument parse_packing_file(const std::string& text) {
  std::size_t line_no = 0;
  const auto syntax = [&](const std::string& msg) {
    return ParseError(ErrorCode::SyntaxError, line_no, msg);
  };
  const auto semantic = [&](const std::string& msg) {
    return ParseError(ErrorCode::SemanticError, line_no, msg);
  };

  bool header = false;
  std::optional<std::size_t> order;
  std::vector<OctCycle> cycles;
  std::vector<OctCycle> inside;
  std::optional<CertMode> mode;
  std::vector<std::vector<Vertex>> holes;
  std::vector<bool> in_hole;
  EdgeSet leave;

  const auto labels = [&](const std::vector<std::string_view>& tokens, std::size_t arity,
                          bool exact) {
    if (exact ? tokens.size() != arity + 1 : tokens.size() < arity + 1) {
      throw syntax("'" + std::string(tokens[0]) + "' expects " + (exact ? "" : "at least ") +
                   std::to_string(arity) + " values");
    }
    if (!order) throw syntax("'order' must come before '" + std::string(tokens[0]) + "'");
    std::vector<Vertex> out;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      std::uint64_t value = 0;
      const auto* first = tokens[i].data();
      const auto* last = first + tokens[i].size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) {
        throw syntax("'" + std::string(tokens[i]) + "' is not a non-negative integer");
      }
      if (value >= *order) {
        throw semantic("label " + std::to_string(value) + " out of range for order " +
                       std::to_string(*order));
      }
      out.push_back(static_cast<Vertex>(value));
    }
    return out;
  };
  const auto make_cycle = [&](const std::vector<Vertex>& raw) {
    try {
      return OctCycle::canonicalize(raw);
    } catch (const Error& e) {
      throw semantic(std::string("invalid cycle: ") + e.what());
    }
  };

  std::istringstream in(text);
  std::string raw_line;
  while (std::getline(in, raw_line)) {
    ++line_no;
    const auto tokens = split(raw_line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "cyclepack" || tokens[1] != "v1") {
        throw syntax("expected header 'cyclepack v1'");
      }
      header = true;
      continue;
    }
    const std::string_view directive = tokens[0];
    if (directive == "order") {
      if (order) throw syntax("duplicate 'order'");
      if (tokens.size() != 2) throw syntax("'order' expects one value");
      std::uint64_t value = 0;
      const auto* first = tokens[1].data();
      const auto* last = first + tokens[1].size();
      const auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last || value > (1u << 20)) {
        throw syntax("'" + std::string(tokens[1]) + "' is not a valid order");
      }
      order = static_cast<std::size_t>(value);
      leave = EdgeSet(*order);
      in_hole.assign(*order, false);
    } else if (directive == "hole") {
      auto hole = labels(tokens, 1, false);
      std::sort(hole.begin(), hole.end());
      if (std::adjacent_find(hole.begin(), hole.end()) != hole.end()) {
        throw semantic("repeated vertex in hole");
      }
      for (Vertex x : hole) {
        if (in_hole[x]) throw semantic("vertex " + std::to_string(x) + " lies in two holes");
        in_hole[x] = true;
      }
      holes.push_back(std::move(hole));
    } else if (directive == "cycle") {
      if (!inside.empty()) throw syntax("'cycle' after 'inside'");
      cycles.push_back(make_cycle(labels(tokens, 8, true)));
    } else if (directive == "inside") {
      inside.push_back(make_cycle(labels(tokens, 8, true)));
    } else if (directive == "leave") {
      const auto uv = labels(tokens, 2, true);
      if (uv[0] == uv[1]) throw semantic("leave edge is a loop");
      if (!leave.insert(Edge(uv[0], uv[1]))) {
        throw semantic("duplicate leave edge {" + std::to_string(uv[0]) + "," +
                       std::to_string(uv[1]) + "}");
      }
    } else if (directive == "mode") {
      if (mode) throw syntax("duplicate 'mode'");
      if (tokens.size() != 2) throw syntax("'mode' expects strict or relaxed");
      if (tokens[1] == "strict") {
        mode = CertMode::Strict;
      } else if (tokens[1] == "relaxed") {
        mode = CertMode::Relaxed;
      } else {
        throw syntax("unknown mode '" + std::string(tokens[1]) + "'");
      }
    } else {
      throw syntax("unknown directive '" + std::string(directive) + "'");
    }
  }

  line_no = 0;
  if (!header) throw syntax("missing header 'cyclepack v1'");
  if (!order) throw syntax("missing 'order'");
  if (!inside.empty() && !mode) throw semantic("'inside' lines without 'mode'");
  if (inside.empty() && mode) throw semantic("'mode' without 'inside' lines");
  if (!inside.empty() && inside.size() != cycles.size()) {
    throw semantic(std::to_string(inside.size()) + " inside lines for " +
                   std::to_string(cycles.size()) + " cycles");
  }

  PackingDocument doc;
  doc.packing.order = *order;
  doc.packing.cycles = std::move(cycles);
  doc.packing.leave = std::move(leave);
  std::sort(holes.begin(), holes.end());
  doc.packing.holes = std::move(holes);
  if (mode) doc.certificate = make_certificate(doc.packing, std::move(inside), *mode);
  return doc;
}

}  // namespace cyclepack
