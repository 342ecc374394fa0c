#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclepack/builder.hpp"
#include "cyclepack/catalog.hpp"
#include "cyclepack/inside.hpp"
#include "cyclepack/leave_spec.hpp"
#include "cyclepack/packing_file.hpp"
#include "cyclepack/solver.hpp"
#include "cyclepack/verify.hpp"

using namespace cyclepack;

namespace {

// exit codes for input problems, past the a2p outcomes
constexpr int kExitInputError = 3;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path.empty() || path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path);
    buf << in.rdbuf();
  }
  return buf.str();
}

int write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return kExitInputError;
  }
  out << text;
  return 0;
}

OctCycle cycle_from_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<Vertex> labels;
  long long value = 0;
  while (in >> value) {
    if (value < 0) throw Error(ErrorCode::LabelOutOfRange, "negative label");
    labels.push_back(static_cast<Vertex>(value));
  }
  if (!in.eof()) throw Error(ErrorCode::SyntaxError, "cycle must be 8 integers");
  return OctCycle::canonicalize(labels);
}

void print_report(const VerificationReport& report, bool verbose) {
  for (const auto& f : report.findings()) {
    if (f.status == Status::Fail || verbose) {
      std::cerr << (f.status == Status::Pass   ? "pass "
                    : f.status == Status::Fail ? "FAIL "
                                               : "skip ")
                << to_string(f.clause);
      if (f.index) std::cerr << " [" << *f.index << ']';
      if (!f.detail.empty()) std::cerr << ": " << f.detail;
      std::cerr << '\n';
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum 8-cycle packings of complete graphs and their inside cycles"};
  app.require_subcommand(1);

  std::size_t n = 0;
  bool not_a2p = false;
  bool no_cert = false;
  std::string out_path;
  auto* construct = app.add_subcommand("construct", "Build a maximum packing of K_n");
  construct->add_option("-n", n, "Order")->required()->check(CLI::PositiveNumber);
  construct->add_flag("--not-a2p", not_a2p, "Build a packing that is not almost 2-perfect");
  construct->add_flag("--no-cert", no_cert, "Omit the inside cycles");
  construct->add_option("-o", out_path, "Output file (default stdout)");

  std::string in_path = "-";
  bool strict_leave = false;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "Check a packing file and its certificate");
  verify->add_option("file", in_path, "Packing file, or - for stdin");
  verify->add_flag("--strict-leave", strict_leave, "Also check the leave's shape");
  verify->add_flag("-v,--verbose", verbose, "Report passing clauses too");

  std::string mode_name = "relaxed";
  std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
  double budget_secs = SearchBudget{}.max_seconds;
  auto* a2p = app.add_subcommand("a2p", "Decide whether a packing is almost 2-perfect");
  a2p->add_option("file", in_path, "Packing file, or - for stdin")->required();
  a2p->add_option("--mode", mode_name, "strict or relaxed")
      ->check(CLI::IsMember({"strict", "relaxed"}));
  a2p->add_option("--budget-nodes", budget_nodes, "Search node limit");
  a2p->add_option("--budget-secs", budget_secs, "Wall-clock limit in seconds");

  std::string cycle_text;
  bool count_only = false;
  auto* inside = app.add_subcommand("inside", "List the inside cycles of an 8-cycle");
  inside->add_option("--cycle", cycle_text, "Eight vertex labels, e.g. \"0 1 2 3 4 5 6 7\"")
      ->required();
  inside->add_flag("--count", count_only, "Print only the number of inside cycles");

  std::size_t spectrum_n = 0;
  auto* spectrum = app.add_subcommand("spectrum", "Leave shape and system admissibility");
  spectrum->add_option("-n", spectrum_n, "Order")->required();

  std::string key_text;
  auto* cat = app.add_subcommand("catalog", "List catalog keys or export one entry");
  cat->add_option("key", key_text, "Key such as a2p:8 or not-a2p:12");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*construct) {
      const Construction c = build(n, not_a2p ? Variant::NotA2P : Variant::A2P);
      std::string text = serialize_packing(c.packing, no_cert ? std::nullopt : c.certificate);
      if (c.witness) {
        std::cerr << "witness " << c.witness->key.to_string() << " on";
        for (Vertex x : c.witness->relabel) std::cerr << ' ' << x;
        std::cerr << '\n';
      }
      return write_output(out_path, text);
    }

    if (*verify) {
      const PackingDocument doc = parse_packing_file(read_input(in_path));
      VerificationReport report = verify_packing(doc.packing, strict_leave);
      if (doc.certificate) report.append(verify_certificate(doc.packing, *doc.certificate));
      print_report(report, verbose);
      return report.ok() ? 0 : 1;
    }

    if (*a2p) {
      const PackingDocument doc = parse_packing_file(read_input(in_path));
      const CertMode mode = mode_name == "strict" ? CertMode::Strict : CertMode::Relaxed;
      const A2PResult r = decide_a2p(doc.packing, mode, {budget_nodes, budget_secs});
      std::cerr << to_string(r.outcome) << " nodes=" << r.nodes << " seconds=" << r.seconds
                << " order=" << r.order_version << '\n';
      switch (r.outcome) {
        case Outcome::Sat:
          std::cout << serialize_certificate(*r.certificate);
          return 0;
        case Outcome::Unsat: return 1;
        case Outcome::Timeout: return 2;
      }
    }

    if (*inside) {
      const InsideCycleSet set = enumerate_inside(cycle_from_text(cycle_text));
      if (count_only) {
        std::cout << set.members.size() << '\n';
      } else {
        for (const auto& m : set.members) std::cout << m.to_string() << '\n';
      }
      return 0;
    }

    if (*spectrum) {
      const LeaveSpec spec = leave_spec(spectrum_n);
      std::cout << "order " << spec.order << '\n'
                << "residue " << spec.residue << '\n'
                << "leave " << to_string(spec.shape) << '\n'
                << "leave_edges " << spec.edge_count << '\n'
                << "system " << (admissible_system_order(spectrum_n) ? "yes" : "no") << '\n';
      return 0;
    }

    if (*cat) {
      if (key_text.empty()) {
        for (const auto& e : catalog::entries()) {
          std::cout << e.key.to_string() << '\t' << e.provenance << '\n';
        }
        return 0;
      }
      const CatalogEntry& e = catalog::get(CatalogKey::parse(key_text));
      std::cout << serialize_packing(e.packing, e.certificate);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return kExitInputError;
  }
  return 0;
}
