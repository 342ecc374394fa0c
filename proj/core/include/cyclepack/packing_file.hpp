#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

#include "cyclepack/error.hpp"
#include "cyclepack/packing.hpp"

namespace cyclepack {

// Line-oriented text format:
//
//   cyclepack v1
//   order N
//   hole v1 v2 ...              (zero or more, disjoint)
//   cycle a b c d e f g h       (canonical form, packing order)
//   leave u v                   (u < v, sorted)
//   inside a b c d e f g h      (aligned with the cycle lines)
//   mode strict|relaxed         (present iff inside lines are)
//
// Blank lines and lines starting with '#' are ignored when parsing.

struct PackingDocument {
  Packing packing;
  std::optional<A2PCertificate> certificate;
};

/// Raised by parse_packing_file. code() is SyntaxError or SemanticError and
/// line() is 1-based (0 when the problem is not tied to one line).
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

std::string serialize_packing(const Packing& p,
                              const std::optional<A2PCertificate>& cert = {});

/// Only the `inside` and `mode` lines of a certificate.
std::string serialize_certificate(const A2PCertificate& cert);

PackingDocument parse_packing_file(const std::string& text);

}  // namespace cyclepack
