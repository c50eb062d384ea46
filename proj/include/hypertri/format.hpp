#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>

#include "hypertri/triangulation.hpp"

namespace hypertri {

// Text formats "tri3" and "tri4":
//
//   tri4 1
//   n <N>
//   g <a> <f> <b> <g> : <p0> <p1> <p2> <p3> <p4>
//
// '#' starts a comment, blank lines are ignored, labels are 0-based. Each
// gluing is listed once in either direction; the inverse is implied. tri3
// is the same with four images per gluing.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

using AnyTriangulation = std::variant<Triangulation3, Triangulation4>;

/// Dimension taken from the header line. Throws ParseError.
AnyTriangulation read_any(std::istream& in);

template <int Dim>
Triangulation<Dim> read_tri(std::istream& in);

/// Deterministic: gluings from their smaller slot, in slot order.
template <int Dim>
void write_tri(std::ostream& out, const Triangulation<Dim>& t);

template <int Dim>
std::string to_text(const Triangulation<Dim>& t);

AnyTriangulation read_file(const std::string& path);

}  // namespace hypertri
