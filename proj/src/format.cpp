#include "hypertri/format.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace hypertri {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  for (std::size_t number = 1; std::getline(in, raw); ++number) {
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    for (std::string tok; ss >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

long long parse_int(const Line& line, const std::string& tok) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size() || v < 0)
    throw ParseError(line.number, "expected a non-negative integer, got '" + tok + "'");
  return v;
}

int header_dimension(const Line& line) {
  if (line.tokens.size() != 2 || line.tokens[1] != "1")
    throw ParseError(line.number, "expected header 'tri3 1' or 'tri4 1'");
  if (line.tokens[0] == "tri3") return 3;
  if (line.tokens[0] == "tri4") return 4;
  throw ParseError(line.number, "unknown format '" + line.tokens[0] + "'");
}

template <int Dim>
Triangulation<Dim> build(const std::vector<Line>& lines) {
  if (lines.size() < 2 || lines[1].tokens.size() != 2 || lines[1].tokens[0] != "n")
    throw ParseError(lines.size() < 2 ? lines[0].number : lines[1].number,
                     "expected 'n <count>' after the header");
  const auto n = static_cast<std::size_t>(parse_int(lines[1], lines[1].tokens[1]));
  if (n == 0) throw ParseError(lines[1].number, "simplex count must be positive");

  std::vector<Gluing<Dim>> gluings;
  std::vector<std::size_t> origin;
  constexpr std::size_t expected = 6 + Dim + 1;
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens[0] != "g")
      throw ParseError(line.number, "unknown record '" + line.tokens[0] + "'");
    if (line.tokens.size() != expected || line.tokens[5] != ":")
      throw ParseError(line.number, "expected 'g a f b g : " + std::string(Dim == 3 ? "p0 p1 p2 p3'" : "p0 p1 p2 p3 p4'"));
    std::array<int, Dim + 1> images{};
    for (int k = 0; k <= Dim; ++k) images[k] = static_cast<int>(parse_int(line, line.tokens[6 + k]));
    Perm<Dim + 1> map;
    try {
      map = Perm<Dim + 1>::from_images(images);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line.number, e.what());
    }
    gluings.push_back({{static_cast<std::size_t>(parse_int(line, line.tokens[1])),
                        static_cast<int>(parse_int(line, line.tokens[2]))},
                       {static_cast<std::size_t>(parse_int(line, line.tokens[3])),
                        static_cast<int>(parse_int(line, line.tokens[4]))},
                       map});
    origin.push_back(line.number);
  }
  try {
    return Triangulation<Dim>(n, gluings);
  } catch (const TriangulationError& e) {
    const auto& err = e.report().errors.front();
    throw ParseError(origin[err.record], err.message);
  }
}

}  // namespace

AnyTriangulation read_any(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError(1, "empty input");
  if (header_dimension(lines[0]) == 3) return build<3>(lines);
  return build<4>(lines);
}

template <int Dim>
Triangulation<Dim> read_tri(std::istream& in) {
  const auto lines = tokenize(in);
  if (lines.empty()) throw ParseError(1, "empty input");
  if (header_dimension(lines[0]) != Dim)
    throw ParseError(lines[0].number, "expected a tri" + std::to_string(Dim) + " file");
  return build<Dim>(lines);
}

template <int Dim>
void write_tri(std::ostream& out, const Triangulation<Dim>& t) {
  out << "tri" << Dim << " 1\n";
  out << "n " << t.size() << "\n";
  for (const auto& g : t.gluings()) {
    out << "g " << g.from.simplex << ' ' << g.from.facet << ' ' << g.to.simplex << ' '
        << g.to.facet << " :";
    for (int k = 0; k <= Dim; ++k) out << ' ' << g.map[k];
    out << '\n';
  }
}

template <int Dim>
std::string to_text(const Triangulation<Dim>& t) {
  std::ostringstream os;
  write_tri(os, t);
  return os.str();
}

AnyTriangulation read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_any(in);
}

template Triangulation<3> read_tri<3>(std::istream&);
template Triangulation<4> read_tri<4>(std::istream&);
template void write_tri<3>(std::ostream&, const Triangulation<3>&);
template void write_tri<4>(std::ostream&, const Triangulation<4>&);
template std::string to_text<3>(const Triangulation<3>&);
template std::string to_text<4>(const Triangulation<4>&);

}  // namespace hypertri
