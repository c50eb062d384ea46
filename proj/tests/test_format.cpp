#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "hypertri/constructions.hpp"
#include "hypertri/format.hpp"

using namespace hypertri;

namespace {

template <int Dim>
Triangulation<Dim> parse(const std::string& text) {
  std::istringstream in(text);
  return read_tri<Dim>(in);
}

std::size_t error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_any(in);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("round trip preserves every gluing") {
  for (const auto& t : {build_triple_t(3), build_k6(), build_cone_c()}) {
    const std::string text = to_text(t);
    const auto back = parse<4>(text);
    CHECK(back.gluings() == t.gluings());
    CHECK(to_text(back) == text);
  }
  const auto fig8 = build_fig8();
  CHECK(parse<3>(to_text(fig8)).gluings() == fig8.gluings());
}

TEST_CASE("round trip of random relabellings") {
  std::mt19937 rng(17);
  const auto base = build_triple_t(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = apply(fixtures::random_relabel<4>(base.size(), rng), base);
    CHECK(parse<4>(to_text(t)).gluings() == t.gluings());
  }
}

TEST_CASE("figure-eight text") {
  CHECK(to_text(build_fig8()) ==
        "tri3 1\n"
        "n 2\n"
        "g 0 0 1 1 : 1 3 0 2\n"
        "g 0 1 1 0 : 2 0 3 1\n"
        "g 0 2 1 2 : 0 3 2 1\n"
        "g 0 3 1 3 : 2 1 0 3\n");
}

TEST_CASE("comments, blank lines and either gluing direction") {
  const std::string text =
      "# two tetrahedra\n"
      "\n"
      "tri3 1   # header\n"
      "n 2\n"
      "g 1 1 0 0 : 2 0 3 1\n"
      "g 0 1 1 0 : 2 0 3 1\n"
      "g 1 0 0 1 : 1 3 0 2\n"  // exact inverse restatement
      "g 0 2 1 2 : 0 3 2 1\n"
      "g 0 3 1 3 : 2 1 0 3\n";
  const auto t = parse<3>(text);
  CHECK(t.gluings() == build_fig8().gluings());
}

TEST_CASE("header selects the dimension") {
  std::istringstream a(to_text(build_fig8()));
  CHECK(std::holds_alternative<Triangulation3>(read_any(a)));
  std::istringstream b(to_text(build_k6()));
  CHECK(std::holds_alternative<Triangulation4>(read_any(b)));
  std::istringstream c(to_text(build_k6()));
  CHECK_THROWS_AS(read_tri<3>(c), ParseError);
}

TEST_CASE("errors name the offending line") {
  CHECK(error_line("") == 1);
  CHECK(error_line("tri5 1\n") == 1);
  CHECK(error_line("tri4 2\n") == 1);
  CHECK(error_line("tri4 1\nm 2\n") == 2);
  CHECK(error_line("tri4 1\nn 0\n") == 2);
  CHECK(error_line("tri4 1\nn 2\n\nx 0 0 1 0 : 0 1 2 3 4\n") == 4);
  CHECK(error_line("tri4 1\nn 2\ng 0 0 1 0 : 0 1 2 3\n") == 3);
  CHECK(error_line("tri4 1\nn 2\ng 0 0 1 0 0 1 2 3 4\n") == 3);
  CHECK(error_line("tri4 1\nn 2\ng 0 0 1 0 : 0 1 1 3 4\n") == 3);
  CHECK(error_line("tri4 1\nn 2\ng 0 0 1 -1 : 0 1 2 3 4\n") == 3);
  CHECK(error_line("tri4 1\nn 2\ng 0 0 1 0 : 0 1 2 3 x\n") == 3);
  // Structural errors found after parsing are mapped back to their line.
  CHECK(error_line("tri4 1\nn 2\ng 0 0 1 0 : 0 1 2 3 4\n# note\ng 0 0 1 1 : 1 0 2 3 4\n") == 5);
  CHECK(error_line("tri4 1\nn 2\ng 0 0 0 0 : 0 1 2 3 4\n") == 3);
  CHECK(error_line("tri4 1\nn 2\ng 0 0 7 0 : 0 1 2 3 4\n") == 3);
  CHECK(error_line("tri4 1\nn 2\ng 0 0 1 1 : 0 1 2 3 4\n") == 3);

  std::istringstream in("tri4 1\nn 2\ng 0 0 1 0 : 0 1 2 3\n");
  try {
    read_any(in);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
  }
}

TEST_CASE("unreadable files") {
  CHECK_THROWS_AS(read_file("/nonexistent/hypertri/input.tri4"), std::runtime_error);
}
