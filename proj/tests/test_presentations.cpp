#include "catalog.hpp"
#include "doctest.h"
#include "error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_presentation(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("presentations") {

TEST_CASE("parse examples") {
  Presentation w3 = pres("algebra W3\ngenerators e\nrelations\n e^3");
  CHECK(w3.name == "W3");
  CHECK(w3.generators == std::vector<std::string>{"e"});
  REQUIRE(w3.relations.size() == 1);
  CHECK(w3.relations[0] == NCPoly::monomial(Word::power(0, 3)));

  Presentation d4 = pres("algebra D4k1\ngenerators x, y\nrelations\n x*y = -y*x\n x^2 = y^3");
  CHECK(d4.relations == d4_family_presentation(1).relations);
}

TEST_CASE("parse details") {
  Presentation p = pres(
      "# header comment\n"
      "algebra Q\n"
      "generators a, b2, c_x\n"
      "\n"
      "relations\n"
      "  2/4 a*b2^2 - 3*c_x = -a   # trailing comment\n"
      "  -1/3*c_x^2*a + b2\n");
  REQUIRE(p.relations.size() == 2);
  CHECK(p.relations[0] == parse_polynomial("1/2*a*b2^2 - 3*c_x + a", p.generators));
  CHECK(p.relations[1].coefficient(Word{2, 2, 0}) == Rational::parse("-1/3"));
  CHECK(parse_polynomial("x^0*y", {"x", "y"}) == poly("y"));
}

TEST_CASE("parse errors") {
  CHECK(error_of("relations\n x*y - x*y").find("zero") != std::string::npos);
  CHECK(error_of("generators x, x\nrelations\n").find("duplicate") != std::string::npos);
  std::string unknown = error_of("generators x\nrelations\n x*z\n");
  CHECK(unknown.find("unknown generator") != std::string::npos);
  CHECK(unknown.find("line 3, column 4") != std::string::npos);
  CHECK(error_of("generators x\nrelations\n x**x\n").find("line 3") != std::string::npos);
  CHECK(error_of("generators x\nrelations\n x^\n").find("line 3") != std::string::npos);
  CHECK(error_of("generators x\nrelations\n 1/0*x\n") != "");
  CHECK(error_of("generators x\n x\n") != "");
  CHECK(error_of("generators 1x\nrelations\n") != "");
  CHECK(error_of("algebra\ngenerators x\nrelations\n") != "");
}

TEST_CASE("print and round trip") {
  Presentation half = pres("algebra H\ngenerators a, b\nrelations\n a^2 = 1/2*b^2\n");
  std::string text = print_presentation(half);
  CHECK(text.find("1/2*b^2") != std::string::npos);
  CHECK(parse_presentation(text) == half);
  for (const CatalogEntry& e : catalog())
    CHECK(parse_presentation(print_presentation(e.presentation)) == e.presentation);
  CHECK(print_polynomial(NCPoly{}, {"x"}) == "0");
  CHECK(print_polynomial(poly("-x*y*y + 3"), {"x", "y"}) == "-x*y^2 + 3");
}

TEST_CASE("abelianize") {
  Presentation w3 = type_a_presentation(3);
  Presentation w3ab = abelianize(w3);
  CHECK(w3ab.relations == w3.relations);
  CHECK(w3ab.name == "type_A_3_ab");

  Presentation d4ab = abelianize(d4_family_presentation(1));
  REQUIRE(d4ab.relations.size() == 3);
  CHECK(d4ab.relations[2] == poly("x*y - y*x"));
  DimensionReport d = dimension(d4ab);
  CHECK(d.finite());
  CHECK(d.total == 5);

  Presentation free2 = pres("generators x, y\nrelations\n");
  Presentation comm = abelianize(free2);
  CHECK(comm.relations == std::vector<NCPoly>{poly("x*y - y*x")});
  CHECK(dimension(comm, {6, 100}).counts == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});

  CHECK(abelianize(abelianize(d4_family_presentation(2))).relations ==
        abelianize(d4_family_presentation(2)).relations);
}

TEST_CASE("is_commutative_quotient") {
  for (std::size_t d = 1; d <= 5; ++d) CHECK(is_commutative_quotient(type_a_presentation(d)));
  for (std::size_t k = 1; k <= 3; ++k)
    CHECK_FALSE(is_commutative_quotient(d4_family_presentation(k)));
  CHECK(is_commutative_quotient(pres("generators x, y\nrelations\n x*y - y*x\n")));

  Presentation inf = pres("generators x, y\nrelations\n x*y*x = y*y\n");
  if (complete(inf, {6, 10000}).truncated()) {
    try {
      is_commutative_quotient(inf, {6, 10000});
      FAIL("expected an indeterminate result");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Indeterminate);
    }
  }
}

TEST_CASE("reorder_generators keeps the algebra") {
  Presentation p = d4_family_presentation(2);
  Presentation q = reorder_generators(p, {1, 0});
  CHECK(q.generators == std::vector<std::string>{"y", "x"});
  CHECK(dimension(q).total == dimension(p).total);
  CHECK_THROWS_AS(reorder_generators(p, {0, 0}), Error);
}

}  // TEST_SUITE
