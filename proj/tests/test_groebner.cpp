#include <doctest.h>

#include "lagcoh/errors.hpp"
#include "lagcoh/groebner.hpp"

using namespace lagcoh;

namespace {

Polynomial parse(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

}  // namespace

TEST_CASE("reduced basis of a principal ideal is the monic generator") {
  RingPtr r = make_ring({"q1", "p1"}, {2, 3});
  GroebnerBasis gb = groebner_basis(r, {parse(r, "9*p1^2 + 16*q1^3")});
  REQUIRE(gb.gens.size() == 1);
  CHECK(gb.gens[0] == parse(r, "q1^3 + 9/16*p1^2"));
}

TEST_CASE("normal form reduces modulo the ideal") {
  RingPtr r = make_ring({"q1", "p1"}, {2, 3});
  GroebnerBasis gb = groebner_basis(r, {parse(r, "9*p1^2 + 16*q1^3")});
  // q1^3 = -9/16 p1^2 in the quotient
  CHECK(normal_form(parse(r, "q1^3"), gb) == parse(r, "-9/16*p1^2"));
  CHECK(normal_form(parse(r, "p1^2"), gb) == parse(r, "p1^2"));
  CHECK(normal_form(parse(r, "9*p1^2 + 16*q1^3"), gb).is_zero());
  CHECK(ideal_contains(parse(r, "q1^3*p1 + 9/16*p1^3"), gb));
  CHECK_FALSE(ideal_contains(parse(r, "p1"), gb));
}

TEST_CASE("buchberger closes the twisted cubic style ideal") {
  // <x^2 - y, x^3 - z> with weights making it quasihomogeneous
  RingPtr r = make_ring({"x", "y", "z"}, {1, 2, 3});
  GroebnerBasis gb = groebner_basis(r, {parse(r, "x^2 - y"), parse(r, "x^3 - z")});
  CHECK(ideal_contains(parse(r, "x*y - z"), gb));
  CHECK(ideal_contains(parse(r, "y^3 - z^2"), gb));
  CHECK(normal_form(parse(r, "y^3"), gb) == parse(r, "z^2"));
}

TEST_CASE("reduced basis is canonical regardless of generator order") {
  RingPtr r = make_ring({"x", "y", "z"}, {1, 2, 3});
  std::vector<Polynomial> gens = {parse(r, "x^2 - y"), parse(r, "x^3 - z"),
                                  parse(r, "x*y - z")};
  GroebnerBasis a = groebner_basis(r, gens);
  std::reverse(gens.begin(), gens.end());
  GroebnerBasis b = groebner_basis(r, gens);
  REQUIRE(a.gens.size() == b.gens.size());
  for (size_t i = 0; i < a.gens.size(); ++i) CHECK(a.gens[i] == b.gens[i]);
}

TEST_CASE("zero generators are dropped and the unit ideal collapses") {
  RingPtr r = make_ring({"x"}, {1});
  GroebnerBasis gb = groebner_basis(r, {Polynomial::zero(r)});
  CHECK(gb.gens.empty());
  GroebnerBasis unit = groebner_basis(r, {parse(r, "x + 1"), parse(r, "x")});
  REQUIRE(unit.gens.size() == 1);
  CHECK(unit.gens[0] == Polynomial::constant(r, Rational(1)));
}

TEST_CASE("reducer matches normal_form") {
  RingPtr r = make_ring({"x", "y", "z"}, {1, 2, 3});
  GroebnerBasis gb = groebner_basis(r, {parse(r, "x^2 - y"), parse(r, "x^3 - z")});
  Reducer red(gb);
  for (const char* t : {"x^7", "y^3 + z*x", "x^2*y^2*z^2", "0"}) {
    Polynomial f = parse(r, t);
    CHECK(red.reduce(f) == normal_form(f, gb));
  }
}

TEST_CASE("elimination projects onto the subring") {
  // x^2 + q1 = 0, p1 = x  =>  q1 + p1^2 = 0
  RingPtr r = make_ring({"q1", "p1", "x"}, {2, 1, 1});
  std::vector<Polynomial> gens = {parse(r, "x^2 + q1"), parse(r, "p1 - x")};
  RingPtr small;
  std::vector<Polynomial> elim = eliminate_variables(r, gens, {2}, &small);
  REQUIRE(elim.size() == 1);
  REQUIRE(small->nvars() == 2);
  CHECK(small->variables == std::vector<std::string>{"q1", "p1"});
  CHECK(elim[0] == parse(small, "q1 + p1^2"));
}

TEST_CASE("eliminating everything leaves constants only when the ideal is trivial") {
  RingPtr r = make_ring({"x", "y"}, {1, 1});
  RingPtr small;
  std::vector<Polynomial> elim =
      eliminate_variables(r, {parse(r, "x - y")}, {0}, &small);
  CHECK(elim.empty());  // <x - y> contains no y-only polynomials
}

TEST_CASE("pair budget throws a resource cap error") {
  RingPtr r = make_ring({"x", "y", "z"}, {1, 1, 1});
  GBOptions opts;
  opts.max_pairs = 1;
  CHECK_THROWS_AS(groebner_basis(r,
                                 {parse(r, "x^2*y - z^3 + x*z"), parse(r, "y^2*z - x^3 + y*z"),
                                  parse(r, "z^2*x - y^3 + x*y")},
                                 MonomialOrder::degrevlex(), opts),
                  ResourceCapError);
}

TEST_CASE("normal form is linear over the quotient") {
  RingPtr r = make_ring({"x", "y"}, {1, 1});
  GroebnerBasis gb = groebner_basis(r, {parse(r, "x^2 - y^2")});
  Polynomial f = parse(r, "x^3 + x*y");
  Polynomial g = parse(r, "y^3 - x");
  CHECK(normal_form(f + g, gb) == normal_form(f, gb) + normal_form(g, gb));
}
