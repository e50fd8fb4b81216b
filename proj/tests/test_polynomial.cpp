#include <doctest.h>

#include "lagcoh/errors.hpp"
#include "lagcoh/polynomial.hpp"

using namespace lagcoh;

namespace {

RingPtr xq_ring() { return make_ring({"x", "q1", "q2"}, {1, 2, 3}); }

Polynomial parse(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

}  // namespace

TEST_CASE("ring construction validates input") {
  CHECK_THROWS_AS(make_ring({}, {}), InputError);
  CHECK_THROWS_AS(make_ring({"x", "x"}, {1, 1}), InputError);
  CHECK_THROWS_AS(make_ring({"x"}, {0}), InputError);
  CHECK_THROWS_AS(make_ring({"x"}, {1, 2}), InputError);
  RingPtr r = xq_ring();
  CHECK(r->index_of("q2") == 2);
  CHECK(r->index_of("y") == -1);
}

TEST_CASE("addition and subtraction") {
  RingPtr r = make_ring({"x", "y"}, {1, 1});
  Polynomial sum = parse(r, "x + y") + parse(r, "x - y");
  CHECK(to_string(sum) == "2*x");
  Polynomial zero = parse(r, "x + y") - parse(r, "x + y");
  CHECK(zero.is_zero());
  CHECK(to_string(zero) == "0");
}

TEST_CASE("multiplication") {
  RingPtr r = make_ring({"x"}, {1});
  CHECK(to_string(parse(r, "x + 1") * parse(r, "x - 1")) == "x^2 - 1");
  CHECK(to_string(parse(r, "x + 1") * Polynomial::zero(r)) == "0");
  Polynomial p = parse(r, "x^2 + 2*x + 1");
  CHECK(p == parse(r, "x + 1").pow(2));
  CHECK(parse(r, "x + 1").pow(0) == Polynomial::constant(r, Rational(1)));
}

TEST_CASE("derivative") {
  RingPtr r = xq_ring();
  Polynomial f = parse(r, "x^3 + q1*x + q2");
  CHECK(f.derivative(0) == parse(r, "3*x^2 + q1"));
  CHECK(parse(r, "q1^2*x").derivative(1) == parse(r, "2*q1*x"));
  CHECK(parse(r, "q2").derivative(0).is_zero());
}

TEST_CASE("integration from zero in one variable") {
  RingPtr r = xq_ring();
  CHECK(parse(r, "x^2 + q1").integrate_from_zero(0) == parse(r, "1/3*x^3 + q1*x"));
  // the n=1 generating function at k=1
  Polynomial g = parse(r, "x^2 + q1");
  Polynomial F = (g * g).integrate_from_zero(0);
  CHECK(F == parse(r, "1/5*x^5 + 2/3*q1*x^3 + q1^2*x"));
}

TEST_CASE("square of a cubic integrates term by term") {
  RingPtr r = xq_ring();
  Polynomial g = parse(r, "x^3 + q1*x + q2");
  Polynomial F = (g * g).integrate_from_zero(0);
  CHECK(F == parse(r, "1/7*x^7 + 2/5*q1*x^5 + 1/2*q2*x^4 + 1/3*q1^2*x^3 + q1*q2*x^2 + q2^2*x"));
}

TEST_CASE("weighted degree") {
  RingPtr r = xq_ring();
  Polynomial g = parse(r, "x^2 + q1");
  WeightedDegree d = g.weighted_degree();
  CHECK(d.homogeneous);
  CHECK(d.value == 2);
  // x^3 + q1 x + q2 is quasihomogeneous of degree 3 for weights 1,2,3
  WeightedDegree d3 = parse(r, "x^3 + q1*x + q2").weighted_degree();
  CHECK(d3.homogeneous);
  CHECK(d3.value == 3);
  CHECK_FALSE(parse(r, "x + q1").weighted_degree().homogeneous);
  CHECK(Polynomial::zero(r).weighted_degree().zero_poly);
}

TEST_CASE("substitution") {
  RingPtr src = make_ring({"t"}, {1});
  RingPtr dst = make_ring({"u", "v"}, {1, 1});
  Polynomial f = parse(src, "t^2 + 2*t");
  std::vector<Polynomial> images = {parse(dst, "u + v")};
  Polynomial g = f.substitute(dst, images);
  CHECK(g == parse(dst, "u^2 + 2*u*v + v^2 + 2*u + 2*v"));
}

TEST_CASE("evaluation at a rational point") {
  RingPtr r = make_ring({"x", "y"}, {1, 1});
  Polynomial f = parse(r, "x^2*y - 3*x + 1/2");
  std::vector<Rational> pt = {Rational(2), Rational(1, 2)};
  CHECK(f.evaluate(pt) == Rational(2) - Rational(6) + Rational(1, 2));
}

TEST_CASE("parser round trips through the printer") {
  RingPtr r = xq_ring();
  for (const char* text : {"x", "0", "7", "-3/4", "x^2 - 1", "q1*q2 + x^5",
                           "1/7*x^7 + 2/5*q1*x^5 - q2^2*x"}) {
    Polynomial f = parse(r, text);
    CHECK(parse(r, to_string(f)) == f);
  }
}

TEST_CASE("parser rejects malformed input") {
  RingPtr r = xq_ring();
  CHECK_THROWS_AS(parse(r, "y + 1"), InputError);
  CHECK_THROWS_AS(parse(r, "x +"), InputError);
  CHECK_THROWS_AS(parse(r, "x ^ -2"), InputError);
  CHECK_THROWS_AS(parse(r, "(x"), InputError);
  CHECK_THROWS_AS(parse(r, ""), InputError);
}

TEST_CASE("parser handles nesting and unary minus") {
  RingPtr r = xq_ring();
  CHECK(parse(r, "-(x - q1)*(x + q1)") == parse(r, "q1^2 - x^2"));
  CHECK(parse(r, "-x^2") == Polynomial::zero(r) - parse(r, "x^2"));
  CHECK(parse(r, "2*(x + 1) - (x + 1) - (x + 1)").is_zero());
}

TEST_CASE("canonical term order sorts by weighted degree then revlex") {
  RingPtr r = make_ring({"q", "p"}, {2, 3});
  // q^3 and p^2 both have degree 6; revlex puts the p-free monomial first
  Polynomial f = parse(r, "p^2 - q^3");
  REQUIRE(f.terms().size() == 2);
  CHECK(f.terms()[0].m.exp == std::vector<int>{3, 0});
  CHECK(f.terms()[0].c == Rational(-1));
  CHECK(to_string(f) == "-q^3 + p^2");
}

TEST_CASE("leading term of the zero polynomial throws") {
  RingPtr r = xq_ring();
  CHECK_THROWS(Polynomial::zero(r).leading_term());
}
