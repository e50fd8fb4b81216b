#include <doctest.h>

#include "lagcoh/errors.hpp"
#include "lagcoh/varieties.hpp"

using namespace lagcoh;

namespace {

Polynomial parse(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

}  // namespace

TEST_CASE("deformation data of the fold at k=1") {
  SwallowtailData d = swallowtail_data(1, 1);
  CHECK(d.W == 5);
  CHECK(d.xring->variables == std::vector<std::string>{"x", "q1"});
  CHECK(d.xring->weights == std::vector<long>{1, 2});
  CHECK(d.g == parse(d.xring, "x^2 + q1"));
  CHECK(d.F == parse(d.xring, "1/5*x^5 + 2/3*q1*x^3 + q1^2*x"));
}

TEST_CASE("deformation data degrees scale with k") {
  SwallowtailData d = swallowtail_data(2, 3);
  CHECK(d.W == 13);
  WeightedDegree degF = d.F.weighted_degree();
  CHECK(degF.homogeneous);
  CHECK(degF.value == 13);
  CHECK_THROWS_AS(swallowtail_data(0, 1), InputError);
  CHECK_THROWS_AS(swallowtail_data(1, -1), InputError);
}

TEST_CASE("normalization of the 1-parameter swallowtail") {
  ParametrizationMap map = normalization_map(1, 1);
  REQUIRE(map.components.size() == 2);
  CHECK(map.source->variables == std::vector<std::string>{"x"});
  CHECK(map.components[0] == parse(map.source, "-x^2"));
  CHECK(map.components[1] == parse(map.source, "-4/3*x^3"));
}

TEST_CASE("normalization components are quasihomogeneous of the variable degrees") {
  ParametrizationMap map = normalization_map(2, 1);
  REQUIRE(map.components.size() == 4);
  for (size_t j = 0; j < map.components.size(); ++j) {
    WeightedDegree d = map.components[j].weighted_degree();
    CHECK(d.homogeneous);
    CHECK(d.value == map.target.ring->weights[j]);
  }
}

TEST_CASE("swallowtail n=1 k=1 is the cusp curve") {
  LagrangianPresentation L = swallowtail_presentation(1, 1);
  REQUIRE(L.ideal_generators.size() == 1);
  // <9 p1^2 + 16 q1^3> up to the unit 16
  CHECK(L.ideal_generators[0] == parse(L.sring.ring, "q1^3 + 9/16*p1^2"));
  CHECK(L.degrees == std::vector<long>{6});
  CHECK(L.dim == 1);
  CHECK(L.sring.W == 5);
}

TEST_CASE("swallowtail n=1 k=0 is the smooth parabola") {
  LagrangianPresentation L = swallowtail_presentation(1, 0);
  REQUIRE(L.ideal_generators.size() == 1);
  CHECK(L.ideal_generators[0] == parse(L.sring.ring, "q1 + p1^2"));
  CHECK(L.dim == 1);
}

TEST_CASE("open swallowtail n=2 k=1") {
  LagrangianPresentation L = swallowtail_presentation(2, 1);
  CHECK(L.sring.W == 7);
  CHECK(L.sring.ring->variables == std::vector<std::string>{"q1", "q2", "p1", "p2"});
  CHECK(L.sring.ring->weights == std::vector<long>{2, 3, 5, 4});
  CHECK(L.degrees == std::vector<long>{8, 9, 10});
  CHECK(L.dim == 2);
  CHECK(L.family == "swallowtail");
}

TEST_CASE("both construction routes give the same ideal") {
  for (auto [n, k] : {std::pair{1, 1}, std::pair{2, 1}}) {
    LagrangianPresentation a = swallowtail_presentation(n, k, Route::kernel);
    LagrangianPresentation b = swallowtail_presentation(n, k, Route::critical);
    REQUIRE(a.base_gb.gens.size() == b.base_gb.gens.size());
    for (size_t i = 0; i < a.base_gb.gens.size(); ++i)
      CHECK(a.base_gb.gens[i] == b.base_gb.gens[i]);
  }
}

TEST_CASE("critical route of a trivial generating function") {
  // F = x q: dF/dx = q, p - dF/dq = p - x; eliminating x leaves <q>
  RingPtr r = make_ring({"x", "q"}, {1, 1});
  SymplecticRing out;
  std::vector<Polynomial> ideal =
      generating_function_ideal(r, parse(r, "x*q"), {0}, &out);
  REQUIRE(ideal.size() == 1);
  CHECK(ideal[0] == Polynomial::variable(out.ring, 0));
  CHECK(out.ring->variables == std::vector<std::string>{"q", "p_q"});
}

TEST_CASE("generating function must be quasihomogeneous") {
  RingPtr r = make_ring({"x", "q"}, {1, 1});
  SymplecticRing out;
  CHECK_THROWS_AS(generating_function_ideal(r, parse(r, "x^2*q + q"), {0}, &out), InputError);
}

TEST_CASE("plane curve presentation") {
  RingPtr r = make_ring({"q", "p"}, {2, 3});
  LagrangianPresentation L = plane_curve(r, parse(r, "p^2 - q^3"));
  REQUIRE(L.ideal_generators.size() == 1);
  CHECK(L.degrees == std::vector<long>{6});
  CHECK(L.dim == 1);
  CHECK(L.family == "curve");
  CHECK(L.sring.W == 5);
}

TEST_CASE("plane curve rejects bad input") {
  RingPtr r = make_ring({"q", "p"}, {2, 3});
  CHECK_THROWS_AS(plane_curve(r, parse(r, "p^2 - q^3 + q")), InputError);   // inhomogeneous
  CHECK_THROWS_AS(plane_curve(r, parse(r, "0")), InputError);
  RingPtr r3 = make_ring({"q", "p", "t"}, {2, 3, 1});
  CHECK_THROWS_AS(plane_curve(r3, parse(r3, "p^2 - q^3")), InputError);     // not 2 variables
}

TEST_CASE("parametrization check accepts the real normalization") {
  LagrangianPresentation L = swallowtail_presentation(2, 1);
  REQUIRE(L.normalization.has_value());
  ParametrizationCheck chk = check_parametrization(L, *L.normalization);
  CHECK(chk.ok);
  CHECK(chk.pullback_ok);
  CHECK(chk.jacobian_ok);
}

TEST_CASE("parametrization check rejects a wrong map") {
  LagrangianPresentation L = swallowtail_presentation(1, 1);
  REQUIRE(L.normalization.has_value());
  ParametrizationMap bad = *L.normalization;
  bad.components[0] += parse(bad.source, "x^2");
  ParametrizationCheck chk = check_parametrization(L, bad);
  CHECK_FALSE(chk.ok);
  CHECK_FALSE(chk.pullback_ok);
}

TEST_CASE("swallowtail varieties carry their normalization") {
  LagrangianPresentation L = swallowtail_presentation(1, 1);
  REQUIRE(L.normalization.has_value());
  CHECK(L.normalization->components[0] == parse(L.normalization->source, "-x^2"));
}
