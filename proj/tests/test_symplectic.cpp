#include <doctest.h>

#include <random>

#include "lagcoh/errors.hpp"
#include "lagcoh/symplectic.hpp"

using namespace lagcoh;

namespace {

Polynomial parse(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

SymplecticRing ring21() {
  return make_symplectic_ring(2, {"q1", "q2"}, {"p1", "p2"}, {2, 3}, {5, 4});
}

// deterministic random polynomial supported in low degrees
Polynomial random_poly(const SymplecticRing& s, std::mt19937& rng) {
  std::uniform_int_distribution<int> expd(0, 2), coeffd(-4, 4);
  std::vector<Term> terms;
  for (int t = 0; t < 4; ++t) {
    Monomial m = Monomial::one(s.ring->nvars());
    for (size_t i = 0; i < s.ring->nvars(); ++i) m.exp[i] = expd(rng);
    terms.push_back({m, Rational(coeffd(rng))});
  }
  return Polynomial::from_terms(s.ring, std::move(terms));
}

}  // namespace

TEST_CASE("weight pairing is validated") {
  CHECK_THROWS_AS(make_symplectic_ring(2, {"q1", "q2"}, {"p1", "p2"}, {2, 3}, {5, 5}),
                  InputError);
  SymplecticRing s = ring21();
  CHECK(s.W == 7);
  CHECK(s.q_weight(1) == 3);
  CHECK(s.p_weight(1) == 4);
}

TEST_CASE("canonical brackets") {
  SymplecticRing s = make_symplectic_ring(1, {"q1"}, {"p1"}, {2}, {3});
  CHECK(poisson_bracket(s, parse(s.ring, "p1"), parse(s.ring, "q1")) ==
        Polynomial::constant(s.ring, Rational(1)));
  CHECK(poisson_bracket(s, parse(s.ring, "q1"), parse(s.ring, "p1")) ==
        Polynomial::constant(s.ring, Rational(-1)));
  CHECK(poisson_bracket(s, parse(s.ring, "q1"), parse(s.ring, "q1")).is_zero());
  CHECK(poisson_bracket(s, parse(s.ring, "p1*q1"), parse(s.ring, "q1")) ==
        parse(s.ring, "q1"));
}

TEST_CASE("bracket in two pairs") {
  SymplecticRing s = ring21();
  CHECK(poisson_bracket(s, parse(s.ring, "p2"), parse(s.ring, "q2")) ==
        Polynomial::constant(s.ring, Rational(1)));
  CHECK(poisson_bracket(s, parse(s.ring, "p1"), parse(s.ring, "q2")).is_zero());
  // {p1 p2, q1 q2} = p2 q2 + p1 q1
  CHECK(poisson_bracket(s, parse(s.ring, "p1*p2"), parse(s.ring, "q1*q2")) ==
        parse(s.ring, "q2*p2 + q1*p1"));
}

TEST_CASE("bracket drops weighted degree by W") {
  SymplecticRing s = ring21();
  Polynomial f = parse(s.ring, "q1*p1^2");  // degree 12
  Polynomial g = parse(s.ring, "q1^2*p2");  // degree 8
  Polynomial h = poisson_bracket(s, f, g);
  REQUIRE(!h.is_zero());
  WeightedDegree d = h.weighted_degree();
  CHECK(d.homogeneous);
  CHECK(d.value == 12 + 8 - s.W);
}

TEST_CASE("bracket satisfies Leibniz and Jacobi on random inputs") {
  SymplecticRing s = ring21();
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 100; ++trial) {
    Polynomial f = random_poly(s, rng), g = random_poly(s, rng), h = random_poly(s, rng);
    // Leibniz: {f, g h} = {f, g} h + g {f, h}
    CHECK(poisson_bracket(s, f, g * h) ==
          poisson_bracket(s, f, g) * h + g * poisson_bracket(s, f, h));
    // Jacobi: {f,{g,h}} + {g,{h,f}} + {h,{f,g}} = 0
    Polynomial jac = poisson_bracket(s, f, poisson_bracket(s, g, h)) +
                     poisson_bracket(s, g, poisson_bracket(s, h, f)) +
                     poisson_bracket(s, h, poisson_bracket(s, f, g));
    CHECK(jac.is_zero());
  }
}

TEST_CASE("hamiltonian field application matches the bracket") {
  SymplecticRing s = ring21();
  Polynomial h = parse(s.ring, "q1*p1");
  Polynomial g = parse(s.ring, "q1^2");
  CHECK(hamiltonian_field_apply(s, h, g) == poisson_bracket(s, h, g));
}

TEST_CASE("involutivity check finds the failing pair") {
  SymplecticRing s = make_symplectic_ring(1, {"q1"}, {"p1"}, {2}, {3});
  // {p1, q1} = 1 is not in <q1, p1>
  InvolutivityReport rep = check_involutive(s, {parse(s.ring, "q1"), parse(s.ring, "p1")});
  CHECK_FALSE(rep.involutive);
  CHECK(rep.a == 0);
  CHECK(rep.b == 1);
  CHECK(rep.remainder == Polynomial::constant(s.ring, Rational(-1)));
}

TEST_CASE("principal ideals are involutive") {
  SymplecticRing s = make_symplectic_ring(1, {"q1"}, {"p1"}, {2}, {3});
  InvolutivityReport rep = check_involutive(s, {parse(s.ring, "p1^2 + q1^3")});
  CHECK(rep.involutive);
}

TEST_CASE("aux variables act as constants") {
  SymplecticRing s =
      make_symplectic_ring(1, {"q1"}, {"p1"}, {2}, {3}, {"t"}, {1});
  Polynomial f = parse(s.ring, "t*p1");
  CHECK(poisson_bracket(s, f, parse(s.ring, "q1")) == parse(s.ring, "t"));
  CHECK(poisson_bracket(s, parse(s.ring, "t"), parse(s.ring, "q1*p1")).is_zero());
}
