#include <doctest.h>

#include <map>

#include "lagcoh/derham.hpp"
#include "lagcoh/module.hpp"

using namespace lagcoh;

namespace {

Polynomial parse(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

LagrangianPresentation cusp() {
  RingPtr r = make_ring({"q1", "p1"}, {2, 3});
  return plane_curve(r, parse(r, "p1^2 - q1^3"));
}

std::vector<Monomial> ambient_slice(const RingPtr& ring, long degree) {
  GroebnerBasis empty;
  empty.ring = ring;
  empty.order = MonomialOrder::degrevlex();
  return standard_monomials(empty, degree);
}

// Independent H^1 for a principal lagrangian ideal <f>, done entirely with
// ambient linear algebra: with delta = e + d - W,
//   dim H^1(e) = dim R[delta] - rank( f*R[delta-d] + {f, R[e]} ).
// No normal forms involved, so this cross-checks the whole quotient pipeline.
long brute_h1(const LagrangianPresentation& L, long e) {
  const RingPtr& ring = L.sring.ring;
  const Polynomial& f = L.ideal_generators.at(0);
  const long d = L.degrees.at(0);
  const long delta = e + d - L.sring.W;
  std::vector<Monomial> target = ambient_slice(ring, delta);
  if (target.empty()) return 0;
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < target.size(); ++i) index[target[i].exp] = static_cast<int>(i);

  std::vector<Polynomial> spanners;
  for (const Monomial& m : ambient_slice(ring, delta - d))
    spanners.push_back(f * Polynomial::monomial(ring, m, Rational(1)));
  for (const Monomial& m : ambient_slice(ring, e))
    spanners.push_back(poisson_bracket(L.sring, f, Polynomial::monomial(ring, m, Rational(1))));

  QMatrix mat = QMatrix::Zero(static_cast<Eigen::Index>(target.size()),
                              static_cast<Eigen::Index>(spanners.size()));
  for (size_t j = 0; j < spanners.size(); ++j)
    for (const Term& t : spanners[j].terms())
      mat(index.at(t.m.exp), static_cast<Eigen::Index>(j)) = t.c;
  return static_cast<long>(target.size()) - rank(mat);
}

}  // namespace

TEST_CASE("slice degree bounds") {
  DeRhamComplex cx(cusp());
  CHECK(cx.e_min(0) == 0);
  CHECK(cx.e_min(1) == 5 - 6);       // W - d1
  CHECK(cx.default_bound() == 2 * 6 + 5 + 10);
}

TEST_CASE("cochain dimensions of a principal ideal have no conditions") {
  LagrangianPresentation L = cusp();
  DeRhamComplex cx(L);
  for (long e = -2; e <= 10; ++e)
    CHECK(cx.cochain_dim(1, e) == quotient_slice_dim(L.base_gb, e + 6 - 5));
  // r = 1 leaves no 2-tuples
  CHECK(cx.cochain_dim(2, 8) == 0);
}

TEST_CASE("H0 of the cusp is the constants") {
  DeRhamComplex cx(cusp());
  CohomologyTable t = cx.table(0, 0, 15);
  REQUIRE(t.complete);
  CHECK(t.total_h() == 1);
  CHECK(t.rows.front().e == 0);
  CHECK(t.rows.front().dim_h == 1);
}

TEST_CASE("H1 of the cusp matches the ambient brute force oracle") {
  LagrangianPresentation L = cusp();
  DeRhamComplex cx(L);
  SliceOptions opts;
  opts.check_d2 = true;
  for (long e = cx.e_min(1); e <= 12; ++e) {
    CohomologyRow row = cx.slice(1, e, opts);
    CHECK(row.dim_h == brute_h1(L, e));
  }
}

TEST_CASE("cusp H1 is concentrated in degrees -1 and 1") {
  DeRhamComplex cx(cusp());
  CohomologyTable t = cx.table(1, cx.e_min(1), 20);
  REQUIRE(t.complete);
  std::map<long, long> nonzero;
  for (const auto& row : t.rows)
    if (row.dim_h != 0) nonzero[row.e] = row.dim_h;
  CHECK(nonzero == std::map<long, long>{{-1, 1}, {1, 1}});
}

TEST_CASE("smooth curves have vanishing H1") {
  LagrangianPresentation L = swallowtail_presentation(1, 0);
  DeRhamComplex cx(L);
  CohomologyTable t1 = cx.table(1, cx.e_min(1), cx.default_bound());
  REQUIRE(t1.complete);
  CHECK(t1.all_zero());
  // and the brute oracle agrees degree by degree
  for (long e = cx.e_min(1); e <= 8; ++e) CHECK(brute_h1(L, e) == 0);
  CohomologyTable t0 = cx.table(0, 0, 10);
  CHECK(t0.total_h() == 1);
}

TEST_CASE("complete intersection slices satisfy the chain rule") {
  SymplecticRing s = make_symplectic_ring(2, {"q1", "q2"}, {"p1", "p2"}, {1, 1}, {1, 1});
  LagrangianPresentation L;
  L.sring = s;
  L.ideal_generators = {parse(s.ring, "q1"), parse(s.ring, "q2")};
  L.degrees = {1, 1};
  L.base_gb = groebner_basis(s.ring, L.ideal_generators);
  L.dim = 2;
  L.family = "curve";

  DeRhamComplex cx(L);
  // two generators: a single 2-tuple component in degree e + d1 + d2 - 2W
  for (long e = 2; e <= 6; ++e)
    CHECK(cx.cochain_dim(2, e) == quotient_slice_dim(L.base_gb, e + 1 + 1 - 4));
  SliceOptions opts;
  opts.check_d2 = true;
  for (long e = 0; e <= 6; ++e) {
    CohomologyRow r1 = cx.slice(1, e, opts);  // throws if delta o delta != 0
    CohomologyRow r2 = cx.slice(2, e, opts);
    CHECK(r1.dim_h >= 0);
    CHECK(r2.dim_h >= 0);
  }
  CohomologyTable t0 = cx.table(0, 0, 6);
  CHECK(t0.total_h() == 1);  // constants only
}

TEST_CASE("open swallowtail H0 is the constants and d2 vanishes on slices") {
  LagrangianPresentation L = swallowtail_presentation(2, 1);
  DeRhamComplex cx(L);
  CohomologyTable t0 = cx.table(0, 0, 20);
  REQUIRE(t0.complete);
  CHECK(t0.total_h() == 1);
  SliceOptions opts;
  opts.check_d2 = true;
  for (long e : {-2L, 0L, 3L, 7L, 11L}) {
    cx.slice(1, e, opts);
    cx.slice(2, e, opts);
  }
}

TEST_CASE("cohomology does not depend on the generator order") {
  LagrangianPresentation L = swallowtail_presentation(2, 1);
  LagrangianPresentation P = L;
  std::swap(P.ideal_generators[0], P.ideal_generators[2]);
  std::swap(P.degrees[0], P.degrees[2]);
  DeRhamComplex a(L), b(P);
  for (long e = -3; e <= 15; ++e) {
    CHECK(a.slice(1, e).dim_h == b.slice(1, e).dim_h);
    CHECK(a.slice(2, e).dim_h == b.slice(2, e).dim_h);
  }
}

TEST_CASE("slice cap marks rows instead of computing them") {
  LagrangianPresentation L = cusp();
  DeRhamComplex cx(L);
  SliceOptions opts;
  opts.max_slice_dim = 0;
  CohomologyRow row = cx.slice(1, 6, opts);
  CHECK(row.capped);
  CohomologyTable t = cx.table(1, 0, 8, opts);
  CHECK_FALSE(t.complete);
  CHECK_FALSE(t.all_zero());
}

TEST_CASE("parallel and sequential tables agree") {
  LagrangianPresentation L = swallowtail_presentation(2, 1);
  DeRhamComplex cx(L);
  SliceOptions seq, par;
  par.workers = 3;
  CohomologyTable a = cx.table(1, -3, 18, seq);
  CohomologyTable b = cx.table(1, -3, 18, par);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].e == b.rows[i].e);
    CHECK(a.rows[i].dim_ker == b.rows[i].dim_ker);
    CHECK(a.rows[i].dim_im == b.rows[i].dim_im);
    CHECK(a.rows[i].dim_h == b.rows[i].dim_h);
  }
}
