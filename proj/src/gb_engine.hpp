#pragma once

// Shared Buchberger engine.  Works on elements of a free module R^rank with
// a position-over-term order (lower component index wins, ties broken by the
// ring's monomial order).  Plain ideals are the comp==0 special case, so ideal
// and module Groebner bases, normal forms, eliminations and syzygies all run
// through this one code path.
//
// Internal header; the public API re-exports through groebner.hpp/module.hpp.

#include <vector>

#include "lagcoh/polynomial.hpp"
#include "lagcoh/ring.hpp"

namespace lagcoh::gb {

struct MTerm {
  int comp = 0;
  Monomial m;
  Rational c;
};

// Terms sorted strictly descending under the module order.
using MPoly = std::vector<MTerm>;

struct Context {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::degrevlex();
  long max_pairs = 500000;
  // Degree shift per component (used only by the selection strategy; safe to
  // leave empty for ungraded input).
  std::vector<long> comp_shifts;

  long shift(int comp) const {
    return comp < static_cast<int>(comp_shifts.size()) ? comp_shifts[comp] : 0;
  }
  // Order on terms (coefficients ignored): +1 when a is larger.
  int cmp(const MTerm& a, const MTerm& b) const {
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return order.compare(a.m, b.m, *ring);
  }
};

// Restores the sorted-merged invariant on an arbitrary term list.
void sort_terms(const Context& ctx, MPoly& f);

// a + c * (m * g), all inputs sorted.
MPoly axpy(const Context& ctx, const MPoly& a, const MPoly& g, const Monomial& m,
           const Rational& c);

// Clears denominators, divides by integer content, makes the leading
// coefficient positive.  Keeps coefficient sizes tame during the run.
void primitive_normalize(MPoly& f);
void make_monic(MPoly& f);

// Fully reduces f against basis (leading and lower terms).
MPoly normal_form(const Context& ctx, MPoly f, const std::vector<MPoly>& basis);

// Reduced Groebner basis: pairwise irreducible, monic, sorted ascending by
// leading term.  Throws ResourceCapError past ctx.max_pairs S-pairs.
std::vector<MPoly> buchberger(const Context& ctx, std::vector<MPoly> inputs);

// Polynomial <-> rank-1 element conversions.
MPoly from_polynomial(const Context& ctx, const Polynomial& f, int comp = 0);
Polynomial to_polynomial(const RingPtr& ring, const MPoly& f);  // pre: single component

}  // namespace lagcoh::gb
