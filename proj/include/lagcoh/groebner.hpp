#pragma once

#include <memory>
#include <vector>

#include "lagcoh/polynomial.hpp"
#include "lagcoh/ring.hpp"

namespace lagcoh {

struct GBOptions {
  long max_pairs = 500000;  // S-pair budget before ResourceCapError
};

// Reduced Groebner basis: monic, pairwise irreducible, sorted ascending by
// leading monomial.  Unique for a given ideal and order, which makes every
// downstream artifact reproducible byte for byte.
struct GroebnerBasis {
  RingPtr ring;
  MonomialOrder order;
  std::vector<Polynomial> gens;

  std::vector<Monomial> leading_monomials() const;
};

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                             MonomialOrder order = MonomialOrder::degrevlex(),
                             const GBOptions& opts = {});

// Remainder of multivariate division by the basis; the canonical
// representative of f in the quotient ring.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Reusable normal-form engine: converts the basis once, then reduces many
// polynomials cheaply.  Immutable after construction (safe to share across
// threads).
class Reducer {
 public:
  explicit Reducer(const GroebnerBasis& gb);
  Polynomial reduce(const Polynomial& f) const;

 private:
  std::shared_ptr<const struct ReducerImpl> impl_;
};

bool ideal_contains(const Polynomial& f, const GroebnerBasis& gb);

// Intersection of the ideal with the subring on the non-block variables,
// computed with a block elimination order.  Returns the reduced degrevlex
// basis *in the smaller ring* (block variables removed); out_ring receives
// that ring.
std::vector<Polynomial> eliminate_variables(const RingPtr& ring,
                                            const std::vector<Polynomial>& gens,
                                            const std::vector<int>& block, RingPtr* out_ring,
                                            const GBOptions& opts = {});

}  // namespace lagcoh
