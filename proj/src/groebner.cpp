#include "lagcoh/groebner.hpp"

#include <algorithm>

#include "gb_engine.hpp"
#include "lagcoh/errors.hpp"

namespace lagcoh {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.terms_sorted(order).front().m);
  return out;
}

GroebnerBasis groebner_basis(const RingPtr& ring, const std::vector<Polynomial>& gens,
                             MonomialOrder order, const GBOptions& opts) {
  gb::Context ctx{ring, order, opts.max_pairs, {}};
  std::vector<gb::MPoly> in;
  in.reserve(gens.size());
  for (const auto& f : gens) {
    if (f.ring() && !(*f.ring() == *ring)) throw InputError("groebner: generator in wrong ring");
    in.push_back(gb::from_polynomial(ctx, f));
  }
  std::vector<gb::MPoly> basis = gb::buchberger(ctx, std::move(in));
  GroebnerBasis out;
  out.ring = ring;
  out.order = order;
  out.gens.reserve(basis.size());
  for (const auto& g : basis) out.gens.push_back(gb::to_polynomial(ring, g));
  return out;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  gb::Context ctx{gb.ring, gb.order, 0, {}};
  std::vector<gb::MPoly> basis;
  basis.reserve(gb.gens.size());
  for (const auto& g : gb.gens) basis.push_back(gb::from_polynomial(ctx, g));
  return gb::to_polynomial(gb.ring, gb::normal_form(ctx, gb::from_polynomial(ctx, f), basis));
}

bool ideal_contains(const Polynomial& f, const GroebnerBasis& gb) {
  return normal_form(f, gb).is_zero();
}

struct ReducerImpl {
  gb::Context ctx;
  std::vector<gb::MPoly> basis;
};

Reducer::Reducer(const GroebnerBasis& gb_in) {
  auto impl = std::make_shared<ReducerImpl>();
  impl->ctx = gb::Context{gb_in.ring, gb_in.order, 0, {}};
  impl->basis.reserve(gb_in.gens.size());
  for (const auto& g : gb_in.gens) impl->basis.push_back(gb::from_polynomial(impl->ctx, g));
  impl_ = std::move(impl);
}

Polynomial Reducer::reduce(const Polynomial& f) const {
  return gb::to_polynomial(impl_->ctx.ring,
                           gb::normal_form(impl_->ctx, gb::from_polynomial(impl_->ctx, f),
                                           impl_->basis));
}

std::vector<Polynomial> eliminate_variables(const RingPtr& ring,
                                            const std::vector<Polynomial>& gens,
                                            const std::vector<int>& block, RingPtr* out_ring,
                                            const GBOptions& opts) {
  for (int b : block)
    if (b < 0 || b >= static_cast<int>(ring->nvars()))
      throw InputError("eliminate: block index out of range");

  GroebnerBasis big = groebner_basis(ring, gens, MonomialOrder::eliminate(block), opts);

  std::vector<int> keep;
  std::vector<bool> in_block(ring->nvars(), false);
  for (int b : block) in_block[b] = true;
  std::vector<std::string> names;
  std::vector<long> weights;
  for (int i = 0; i < static_cast<int>(ring->nvars()); ++i) {
    if (in_block[i]) continue;
    keep.push_back(i);
    names.push_back(ring->variables[i]);
    weights.push_back(ring->weights[i]);
  }
  RingPtr small = make_ring(std::move(names), std::move(weights));

  // Basis members free of the block variables form a basis of the
  // intersection ideal; remap them into the smaller ring.
  std::vector<Polynomial> projected;
  for (const auto& g : big.gens) {
    bool uses_block = false;
    for (const auto& t : g.terms())
      for (int b : block)
        if (t.m.exp[b] != 0) uses_block = true;
    if (uses_block) continue;
    std::vector<Term> terms;
    terms.reserve(g.terms().size());
    for (const auto& t : g.terms()) {
      Monomial m = Monomial::one(keep.size());
      for (std::size_t v = 0; v < keep.size(); ++v) m.exp[v] = t.m.exp[keep[v]];
      terms.push_back({std::move(m), t.c});
    }
    projected.push_back(Polynomial::from_terms(small, std::move(terms)));
  }
  // Re-run in the small ring under plain degrevlex; input is already a basis,
  // so this terminates immediately and just canonicalizes the output.
  GroebnerBasis reduced = groebner_basis(small, projected, MonomialOrder::degrevlex(), opts);
  if (out_ring) *out_ring = small;
  return reduced.gens;
}

}  // namespace lagcoh
