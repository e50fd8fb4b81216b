#include "lagcoh/symplectic.hpp"

#include "lagcoh/errors.hpp"

namespace lagcoh {

SymplecticRing make_symplectic_ring(int n, const std::vector<std::string>& q_names,
                                    const std::vector<std::string>& p_names,
                                    const std::vector<long>& q_weights,
                                    const std::vector<long>& p_weights,
                                    const std::vector<std::string>& aux_names,
                                    const std::vector<long>& aux_weights) {
  if (n <= 0) throw InputError("symplectic ring: n must be positive");
  if (static_cast<int>(q_names.size()) != n || static_cast<int>(p_names.size()) != n ||
      static_cast<int>(q_weights.size()) != n || static_cast<int>(p_weights.size()) != n)
    throw InputError("symplectic ring: need n names and weights for q and p");
  long W = q_weights[0] + p_weights[0];
  for (int i = 0; i < n; ++i)
    if (q_weights[i] + p_weights[i] != W)
      throw InputError("symplectic ring: w(q_i)+w(p_i) must be the same for all i");

  std::vector<std::string> names = q_names;
  names.insert(names.end(), p_names.begin(), p_names.end());
  names.insert(names.end(), aux_names.begin(), aux_names.end());
  std::vector<long> weights = q_weights;
  weights.insert(weights.end(), p_weights.begin(), p_weights.end());
  weights.insert(weights.end(), aux_weights.begin(), aux_weights.end());

  SymplecticRing s;
  s.ring = make_ring(std::move(names), std::move(weights));
  s.n = n;
  s.W = W;
  return s;
}

SymplecticRing make_symplectic_ring(const RingPtr& ring, int n) {
  if (!ring) throw InputError("symplectic ring: null ring");
  if (n <= 0 || 2 * static_cast<size_t>(n) > ring->nvars())
    throw InputError("symplectic ring: ring too small for n conjugate pairs");
  long W = ring->weights[0] + ring->weights[n];
  for (int i = 0; i < n; ++i)
    if (ring->weights[i] + ring->weights[n + i] != W)
      throw InputError("symplectic ring: w(q_i)+w(p_i) must be the same for all i");
  SymplecticRing s;
  s.ring = ring;
  s.n = n;
  s.W = W;
  return s;
}

Polynomial poisson_bracket(const SymplecticRing& s, const Polynomial& f, const Polynomial& g) {
  Polynomial acc = Polynomial::zero(s.ring);
  for (int i = 0; i < s.n; ++i) {
    acc += f.derivative(s.p_index(i)) * g.derivative(s.q_index(i));
    acc -= f.derivative(s.q_index(i)) * g.derivative(s.p_index(i));
  }
  return acc;
}

Polynomial hamiltonian_field_apply(const SymplecticRing& s, const Polynomial& h,
                                   const Polynomial& g) {
  return poisson_bracket(s, h, g);
}

InvolutivityReport check_involutive(const SymplecticRing& s, const std::vector<Polynomial>& gens,
                                    const std::optional<GroebnerBasis>& gb, const GBOptions& opts) {
  GroebnerBasis basis =
      gb ? *gb : groebner_basis(s.ring, gens, MonomialOrder::degrevlex(), opts);
  InvolutivityReport rep;
  rep.remainder = Polynomial::zero(s.ring);
  for (int a = 0; a < static_cast<int>(gens.size()); ++a)
    for (int b = a + 1; b < static_cast<int>(gens.size()); ++b) {
      Polynomial r = normal_form(poisson_bracket(s, gens[a], gens[b]), basis);
      if (!r.is_zero()) {
        rep.involutive = false;
        rep.a = a;
        rep.b = b;
        rep.remainder = r;
        return rep;
      }
    }
  return rep;
}

}  // namespace lagcoh
