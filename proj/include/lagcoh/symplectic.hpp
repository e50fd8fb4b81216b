#pragma once

#include <optional>
#include <vector>

#include "lagcoh/groebner.hpp"
#include "lagcoh/polynomial.hpp"

namespace lagcoh {

// Weighted symplectic coordinate ring: variables ordered q_1..q_n, p_1..p_n,
// then optional auxiliary variables (Poisson-central).  Weights satisfy
// w(q_i) + w(p_i) = W for every i, so the bracket drops degree by exactly W.
struct SymplecticRing {
  RingPtr ring;
  int n = 0;
  long W = 0;

  int q_index(int i) const { return i; }        // 0-based
  int p_index(int i) const { return n + i; }
  int aux_begin() const { return 2 * n; }
  long q_weight(int i) const { return ring->weights[q_index(i)]; }
  long p_weight(int i) const { return ring->weights[p_index(i)]; }
};

// Views an existing ring whose first 2n variables are conjugate pairs.
SymplecticRing make_symplectic_ring(const RingPtr& ring, int n);

// Validates the weight pairing; aux variables get arbitrary positive weights.
SymplecticRing make_symplectic_ring(int n, const std::vector<std::string>& q_names,
                                    const std::vector<std::string>& p_names,
                                    const std::vector<long>& q_weights,
                                    const std::vector<long>& p_weights,
                                    const std::vector<std::string>& aux_names = {},
                                    const std::vector<long>& aux_weights = {});

// {f, g} = sum_i df/dp_i dg/dq_i - df/dq_i dg/dp_i, so {p_i, q_j} = delta_ij.
// Auxiliary variables are treated as constants.
Polynomial poisson_bracket(const SymplecticRing& s, const Polynomial& f, const Polynomial& g);

// Hamiltonian vector field of h applied to g; same thing as {h, g}.
Polynomial hamiltonian_field_apply(const SymplecticRing& s, const Polynomial& h,
                                   const Polynomial& g);

struct InvolutivityReport {
  bool involutive = true;
  int a = -1, b = -1;       // witness pair when not involutive
  Polynomial remainder;      // nonzero normal form of {f_a, f_b}
};

// Checks {f_a, f_b} in <gens> for all pairs, reducing against gb (computed
// from gens when absent).  First failing pair (lexicographic) is reported.
InvolutivityReport check_involutive(const SymplecticRing& s, const std::vector<Polynomial>& gens,
                                    const std::optional<GroebnerBasis>& gb = std::nullopt,
                                    const GBOptions& opts = {});

}  // namespace lagcoh
