#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lagcoh/groebner.hpp"
#include "lagcoh/symplectic.hpp"

namespace lagcoh {

// Generic deformation data of the x^{n+1} singularity:
//   g = x^{n+1} + q_1 x^{n-1}... actually q_i x^{n-i}, i = 1..n,
//   F = integral_0^x g^{k+1} ds,
// in the ring [x, q_1..q_n] with weights [1, 2, .., n+1].  deg F = W.
struct SwallowtailData {
  int n = 0;
  int k = 0;
  long W = 0;
  RingPtr xring;
  Polynomial g;
  Polynomial F;
};

SwallowtailData swallowtail_data(int n, int k);  // n >= 1, k >= 0

// Polynomial map (x, q_1..q_{n-1}) -> (q_1..q_n, p_1..p_n):
//   q_i -> q_i (i < n),
//   q_n -> -(x^{n+1} + sum_{i<n} q_i x^{n-i})      (solves g = 0 for q_n),
//   p_i -> dF/dq_i with q_n substituted as above.
struct ParametrizationMap {
  RingPtr source;
  SymplecticRing target;
  std::vector<Polynomial> components;  // one per target variable, over source
};

ParametrizationMap normalization_map(int n, int k);

enum class Route { kernel, critical };
std::string to_string(Route r);

// A lagrangian variety given by a graded ideal in a symplectic ring, with the
// degrevlex Groebner basis and metadata the cohomology layer needs.
struct LagrangianPresentation {
  SymplecticRing sring;
  std::vector<Polynomial> ideal_generators;  // minimal, quasihomogeneous, ascending degree
  std::vector<long> degrees;                 // of ideal_generators
  GroebnerBasis base_gb;
  int dim = 0;  // Krull dimension of the quotient
  std::string family;                        // "swallowtail" or "curve"
  int n = 0, k = 0;
  std::string route;                          // swallowtail only
  std::optional<ParametrizationMap> normalization;
  std::string curve_text;                     // curve only: the defining equation
};

// Builds the open swallowtail ideal, either as the kernel of the pullback
// along the normalization (graph ideal + elimination of x) or by eliminating
// x from the critical-locus equations of F.  Both give the same variety.
LagrangianPresentation swallowtail_presentation(int n, int k, Route route = Route::kernel,
                                                const GBOptions& opts = {});

// Critical-route ideal for an arbitrary generating function F(x..., q...):
// eliminate the internal variables from < dF/dx_j, p_i - dF/dq_i >.
// Parameters are the non-internal variables; each gets a conjugate momentum
// named by swapping a leading 'q' for 'p' (or prefixing "p_").
std::vector<Polynomial> generating_function_ideal(const RingPtr& xq_ring, const Polynomial& F,
                                                  const std::vector<int>& internal_vars,
                                                  SymplecticRing* out_ring,
                                                  const GBOptions& opts = {});

// Plane curve {f = 0} in a 2-variable symplectic ring (first variable is the
// position coordinate, second the momentum); f must be quasihomogeneous and
// vanish at the origin.
LagrangianPresentation plane_curve(const RingPtr& ring2, const Polynomial& f,
                                   const GBOptions& opts = {});

struct ParametrizationCheck {
  bool ok = false;
  bool pullback_ok = false;
  bool jacobian_ok = false;
  std::string detail;
};

// Verifies that the map lands in the variety (every ideal generator pulls
// back to 0) and is generically immersive (Jacobian has full rank at a random
// rational point; up to three deterministic retries).
ParametrizationCheck check_parametrization(const LagrangianPresentation& variety,
                                           const ParametrizationMap& map, unsigned seed = 12345);

}  // namespace lagcoh
