#pragma once

#include <map>
#include <string>

#include "lagcoh/module.hpp"
#include "lagcoh/varieties.hpp"

namespace lagcoh {

struct DepthCertificate {
  std::string module_label;
  int ambient_vars = 0;
  int pd = 0;
  int depth = 0;  // ambient_vars - pd (Auslander-Buchsbaum over the ambient ring)
  std::vector<long> betti;
  std::vector<std::vector<long>> shifts;
  bool complete = true;
};

// The quotient ring O_L as a module over the ambient polynomial ring.
PresentedModule structure_sheaf_module(const LagrangianPresentation& variety);

// Hom(I/I^2, O_L) embedded in O_L^r via phi -> (phi[f_a])_a, presented over
// the ambient ring.  Generator degrees use the Hom grading (deg phi = delta
// iff phi[f_a] is homogeneous of degree delta + d_a).
PresentedModule conormal_dual_module(const LagrangianPresentation& variety,
                                     const GBOptions& opts = {});

// Vector fields tangent to the variety: kernel of the Jacobian pairing in
// O_L^{2n}, graded so that sum x_i d/dz_i has degree deg(x_i) - w_i.
PresentedModule tangent_module(const LagrangianPresentation& variety, const GBOptions& opts = {});

DepthCertificate depth_via_resolution(const PresentedModule& m, int max_steps = 16,
                                      const GBOptions& opts = {});

// Graded dimensions of coker(alpha), alpha : (O_L)^r -> Theta_L sending the
// class of f_a to its Hamiltonian field (degree d_a - W).  Keys are on the
// 1-form degree scale (field degree + W) so they align with the torsion table
// below.  Requires a free conormal module (complete intersection).
std::map<long, long> alpha_cokernel_dims(const LagrangianPresentation& variety,
                                         long max_form_degree, const GBOptions& opts = {});

// Graded dimensions of the torsion submodule of the Kaehler differentials of
// a plane curve: classes of 1-forms annihilated by pairing with every tangent
// field, modulo df * O_L.
std::map<long, long> omega1_torsion_dims(const LagrangianPresentation& variety,
                                         long max_form_degree, const GBOptions& opts = {});

}  // namespace lagcoh
