#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lagcoh/groebner.hpp"
#include "lagcoh/polynomial.hpp"

namespace lagcoh {

// Element of a free module R^rank with polynomial entries.
struct ModuleVector {
  std::vector<Polynomial> comp;

  std::size_t rank() const { return comp.size(); }
  bool is_zero() const;
  bool operator==(const ModuleVector& o) const = default;
};

ModuleVector zero_vector(const RingPtr& ring, std::size_t rank);

// Weighted degree of a vector whose component i is shifted by shifts[i]
// (empty shifts = all zero): deg(v) = deg(v_i) + shifts[i], which must agree
// across nonzero components for a homogeneous vector.
WeightedDegree vector_degree(const ModuleVector& v, const std::vector<long>& shifts = {});

// Generators of the relation module { c in R^m : sum_a c_a v_a in base*R^rank }
// over the ambient ring.  With an empty base this is the plain syzygy module
// of the vectors.  Rows are monic and sorted by (degree, term order); entries
// are *not* reduced modulo base (they must stay ambient generators, e.g. for
// resolutions) -- reduce at the call site when canonical quotient
// representatives are wanted.
std::vector<ModuleVector> syzygies(const RingPtr& ring, std::size_t rank,
                                   const std::vector<ModuleVector>& vecs,
                                   const std::vector<Polynomial>& base_ideal = {},
                                   const std::vector<long>& target_shifts = {},
                                   const GBOptions& opts = {});

// Kernel of the module map R^{cols} -> R^{rows} given by matrix rows, taken
// modulo base on the target.  Equals the syzygy module of the matrix columns.
std::vector<ModuleVector> kernel_of_module_map(const RingPtr& ring,
                                               const std::vector<ModuleVector>& rows,
                                               const std::vector<Polynomial>& base_ideal = {},
                                               const std::vector<long>& row_shifts = {},
                                               const GBOptions& opts = {});

// Greedy minimal generating set over the graded local situation: walk the
// vectors by ascending degree and keep those not generated by the kept ones
// (modulo base).  Returns indices into vecs, ascending.
std::vector<int> minimal_generators(const RingPtr& ring, std::size_t rank,
                                    const std::vector<ModuleVector>& vecs,
                                    const std::vector<Polynomial>& base_ideal = {},
                                    const std::vector<long>& shifts = {},
                                    const GBOptions& opts = {});

// Finitely presented graded module over the ambient ring:
// coker( R(-relation degrees)^? -> sum_i R(-generator_degrees[i]) ).
// When the module was carved out of a free module R^embed_rank (kernels,
// submodules), `embedding` records the generators as concrete vectors.
struct PresentedModule {
  RingPtr ring;
  int rank = 0;
  std::vector<long> generator_degrees;
  std::vector<ModuleVector> relations;  // each row has size rank
  std::string label;

  int embed_rank = 0;
  std::vector<long> embed_shifts;
  std::vector<ModuleVector> embedding;
  std::vector<Polynomial> base_ideal;
};

// Minimal graded free resolution 0 <- M <- F_0 <- F_1 <- ... over the ambient
// polynomial ring.  maps[i] rows express the generators of F_{i+1} in the
// coordinates of F_i; betti[i] = rank F_i; shifts[i] = generator degrees.
struct FreeResolution {
  std::vector<long> betti;
  std::vector<std::vector<long>> shifts;
  std::vector<std::vector<ModuleVector>> maps;
  bool complete = true;

  int pd() const { return static_cast<int>(betti.size()) - 1; }
};

// Removes redundant generators (graded Nakayama: a relation with a unit entry
// lets that generator be rewritten in the others) and the used-up relations.
// Resolutions start from this minimal shape so Betti numbers are honest.
PresentedModule minimize_presentation(PresentedModule m);

FreeResolution minimal_free_resolution(const PresentedModule& m, int max_steps = 16,
                                       const GBOptions& opts = {});

// Monomials of the given weighted degree outside the leading-term ideal: a
// basis of the quotient's graded slice.  Sorted ascending in the ring order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, long degree);
long quotient_slice_dim(const GroebnerBasis& gb, long degree);

// Krull dimension of R/I from the leading-term ideal: the largest coordinate
// subspace missed by every leading monomial's support.
int krull_dimension(const GroebnerBasis& gb);

}  // namespace lagcoh
