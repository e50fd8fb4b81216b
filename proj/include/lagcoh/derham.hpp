#pragma once

#include <array>
#include <map>
#include <mutex>
#include <vector>

#include "lagcoh/algebroid.hpp"
#include "lagcoh/linalg.hpp"
#include "lagcoh/varieties.hpp"

namespace lagcoh {

struct CohomologyRow {
  long e = 0;
  long dim_ker = 0;  // dim ker(delta^p) inside C^p(e)
  long dim_im = 0;   // dim im(delta^{p-1}) in C^p(e)
  long dim_h = 0;
  bool capped = false;
};

struct CohomologyTable {
  int p = 0;
  long e_lo = 0, e_hi = 0;
  std::vector<CohomologyRow> rows;
  bool complete = true;  // false when a slice hit a resource cap

  bool all_zero() const;
  long total_h() const;
};

struct SliceOptions {
  int workers = 1;
  long max_slice_dim = 4000;  // per-degree cap on any free tuple space
  bool check_d2 = false;      // verify delta o delta = 0 on every slice
};

// The cochain complex of a lagrangian variety in graded slices.
//
// C^p(e) consists of alternating p-tuples (indexed by the ideal generators)
// with entries in the quotient ring, component (a_1..a_p) homogeneous of
// degree e + d_{a_1} + ... + d_{a_p} - pW, cut out by the conormal relation
// conditions.  The differential combines Hamiltonian derivatives along the
// generators with the bracket structure constants and preserves e.
//
// Every slice is finite dimensional; kernels, images and cohomology are
// computed by exact rational linear algebra on the slice bases.
class DeRhamComplex {
 public:
  explicit DeRhamComplex(LagrangianPresentation variety, const GBOptions& opts = {});

  const LagrangianPresentation& variety() const { return L_; }
  const ConormalPresentation& conormal() const { return con_; }
  const BracketStructure& brackets() const { return br_; }

  // Below e_min(p) every component slice of C^p is forced to zero.
  long e_min(int p) const;
  // Default verification bound: 2 max(d_a) + W + 10.
  long default_bound() const;

  // Free tuple-space dimension before conditions (used by caps and tests).
  long free_dim(int p, long e) const;
  // dim C^p(e) after imposing the conormal conditions.
  long cochain_dim(int p, long e) const;

  CohomologyRow slice(int p, long e, const SliceOptions& opts = {}) const;
  CohomologyTable table(int p, long e_lo, long e_hi, const SliceOptions& opts = {}) const;

 private:
  LagrangianPresentation L_;
  ConormalPresentation con_;
  BracketStructure br_;
  Reducer reducer_;
  std::vector<std::array<int, 2>> pairs_;    // a < b
  std::vector<std::array<int, 3>> triples_;  // a < b < c

  mutable std::mutex cache_mu_;
  mutable std::map<long, std::vector<Monomial>> ol_cache_;

  const std::vector<Monomial>& ol_slice(long degree) const;

  struct FreeBasis;
  FreeBasis free_basis(int p, long e) const;
  QMatrix condition_matrix(int p, long e) const;  // p = 1, 2
  QMatrix differential_matrix(int p, long e) const;  // p = 0, 1, 2
};

}  // namespace lagcoh
