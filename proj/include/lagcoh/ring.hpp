#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace lagcoh {

// Polynomial ring over Q with named variables carrying positive integer
// weights.  Everything downstream (term orders, gradings, slice bases) reads
// the weights from here.
struct WeightedRing {
  std::vector<std::string> variables;
  std::vector<long> weights;

  std::size_t nvars() const { return variables.size(); }
  int index_of(const std::string& name) const;  // -1 when absent
  bool operator==(const WeightedRing& o) const = default;
};

using RingPtr = std::shared_ptr<const WeightedRing>;

// Validates: at least one variable, unique nonempty names, positive weights.
RingPtr make_ring(std::vector<std::string> variables, std::vector<long> weights);

// Exponent vector; one entry per ring variable, same order as the ring.
struct Monomial {
  std::vector<int> exp;

  static Monomial one(std::size_t nvars) { return Monomial{std::vector<int>(nvars, 0)}; }
  bool is_one() const;
  long total_degree() const;
  long weighted_degree(const WeightedRing& ring) const;
  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;        // true iff *this | o
  Monomial divided_by(const Monomial& d) const;  // pre: d.divides(*this)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial& o) const = default;
};

// Monomial orders used by the engine.
//
//  - WDegRevLex: weighted degree first, reverse lexicographic tie-break
//    (canonical order; polynomial storage is sorted descending under it).
//  - Elimination: block order that ranks any monomial containing a block
//    variable above all block-free ones; weighted degrevlex inside each block.
struct MonomialOrder {
  enum class Kind { WDegRevLex, Elimination };
  Kind kind = Kind::WDegRevLex;
  std::vector<int> block;  // eliminated variable indices, ascending (Elimination only)

  static MonomialOrder degrevlex() { return MonomialOrder{}; }
  static MonomialOrder eliminate(std::vector<int> block_vars);

  // +1 when a is larger, -1 when b is larger, 0 when equal.
  int compare(const Monomial& a, const Monomial& b, const WeightedRing& ring) const;
  bool operator==(const MonomialOrder& o) const = default;
};

// Weighted degree of a polynomial.  The zero polynomial gets the bottom
// element; inhomogeneous polynomials report the maximum term degree and a
// cleared homogeneity flag.
struct WeightedDegree {
  bool zero_poly = false;
  bool homogeneous = false;
  long value = 0;  // meaningless when zero_poly is set

  static WeightedDegree bottom() { return WeightedDegree{true, false, 0}; }
  static WeightedDegree of(long v, bool homog) { return WeightedDegree{false, homog, v}; }
  bool operator==(const WeightedDegree& o) const = default;
};

}  // namespace lagcoh
