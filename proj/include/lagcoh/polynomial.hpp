#pragma once

#include <string>
#include <vector>

#include "lagcoh/rational.hpp"
#include "lagcoh/ring.hpp"

namespace lagcoh {

struct Term {
  Monomial m;
  Rational c;
  bool operator==(const Term& o) const = default;
};

// Sparse multivariate polynomial over Q, tied to a WeightedRing.
//
// Terms are stored with nonzero coefficients, sorted descending under the
// ring's canonical order (weighted degrevlex).  That invariant makes equality,
// hashing-by-string and serialization deterministic.
class Polynomial {
 public:
  Polynomial() = default;  // null placeholder; only assignment is legal on it

  static Polynomial zero(RingPtr ring);
  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial variable(RingPtr ring, int index);
  static Polynomial monomial(RingPtr ring, Monomial m, const Rational& c);
  // Builds from an arbitrary term list (merges duplicates, drops zeros).
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  // Leading data under the canonical order.
  const Term& leading_term() const;  // pre: nonzero
  // Term list re-sorted descending under another order.
  std::vector<Term> terms_sorted(const MonomialOrder& order) const;

  WeightedDegree weighted_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial times_monomial(const Monomial& m, const Rational& c) const;
  Polynomial pow(unsigned e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // d/dx_i.
  Polynomial derivative(int var) const;
  // Definite integral from 0 in variable var:  x^e -> x^{e+1}/(e+1), applied
  // termwise; the result vanishes at var = 0.
  Polynomial integrate_from_zero(int var) const;

  // Ring map: variable i goes to images[i] (all in the target ring).
  Polynomial substitute(const RingPtr& target, const std::vector<Polynomial>& images) const;
  Rational evaluate(const std::vector<Rational>& point) const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;

  void normalize();  // sort canonically, merge, drop zeros
};

// Text syntax: terms joined with +/-, factors joined with '*', powers with
// '^', rational coefficients as "3" or "3/7", parentheses allowed.
// Example: "3/7*x^2*q1 - p2".
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);
std::string to_string(const Polynomial& f);

}  // namespace lagcoh
