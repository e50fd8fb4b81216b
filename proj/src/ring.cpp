#include "lagcoh/ring.hpp"

#include <algorithm>
#include <set>

#include "lagcoh/errors.hpp"

namespace lagcoh {

int WeightedRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < variables.size(); ++i)
    if (variables[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(std::vector<std::string> variables, std::vector<long> weights) {
  if (variables.empty()) throw InputError("ring: needs at least one variable");
  if (variables.size() != weights.size())
    throw InputError("ring: variable/weight count mismatch");
  std::set<std::string> seen;
  for (const auto& v : variables) {
    if (v.empty()) throw InputError("ring: empty variable name");
    if (!seen.insert(v).second) throw InputError("ring: duplicate variable '" + v + "'");
  }
  for (long w : weights)
    if (w <= 0) throw InputError("ring: weights must be positive");
  auto r = std::make_shared<WeightedRing>();
  r->variables = std::move(variables);
  r->weights = std::move(weights);
  return r;
}

bool Monomial::is_one() const {
  return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
}

long Monomial::total_degree() const {
  long d = 0;
  for (int e : exp) d += e;
  return d;
}

long Monomial::weighted_degree(const WeightedRing& ring) const {
  long d = 0;
  for (std::size_t i = 0; i < exp.size(); ++i) d += static_cast<long>(exp[i]) * ring.weights[i];
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] += o.exp[i];
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& d) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] -= d.exp[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exp.size(); ++i) r.exp[i] = std::max(a.exp[i], b.exp[i]);
  return r;
}

MonomialOrder MonomialOrder::eliminate(std::vector<int> block_vars) {
  std::sort(block_vars.begin(), block_vars.end());
  MonomialOrder o;
  o.kind = Kind::Elimination;
  o.block = std::move(block_vars);
  return o;
}

namespace {

// Reverse-lexicographic tie-break over the listed variable indices: the
// monomial whose last differing exponent is *smaller* is the larger one.
int revlex_on(const Monomial& a, const Monomial& b, const std::vector<int>& vars) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    int i = *it;
    if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
  }
  return 0;
}

long wdeg_on(const Monomial& m, const WeightedRing& ring, const std::vector<int>& vars) {
  long d = 0;
  for (int i : vars) d += static_cast<long>(m.exp[i]) * ring.weights[i];
  return d;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, const WeightedRing& ring) const {
  if (kind == Kind::WDegRevLex) {
    long da = a.weighted_degree(ring), db = b.weighted_degree(ring);
    if (da != db) return da > db ? 1 : -1;
    for (int i = static_cast<int>(ring.nvars()) - 1; i >= 0; --i)
      if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? 1 : -1;
    return 0;
  }
  // Elimination: compare on the block first, then on the remaining variables.
  std::vector<int> rest;
  rest.reserve(ring.nvars() - block.size());
  {
    std::size_t bi = 0;
    for (int i = 0; i < static_cast<int>(ring.nvars()); ++i) {
      if (bi < block.size() && block[bi] == i) {
        ++bi;
        continue;
      }
      rest.push_back(i);
    }
  }
  long da = wdeg_on(a, ring, block), db = wdeg_on(b, ring, block);
  if (da != db) return da > db ? 1 : -1;
  if (int c = revlex_on(a, b, block)) return c;
  da = wdeg_on(a, ring, rest);
  db = wdeg_on(b, ring, rest);
  if (da != db) return da > db ? 1 : -1;
  return revlex_on(a, b, rest);
}

}  // namespace lagcoh
