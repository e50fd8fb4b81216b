#include "gb_engine.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <tuple>

#include "lagcoh/errors.hpp"

namespace lagcoh::gb {

void sort_terms(const Context& ctx, MPoly& f) {
  std::stable_sort(f.begin(), f.end(),
                   [&](const MTerm& a, const MTerm& b) { return ctx.cmp(a, b) > 0; });
  MPoly out;
  out.reserve(f.size());
  for (auto& t : f) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m)
      out.back().c += t.c;
    else
      out.push_back(std::move(t));
    if (!out.empty() && out.back().c.is_zero()) out.pop_back();
  }
  f = std::move(out);
}

MPoly axpy(const Context& ctx, const MPoly& a, const MPoly& g, const Monomial& m,
           const Rational& c) {
  MPoly shifted;
  shifted.reserve(g.size());
  for (const auto& t : g) shifted.push_back({t.comp, t.m * m, t.c * c});
  // Multiplying by a fixed monomial preserves the order within a component,
  // so `shifted` is still sorted and a linear merge suffices.
  MPoly out;
  out.reserve(a.size() + shifted.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < shifted.size()) {
    int cv = ctx.cmp(a[i], shifted[j]);
    if (cv > 0) {
      out.push_back(a[i++]);
    } else if (cv < 0) {
      out.push_back(std::move(shifted[j++]));
    } else {
      Rational s = a[i].c + shifted[j].c;
      if (!s.is_zero()) out.push_back({a[i].comp, a[i].m, s});
      ++i, ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < shifted.size()) out.push_back(std::move(shifted[j++]));
  return out;
}

void primitive_normalize(MPoly& f) {
  if (f.empty()) return;
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& t : f) {
    mpz_class d = t.c.denominator();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  for (const auto& t : f) {
    mpz_class n = t.c.numerator() * (den_lcm / t.c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
  }
  if (sgn(num_gcd) == 0) return;
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  Rational s(mpq_class(f.front().c.sign() < 0 ? -scale : scale));
  for (auto& t : f) t.c *= s;
}

void make_monic(MPoly& f) {
  if (f.empty() || f.front().c.is_one()) return;
  Rational inv = inverse(f.front().c);
  for (auto& t : f) t.c *= inv;
}

MPoly normal_form(const Context& ctx, MPoly f, const std::vector<MPoly>& basis) {
  MPoly out;
  while (!f.empty()) {
    const MTerm& lt = f.front();
    const MPoly* red = nullptr;
    for (const auto& g : basis) {
      if (g.empty()) continue;
      const MTerm& gl = g.front();
      if (gl.comp == lt.comp && gl.m.divides(lt.m)) {
        red = &g;
        break;
      }
    }
    if (!red) {
      out.push_back(f.front());
      f.erase(f.begin());
      continue;
    }
    const MTerm& gl = red->front();
    f = axpy(ctx, f, *red, lt.m.divided_by(gl.m), -(lt.c / gl.c));
  }
  return out;  // popped in strictly descending order, so already sorted
}

namespace {

// S-element of two basis members with the same leading component.
MPoly spair(const Context& ctx, const MPoly& f, const MPoly& g) {
  const MTerm& lf = f.front();
  const MTerm& lg = g.front();
  Monomial l = Monomial::lcm(lf.m, lg.m);
  MPoly u;
  u.reserve(f.size());
  Monomial mf = l.divided_by(lf.m);
  Rational cf = inverse(lf.c);
  for (const auto& t : f) u.push_back({t.comp, t.m * mf, t.c * cf});
  return axpy(ctx, u, g, l.divided_by(lg.m), -inverse(lg.c));
}

}  // namespace

std::vector<MPoly> buchberger(const Context& ctx, std::vector<MPoly> inputs) {
  std::vector<MPoly> g;
  for (auto& f : inputs) {
    sort_terms(ctx, f);
    if (f.empty()) continue;
    primitive_normalize(f);
    g.push_back(std::move(f));
  }

  // Rank 1 (plain ideal) iff every term lives in component 0; the coprime-lead
  // criterion is only sound in that case.
  bool rank_one = true;
  for (const auto& f : g)
    for (const auto& t : f)
      if (t.comp != 0) rank_one = false;

  using Key = std::tuple<long, int, int>;  // (degree, i, j): unique, total
  auto pair_key = [&](int i, int j) {
    const MTerm& a = g[i].front();
    const MTerm& b = g[j].front();
    Monomial l = Monomial::lcm(a.m, b.m);
    return Key{l.weighted_degree(*ctx.ring) + ctx.shift(a.comp), i, j};
  };
  std::set<Key> queue;
  std::set<std::pair<int, int>> pending;
  auto push_pairs_for = [&](int j) {
    for (int i = 0; i < j; ++i) {
      if (g[i].front().comp != g[j].front().comp) continue;
      queue.insert(pair_key(i, j));
      pending.insert({i, j});
    }
  };
  for (int j = 0; j < static_cast<int>(g.size()); ++j) push_pairs_for(j);

  long processed = 0;
  while (!queue.empty()) {
    auto [deg, i, j] = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({i, j});
    if (++processed > ctx.max_pairs)
      throw ResourceCapError("groebner: S-pair budget of " + std::to_string(ctx.max_pairs) +
                             " exceeded");

    const MTerm& li = g[i].front();
    const MTerm& lj = g[j].front();
    Monomial l = Monomial::lcm(li.m, lj.m);
    if (rank_one) {
      // Coprime leading monomials: S-element reduces to zero.
      bool coprime = true;
      for (std::size_t v = 0; v < l.exp.size(); ++v)
        if (li.m.exp[v] > 0 && lj.m.exp[v] > 0) coprime = false;
      if (coprime) continue;
    }
    // Chain criterion: a third generator whose lead divides the lcm, with both
    // connecting pairs already handled, makes this pair redundant.
    bool redundant = false;
    for (int k = 0; k < static_cast<int>(g.size()) && !redundant; ++k) {
      if (k == i || k == j) continue;
      const MTerm& lk = g[k].front();
      if (lk.comp != li.comp || !lk.m.divides(l)) continue;
      auto mk = [&](int a, int b) { return std::pair<int, int>{std::min(a, b), std::max(a, b)}; };
      if (!pending.count(mk(i, k)) && !pending.count(mk(j, k))) redundant = true;
    }
    if (redundant) continue;

    MPoly s = normal_form(ctx, spair(ctx, g[i], g[j]), g);
    if (s.empty()) continue;
    primitive_normalize(s);
    g.push_back(std::move(s));
    push_pairs_for(static_cast<int>(g.size()) - 1);
  }

  // Minimalize: drop members whose lead is divisible by another survivor's.
  std::vector<int> order_idx(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) order_idx[i] = static_cast<int>(i);
  std::sort(order_idx.begin(), order_idx.end(), [&](int a, int b) {
    int c = ctx.cmp(g[a].front(), g[b].front());
    return c != 0 ? c < 0 : a < b;
  });
  std::vector<bool> removed(g.size(), false);
  for (int i : order_idx) {
    for (int j : order_idx) {
      if (removed[j] || j == i) continue;
      const MTerm& a = g[i].front();
      const MTerm& b = g[j].front();
      if (b.comp == a.comp && b.m.divides(a.m) && !(b.m == a.m && j > i)) {
        removed[i] = true;
        break;
      }
    }
  }
  std::vector<MPoly> minimal;
  for (int i : order_idx)
    if (!removed[i]) minimal.push_back(std::move(g[i]));

  // Tail-reduce each member against the others; leads are pairwise
  // irreducible already, so this converges in one sweep.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<MPoly> others;
    others.reserve(minimal.size() - 1);
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i] = normal_form(ctx, std::move(minimal[i]), others);
    make_monic(minimal[i]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const MPoly& a, const MPoly& b) { return ctx.cmp(a.front(), b.front()) < 0; });
  return minimal;
}

MPoly from_polynomial(const Context& ctx, const Polynomial& f, int comp) {
  MPoly out;
  out.reserve(f.terms().size());
  for (const auto& t : f.terms()) out.push_back({comp, t.m, t.c});
  sort_terms(ctx, out);
  return out;
}

Polynomial to_polynomial(const RingPtr& ring, const MPoly& f) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f) terms.push_back({t.m, t.c});
  return Polynomial::from_terms(ring, std::move(terms));
}

}  // namespace lagcoh::gb
