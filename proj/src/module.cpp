#include "lagcoh/module.hpp"

#include <algorithm>
#include <functional>

#include "gb_engine.hpp"
#include "lagcoh/errors.hpp"

namespace lagcoh {

bool ModuleVector::is_zero() const {
  return std::all_of(comp.begin(), comp.end(), [](const Polynomial& f) { return f.is_zero(); });
}

ModuleVector zero_vector(const RingPtr& ring, std::size_t rank) {
  ModuleVector v;
  v.comp.assign(rank, Polynomial::zero(ring));
  return v;
}

WeightedDegree vector_degree(const ModuleVector& v, const std::vector<long>& shifts) {
  bool any = false, homog = true;
  long top = 0;
  for (std::size_t i = 0; i < v.comp.size(); ++i) {
    const Polynomial& f = v.comp[i];
    if (f.is_zero()) continue;
    long shift = i < shifts.size() ? shifts[i] : 0;
    WeightedDegree d = f.weighted_degree();
    long val = d.value + shift;
    if (!d.homogeneous) homog = false;
    if (!any) {
      top = val;
      any = true;
    } else {
      if (val != top) homog = false;
      top = std::max(top, val);
    }
  }
  if (!any) return WeightedDegree::bottom();
  return WeightedDegree::of(top, homog);
}

namespace {

// Deterministic total order on module vectors (used only for sorting output).
int vector_compare(const ModuleVector& a, const ModuleVector& b) {
  const MonomialOrder ord = MonomialOrder::degrevlex();
  for (std::size_t i = 0; i < a.comp.size() && i < b.comp.size(); ++i) {
    const auto& ta = a.comp[i].terms();
    const auto& tb = b.comp[i].terms();
    for (std::size_t t = 0; t < ta.size() && t < tb.size(); ++t) {
      const WeightedRing& R = *a.comp[i].ring();
      if (int c = ord.compare(ta[t].m, tb[t].m, R)) return c;
      if (ta[t].c != tb[t].c) return ta[t].c < tb[t].c ? -1 : 1;
    }
    if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  }
  if (a.comp.size() != b.comp.size()) return a.comp.size() < b.comp.size() ? -1 : 1;
  return 0;
}

void sort_vectors(std::vector<ModuleVector>* vecs, const std::vector<long>& shifts) {
  std::stable_sort(vecs->begin(), vecs->end(), [&](const ModuleVector& a, const ModuleVector& b) {
    WeightedDegree da = vector_degree(a, shifts), db = vector_degree(b, shifts);
    long va = da.zero_poly ? -1 : da.value;
    long vb = db.zero_poly ? -1 : db.value;
    if (va != vb) return va < vb;
    return vector_compare(a, b) < 0;
  });
}

void make_vector_monic(ModuleVector* v) {
  for (const auto& f : v->comp) {
    if (f.is_zero()) continue;
    Rational lead = f.leading_term().c;
    if (!lead.is_one())
      for (auto& g : v->comp) g = g.scaled(inverse(lead));
    return;
  }
}

}  // namespace

std::vector<ModuleVector> syzygies(const RingPtr& ring, std::size_t rank,
                                   const std::vector<ModuleVector>& vecs,
                                   const std::vector<Polynomial>& base_ideal,
                                   const std::vector<long>& target_shifts, const GBOptions& opts) {
  const int s = static_cast<int>(rank);
  const int m = static_cast<int>(vecs.size());
  for (const auto& v : vecs)
    if (v.rank() != rank) throw InputError("syzygies: vector rank mismatch");

  gb::Context ctx{ring, MonomialOrder::degrevlex(), opts.max_pairs, {}};
  ctx.comp_shifts.assign(static_cast<std::size_t>(s + m), 0);
  for (int i = 0; i < s; ++i)
    if (i < static_cast<int>(target_shifts.size())) ctx.comp_shifts[i] = target_shifts[i];
  for (int a = 0; a < m; ++a) {
    WeightedDegree d = vector_degree(vecs[a], target_shifts);
    ctx.comp_shifts[s + a] = d.zero_poly ? 0 : d.value;
  }

  // Augmented vectors (v_a, e_a) plus base multiples of the target unit
  // vectors; a position-over-term basis then eliminates the first block.
  std::vector<gb::MPoly> inputs;
  for (int a = 0; a < m; ++a) {
    gb::MPoly f;
    for (int i = 0; i < s; ++i)
      for (const auto& t : vecs[a].comp[i].terms()) f.push_back({i, t.m, t.c});
    f.push_back({s + a, Monomial::one(ring->nvars()), Rational(1)});
    gb::sort_terms(ctx, f);
    inputs.push_back(std::move(f));
  }
  for (const auto& b : base_ideal) {
    if (b.is_zero()) continue;
    for (int i = 0; i < s; ++i) inputs.push_back(gb::from_polynomial(ctx, b, i));
  }

  std::vector<gb::MPoly> basis = gb::buchberger(ctx, std::move(inputs));

  std::vector<ModuleVector> rows;
  for (const auto& g : basis) {
    bool pure = std::all_of(g.begin(), g.end(), [&](const gb::MTerm& t) { return t.comp >= s; });
    if (!pure) continue;
    ModuleVector row = zero_vector(ring, static_cast<std::size_t>(m));
    for (const auto& t : g) {
      int a = t.comp - s;
      row.comp[a] += Polynomial::monomial(ring, t.m, t.c);
    }
    if (row.is_zero()) continue;
    make_vector_monic(&row);
    rows.push_back(std::move(row));
  }
  std::vector<long> row_shifts(ctx.comp_shifts.begin() + s, ctx.comp_shifts.end());
  sort_vectors(&rows, row_shifts);
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  return rows;
}

std::vector<ModuleVector> kernel_of_module_map(const RingPtr& ring,
                                               const std::vector<ModuleVector>& rows,
                                               const std::vector<Polynomial>& base_ideal,
                                               const std::vector<long>& row_shifts,
                                               const GBOptions& opts) {
  if (rows.empty()) throw InputError("kernel: empty matrix");
  const std::size_t cols = rows.front().rank();
  for (const auto& r : rows)
    if (r.rank() != cols) throw InputError("kernel: ragged matrix");
  std::vector<ModuleVector> columns;
  columns.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    ModuleVector col = zero_vector(ring, rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) col.comp[i] = rows[i].comp[j];
    columns.push_back(std::move(col));
  }
  return syzygies(ring, rows.size(), columns, base_ideal, row_shifts, opts);
}

std::vector<int> minimal_generators(const RingPtr& ring, std::size_t rank,
                                    const std::vector<ModuleVector>& vecs,
                                    const std::vector<Polynomial>& base_ideal,
                                    const std::vector<long>& shifts, const GBOptions& opts) {
  const int s = static_cast<int>(rank);
  std::vector<int> order(vecs.size());
  for (std::size_t i = 0; i < vecs.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    WeightedDegree da = vector_degree(vecs[a], shifts), db = vector_degree(vecs[b], shifts);
    long va = da.zero_poly ? -1 : da.value;
    long vb = db.zero_poly ? -1 : db.value;
    if (va != vb) return va < vb;
    if (int c = vector_compare(vecs[a], vecs[b])) return c < 0;
    return a < b;
  });

  gb::Context ctx{ring, MonomialOrder::degrevlex(), opts.max_pairs, {}};
  for (int i = 0; i < s; ++i)
    ctx.comp_shifts.push_back(i < static_cast<int>(shifts.size()) ? shifts[i] : 0);

  std::vector<int> kept;
  std::vector<gb::MPoly> kept_inputs;
  for (const auto& b : base_ideal) {
    if (b.is_zero()) continue;
    for (int i = 0; i < s; ++i) kept_inputs.push_back(gb::from_polynomial(ctx, b, i));
  }
  std::vector<gb::MPoly> kept_gb = gb::buchberger(ctx, kept_inputs);

  for (int idx : order) {
    if (vecs[idx].is_zero()) continue;
    gb::MPoly cand;
    for (int i = 0; i < s; ++i)
      for (const auto& t : vecs[idx].comp[i].terms()) cand.push_back({i, t.m, t.c});
    gb::sort_terms(ctx, cand);
    if (gb::normal_form(ctx, cand, kept_gb).empty()) continue;  // already generated
    kept.push_back(idx);
    kept_inputs.push_back(std::move(cand));
    kept_gb = gb::buchberger(ctx, kept_inputs);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

PresentedModule minimize_presentation(PresentedModule m) {
  for (;;) {
    int ri = -1, t = -1;
    for (std::size_t i = 0; i < m.relations.size() && ri < 0; ++i)
      for (std::size_t u = 0; u < m.relations[i].comp.size(); ++u) {
        const Polynomial& e = m.relations[i].comp[u];
        if (!e.is_zero() && e.is_constant()) {
          ri = static_cast<int>(i);
          t = static_cast<int>(u);
          break;
        }
      }
    if (ri < 0) break;

    ModuleVector pivot = m.relations[ri];
    Rational c0 = pivot.comp[t].leading_term().c;
    m.relations.erase(m.relations.begin() + ri);
    for (auto& row : m.relations) {
      if (row.comp[t].is_zero()) continue;
      Polynomial factor = row.comp[t].scaled(inverse(c0));
      for (std::size_t u = 0; u < row.comp.size(); ++u) row.comp[u] -= factor * pivot.comp[u];
    }
    for (auto& row : m.relations) row.comp.erase(row.comp.begin() + t);
    m.relations.erase(std::remove_if(m.relations.begin(), m.relations.end(),
                                     [](const ModuleVector& v) { return v.is_zero(); }),
                      m.relations.end());
    m.generator_degrees.erase(m.generator_degrees.begin() + t);
    if (!m.embedding.empty()) m.embedding.erase(m.embedding.begin() + t);
    m.rank -= 1;
  }
  return m;
}

FreeResolution minimal_free_resolution(const PresentedModule& m_in, int max_steps,
                                       const GBOptions& opts) {
  PresentedModule m = minimize_presentation(m_in);
  const RingPtr& ring = m.ring;
  FreeResolution res;
  res.betti.push_back(m.rank);
  res.shifts.push_back(m.generator_degrees);

  std::vector<ModuleVector> rows = m.relations;
  std::vector<long> shifts = m.generator_degrees;
  for (const auto& r : rows)
    if (static_cast<int>(r.rank()) != m.rank) throw InputError("resolution: ragged presentation");

  for (int step = 0; step < max_steps; ++step) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const ModuleVector& v) { return v.is_zero(); }),
               rows.end());
    if (rows.empty()) return res;  // free tail: resolution complete

    std::vector<int> keep = minimal_generators(ring, shifts.size(), rows, {}, shifts, opts);
    std::vector<ModuleVector> mingens;
    std::vector<long> row_degs;
    for (int i : keep) {
      WeightedDegree d = vector_degree(rows[i], shifts);
      if (!d.homogeneous)
        throw InputError("resolution: presentation is not graded (row " + std::to_string(i) + ")");
      mingens.push_back(rows[i]);
      row_degs.push_back(d.value);
    }
    res.maps.push_back(mingens);
    res.betti.push_back(static_cast<long>(mingens.size()));
    res.shifts.push_back(row_degs);

    rows = syzygies(ring, shifts.size(), mingens, {}, shifts, opts);
    shifts = row_degs;
  }
  res.complete = false;
  return res;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  const WeightedRing& R = *gb.ring;
  const std::size_t n = R.nvars();
  std::vector<Monomial> lms = gb.leading_monomials();

  Monomial cur = Monomial::one(n);
  std::function<void(std::size_t, long)> rec = [&](std::size_t var, long remaining) {
    if (var + 1 == n) {
      if (remaining % R.weights[var] != 0) return;
      cur.exp[var] = static_cast<int>(remaining / R.weights[var]);
      bool reducible = std::any_of(lms.begin(), lms.end(),
                                   [&](const Monomial& l) { return l.divides(cur); });
      if (!reducible) out.push_back(cur);
      cur.exp[var] = 0;
      return;
    }
    for (long e = 0; e * R.weights[var] <= remaining; ++e) {
      cur.exp[var] = static_cast<int>(e);
      rec(var + 1, remaining - e * R.weights[var]);
    }
    cur.exp[var] = 0;
  };
  rec(0, degree);

  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    return gb.order.compare(a, b, R) < 0;
  });
  return out;
}

long quotient_slice_dim(const GroebnerBasis& gb, long degree) {
  return static_cast<long>(standard_monomials(gb, degree).size());
}

int krull_dimension(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring->nvars();
  if (n > 24) throw InputError("krull_dimension: too many variables for subset search");
  std::vector<unsigned> supports;
  for (const auto& lm : gb.leading_monomials()) {
    unsigned mask = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (lm.exp[i] > 0) mask |= 1u << i;
    supports.push_back(mask);
  }
  int best = -1;
  for (unsigned s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (unsigned sup : supports)
      if ((sup & ~s) == 0) {  // support contained in s: leading term survives
        independent = false;
        break;
      }
    if (!independent) continue;
    best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

}  // namespace lagcoh
