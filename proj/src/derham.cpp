#include "lagcoh/derham.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "lagcoh/errors.hpp"

namespace lagcoh {

bool CohomologyTable::all_zero() const {
  if (!complete) return false;
  return std::all_of(rows.begin(), rows.end(),
                     [](const CohomologyRow& r) { return !r.capped && r.dim_h == 0; });
}

long CohomologyTable::total_h() const {
  long t = 0;
  for (const auto& r : rows)
    if (!r.capped) t += r.dim_h;
  return t;
}

struct DeRhamComplex::FreeBasis {
  std::vector<const std::vector<Monomial>*> monos;  // one slice per tuple
  std::vector<long> offsets;
  long dim = 0;
};

DeRhamComplex::DeRhamComplex(LagrangianPresentation variety, const GBOptions& opts)
    : L_(std::move(variety)),
      con_(conormal_presentation(L_, opts)),
      br_(bracket_structure(L_, opts)),
      reducer_(L_.base_gb) {
  const int r = static_cast<int>(L_.ideal_generators.size());
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) pairs_.push_back({a, b});
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b)
      for (int c = b + 1; c < r; ++c) triples_.push_back({a, b, c});
}

const std::vector<Monomial>& DeRhamComplex::ol_slice(long degree) const {
  static const std::vector<Monomial> empty;
  if (degree < 0) return empty;
  std::lock_guard<std::mutex> lock(cache_mu_);
  auto it = ol_cache_.find(degree);
  if (it == ol_cache_.end())
    it = ol_cache_.emplace(degree, standard_monomials(L_.base_gb, degree)).first;
  return it->second;
}

long DeRhamComplex::e_min(int p) const {
  if (p <= 0) return 0;
  const auto& d = L_.degrees;
  if (static_cast<int>(d.size()) < p) return 0;
  std::vector<long> sorted = d;
  std::sort(sorted.rbegin(), sorted.rend());
  long top = 0;
  for (int i = 0; i < p; ++i) top += sorted[i];
  return static_cast<long>(p) * L_.sring.W - top;
}

long DeRhamComplex::default_bound() const {
  long dmax = 0;
  for (long d : L_.degrees) dmax = std::max(dmax, d);
  return 2 * dmax + L_.sring.W + 10;
}

DeRhamComplex::FreeBasis DeRhamComplex::free_basis(int p, long e) const {
  const auto& d = L_.degrees;
  const long W = L_.sring.W;
  FreeBasis fb;
  auto push = [&](long deg) {
    const auto& slice = ol_slice(deg);
    fb.offsets.push_back(fb.dim);
    fb.monos.push_back(&slice);
    fb.dim += static_cast<long>(slice.size());
  };
  switch (p) {
    case 0:
      push(e);
      break;
    case 1:
      for (std::size_t a = 0; a < d.size(); ++a) push(e + d[a] - W);
      break;
    case 2:
      for (const auto& pr : pairs_) push(e + d[pr[0]] + d[pr[1]] - 2 * W);
      break;
    case 3:
      for (const auto& tr : triples_) push(e + d[tr[0]] + d[tr[1]] + d[tr[2]] - 3 * W);
      break;
    default:
      throw InputError("cochain level out of range");
  }
  return fb;
}

long DeRhamComplex::free_dim(int p, long e) const { return free_basis(p, e).dim; }

namespace {

long mono_index(const std::vector<Monomial>& slice, const Monomial& m, const WeightedRing& R) {
  const MonomialOrder ord = MonomialOrder::degrevlex();
  auto it = std::lower_bound(slice.begin(), slice.end(), m,
                             [&](const Monomial& a, const Monomial& b) {
                               return ord.compare(a, b, R) < 0;
                             });
  if (it == slice.end() || !(*it == m))
    throw InputError("slice assembly: normal form left the expected basis");
  return static_cast<long>(it - slice.begin());
}

}  // namespace

QMatrix DeRhamComplex::condition_matrix(int p, long e) const {
  const WeightedRing& R = *L_.sring.ring;
  const auto& d = L_.degrees;
  const long W = L_.sring.W;
  const int s = static_cast<int>(con_.relations.size());
  FreeBasis fb = free_basis(p, e);

  // Row blocks and a writer that scatters a reduced polynomial into one block.
  std::vector<const std::vector<Monomial>*> blocks;
  std::vector<long> block_offset;
  long nrows = 0;
  auto add_block = [&](long deg) {
    const auto& slice = ol_slice(deg);
    block_offset.push_back(nrows);
    blocks.push_back(&slice);
    nrows += static_cast<long>(slice.size());
  };
  if (p == 1) {
    for (int j = 0; j < s; ++j) add_block(e + con_.row_degrees[j] - W);
  } else if (p == 2) {
    for (int j = 0; j < s; ++j)
      for (std::size_t b = 0; b < d.size(); ++b)
        add_block(e + con_.row_degrees[j] + d[b] - 2 * W);
  } else {
    throw InputError("condition matrix only defined for p = 1, 2");
  }

  QMatrix K = QMatrix::Constant(nrows, fb.dim, Rational(0));
  auto scatter = [&](int block, const Polynomial& val, long col, int sign) {
    for (const auto& t : val.terms()) {
      long row = block_offset[block] + mono_index(*blocks[block], t.m, R);
      K(row, col) += sign > 0 ? t.c : -t.c;
    }
  };

  if (p == 1) {
    for (std::size_t a = 0; a < d.size(); ++a) {
      const auto& monos = *fb.monos[a];
      for (std::size_t mi = 0; mi < monos.size(); ++mi) {
        long col = fb.offsets[a] + static_cast<long>(mi);
        for (int j = 0; j < s; ++j) {
          Polynomial v =
              reducer_.reduce(con_.relations[j].comp[a].times_monomial(monos[mi], Rational(1)));
          scatter(j, v, col, +1);
        }
      }
    }
  } else {
    const int r = static_cast<int>(d.size());
    for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
      int u = pairs_[pi][0], v = pairs_[pi][1];
      const auto& monos = *fb.monos[pi];
      for (std::size_t mi = 0; mi < monos.size(); ++mi) {
        long col = fb.offsets[pi] + static_cast<long>(mi);
        for (int j = 0; j < s; ++j) {
          Polynomial ru =
              reducer_.reduce(con_.relations[j].comp[u].times_monomial(monos[mi], Rational(1)));
          Polynomial rv =
              reducer_.reduce(con_.relations[j].comp[v].times_monomial(monos[mi], Rational(1)));
          scatter(j * r + v, ru, col, +1);   // hat h_{uv} = +m seen by column b = v
          scatter(j * r + u, rv, col, -1);   // hat h_{vu} = -m seen by column b = u
        }
      }
    }
  }
  return K;
}

QMatrix DeRhamComplex::differential_matrix(int p, long e) const {
  const WeightedRing& R = *L_.sring.ring;
  const RingPtr& ring = L_.sring.ring;
  const auto& f = L_.ideal_generators;
  const int r = static_cast<int>(f.size());
  FreeBasis src = free_basis(p, e);
  FreeBasis dst = free_basis(p + 1, e);

  QMatrix D = QMatrix::Constant(dst.dim, src.dim, Rational(0));
  auto scatter = [&](std::size_t block, const Polynomial& val, long col) {
    for (const auto& t : val.terms()) {
      long row = dst.offsets[block] + mono_index(*dst.monos[block], t.m, R);
      D(row, col) += t.c;
    }
  };
  auto pb_with = [&](int a, const Monomial& m) {
    return poisson_bracket(L_.sring, f[a], Polynomial::monomial(ring, m, Rational(1)));
  };

  if (p == 0) {
    const auto& monos = *src.monos[0];
    for (std::size_t mi = 0; mi < monos.size(); ++mi) {
      long col = static_cast<long>(mi);
      for (int a = 0; a < r; ++a) scatter(a, reducer_.reduce(-pb_with(a, monos[mi])), col);
    }
  } else if (p == 1) {
    for (int a = 0; a < r; ++a) {
      const auto& monos = *src.monos[a];
      for (std::size_t mi = 0; mi < monos.size(); ++mi) {
        const Monomial& m = monos[mi];
        long col = src.offsets[a] + static_cast<long>(mi);
        Polynomial mono = Polynomial::monomial(ring, m, Rational(1));
        for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
          int u = pairs_[pi][0], v = pairs_[pi][1];
          Polynomial val = br_.nf[u][v][a] * mono;  // structure term c_{uv}^a phi_a
          if (v == a) val -= pb_with(u, m);
          if (u == a) val += pb_with(v, m);
          if (!val.is_zero()) scatter(pi, reducer_.reduce(val), col);
        }
      }
    }
  } else if (p == 2) {
    for (std::size_t pi = 0; pi < pairs_.size(); ++pi) {
      int u = pairs_[pi][0], v = pairs_[pi][1];
      const auto& monos = *src.monos[pi];
      for (std::size_t mi = 0; mi < monos.size(); ++mi) {
        const Monomial& m = monos[mi];
        long col = src.offsets[pi] + static_cast<long>(mi);
        Polynomial mono = Polynomial::monomial(ring, m, Rational(1));
        for (std::size_t ti = 0; ti < triples_.size(); ++ti) {
          int A = triples_[ti][0], B = triples_[ti][1], C = triples_[ti][2];
          Polynomial val = Polynomial::zero(ring);
          // Hamiltonian terms, with psi hat supported on the pair (u, v).
          if (B == u && C == v) val -= pb_with(A, m);
          if (A == u && C == v) val += pb_with(B, m);
          if (A == u && B == v) val -= pb_with(C, m);
          // +sum_t c_{AB}^t psi^_{tC} - sum_t c_{AC}^t psi^_{tB}
          // +sum_t c_{BC}^t psi^_{tA}
          if (C == v) val += br_.nf[A][B][u] * mono;
          if (C == u) val -= br_.nf[A][B][v] * mono;
          if (B == v) val -= br_.nf[A][C][u] * mono;
          if (B == u) val += br_.nf[A][C][v] * mono;
          if (A == v) val += br_.nf[B][C][u] * mono;
          if (A == u) val -= br_.nf[B][C][v] * mono;
          if (!val.is_zero()) scatter(ti, reducer_.reduce(val), col);
        }
      }
    }
  } else {
    throw InputError("differential only assembled for p = 0, 1, 2");
  }
  return D;
}

CohomologyRow DeRhamComplex::slice(int p, long e, const SliceOptions& opts) const {
  if (p < 0 || p > 2) throw InputError("cohomology level must be 0, 1 or 2");
  CohomologyRow row;
  row.e = e;

  for (int q = std::max(0, p - 1); q <= p + 1; ++q)
    if (free_dim(q, e) > opts.max_slice_dim) {
      row.capped = true;
      return row;
    }

  QMatrix Zp;  // C^p(e) inside the free tuple space
  long dim_cp = 0;
  if (p == 0) {
    dim_cp = free_dim(0, e);
    Zp = QMatrix::Identity(dim_cp, dim_cp);
  } else {
    Zp = kernel_basis(condition_matrix(p, e));
    dim_cp = static_cast<long>(Zp.cols());
  }

  QMatrix Dp = differential_matrix(p, e);
  QMatrix DpZ = Dp * Zp;
  row.dim_ker = dim_cp - rank(DpZ);

  if (p > 0) {
    QMatrix Zprev;
    if (p - 1 == 0) {
      long n0 = free_dim(0, e);
      Zprev = QMatrix::Identity(n0, n0);
    } else {
      Zprev = kernel_basis(condition_matrix(p - 1, e));
    }
    QMatrix DprevZ = differential_matrix(p - 1, e) * Zprev;
    row.dim_im = rank(DprevZ);
    if (opts.check_d2) {
      QMatrix comp = Dp * DprevZ;
      for (Eigen::Index i = 0; i < comp.rows(); ++i)
        for (Eigen::Index j = 0; j < comp.cols(); ++j)
          if (!comp(i, j).is_zero())
            throw InputError("delta o delta != 0 at level " + std::to_string(p) + ", degree " +
                             std::to_string(e));
    }
  }
  row.dim_h = row.dim_ker - row.dim_im;
  return row;
}

long DeRhamComplex::cochain_dim(int p, long e) const {
  if (p == 0) return free_dim(0, e);
  if (p == 3 || p > 3) {
    // Only needed by tests for degenerate cases; conditions above p=2 are not
    // assembled, so report the free dimension for an empty relation set.
    if (con_.relations.empty()) return free_dim(p, e);
    throw InputError("cochain_dim: conditions above p=2 not assembled");
  }
  if (con_.relations.empty()) return free_dim(p, e);
  return free_dim(p, e) - rank(condition_matrix(p, e));
}

CohomologyTable DeRhamComplex::table(int p, long e_lo, long e_hi, const SliceOptions& opts) const {
  CohomologyTable t;
  t.p = p;
  t.e_lo = e_lo;
  t.e_hi = e_hi;
  if (e_hi < e_lo) return t;
  const std::size_t count = static_cast<std::size_t>(e_hi - e_lo + 1);
  t.rows.resize(count);

  int workers = std::max(1, opts.workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i)
      t.rows[i] = slice(p, e_lo + static_cast<long>(i), opts);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    auto work = [&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          t.rows[i] = slice(p, e_lo + static_cast<long>(i), opts);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
  }
  t.complete = std::none_of(t.rows.begin(), t.rows.end(),
                            [](const CohomologyRow& r) { return r.capped; });
  return t;
}

}  // namespace lagcoh
