#include "lagcoh/varieties.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "lagcoh/errors.hpp"
#include "lagcoh/linalg.hpp"
#include "lagcoh/module.hpp"

namespace lagcoh {

SwallowtailData swallowtail_data(int n, int k) {
  if (n < 1) throw InputError("swallowtail: n must be >= 1");
  if (k < 0) throw InputError("swallowtail: k must be >= 0");
  SwallowtailData d;
  d.n = n;
  d.k = k;
  std::vector<std::string> names{"x"};
  std::vector<long> weights{1};
  for (int i = 1; i <= n; ++i) {
    names.push_back("q" + std::to_string(i));
    weights.push_back(i + 1);
  }
  d.xring = make_ring(std::move(names), std::move(weights));
  Polynomial x = Polynomial::variable(d.xring, 0);
  d.g = x.pow(static_cast<unsigned>(n + 1));
  for (int i = 1; i <= n; ++i)
    d.g += Polynomial::variable(d.xring, i) * x.pow(static_cast<unsigned>(n - i));
  d.F = d.g.pow(static_cast<unsigned>(k + 1)).integrate_from_zero(0);
  d.W = static_cast<long>(k + 1) * (n + 1) + 1;
  return d;
}

namespace {

SymplecticRing swallowtail_target(int n, long W) {
  std::vector<std::string> qn, pn;
  std::vector<long> qw, pw;
  for (int i = 1; i <= n; ++i) {
    qn.push_back("q" + std::to_string(i));
    pn.push_back("p" + std::to_string(i));
    qw.push_back(i + 1);
    pw.push_back(W - (i + 1));
  }
  return make_symplectic_ring(n, qn, pn, qw, pw);
}

}  // namespace

ParametrizationMap normalization_map(int n, int k) {
  SwallowtailData d = swallowtail_data(n, k);

  // Source ring (x, q_1..q_{n-1}); q_n is eliminated via g = 0.
  std::vector<std::string> src_names{"x"};
  std::vector<long> src_weights{1};
  for (int i = 1; i < n; ++i) {
    src_names.push_back("q" + std::to_string(i));
    src_weights.push_back(i + 1);
  }
  RingPtr src = make_ring(std::move(src_names), std::move(src_weights));

  Polynomial x = Polynomial::variable(src, 0);
  Polynomial qn_image = -x.pow(static_cast<unsigned>(n + 1));
  for (int i = 1; i < n; ++i)
    qn_image -= Polynomial::variable(src, i) * x.pow(static_cast<unsigned>(n - i));

  // Substitution xring -> src: x and q_{<n} map to themselves, q_n to its
  // on-variety expression.
  std::vector<Polynomial> images;
  images.push_back(x);
  for (int i = 1; i < n; ++i) images.push_back(Polynomial::variable(src, i));
  images.push_back(qn_image);

  ParametrizationMap map;
  map.source = src;
  map.target = swallowtail_target(n, d.W);
  for (int i = 1; i < n; ++i) map.components.push_back(Polynomial::variable(src, i));
  map.components.push_back(qn_image);
  for (int i = 1; i <= n; ++i)
    map.components.push_back(d.F.derivative(i).substitute(src, images));
  return map;
}

std::string to_string(Route r) { return r == Route::kernel ? "kernel" : "critical"; }

namespace {

// Shared tail of the two swallowtail routes and of plane_curve: canonical
// Groebner basis, minimal generators, dimension and involutivity checks.
LagrangianPresentation finish_presentation(SymplecticRing sring, std::vector<Polynomial> gens,
                                           const GBOptions& opts) {
  LagrangianPresentation L;
  L.sring = std::move(sring);
  L.base_gb = groebner_basis(L.sring.ring, gens, MonomialOrder::degrevlex(), opts);

  // Minimal homogeneous generating set, extracted from the reduced basis.
  std::vector<ModuleVector> rows;
  for (const auto& g : L.base_gb.gens) rows.push_back(ModuleVector{{g}});
  std::vector<int> keep = minimal_generators(L.sring.ring, 1, rows, {}, {}, opts);
  for (int i : keep) L.ideal_generators.push_back(L.base_gb.gens[i]);
  std::sort(L.ideal_generators.begin(), L.ideal_generators.end(),
            [](const Polynomial& a, const Polynomial& b) {
              long da = a.weighted_degree().value, db = b.weighted_degree().value;
              if (da != db) return da < db;
              return MonomialOrder::degrevlex().compare(a.leading_term().m, b.leading_term().m,
                                                        *a.ring()) < 0;
            });
  for (const auto& g : L.ideal_generators) {
    WeightedDegree d = g.weighted_degree();
    if (!d.homogeneous)
      throw InputError("variety: ideal generator is not quasihomogeneous");
    L.degrees.push_back(d.value);
  }
  L.dim = krull_dimension(L.base_gb);

  InvolutivityReport inv = check_involutive(L.sring, L.ideal_generators, L.base_gb, opts);
  if (!inv.involutive)
    throw InputError("variety: ideal is not involutive (bracket of generators " +
                     std::to_string(inv.a) + "," + std::to_string(inv.b) +
                     " is not in the ideal)");
  return L;
}

}  // namespace

std::vector<Polynomial> generating_function_ideal(const RingPtr& xq_ring, const Polynomial& F,
                                                  const std::vector<int>& internal_vars,
                                                  SymplecticRing* out_ring,
                                                  const GBOptions& opts) {
  WeightedDegree degF = F.weighted_degree();
  if (degF.zero_poly || !degF.homogeneous)
    throw InputError("generating function must be quasihomogeneous and nonzero");
  const long W = degF.value;

  std::vector<bool> internal(xq_ring->nvars(), false);
  for (int v : internal_vars) {
    if (v < 0 || v >= static_cast<int>(xq_ring->nvars()))
      throw InputError("generating function: internal variable out of range");
    internal[v] = true;
  }
  std::vector<int> params;
  for (int v = 0; v < static_cast<int>(xq_ring->nvars()); ++v)
    if (!internal[v]) params.push_back(v);
  if (params.empty()) throw InputError("generating function: no parameters left");

  // Big ring: q parameters, conjugate momenta, then the internal variables.
  std::vector<std::string> names;
  std::vector<long> weights;
  for (int v : params) {
    names.push_back(xq_ring->variables[v]);
    weights.push_back(xq_ring->weights[v]);
  }
  for (int v : params) {
    const std::string& q = xq_ring->variables[v];
    std::string p = (q.size() > 1 && q[0] == 'q') ? "p" + q.substr(1) : "p_" + q;
    names.push_back(p);
    long w = W - xq_ring->weights[v];
    if (w <= 0)
      throw InputError("generating function: momentum weight W - w(q) must be positive");
    weights.push_back(w);
  }
  const int np = static_cast<int>(params.size());
  for (int v = 0; v < static_cast<int>(xq_ring->nvars()); ++v)
    if (internal[v]) {
      names.push_back(xq_ring->variables[v]);
      weights.push_back(xq_ring->weights[v]);
    }
  RingPtr big = make_ring(names, weights);

  // Images of the original variables inside the big ring.
  std::vector<Polynomial> into_big(xq_ring->nvars());
  {
    int pi = 0, xi = 0;
    for (int v = 0; v < static_cast<int>(xq_ring->nvars()); ++v) {
      if (internal[v])
        into_big[v] = Polynomial::variable(big, 2 * np + (xi++));
      else
        into_big[v] = Polynomial::variable(big, pi++);
    }
  }
  Polynomial Fb = F.substitute(big, into_big);

  std::vector<Polynomial> gens;
  for (int v = 0; v < static_cast<int>(xq_ring->nvars()); ++v)
    if (internal[v]) gens.push_back(Fb.derivative(big->index_of(xq_ring->variables[v])));
  for (int j = 0; j < np; ++j)
    gens.push_back(Polynomial::variable(big, np + j) - Fb.derivative(j));

  std::vector<int> block;
  for (int v = 2 * np; v < static_cast<int>(big->nvars()); ++v) block.push_back(v);
  RingPtr small;
  std::vector<Polynomial> ideal = eliminate_variables(big, gens, block, &small, opts);

  if (out_ring) {
    std::vector<std::string> qn(names.begin(), names.begin() + np);
    std::vector<std::string> pn(names.begin() + np, names.begin() + 2 * np);
    std::vector<long> qw(weights.begin(), weights.begin() + np);
    std::vector<long> pw(weights.begin() + np, weights.begin() + 2 * np);
    *out_ring = make_symplectic_ring(np, qn, pn, qw, pw);
    // eliminate_variables built the same ring; remap for pointer identity.
    std::vector<Polynomial> remapped;
    for (const auto& f : ideal) {
      std::vector<Term> ts(f.terms().begin(), f.terms().end());
      remapped.push_back(Polynomial::from_terms(out_ring->ring, std::move(ts)));
    }
    return remapped;
  }
  return ideal;
}

LagrangianPresentation swallowtail_presentation(int n, int k, Route route, const GBOptions& opts) {
  SwallowtailData d = swallowtail_data(n, k);
  SymplecticRing target = swallowtail_target(n, d.W);
  std::vector<Polynomial> gens;

  if (route == Route::kernel) {
    // Graph of the normalization in [q, p, x]; q_{<n} are identified between
    // source and target, so only q_n and the p_i contribute graph equations.
    std::vector<std::string> names = target.ring->variables;
    std::vector<long> weights = target.ring->weights;
    names.push_back("x");
    weights.push_back(1);
    RingPtr big = make_ring(names, weights);
    const int xv = static_cast<int>(big->nvars()) - 1;

    Polynomial x = Polynomial::variable(big, xv);
    Polynomial qn_image = -x.pow(static_cast<unsigned>(n + 1));
    for (int i = 1; i < n; ++i)
      qn_image -= Polynomial::variable(big, target.q_index(i - 1)) *
                  x.pow(static_cast<unsigned>(n - i));

    // xring -> big with q_n replaced by its on-variety expression.
    std::vector<Polynomial> images;
    images.push_back(x);
    for (int i = 1; i < n; ++i) images.push_back(Polynomial::variable(big, target.q_index(i - 1)));
    images.push_back(qn_image);

    std::vector<Polynomial> graph;
    graph.push_back(Polynomial::variable(big, target.q_index(n - 1)) - qn_image);
    for (int i = 1; i <= n; ++i)
      graph.push_back(Polynomial::variable(big, target.p_index(i - 1)) -
                      d.F.derivative(i).substitute(big, images));

    RingPtr small;
    std::vector<Polynomial> ideal = eliminate_variables(big, graph, {xv}, &small, opts);
    for (const auto& f : ideal) {
      std::vector<Term> ts(f.terms().begin(), f.terms().end());
      gens.push_back(Polynomial::from_terms(target.ring, std::move(ts)));
    }
  } else {
    SymplecticRing built;
    gens = generating_function_ideal(d.xring, d.F, {0}, &built, opts);
    target = built;
  }

  LagrangianPresentation L = finish_presentation(target, gens, opts);
  L.family = "swallowtail";
  L.n = n;
  L.k = k;
  L.route = to_string(route);
  L.normalization = normalization_map(n, k);
  if (L.dim != n)
    throw InputError("swallowtail: computed dimension " + std::to_string(L.dim) +
                     " differs from n=" + std::to_string(n));
  return L;
}

LagrangianPresentation plane_curve(const RingPtr& ring2, const Polynomial& f,
                                   const GBOptions& opts) {
  if (ring2->nvars() != 2) throw InputError("plane curve: ring must have exactly two variables");
  WeightedDegree d = f.weighted_degree();
  if (d.zero_poly || !d.homogeneous)
    throw InputError("plane curve: equation must be quasihomogeneous and nonzero");
  if (f.is_constant()) throw InputError("plane curve: equation is constant");

  SymplecticRing s = make_symplectic_ring(1, {ring2->variables[0]}, {ring2->variables[1]},
                                          {ring2->weights[0]}, {ring2->weights[1]});
  std::vector<Term> ts(f.terms().begin(), f.terms().end());
  Polynomial fs = Polynomial::from_terms(s.ring, std::move(ts));

  LagrangianPresentation L = finish_presentation(s, {fs}, opts);
  L.family = "curve";
  L.n = 1;
  L.curve_text = to_string(fs);
  if (L.dim != 1) throw InputError("plane curve: equation does not define a curve");
  return L;
}

ParametrizationCheck check_parametrization(const LagrangianPresentation& variety,
                                           const ParametrizationMap& map, unsigned seed) {
  ParametrizationCheck out;
  const RingPtr& src = map.source;
  if (map.components.size() != variety.sring.ring->nvars()) {
    out.detail = "component count does not match the ambient ring";
    return out;
  }

  out.pullback_ok = true;
  for (const auto& g : variety.ideal_generators) {
    if (!g.substitute(src, map.components).is_zero()) {
      out.pullback_ok = false;
      out.detail = "generator " + to_string(g) + " does not pull back to zero";
      return out;
    }
  }

  // Generic immersion proxy: exact Jacobian rank at a random rational point.
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(1, 19);
  const std::size_t ns = src->nvars();
  for (int attempt = 0; attempt < 3 && !out.jacobian_ok; ++attempt) {
    std::vector<Rational> point;
    for (std::size_t i = 0; i < ns; ++i) point.emplace_back(pick(rng), pick(rng));
    QMatrix jac(ns, map.components.size());
    for (std::size_t i = 0; i < ns; ++i)
      for (std::size_t j = 0; j < map.components.size(); ++j)
        jac(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            map.components[j].derivative(static_cast<int>(i)).evaluate(point);
    if (rank(jac) == static_cast<long>(ns)) out.jacobian_ok = true;
  }
  if (!out.jacobian_ok) out.detail = "Jacobian rank deficient at sampled points";
  out.ok = out.pullback_ok && out.jacobian_ok;
  if (out.ok) out.detail = "pullbacks vanish; Jacobian has full rank at a sample point";
  return out;
}

}  // namespace lagcoh
