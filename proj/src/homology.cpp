#include "lagcoh/homology.hpp"

#include <algorithm>

#include "lagcoh/algebroid.hpp"
#include "lagcoh/errors.hpp"
#include "lagcoh/linalg.hpp"

namespace lagcoh {

PresentedModule structure_sheaf_module(const LagrangianPresentation& variety) {
  PresentedModule m;
  m.ring = variety.sring.ring;
  m.rank = 1;
  m.generator_degrees = {0};
  for (const auto& f : variety.ideal_generators) m.relations.push_back(ModuleVector{{f}});
  m.label = "structure-sheaf";
  return m;
}

namespace {

// Presents a submodule of O_L^rank (given by generating vectors) over the
// ambient ring: generators keep their embedding, relations are the syzygies
// modulo the ideal (which subsume the I-multiples of the generators).
PresentedModule present_submodule(const LagrangianPresentation& variety, std::size_t rank,
                                  std::vector<ModuleVector> gens, std::vector<long> comp_shifts,
                                  const std::string& label, const GBOptions& opts) {
  // Canonicalize the generators inside O_L^rank: reduce entries, drop vectors
  // that collapse to zero (their classes add nothing), keep them monic.
  Reducer reduce(variety.base_gb);
  std::vector<ModuleVector> reduced;
  for (auto& v : gens) {
    for (auto& entry : v.comp) entry = reduce.reduce(entry);
    if (v.is_zero()) continue;
    for (const auto& entry : v.comp)
      if (!entry.is_zero()) {
        Rational lead = entry.leading_term().c;
        if (!lead.is_one())
          for (auto& e : v.comp) e = e.scaled(inverse(lead));
        break;
      }
    if (std::find(reduced.begin(), reduced.end(), v) == reduced.end())
      reduced.push_back(std::move(v));
  }

  PresentedModule m;
  m.ring = variety.sring.ring;
  m.rank = static_cast<int>(reduced.size());
  m.embed_rank = static_cast<int>(rank);
  m.embed_shifts = comp_shifts;
  for (const auto& v : reduced) {
    WeightedDegree d = vector_degree(v, comp_shifts);
    if (!d.homogeneous) throw InputError(label + ": generator is not homogeneous");
    m.generator_degrees.push_back(d.value);
  }
  m.relations = syzygies(variety.sring.ring, rank, reduced, variety.ideal_generators, comp_shifts,
                         opts);
  m.embedding = std::move(reduced);
  m.base_ideal = variety.ideal_generators;
  m.label = label;
  return m;
}

}  // namespace

PresentedModule conormal_dual_module(const LagrangianPresentation& variety,
                                     const GBOptions& opts) {
  const RingPtr& R = variety.sring.ring;
  const std::size_t r = variety.ideal_generators.size();
  ConormalPresentation con = conormal_presentation(variety, opts);

  std::vector<long> comp_shifts;
  for (long d : variety.degrees) comp_shifts.push_back(-d);

  std::vector<ModuleVector> gens;
  if (con.relations.empty()) {
    for (std::size_t a = 0; a < r; ++a) {
      ModuleVector e = zero_vector(R, r);
      e.comp[a] = Polynomial::constant(R, Rational(1));
      gens.push_back(std::move(e));
    }
  } else {
    std::vector<long> row_shifts;
    for (long s : con.row_degrees) row_shifts.push_back(-s);
    gens = kernel_of_module_map(R, con.relations, variety.ideal_generators, row_shifts, opts);
  }
  return present_submodule(variety, r, std::move(gens), comp_shifts, "conormal-dual", opts);
}

PresentedModule tangent_module(const LagrangianPresentation& variety, const GBOptions& opts) {
  const RingPtr& R = variety.sring.ring;
  const std::size_t nv = R->nvars();

  std::vector<ModuleVector> jac_rows;
  std::vector<long> row_shifts;
  for (std::size_t a = 0; a < variety.ideal_generators.size(); ++a) {
    ModuleVector row = zero_vector(R, nv);
    for (std::size_t i = 0; i < nv; ++i)
      row.comp[i] = variety.ideal_generators[a].derivative(static_cast<int>(i));
    jac_rows.push_back(std::move(row));
    row_shifts.push_back(-variety.degrees[a]);
  }
  std::vector<ModuleVector> gens =
      kernel_of_module_map(R, jac_rows, variety.ideal_generators, row_shifts, opts);

  std::vector<long> comp_shifts;
  for (std::size_t i = 0; i < nv; ++i) comp_shifts.push_back(-R->weights[i]);
  return present_submodule(variety, nv, std::move(gens), comp_shifts, "tangent", opts);
}

DepthCertificate depth_via_resolution(const PresentedModule& m, int max_steps,
                                      const GBOptions& opts) {
  FreeResolution res = minimal_free_resolution(m, max_steps, opts);
  DepthCertificate cert;
  cert.module_label = m.label;
  cert.ambient_vars = static_cast<int>(m.ring->nvars());
  cert.betti = res.betti;
  cert.shifts = res.shifts;
  cert.complete = res.complete;
  cert.pd = res.pd();
  cert.depth = cert.complete ? cert.ambient_vars - cert.pd : -1;
  return cert;
}

namespace {

class SliceCache {
 public:
  explicit SliceCache(const GroebnerBasis& gb) : gb_(gb) {}
  const std::vector<Monomial>& get(long deg) {
    static const std::vector<Monomial> empty;
    if (deg < 0) return empty;
    auto it = cache_.find(deg);
    if (it == cache_.end()) it = cache_.emplace(deg, standard_monomials(gb_, deg)).first;
    return it->second;
  }

 private:
  const GroebnerBasis& gb_;
  std::map<long, std::vector<Monomial>> cache_;
};

long find_index(const std::vector<Monomial>& slice, const Monomial& m, const WeightedRing& R) {
  const MonomialOrder ord = MonomialOrder::degrevlex();
  auto it = std::lower_bound(slice.begin(), slice.end(), m,
                             [&](const Monomial& a, const Monomial& b) {
                               return ord.compare(a, b, R) < 0;
                             });
  if (it == slice.end() || !(*it == m))
    throw InputError("graded slice: normal form left the expected basis");
  return static_cast<long>(it - slice.begin());
}

struct FreeComps {
  std::vector<const std::vector<Monomial>*> monos;
  std::vector<long> offsets;
  long dim = 0;
};

FreeComps free_comps(SliceCache& cache, const std::vector<long>& degrees) {
  FreeComps fc;
  for (long d : degrees) {
    const auto& slice = cache.get(d);
    fc.offsets.push_back(fc.dim);
    fc.monos.push_back(&slice);
    fc.dim += static_cast<long>(slice.size());
  }
  return fc;
}

}  // namespace

std::map<long, long> alpha_cokernel_dims(const LagrangianPresentation& variety,
                                         long max_form_degree, const GBOptions& opts) {
  const RingPtr& R = variety.sring.ring;
  const WeightedRing& RW = *R;
  const SymplecticRing& s = variety.sring;
  const long W = s.W;
  const std::size_t nv = R->nvars();
  const auto& f = variety.ideal_generators;

  ConormalPresentation con = conormal_presentation(variety, opts);
  if (!con.relations.empty())
    throw InputError("alpha cokernel: conormal module is not free (needs a complete "
                     "intersection)");

  Reducer reduce(variety.base_gb);
  SliceCache cache(variety.base_gb);

  // Hamiltonian field components of each generator: coefficient of d/dz_i.
  std::vector<std::vector<Polynomial>> ham(f.size());
  for (std::size_t a = 0; a < f.size(); ++a) {
    ham[a].assign(nv, Polynomial::zero(R));
    for (int i = 0; i < s.n; ++i) {
      ham[a][s.q_index(i)] = reduce.reduce(f[a].derivative(s.p_index(i)));
      ham[a][s.p_index(i)] = reduce.reduce(-f[a].derivative(s.q_index(i)));
    }
  }

  std::map<long, long> out;
  for (long form_deg = 0; form_deg <= max_form_degree; ++form_deg) {
    const long delta = form_deg - W;  // vector-field degree
    std::vector<long> comp_degs;
    for (std::size_t i = 0; i < nv; ++i) comp_degs.push_back(delta + RW.weights[i]);
    FreeComps fc = free_comps(cache, comp_degs);
    if (fc.dim == 0) {
      out[form_deg] = 0;
      continue;
    }

    // Tangency conditions: theta(f_a) = 0 in O_L, one block per generator.
    std::vector<const std::vector<Monomial>*> blocks;
    std::vector<long> block_off;
    long nrows = 0;
    for (std::size_t a = 0; a < f.size(); ++a) {
      const auto& slice = cache.get(delta + variety.degrees[a]);
      block_off.push_back(nrows);
      blocks.push_back(&slice);
      nrows += static_cast<long>(slice.size());
    }
    QMatrix K = QMatrix::Constant(nrows, fc.dim, Rational(0));
    for (std::size_t i = 0; i < nv; ++i) {
      const auto& monos = *fc.monos[i];
      for (std::size_t mi = 0; mi < monos.size(); ++mi) {
        long col = fc.offsets[i] + static_cast<long>(mi);
        for (std::size_t a = 0; a < f.size(); ++a) {
          Polynomial v = reduce.reduce(
              f[a].derivative(static_cast<int>(i)).times_monomial(monos[mi], Rational(1)));
          for (const auto& t : v.terms())
            K(block_off[a] + find_index(*blocks[a], t.m, RW), col) += t.c;
        }
      }
    }
    long theta_dim = fc.dim - rank(K);

    // Image of alpha at this degree: O_L-multiples of the Hamiltonian fields.
    std::vector<QVector> cols;
    for (std::size_t a = 0; a < f.size(); ++a) {
      const auto& mults = cache.get(delta - (variety.degrees[a] - W));
      for (const auto& m : mults) {
        QVector col = QVector::Constant(fc.dim, Rational(0));
        for (std::size_t i = 0; i < nv; ++i) {
          Polynomial v = reduce.reduce(ham[a][i].times_monomial(m, Rational(1)));
          for (const auto& t : v.terms())
            col(fc.offsets[i] + find_index(*fc.monos[i], t.m, RW)) += t.c;
        }
        cols.push_back(std::move(col));
      }
    }
    long image_rank = 0;
    if (!cols.empty()) {
      QMatrix img(fc.dim, static_cast<Eigen::Index>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c) img.col(static_cast<Eigen::Index>(c)) = cols[c];
      image_rank = rank(img);
    }
    out[form_deg] = theta_dim - image_rank;
  }
  return out;
}

std::map<long, long> omega1_torsion_dims(const LagrangianPresentation& variety,
                                         long max_form_degree, const GBOptions& opts) {
  if (variety.sring.n != 1 || variety.ideal_generators.size() != 1)
    throw InputError("torsion table: implemented for plane curves (one generator, n = 1)");
  const RingPtr& R = variety.sring.ring;
  const WeightedRing& RW = *R;
  const Polynomial& f = variety.ideal_generators[0];
  const long d1 = variety.degrees[0];

  PresentedModule theta = tangent_module(variety, opts);
  Reducer reduce(variety.base_gb);
  SliceCache cache(variety.base_gb);

  std::map<long, long> out;
  for (long form_deg = 0; form_deg <= max_form_degree; ++form_deg) {
    std::vector<long> comp_degs;
    for (std::size_t i = 0; i < RW.nvars(); ++i) comp_degs.push_back(form_deg - RW.weights[i]);
    FreeComps fc = free_comps(cache, comp_degs);
    if (fc.dim == 0) {
      out[form_deg] = 0;
      continue;
    }

    // A 1-form u is torsion iff it pairs to zero with every tangent field.
    std::vector<const std::vector<Monomial>*> blocks;
    std::vector<long> block_off;
    long nrows = 0;
    for (int t = 0; t < theta.rank; ++t) {
      const auto& slice = cache.get(form_deg + theta.generator_degrees[t]);
      block_off.push_back(nrows);
      blocks.push_back(&slice);
      nrows += static_cast<long>(slice.size());
    }
    QMatrix K = QMatrix::Constant(nrows, fc.dim, Rational(0));
    for (std::size_t i = 0; i < RW.nvars(); ++i) {
      const auto& monos = *fc.monos[i];
      for (std::size_t mi = 0; mi < monos.size(); ++mi) {
        long col = fc.offsets[i] + static_cast<long>(mi);
        for (int t = 0; t < theta.rank; ++t) {
          Polynomial v = reduce.reduce(
              theta.embedding[t].comp[i].times_monomial(monos[mi], Rational(1)));
          for (const auto& term : v.terms())
            K(block_off[t] + find_index(*blocks[t], term.m, RW), col) += term.c;
        }
      }
    }
    long annihilated = fc.dim - rank(K);

    // Subtract the exact part df * O_L (it pairs to zero automatically).
    const auto& mults = cache.get(form_deg - d1);
    long exact_rank = 0;
    if (!mults.empty()) {
      QMatrix img = QMatrix::Constant(fc.dim, static_cast<Eigen::Index>(mults.size()),
                                      Rational(0));
      for (std::size_t c = 0; c < mults.size(); ++c)
        for (std::size_t i = 0; i < RW.nvars(); ++i) {
          Polynomial v = reduce.reduce(
              f.derivative(static_cast<int>(i)).times_monomial(mults[c], Rational(1)));
          for (const auto& t : v.terms())
            img(fc.offsets[i] + find_index(*fc.monos[i], t.m, RW),
                static_cast<Eigen::Index>(c)) += t.c;
        }
      exact_rank = rank(img);
    }
    out[form_deg] = annihilated - exact_rank;
  }
  return out;
}

}  // namespace lagcoh
