#include "lagcoh/algebroid.hpp"

#include <algorithm>

#include "lagcoh/errors.hpp"
#include "lagcoh/linalg.hpp"

namespace lagcoh {

ConormalPresentation conormal_presentation(const LagrangianPresentation& variety,
                                           const GBOptions& opts) {
  const RingPtr& R = variety.sring.ring;
  const auto& gens = variety.ideal_generators;

  std::vector<ModuleVector> vecs;
  vecs.reserve(gens.size());
  for (const auto& f : gens) vecs.push_back(ModuleVector{{f}});
  std::vector<ModuleVector> amb = syzygies(R, 1, vecs, {}, {}, opts);

  // The kernel of O_L^r -> I/I^2 is spanned by ambient syzygy rows plus
  // I-multiples of the unit vectors; over the quotient only the reduced
  // syzygy rows survive.
  ConormalPresentation con;
  con.r = static_cast<int>(gens.size());
  for (auto& row : amb) {
    for (auto& entry : row.comp) entry = normal_form(entry, variety.base_gb);
    if (row.is_zero()) continue;
    for (const auto& f : row.comp)
      if (!f.is_zero()) {
        Rational lead = f.leading_term().c;
        if (!lead.is_one())
          for (auto& g : row.comp) g = g.scaled(inverse(lead));
        break;
      }
    con.relations.push_back(std::move(row));
  }
  std::sort(con.relations.begin(), con.relations.end(),
            [&](const ModuleVector& a, const ModuleVector& b) {
              WeightedDegree da = vector_degree(a, variety.degrees);
              WeightedDegree db = vector_degree(b, variety.degrees);
              if (da.value != db.value) return da.value < db.value;
              return to_string(a.comp[0]) + "|" + to_string(a.comp.back()) <
                     to_string(b.comp[0]) + "|" + to_string(b.comp.back());
            });
  con.relations.erase(std::unique(con.relations.begin(), con.relations.end()),
                      con.relations.end());
  for (const auto& row : con.relations) {
    WeightedDegree d = vector_degree(row, variety.degrees);
    if (!d.homogeneous) throw InputError("conormal: relation row is not homogeneous");
    con.row_degrees.push_back(d.value);
  }
  return con;
}

BracketStructure bracket_structure(const LagrangianPresentation& variety, const GBOptions& opts) {
  (void)opts;
  const RingPtr& R = variety.sring.ring;
  const auto& f = variety.ideal_generators;
  const auto& d = variety.degrees;
  const long W = variety.sring.W;
  const int r = static_cast<int>(f.size());

  BracketStructure bs;
  bs.c.assign(r, std::vector<std::vector<Polynomial>>(r));
  bs.nf.assign(r, std::vector<std::vector<Polynomial>>(r));

  GroebnerBasis empty_gb{R, MonomialOrder::degrevlex(), {}};

  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      Polynomial B = poisson_bracket(variety.sring, f[a], f[b]);
      std::vector<Polynomial> c(r, Polynomial::zero(R));
      if (!B.is_zero()) {
        const long target = d[a] + d[b] - W;
        std::vector<Monomial> rows_basis = standard_monomials(empty_gb, target);
        // Unknowns: one coefficient per (generator e, ambient monomial of
        // degree target - d_e).  The graded pieces make this a small exact
        // linear solve.
        struct Block {
          int e;
          std::vector<Monomial> monos;
        };
        std::vector<Block> blocks;
        Eigen::Index ncols = 0;
        for (int e = 0; e < r; ++e) {
          if (target - d[e] < 0) continue;
          Block blk{e, standard_monomials(empty_gb, target - d[e])};
          ncols += static_cast<Eigen::Index>(blk.monos.size());
          blocks.push_back(std::move(blk));
        }
        QMatrix A = QMatrix::Constant(static_cast<Eigen::Index>(rows_basis.size()), ncols,
                                      Rational(0));
        QVector rhs = QVector::Constant(static_cast<Eigen::Index>(rows_basis.size()), Rational(0));
        auto row_of = [&](const Monomial& m) -> Eigen::Index {
          auto it = std::lower_bound(rows_basis.begin(), rows_basis.end(), m,
                                     [&](const Monomial& x, const Monomial& y) {
                                       return MonomialOrder::degrevlex().compare(x, y, *R) < 0;
                                     });
          if (it == rows_basis.end() || !(*it == m))
            throw InputError("bracket structure: monomial outside slice");
          return static_cast<Eigen::Index>(it - rows_basis.begin());
        };
        Eigen::Index col = 0;
        for (const auto& blk : blocks)
          for (const auto& m : blk.monos) {
            Polynomial col_poly = f[blk.e].times_monomial(m, Rational(1));
            for (const auto& t : col_poly.terms()) A(row_of(t.m), col) += t.c;
            ++col;
          }
        for (const auto& t : B.terms()) rhs(row_of(t.m)) = t.c;
        QVector x;
        if (!solve(A, rhs, &x))
          throw InputError("bracket structure: {f_a, f_b} is not in the ideal; "
                           "the generators are not involutive");
        col = 0;
        for (const auto& blk : blocks) {
          std::vector<Term> terms;
          for (const auto& m : blk.monos) {
            if (!x(col).is_zero()) terms.push_back({m, x(col)});
            ++col;
          }
          c[blk.e] = Polynomial::from_terms(R, std::move(terms));
        }
        // Exactness guard: the lift must reproduce the bracket on the nose.
        Polynomial recon = Polynomial::zero(R);
        for (int e = 0; e < r; ++e) recon += c[e] * f[e];
        if (!(recon == B))
          throw InputError("bracket structure: internal lift verification failed");
      }
      bs.c[a][b] = c;
      std::vector<Polynomial> cn;
      cn.reserve(c.size());
      for (const auto& ce : c) cn.push_back(normal_form(ce, variety.base_gb));
      bs.nf[a][b] = std::move(cn);
    }
  return bs;
}

}  // namespace lagcoh
