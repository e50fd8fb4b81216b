#include "lagcoh/json_io.hpp"

#include <iomanip>
#include <sstream>

#include "lagcoh/errors.hpp"

namespace lagcoh {

namespace {

Json terms_json(const Polynomial& f) {
  Json arr = Json::array();
  for (const Term& t : f.terms()) {
    Json row = Json::array();
    row.push_back(t.c.str());
    row.push_back(t.m.exp);
    arr.push_back(row);
  }
  return arr;
}

Polynomial poly_from_terms(const RingPtr& ring, const Json& arr) {
  std::vector<Term> terms;
  for (const Json& row : arr) {
    if (!row.is_array() || row.size() != 2) throw InputError("malformed polynomial term");
    Monomial m;
    m.exp = row[1].get<std::vector<int>>();
    if (m.exp.size() != static_cast<size_t>(ring->nvars()))
      throw InputError("term exponent length does not match ring");
    for (int e : m.exp)
      if (e < 0) throw InputError("negative exponent in polynomial term");
    terms.push_back({m, Rational::from_string(row[0].get<std::string>())});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Json poly_list_json(const std::vector<Polynomial>& polys) {
  Json arr = Json::array();
  for (const Polynomial& f : polys) {
    Json e;
    e["text"] = to_string(f);
    e["terms"] = terms_json(f);
    arr.push_back(e);
  }
  return arr;
}

std::vector<Polynomial> poly_list_from_json(const RingPtr& ring, const Json& arr) {
  std::vector<Polynomial> out;
  for (const Json& e : arr) {
    if (e.contains("terms"))
      out.push_back(poly_from_terms(ring, e.at("terms")));
    else
      out.push_back(parse_polynomial(ring, e.at("text").get<std::string>()));
  }
  return out;
}

}  // namespace

Json polynomial_to_json(const Polynomial& f) {
  Json j;
  j["text"] = to_string(f);
  j["terms"] = terms_json(f);
  return j;
}

Polynomial polynomial_from_json(const RingPtr& ring, const Json& j) {
  if (j.is_string()) return parse_polynomial(ring, j.get<std::string>());
  if (j.contains("terms")) return poly_from_terms(ring, j.at("terms"));
  return parse_polynomial(ring, j.at("text").get<std::string>());
}

Json ring_to_json(const WeightedRing& ring) {
  Json j;
  j["variables"] = ring.variables;
  j["weights"] = ring.weights;
  return j;
}

RingPtr ring_from_json(const Json& j) {
  return make_ring(j.at("variables").get<std::vector<std::string>>(),
                   j.at("weights").get<std::vector<long>>());
}

Json variety_summary_json(const LagrangianPresentation& variety) {
  Json v;
  v["family"] = variety.family;
  if (variety.family == "swallowtail") {
    v["n"] = variety.n;
    v["k"] = variety.k;
    v["route"] = variety.route;
  } else if (!variety.curve_text.empty()) {
    v["curve"] = variety.curve_text;
  }
  v["W"] = variety.sring.W;
  v["dim"] = variety.dim;
  std::vector<long> degs;
  for (const auto& d : variety.degrees) degs.push_back(d);
  v["generator_degrees"] = degs;
  return v;
}

Json variety_to_json(const LagrangianPresentation& variety) {
  Json j;
  j["format"] = "lagvar-1";
  j["tool"] = kToolVersion;
  j["family"] = variety.family;
  if (variety.family == "swallowtail") {
    j["n"] = variety.n;
    j["k"] = variety.k;
    j["route"] = variety.route;
  }
  if (!variety.curve_text.empty()) j["curve"] = variety.curve_text;
  j["W"] = variety.sring.W;
  j["dim"] = variety.dim;
  j["ring"] = ring_to_json(*variety.sring.ring);
  j["ring"]["n"] = variety.sring.n;
  j["generator_degrees"] = variety.degrees;
  j["ideal_generators"] = poly_list_json(variety.ideal_generators);
  j["groebner_basis"] = poly_list_json(variety.base_gb.gens);
  if (variety.normalization) {
    Json nj;
    nj["ring"] = ring_to_json(*variety.normalization->source);
    nj["components"] = poly_list_json(variety.normalization->components);
    j["normalization"] = nj;
  }
  return j;
}

LagrangianPresentation variety_from_json(const Json& j, const GBOptions& opts) {
  if (j.value("format", "") != std::string("lagvar-1"))
    throw InputError("unrecognized variety file format (expected lagvar-1)");
  LagrangianPresentation out;
  out.family = j.value("family", "unknown");
  out.n = j.value("n", 0);
  out.k = j.value("k", -1);
  out.curve_text = j.value("curve", "");
  if (j.contains("route")) out.route = j.at("route").get<std::string>();

  RingPtr ring = ring_from_json(j.at("ring"));
  int half = j.at("ring").value("n", ring->nvars() / 2);
  out.sring = make_symplectic_ring(ring, half);
  out.n = out.n > 0 ? out.n : half;

  out.ideal_generators = poly_list_from_json(ring, j.at("ideal_generators"));
  if (out.ideal_generators.empty()) throw InputError("variety file has no ideal generators");
  for (const Polynomial& f : out.ideal_generators) {
    auto wd = f.weighted_degree();
    if (!wd.homogeneous) throw InputError("variety file generator is not quasihomogeneous");
    out.degrees.push_back(wd.value);
  }

  MonomialOrder order = MonomialOrder::degrevlex();
  if (j.contains("groebner_basis")) {
    out.base_gb.ring = ring;
    out.base_gb.order = order;
    out.base_gb.gens = poly_list_from_json(ring, j.at("groebner_basis"));
  } else {
    out.base_gb = groebner_basis(ring, out.ideal_generators, order, opts);
  }
  out.dim = j.contains("dim") ? j.at("dim").get<int>() : krull_dimension(out.base_gb);

  if (j.contains("normalization")) {
    const Json& nj = j.at("normalization");
    ParametrizationMap pm;
    pm.source = ring_from_json(nj.at("ring"));
    pm.target = out.sring;
    pm.components = poly_list_from_json(pm.source, nj.at("components"));
    if (pm.components.size() != static_cast<size_t>(ring->nvars()))
      throw InputError("normalization component count does not match ring");
    out.normalization = std::move(pm);
  }
  return out;
}

Json cohomology_report_json(const LagrangianPresentation& variety,
                            const std::vector<CohomologyTable>& tables, const ReportMeta& meta) {
  Json j;
  j["format"] = "cohreport-1";
  j["tool"] = kToolVersion;
  j["variety"] = variety_summary_json(variety);
  j["bound"] = meta.bound;
  j["workers"] = meta.workers;
  Json arr = Json::array();
  bool complete = true;
  for (const CohomologyTable& t : tables) {
    Json tj;
    tj["p"] = t.p;
    tj["e_min"] = t.e_lo;
    tj["e_max"] = t.e_hi;
    Json rows = Json::array();
    for (const CohomologyRow& r : t.rows) {
      Json rj;
      rj["e"] = r.e;
      rj["dim_ker"] = r.dim_ker;
      rj["dim_im"] = r.dim_im;
      rj["dim_h"] = r.dim_h;
      if (r.capped) rj["capped"] = true;
      rows.push_back(rj);
    }
    tj["degrees"] = rows;
    tj["total_h"] = t.total_h();
    tj["all_zero"] = t.all_zero();
    tj["complete"] = t.complete;
    complete = complete && t.complete;
    arr.push_back(tj);
  }
  j["tables"] = arr;
  j["status"] = complete ? "complete" : "capped";
  if (!meta.omit_timings) j["elapsed_ms"] = meta.elapsed_ms;
  return j;
}

std::string cohomology_report_table(const LagrangianPresentation& variety,
                                    const std::vector<CohomologyTable>& tables,
                                    const ReportMeta& meta) {
  std::ostringstream os;
  os << variety.family;
  if (variety.family == "swallowtail")
    os << " n=" << variety.n << " k=" << variety.k << " (" << variety.route << ")";
  else if (!variety.curve_text.empty())
    os << " [" << variety.curve_text << "]";
  os << "  W=" << variety.sring.W << "  bound=" << meta.bound << "\n";
  for (const CohomologyTable& t : tables) {
    os << "\nH^" << t.p << "  (e = " << t.e_lo << " .. " << t.e_hi << ")\n";
    os << std::setw(6) << "e" << std::setw(9) << "dim_ker" << std::setw(8) << "dim_im"
       << std::setw(7) << "dim_h" << "\n";
    long shown = 0;
    for (const CohomologyRow& r : t.rows) {
      if (r.dim_h == 0 && !r.capped && r.dim_ker == 0 && r.dim_im == 0) continue;
      os << std::setw(6) << r.e << std::setw(9) << r.dim_ker << std::setw(8) << r.dim_im
         << std::setw(7) << r.dim_h;
      if (r.capped) os << "  (capped)";
      os << "\n";
      ++shown;
    }
    if (shown == 0) os << "  (no nonzero cochain slices)\n";
    os << "total dim H^" << t.p << " = " << t.total_h();
    if (!t.complete) os << "  [INCOMPLETE: slice cap hit]";
    os << "\n";
  }
  if (!meta.omit_timings) os << "\nelapsed: " << meta.elapsed_ms << " ms\n";
  return os.str();
}

Json depth_certificate_json(const DepthCertificate& cert) {
  Json j;
  j["format"] = "depthcert-1";
  j["tool"] = kToolVersion;
  j["module"] = cert.module_label;
  j["ambient_vars"] = cert.ambient_vars;
  j["betti"] = cert.betti;
  Json shifts = Json::array();
  for (const auto& s : cert.shifts) shifts.push_back(s);
  j["shifts"] = shifts;
  j["pd"] = cert.pd;
  j["depth"] = cert.depth;
  j["complete"] = cert.complete;
  return j;
}

std::string depth_certificate_table(const DepthCertificate& cert) {
  std::ostringstream os;
  os << "module: " << cert.module_label << "\n";
  os << "betti:";
  for (size_t i = 0; i < cert.betti.size(); ++i) os << " " << cert.betti[i];
  os << "\n";
  for (size_t i = 0; i < cert.shifts.size(); ++i) {
    os << "  F" << i << " shifts:";
    for (long s : cert.shifts[i]) os << " " << s;
    os << "\n";
  }
  if (!cert.complete) {
    os << "resolution INCOMPLETE (step cap hit); pd/depth unknown\n";
  } else {
    os << "pd = " << cert.pd << "   depth = " << cert.depth << "  (ambient vars "
       << cert.ambient_vars << ")\n";
  }
  return os.str();
}

std::string render_degree_map(const std::map<long, long>& dims, const std::string& header) {
  std::ostringstream os;
  os << header << "\n";
  long total = 0;
  for (const auto& [deg, dim] : dims) {
    if (dim == 0) continue;
    os << std::setw(6) << deg << std::setw(8) << dim << "\n";
    total += dim;
  }
  os << "total = " << total << "\n";
  return os.str();
}

}  // namespace lagcoh
