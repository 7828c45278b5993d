#include "sfg/report.hpp"

#include <sstream>

namespace sfg {

using nlohmann::json;

namespace {

json coeff_strings(const std::vector<mpz_class>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(c.get_str());
  return a;
}

std::vector<mpz_class> descending(const ZPoly& f) { return std::vector<mpz_class>(f.rbegin(), f.rend()); }

}  // namespace

json polynomial_json(const WeilPolynomial& P) {
  return json{{"label", format_label(P)},
              {"g", P.g},
              {"q", P.q.get_str()},
              {"p", P.p},
              {"d", P.d},
              {"coefficients", coeff_strings(P.coeffs)},
              {"polynomial", to_string(P.poly())}};
}

json factors_json(const IsogenyFactorization& F, const WeilPolynomial& P) {
  json a = json::array();
  for (const auto& f : F.factors) {
    const NewtonPolygonData np = newton_polygon(f.h, P.p, P.d);
    const int twice_dim = degree(f.h) * f.e;
    json dim = twice_dim % 2 == 0 ? json(twice_dim / 2) : json(twice_dim / 2.0);
    a.push_back(json{{"factor", to_string(f.h)},
                     {"coefficients", coeff_strings(descending(f.h))},
                     {"exponent", f.e},
                     {"dimension", dim},
                     {"supersingular", is_supersingular(np)}});
  }
  return a;
}

json newton_json(const NewtonPolygonData& np, int g) {
  json v = json::array();
  for (const auto& [i, y] : np.vertices) v.push_back(json::array({i, y.get_str()}));
  json s = json::array();
  for (const auto& x : np.slopes) s.push_back(x.get_str());
  return json{{"vertices", v}, {"slopes", s}, {"p_rank", np.p_rank}, {"stratum", to_string(stratify(np, g))}};
}

json lattice_json(const RelationLattice& L) {
  json rels = json::array();
  for (const auto& r : L.relations)
    rels.push_back(json{{"c", r.c}, {"frac", format_fraction(r.numer, r.denom)}});
  return json{{"g", L.g}, {"rank", L.rank}, {"delta", L.delta()}, {"m", L.torsion_order}, {"relations", rels}};
}

json group_json(const SerreFrobeniusGroup& G) {
  json j{{"g", G.g},
         {"delta", G.delta},
         {"m", G.m},
         {"group", G.group()},
         {"provenance", G.provenance},
         {"certified", G.certified},
         {"partial", G.partial}};
  if (G.embedding) j["relations"] = lattice_json(*G.embedding)["relations"];
  return j;
}

json classification_report(const WeilPolynomial& P, const SerreFrobeniusGroup& G) {
  json j{{"schema_version", kSchemaVersion},
         {"label", format_label(P)},
         {"g", P.g},
         {"q", P.q.get_str()},
         {"stratum", to_string(stratify(newton_polygon(P), P.g))},
         {"delta", G.delta},
         {"m", G.m},
         {"group", G.group()},
         {"provenance", G.provenance},
         {"certified", G.certified},
         {"partial", G.partial},
         {"split_degree", split_degree(P)},
         {"factors", factors_json(factor(P), P)}};
  if (G.embedding) j["relations"] = lattice_json(*G.embedding)["relations"];
  return j;
}

json histogram_json(const TraceHistogram& h) {
  json atoms = json::array();
  for (const auto& a : h.atoms) atoms.push_back(json{{"value", a.value}, {"count", a.count}, {"fraction", a.fraction}});
  return json{{"schema_version", kSchemaVersion},
              {"g", h.g},
              {"samples", h.samples},
              {"buckets", h.buckets},
              {"range", json::array({h.lo, h.hi})},
              {"counts", h.counts},
              {"atoms", atoms}};
}

std::string histogram_csv(const TraceHistogram& h) {
  std::ostringstream out;
  out.precision(17);
  out << "bucket_left,bucket_right,count\n";
  for (int i = 0; i < h.buckets; ++i)
    out << h.bucket_left(i) << ',' << h.bucket_right(i) << ',' << h.counts[static_cast<std::size_t>(i)] << '\n';
  return out.str();
}

json moments_json(const MomentReport& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.k.size(); ++i)
    a.push_back(json{{"k", m.k[i]}, {"empirical", m.empirical[i]}, {"exact", m.exact[i]}, {"abs_error", m.abs_error[i]}});
  return a;
}

std::string moments_csv(const MomentReport& m) {
  std::ostringstream out;
  out.precision(17);
  out << "k,empirical,exact,abs_error\n";
  for (std::size_t i = 0; i < m.k.size(); ++i)
    out << m.k[i] << ',' << m.empirical[i] << ',' << m.exact[i] << ',' << m.abs_error[i] << '\n';
  return out.str();
}

}  // namespace sfg
