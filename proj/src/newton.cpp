#include "sfg/newton.hpp"

#include "sfg/error.hpp"

namespace sfg {

const char* to_string(Stratum s) {
  switch (s) {
    case Stratum::Ordinary: return "ordinary";
    case Stratum::AlmostOrdinary: return "almost_ordinary";
    case Stratum::K3Type: return "k3_type";
    case Stratum::Supersingular: return "supersingular";
    case Stratum::PRankZeroNonSS: return "p_rank_0_non_supersingular";
    case Stratum::Other: return "other";
  }
  return "?";
}

namespace {

mpq_class valuation(const mpz_class& a, unsigned long p, int d) {
  mpz_class x = abs(a);
  const mpz_class pz(p);
  long v = 0;
  while (mpz_divisible_p(x.get_mpz_t(), pz.get_mpz_t())) {
    x /= pz;
    ++v;
  }
  mpq_class r(v, d);
  r.canonicalize();
  return r;
}

}  // namespace

NewtonPolygonData newton_polygon(const ZPoly& f, unsigned long p, int d) {
  const int n = degree(f);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "Newton polygon of a constant");
  const auto desc = to_descending(f);
  std::vector<std::pair<int, mpq_class>> pts;
  for (int i = 0; i <= n; ++i)
    if (desc[static_cast<std::size_t>(i)] != 0) pts.emplace_back(i, valuation(desc[static_cast<std::size_t>(i)], p, d));
  // Monotone chain lower hull; points are already sorted by abscissa.
  std::vector<std::pair<int, mpq_class>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const mpq_class cross = mpq_class(b.first - a.first) * (pt.second - a.second) -
                              (b.second - a.second) * mpq_class(pt.first - a.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  NewtonPolygonData np;
  np.vertices = hull;
  for (std::size_t k = 1; k < hull.size(); ++k) {
    const int len = hull[k].first - hull[k - 1].first;
    mpq_class slope = (hull[k].second - hull[k - 1].second) / mpq_class(len);
    slope.canonicalize();
    for (int j = 0; j < len; ++j) np.slopes.push_back(slope);
    if (slope == 0) np.p_rank += len;
  }
  return np;
}

NewtonPolygonData newton_polygon(const WeilPolynomial& P) { return newton_polygon(P.poly(), P.p, P.d); }

bool is_supersingular(const NewtonPolygonData& np) {
  const mpq_class half(1, 2);
  for (const auto& s : np.slopes)
    if (s != half) return false;
  return true;
}

Stratum stratify(const NewtonPolygonData& np, int g) {
  if (np.p_rank == g) return Stratum::Ordinary;
  if (is_supersingular(np)) return Stratum::Supersingular;
  bool middle_half = true;
  for (const auto& s : np.slopes)
    if (s != 0 && s != 1 && s != mpq_class(1, 2)) middle_half = false;
  if (np.p_rank == g - 1 && middle_half) return Stratum::AlmostOrdinary;
  if (np.p_rank == 1 && g >= 3 && middle_half) return Stratum::K3Type;
  if (np.p_rank == 0) return Stratum::PRankZeroNonSS;
  return Stratum::Other;
}

}  // namespace sfg
