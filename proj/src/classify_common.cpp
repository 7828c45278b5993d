#include <algorithm>
#include <numeric>
#include <map>
#include <set>

#include "classify_internal.hpp"
#include "sfg/error.hpp"
#include "sfg/supersingular.hpp"

namespace sfg {

std::string SerreFrobeniusGroup::group() const {
  std::string s;
  if (delta == 1) s = "U(1)";
  if (delta > 1) s = "U(1)^" + std::to_string(delta);
  if (m != 1 || delta == 0) {
    if (!s.empty()) s += " x ";
    s += "C_" + std::to_string(m);
  }
  return s;
}

SerreFrobeniusGroup sf_of_product(const ProductRuleInputs& in, int g) {
  if (in.r < 1 || in.n1 < 1 || in.m_E < 1 || in.simple_rank < 0)
    throw Error(ErrorKind::InconsistentInputs, "product rule inputs must be positive");
  long m = in.n1 * in.m_E;
  for (long mj : in.m_blocks) {
    if (mj < 1) throw Error(ErrorKind::InconsistentInputs, "block splitting degree must be positive");
    m = std::lcm(m, mj);
  }
  const int delta = static_cast<int>(in.m_blocks.size()) + in.simple_rank;
  if (g > 0 && delta > g) throw Error(ErrorKind::InconsistentInputs, "more blocks than the dimension");
  SerreFrobeniusGroup G;
  G.g = g;
  G.delta = delta;
  G.m = in.r * m;
  G.provenance = "product-rule";
  return G;
}

std::vector<std::pair<int, long>> allowed_pairs(int g) {
  std::vector<std::pair<int, long>> out;
  auto add = [&](int delta, std::initializer_list<long> ms) {
    for (long m : ms) out.emplace_back(delta, m);
  };
  switch (g) {
    case 1:
      add(1, {1});
      add(0, {1, 2, 3, 4, 6, 8, 12});
      break;
    case 2:
      add(0, {1, 2, 3, 4, 5, 6, 8, 10, 12, 24});
      add(1, {1, 2, 3, 4, 6, 8, 12});
      add(2, {1});
      break;
    case 3:
      add(0, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 14, 15, 18, 20, 24, 28, 30, 36});
      add(1, {1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 24});
      add(2, {1, 2, 3, 4, 6, 8, 12, 24});
      add(3, {1});
      break;
    default:
      break;
  }
  return out;
}

bool allowed_pair(int g, int delta, long m) {
  const auto pairs = allowed_pairs(g);
  return std::find(pairs.begin(), pairs.end(), std::make_pair(delta, m)) != pairs.end();
}

namespace detail {

void breach(const std::string& what) { throw Error(ErrorKind::InternalInvariant, what); }

bool abelian_slopes(const WeilPolynomial& P, const IsogenyFactorization& F) {
  for (const auto& f : F.factors) {
    const NewtonPolygonData np = newton_polygon(pow(f.h, static_cast<unsigned>(f.e)), P.p, P.d);
    std::map<mpq_class, long> mult;
    for (const auto& s : np.slopes) ++mult[s];
    for (const auto& [s, k] : mult)
      if (k % s.get_den().get_si() != 0) return false;
  }
  return true;
}

SerreFrobeniusGroup outside(const WeilPolynomial& P, mpfr_prec_t precision) {
  const RelationLattice L = angle_rank_numeric(P, precision);
  SerreFrobeniusGroup G = make_group(P.g, L.delta(), L.torsion_order, "outside:non-abelian-slopes");
  G.embedding = L;
  G.certified = false;
  G.partial = true;
  return G;
}

SerreFrobeniusGroup make_group(int g, int delta, long m, const std::string& provenance) {
  SerreFrobeniusGroup G;
  G.g = g;
  G.delta = delta;
  G.m = m;
  G.provenance = provenance;
  return G;
}

mpz_class ipow(const mpz_class& q, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
  return r;
}

std::vector<Piece> pieces(const WeilPolynomial& P, const IsogenyFactorization& F) {
  std::vector<Piece> out;
  for (const auto& f : F.factors) {
    Piece pc;
    pc.h = f.h;
    pc.e = f.e;
    const NewtonPolygonData np = newton_polygon(f.h, P.p, P.d);
    pc.supersingular = is_supersingular(np);
    pc.stratum = stratify(np, std::max(1, degree(f.h) / 2));
    out.push_back(std::move(pc));
  }
  return out;
}

bool power_of_quadratic(const ZPoly& f, ZPoly& k) {
  const int n = degree(f);
  if (n < 2 || n % 2 != 0 || f.back() != 1) return false;
  const unsigned long t = static_cast<unsigned long>(n / 2);
  const mpz_class& c1 = f[static_cast<std::size_t>(n - 1)];
  if (!mpz_divisible_ui_p(c1.get_mpz_t(), t)) return false;
  const mpz_class b = c1 / static_cast<long>(t);
  const mpz_class& c0 = f[0];
  mpz_class c;
  if (c0 <= 0 || mpz_root(c.get_mpz_t(), c0.get_mpz_t(), t) == 0) return false;
  ZPoly cand{c, b, 1};
  if (pow(cand, static_cast<unsigned>(t)) != f) return false;
  k = std::move(cand);
  return true;
}

long collapse_degree(const ZPoly& h, long bound, ZPoly* k) {
  ZPoly quad;
  if (degree(h) == 2) {
    if (k) *k = h;
    return 1;
  }
  if (degree(h) % 2 != 0) return 0;
  // Power sums once; base change to degree c reads s_{c}, s_{2c}, ...
  const std::size_t n = static_cast<std::size_t>(degree(h));
  const auto s = power_sums(h, n * static_cast<std::size_t>(bound));
  for (long c = 1; c <= bound; ++c) {
    std::vector<mpz_class> t(n);
    for (std::size_t j = 1; j <= n; ++j) t[j - 1] = s[j * static_cast<std::size_t>(c) - 1];
    const ZPoly hc = from_power_sums(t, n);
    if (power_of_quadratic(hc, quad)) {
      if (k) *k = quad;
      return c;
    }
  }
  return 0;
}

namespace {

struct Collapsed {
  std::size_t piece;
  long c;
  ZPoly k;
};

ZPoly lift(const Collapsed& x, long L) { return base_change_poly(x.k, static_cast<unsigned>(L / x.c)); }

bool geometrically_isogenous(const Collapsed& a, const Collapsed& b) {
  const long L0 = std::lcm(a.c, b.c);
  for (long t : {1L, 2L, 3L, 4L, 6L})
    if (lift(a, L0 * t) == lift(b, L0 * t)) return true;
  return false;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) i = parent[i] = parent[parent[i]];
  return i;
}

}  // namespace

EngineResult product_engine(const WeilPolynomial& P, const IsogenyFactorization& F) {
  EngineResult R;
  const auto ps = pieces(P, F);
  ZPoly ss_part{1};
  std::vector<Collapsed> collapsed;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Piece& pc = ps[i];
    FactorSummary fs;
    fs.h = pc.h;
    fs.e = pc.e;
    fs.dim = degree(pc.h) * pc.e / 2;
    fs.stratum = pc.stratum;
    if (pc.supersingular) {
      R.has_ss = true;
      ss_part = mul(ss_part, pow(pc.h, static_cast<unsigned>(pc.e)));
      fs.m = supersingular_torsion_order(pow(pc.h, static_cast<unsigned>(pc.e)), P.q);
      fs.collapse = collapse_degree(pow(pc.h, static_cast<unsigned>(pc.e)), 72);
    } else {
      ZPoly k;
      const long c = collapse_degree(pc.h, 72, &k);
      fs.collapse = c;
      if (c > 0) {
        fs.m = c;
        collapsed.push_back({i, c, k});
      } else {
        fs.m = 1;
        R.noncollapsing += degree(pc.h) / 2;
      }
    }
    R.summaries.push_back(std::move(fs));
  }

  if (R.has_ss) {
    R.m_ss = supersingular_torsion_order(ss_part, P.q);
    ZPoly k;
    const long n1 = collapse_degree(ss_part, R.m_ss, &k);
    if (n1 == 0) breach("supersingular part never becomes a power of an elliptic curve");
    R.inputs.n1 = n1;
    R.inputs.m_E = supersingular_torsion_order(k, ipow(P.q, static_cast<unsigned long>(n1)));
  }

  std::vector<std::size_t> parent(collapsed.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t i = 0; i < collapsed.size(); ++i)
    for (std::size_t j = i + 1; j < collapsed.size(); ++j)
      if (find_root(parent, i) != find_root(parent, j) && geometrically_isogenous(collapsed[i], collapsed[j]))
        parent[find_root(parent, j)] = find_root(parent, i);

  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < collapsed.size(); ++i) roots.insert(find_root(parent, i));
  long m = R.has_ss ? R.m_ss : 1;
  for (std::size_t root : roots) {
    std::vector<const Collapsed*> members;
    long L0 = 1;
    for (std::size_t i = 0; i < collapsed.size(); ++i)
      if (find_root(parent, i) == root) {
        members.push_back(&collapsed[i]);
        L0 = std::lcm(L0, collapsed[i].c);
      }
    long found = 0;
    for (long t = 1; t <= 12 && !found; ++t) {
      const ZPoly ref = lift(*members[0], L0 * t);
      bool same = true;
      for (const Collapsed* x : members)
        if (lift(*x, L0 * t) != ref) same = false;
      if (same) found = L0 * t;
    }
    if (!found) breach("isogeny class never becomes a power of one curve");
    R.inputs.m_blocks.push_back(found);
    m = std::lcm(m, found);
  }
  R.classes = static_cast<int>(roots.size());
  R.inputs.simple_rank = R.noncollapsing;
  R.delta = R.classes + R.noncollapsing;
  R.m = m;
  const SerreFrobeniusGroup check = sf_of_product(R.inputs, P.g);
  if (check.delta != R.delta || check.m != R.m) breach("product rule disagrees with direct torsion order");
  return R;
}

}  // namespace detail
}  // namespace sfg
