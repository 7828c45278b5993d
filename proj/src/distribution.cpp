#include "sfg/distribution.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <numbers>
#include <thread>

#include "sfg/error.hpp"
#include "sfg/lattice.hpp"

namespace sfg {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kChunk = 65536;
constexpr std::size_t kHeavyCounters = 128;
constexpr double kAtomShare = 0.01;
// Values are matched on a grid of 2^-30.
constexpr double kGrid = 1073741824.0;

// Neumaier summation.
struct Sum {
  double s = 0;
  double c = 0;
  void add(double x) {
    const double t = s + x;
    if (std::fabs(s) >= std::fabs(x))
      c += (s - t) + x;
    else
      c += (x - t) + s;
    s = t;
  }
  void add(const Sum& o) {
    add(o.s);
    add(o.c);
  }
  double value() const { return s + c; }
};

// Angles as fractions of 2^128, so r * theta mod 1 is exact wraparound.
std::vector<u128> fixed_phases(const WeilPolynomial& P, std::uint64_t N, mpfr_prec_t precision) {
  const mpfr_prec_t bits = std::min<mpfr_prec_t>(precision, 128);
  if (std::ldexp(static_cast<double>(N), -static_cast<int>(bits)) > std::ldexp(1.0, -32))
    throw Error(ErrorKind::PrecisionLoss, "sample count too large for the angle precision");
  const auto theta = frobenius_angles(P, precision + 32);
  std::vector<u128> out;
  for (int j = 0; j < P.g; ++j) {
    Real t = ldexp(theta[static_cast<std::size_t>(j)], 128);
    const mpz_class z = round_to_mpz(t);
    mpz_class lo = z & mpz_class("18446744073709551615");
    mpz_class hi = (z >> 64) & mpz_class("18446744073709551615");
    out.push_back((static_cast<u128>(hi.get_ui()) << 64) | lo.get_ui());
  }
  return out;
}

double trace_at(const std::vector<u128>& phases, std::uint64_t r) {
  double x = 0;
  for (u128 ph : phases) {
    const u128 t = ph * static_cast<u128>(r);
    const double f = std::ldexp(static_cast<double>(static_cast<std::uint64_t>(t >> 64)), -64);
    x += 2 * std::cos(2 * std::numbers::pi * f);
  }
  return x;
}

long long grid_key(double x) { return std::llround(x * kGrid); }

// Runs body(chunk_index) for every chunk on `jobs` threads.
template <class F>
void for_chunks(std::uint64_t chunks, unsigned jobs, F body) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::uint64_t>(chunks, 1))));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) body(c);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

using Heavy = std::map<long long, std::uint64_t>;

// Misra-Gries reduction to at most kHeavyCounters keys.
void shrink(Heavy& h) {
  while (h.size() > kHeavyCounters) {
    std::uint64_t least = UINT64_MAX;
    for (const auto& [k, v] : h) least = std::min(least, v);
    for (auto it = h.begin(); it != h.end();) {
      it->second -= least;
      it = it->second == 0 ? h.erase(it) : std::next(it);
    }
  }
}

int bucket_of(double x, int g, int B) {
  const double lo = -2.0 * g;
  const double w = 4.0 * g / B;
  long b = static_cast<long>(std::floor((x - lo) / w));
  return static_cast<int>(std::clamp<long>(b, 0, B - 1));
}

double snapped(double x) {
  const double k = std::nearbyint(x * kGrid);
  return std::fabs(x * kGrid - k) < 1e-3 ? k / kGrid : x;
}

TraceHistogram empty_histogram(int g, std::uint64_t N, int B) {
  if (B < 1) throw Error(ErrorKind::InvalidArgument, "bucket count must be positive");
  TraceHistogram h;
  h.g = g;
  h.samples = N;
  h.buckets = B;
  h.lo = -2.0 * g;
  h.hi = 2.0 * g;
  h.counts.assign(static_cast<std::size_t>(B), 0);
  return h;
}

void finish_atoms(TraceHistogram& h, const std::map<long long, std::uint64_t>& exact) {
  for (const auto& [k, v] : exact) {
    if (static_cast<double>(v) <= kAtomShare * static_cast<double>(h.samples)) continue;
    h.atoms.push_back({static_cast<double>(k) / kGrid, v, static_cast<double>(v) / static_cast<double>(h.samples)});
  }
}

}  // namespace

std::vector<double> trace_sequence(const WeilPolynomial& P, std::uint64_t N, const DistributionOptions& opt) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be positive");
  const auto phases = fixed_phases(P, N, opt.precision);
  std::vector<double> xs(N);
  const std::uint64_t chunks = (N + kChunk - 1) / kChunk;
  for_chunks(chunks, opt.jobs, [&](std::uint64_t c) {
    const std::uint64_t end = std::min(N, (c + 1) * kChunk);
    for (std::uint64_t i = c * kChunk; i < end; ++i) xs[i] = trace_at(phases, i + 1);
  });
  return xs;
}

TraceHistogram histogram(const std::vector<double>& xs, int g, int B) {
  TraceHistogram h = empty_histogram(g, xs.size(), B);
  Heavy heavy;
  for (double x : xs) {
    ++h.counts[static_cast<std::size_t>(bucket_of(snapped(x), g, B))];
    ++heavy[grid_key(x)];
    shrink(heavy);
  }
  std::map<long long, std::uint64_t> exact;
  for (const auto& [k, v] : heavy) exact[k] = 0;
  for (double x : xs) {
    auto it = exact.find(grid_key(x));
    if (it != exact.end()) ++it->second;
  }
  finish_atoms(h, exact);
  return h;
}

TraceHistogram histogram(const WeilPolynomial& P, std::uint64_t N, int B, const DistributionOptions& opt) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be positive");
  TraceHistogram h = empty_histogram(P.g, N, B);
  const auto phases = fixed_phases(P, N, opt.precision);
  const std::uint64_t chunks = (N + kChunk - 1) / kChunk;
  std::vector<std::vector<std::uint64_t>> counts(chunks);
  std::vector<Heavy> heavy(chunks);
  for_chunks(chunks, opt.jobs, [&](std::uint64_t c) {
    auto& cnt = counts[c];
    cnt.assign(static_cast<std::size_t>(B), 0);
    const std::uint64_t end = std::min(N, (c + 1) * kChunk);
    for (std::uint64_t r = c * kChunk + 1; r <= end; ++r) {
      const double x = trace_at(phases, r);
      ++cnt[static_cast<std::size_t>(bucket_of(snapped(x), P.g, B))];
      ++heavy[c][grid_key(x)];
      shrink(heavy[c]);
    }
  });
  Heavy merged;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    for (int b = 0; b < B; ++b) h.counts[static_cast<std::size_t>(b)] += counts[c][static_cast<std::size_t>(b)];
    for (const auto& [k, v] : heavy[c]) merged[k] += v;
    shrink(merged);
  }
  std::vector<long long> keys;
  for (const auto& [k, v] : merged) keys.push_back(k);
  std::vector<std::vector<std::uint64_t>> hits(chunks, std::vector<std::uint64_t>(keys.size(), 0));
  for_chunks(chunks, opt.jobs, [&](std::uint64_t c) {
    const std::uint64_t end = std::min(N, (c + 1) * kChunk);
    for (std::uint64_t r = c * kChunk + 1; r <= end; ++r) {
      const long long key = grid_key(trace_at(phases, r));
      const auto it = std::lower_bound(keys.begin(), keys.end(), key);
      if (it != keys.end() && *it == key) ++hits[c][static_cast<std::size_t>(it - keys.begin())];
    }
  });
  std::map<long long, std::uint64_t> exact;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::uint64_t v = 0;
    for (std::uint64_t c = 0; c < chunks; ++c) v += hits[c][i];
    exact[keys[i]] = v;
  }
  finish_atoms(h, exact);
  return h;
}

std::vector<double> empirical_moments(const std::vector<double>& xs, int K) {
  if (xs.empty()) throw Error(ErrorKind::InvalidArgument, "empty sequence");
  std::vector<Sum> sums(static_cast<std::size_t>(K));
  for (double x : xs) {
    double p = 1;
    for (int k = 0; k < K; ++k) {
      p *= x;
      sums[static_cast<std::size_t>(k)].add(p);
    }
  }
  std::vector<double> out;
  for (const auto& s : sums) out.push_back(s.value() / static_cast<double>(xs.size()));
  return out;
}

std::vector<double> empirical_moments(const WeilPolynomial& P, std::uint64_t N, int K, const DistributionOptions& opt) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "sample count must be positive");
  const auto phases = fixed_phases(P, N, opt.precision);
  const std::uint64_t chunks = (N + kChunk - 1) / kChunk;
  std::vector<std::vector<Sum>> partial(chunks, std::vector<Sum>(static_cast<std::size_t>(K)));
  for_chunks(chunks, opt.jobs, [&](std::uint64_t c) {
    const std::uint64_t end = std::min(N, (c + 1) * kChunk);
    for (std::uint64_t r = c * kChunk + 1; r <= end; ++r) {
      const double x = trace_at(phases, r);
      double p = 1;
      for (int k = 0; k < K; ++k) {
        p *= x;
        partial[c][static_cast<std::size_t>(k)].add(p);
      }
    }
  });
  std::vector<double> out;
  for (int k = 0; k < K; ++k) {
    Sum s;
    for (std::uint64_t c = 0; c < chunks; ++c) s.add(partial[c][static_cast<std::size_t>(k)]);
    out.push_back(s.value() / static_cast<double>(N));
  }
  return out;
}

std::vector<double> exact_moments(const WeilPolynomial& P, const SerreFrobeniusGroup& G, int K) {
  const int g = P.g;
  const int delta = G.delta;
  if (delta < 0 || delta > g || G.m < 1) throw Error(ErrorKind::InconsistentInputs, "invalid group");
  // Columns of B span the identity component: t -> e(B t).
  std::vector<std::vector<long>> Bm(static_cast<std::size_t>(g), std::vector<long>(static_cast<std::size_t>(delta), 0));
  if (delta == g) {
    for (int j = 0; j < g; ++j) Bm[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 1;
  } else {
    if (!G.embedding) throw Error(ErrorKind::EmbeddingMissing, "relation lattice required for delta < g");
    IntMatrix rel;
    for (const auto& r : G.embedding->relations) {
      std::vector<mpz_class> row;
      for (long c : r.c) row.emplace_back(c);
      rel.push_back(row);
    }
    const SmithForm s = smith_normal_form(rel);
    if (g - s.rank != delta) throw Error(ErrorKind::InconsistentInputs, "embedding rank disagrees with delta");
    for (int j = 0; j < g; ++j)
      for (int l = 0; l < delta; ++l)
        Bm[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] =
            s.V[static_cast<std::size_t>(j)][static_cast<std::size_t>(s.rank + l)].get_si();
  }
  const auto theta_r = frobenius_angles(P, 128);
  std::vector<double> theta;
  for (int j = 0; j < g; ++j) theta.push_back(theta_r[static_cast<std::size_t>(j)].to_double());

  // Trapezoid rule with more nodes than the top frequency of x^K is exact.
  std::vector<long> nodes;
  for (int l = 0; l < delta; ++l) {
    long w = 0;
    for (int j = 0; j < g; ++j) w += std::labs(Bm[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)]);
    nodes.push_back(K * w + 1);
  }
  std::vector<Sum> sums(static_cast<std::size_t>(K));
  std::vector<long> idx(static_cast<std::size_t>(delta), 0);
  double weight = 1.0 / static_cast<double>(G.m);
  for (long n : nodes) weight /= static_cast<double>(n);
  for (long r = 0; r < G.m; ++r) {
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      double x = 0;
      for (int j = 0; j < g; ++j) {
        double a = static_cast<double>(r) * theta[static_cast<std::size_t>(j)];
        for (int l = 0; l < delta; ++l)
          a += static_cast<double>(Bm[static_cast<std::size_t>(j)][static_cast<std::size_t>(l)] *
                                   idx[static_cast<std::size_t>(l)]) /
               static_cast<double>(nodes[static_cast<std::size_t>(l)]);
        x += 2 * std::cos(2 * std::numbers::pi * (a - std::floor(a)));
      }
      double p = 1;
      for (int k = 0; k < K; ++k) {
        p *= x;
        sums[static_cast<std::size_t>(k)].add(p * weight);
      }
      int l = 0;
      while (l < delta && ++idx[static_cast<std::size_t>(l)] == nodes[static_cast<std::size_t>(l)]) {
        idx[static_cast<std::size_t>(l)] = 0;
        ++l;
      }
      if (l == delta) break;
    }
  }
  std::vector<double> out;
  for (const auto& s : sums) out.push_back(s.value());
  return out;
}

MomentReport moment_report(const std::vector<double>& empirical, const std::vector<double>& exact) {
  if (empirical.size() != exact.size()) throw Error(ErrorKind::InvalidArgument, "moment vectors differ in length");
  MomentReport m;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    m.k.push_back(static_cast<int>(i + 1));
    m.empirical.push_back(empirical[i]);
    m.exact.push_back(exact[i]);
    m.abs_error.push_back(std::fabs(empirical[i] - exact[i]));
  }
  return m;
}

double arcsine_cdf(double x) {
  if (x <= -2) return 0;
  if (x >= 2) return 1;
  return 0.5 + std::asin(x / 2) / std::numbers::pi;
}

double total_variation(const TraceHistogram& h, const std::function<double(double)>& cdf) {
  double tv = 0;
  for (int i = 0; i < h.buckets; ++i) {
    const double emp = static_cast<double>(h.counts[static_cast<std::size_t>(i)]) / static_cast<double>(h.samples);
    const double mass = cdf(h.bucket_right(i)) - cdf(h.bucket_left(i));
    tv += std::fabs(emp - mass);
  }
  return tv / 2;
}

}  // namespace sfg
