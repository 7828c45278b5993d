#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sfg/classify.hpp"
#include "sfg/weil.hpp"

namespace sfg {

struct Atom {
  double value = 0;
  std::uint64_t count = 0;
  double fraction = 0;
};

struct TraceHistogram {
  int g = 0;
  std::uint64_t samples = 0;
  int buckets = 0;
  double lo = 0;
  double hi = 0;
  std::vector<std::uint64_t> counts;
  // Single values carrying more than 1% of the samples.
  std::vector<Atom> atoms;

  double bucket_left(int i) const { return lo + (hi - lo) * i / buckets; }
  double bucket_right(int i) const { return lo + (hi - lo) * (i + 1) / buckets; }
};

struct MomentReport {
  std::vector<int> k;
  std::vector<double> empirical;
  std::vector<double> exact;
  std::vector<double> abs_error;
};

struct DistributionOptions {
  mpfr_prec_t precision = 256;
  unsigned jobs = 1;
};

// Default and full-scale sample sizes.
inline constexpr std::uint64_t kDefaultSamples = 65536;       // 16^4
inline constexpr int kDefaultBuckets = 64;                    // 4^3
inline constexpr std::uint64_t kFullSamples = 16777216;   // 16^6
inline constexpr int kFullBuckets = 4096;                 // 4^6

// Normalized traces x_r = sum_j 2 cos(2 pi r theta_j) for r = 1..N.
std::vector<double> trace_sequence(const WeilPolynomial& P, std::uint64_t N, const DistributionOptions& opt = {});

// Streams the sequence in fixed chunks; the result does not depend on opt.jobs.
TraceHistogram histogram(const WeilPolynomial& P, std::uint64_t N, int B, const DistributionOptions& opt = {});
TraceHistogram histogram(const std::vector<double>& xs, int g, int B);

// Compensated means of x^k for k = 1..K.
std::vector<double> empirical_moments(const std::vector<double>& xs, int K);
std::vector<double> empirical_moments(const WeilPolynomial& P, std::uint64_t N, int K,
                                      const DistributionOptions& opt = {});

// Moments of the trace under Haar measure on SF(A), using the relation lattice
// in G.embedding (not needed when delta = g). Throws EmbeddingMissing.
std::vector<double> exact_moments(const WeilPolynomial& P, const SerreFrobeniusGroup& G, int K);

MomentReport moment_report(const std::vector<double>& empirical, const std::vector<double>& exact);

// Distribution function of dx / (pi sqrt(4 - x^2)) on [-2, 2].
double arcsine_cdf(double x);
// Total variation between the normalized histogram and the measure with the given CDF.
double total_variation(const TraceHistogram& h, const std::function<double(double)>& cdf);

}  // namespace sfg
