#pragma once

#include <string>

#include "json.hpp"
#include "sfg/angle.hpp"
#include "sfg/classify.hpp"
#include "sfg/distribution.hpp"
#include "sfg/factor.hpp"
#include "sfg/newton.hpp"
#include "sfg/weil.hpp"

namespace sfg {

inline constexpr int kSchemaVersion = 1;

// Integers are emitted as decimal strings so large values survive JSON readers.
nlohmann::json polynomial_json(const WeilPolynomial& P);
nlohmann::json factors_json(const IsogenyFactorization& F, const WeilPolynomial& P);
nlohmann::json newton_json(const NewtonPolygonData& np, int g);
nlohmann::json lattice_json(const RelationLattice& L);
nlohmann::json group_json(const SerreFrobeniusGroup& G);

// label, g, q, stratum, delta, m, group, provenance, split_degree, factors.
nlohmann::json classification_report(const WeilPolynomial& P, const SerreFrobeniusGroup& G);

nlohmann::json histogram_json(const TraceHistogram& h);
std::string histogram_csv(const TraceHistogram& h);
nlohmann::json moments_json(const MomentReport& m);
std::string moments_csv(const MomentReport& m);

}  // namespace sfg
