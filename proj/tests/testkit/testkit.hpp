#pragma once

#include <cstdint>
#include <vector>

#include "gqs/basis.hpp"
#include "gqs/geometry.hpp"
#include "gqs/msa.hpp"

namespace gqs::testkit {

/// Portable splitmix64 generator with a hand-written double mapping, so draws
/// are reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  double uniform(double lo, double hi);
  std::size_t index(std::size_t lo, std::size_t hi);  // inclusive
  double sign();

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

/// Classical C^1 quadratic spline on one interval with a break at the
/// midpoint, determined by Hermite data at both ends. This is the limit of
/// the subdivision scheme at beta = -1, built here without it.
PointValue oracle_eval(const HermiteEndpointState& data, double t);

struct SpaceRange {
  std::size_t min_intervals = 1;
  std::size_t max_intervals = 20;
  double min_beta = -1.0;
  double max_beta = -0.05;
};

/// Random valid space, deterministic per seed. Knots come from sorted uniform
/// draws, redrawn until every gap exceeds a tenth of the mean width.
GqsSpace random_space(std::uint64_t seed, SpaceRange range = {});
GqsSpace random_space(Rng& rng, SpaceRange range = {});

/// Coefficients uniform in [-1, 1].
GqsSpline random_spline(Rng& rng, const GqsSpace& space);

/// FNV-1a digest over the bit patterns of the knots and betas.
std::uint64_t digest(const GqsSpace& space);

/// Strictly increasing Hermite data with positive slopes.
HermiteData random_increasing_data(Rng& rng, const Partition& partition);
/// Strictly convex Hermite data: p_{i-1} < tau_i < p_i.
HermiteData random_convex_data(Rng& rng, const Partition& partition);

/// Knots 0 < ... < n drawn for a partition with n intervals on [a, b].
Partition random_partition(Rng& rng, std::size_t intervals, double a, double b);

}  // namespace gqs::testkit
