#include "testkit.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace gqs::testkit {

Rng::Rng(std::uint64_t seed) : state_(seed) {}

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double Rng::uniform(double lo, double hi) {
  const double u = static_cast<double>(next() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

std::size_t Rng::index(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(next() % (hi - lo + 1));
}

double Rng::sign() { return (next() >> 63) != 0 ? 1.0 : -1.0; }

PointValue oracle_eval(const HermiteEndpointState& s, double t) {
  const double h = s.width;
  // Left piece f0 + d0 u + A u^2, right piece f1 + d1 (u - h) + B (u - h)^2,
  // matched in value and slope at u = h / 2.
  const double sum = (s.d_right - s.d_left) / h;
  const double diff =
      4.0 * (s.f_right - s.f_left) / (h * h) - 2.0 * (s.d_left + s.d_right) / h;
  const double A = 0.5 * (sum + diff);
  const double B = 0.5 * (sum - diff);
  const double u = t * h;
  if (t <= 0.5) {
    return {s.f_left + s.d_left * u + A * u * u, s.d_left + 2.0 * A * u};
  }
  const double v = u - h;
  return {s.f_right + s.d_right * v + B * v * v, s.d_right + 2.0 * B * v};
}

Partition random_partition(Rng& rng, std::size_t intervals, double a, double b) {
  const double min_gap = 0.1 * (b - a) / static_cast<double>(intervals);
  std::vector<double> knots(intervals + 1);
  for (;;) {
    knots.front() = a;
    knots.back() = b;
    for (std::size_t j = 1; j < intervals; ++j) knots[j] = rng.uniform(a, b);
    std::sort(knots.begin() + 1, knots.end() - 1);
    bool ok = true;
    for (std::size_t j = 1; j <= intervals; ++j) {
      if (knots[j] - knots[j - 1] < min_gap) ok = false;
    }
    if (ok) return Partition(knots);
  }
}

GqsSpace random_space(Rng& rng, SpaceRange range) {
  const std::size_t n = rng.index(range.min_intervals, range.max_intervals);
  const double a = rng.uniform(-2.0, 2.0);
  const double length = rng.uniform(0.5, 4.0);
  Partition partition = random_partition(rng, n, a, a + length);
  std::vector<double> betas(n);
  for (double& beta : betas) beta = rng.uniform(range.min_beta, range.max_beta);
  return GqsSpace(std::move(partition), BetaSequence(std::move(betas)));
}

GqsSpace random_space(std::uint64_t seed, SpaceRange range) {
  Rng rng(seed);
  return random_space(rng, range);
}

GqsSpline random_spline(Rng& rng, const GqsSpace& space) {
  std::vector<double> coeffs(space.dimension());
  for (double& c : coeffs) c = rng.uniform(-1.0, 1.0);
  return GqsSpline(space, std::move(coeffs));
}

std::uint64_t digest(const GqsSpace& space) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  const auto mix = [&](double v) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (bits >> (8 * byte)) & 0xffu;
      h *= 0x100000001b3ull;
    }
  };
  for (double x : space.partition().knots()) mix(x);
  for (double b : space.betas().values()) mix(b);
  return h;
}

HermiteData random_increasing_data(Rng& rng, const Partition& partition) {
  const std::size_t n = partition.intervals();
  HermiteData data;
  data.y.resize(n + 1);
  data.p.resize(n + 1);
  data.y[0] = rng.uniform(-1.0, 1.0);
  for (std::size_t i = 1; i <= n; ++i) {
    data.y[i] = data.y[i - 1] + partition.width(i) * rng.uniform(0.05, 3.0);
  }
  // Slopes range from much smaller to much larger than the chords, so both
  // the theta = 1/4 branch and the reduced-theta branch occur.
  for (double& p : data.p) p = std::exp(rng.uniform(-3.0, 3.0));
  return data;
}

HermiteData random_convex_data(Rng& rng, const Partition& partition) {
  const std::size_t n = partition.intervals();
  HermiteData data;
  data.y.resize(n + 1);
  data.p.resize(n + 1);
  data.p[0] = rng.uniform(-3.0, 3.0);
  for (std::size_t j = 1; j <= n; ++j) data.p[j] = data.p[j - 1] + rng.uniform(0.05, 2.0);
  data.y[0] = rng.uniform(-1.0, 1.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const double u = rng.uniform(0.01, 0.99);
    const double chord = data.p[i - 1] + u * (data.p[i] - data.p[i - 1]);
    data.y[i] = data.y[i - 1] + partition.width(i) * chord;
  }
  return data;
}

}  // namespace gqs::testkit
