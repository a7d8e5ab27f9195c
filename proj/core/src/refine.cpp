#include "gqs/refine.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gqs/error.hpp"

namespace gqs {

GqsSpace refine_space(const GqsSpace& space) {
  const std::size_t n = space.intervals();
  std::vector<double> knots;
  std::vector<double> betas;
  knots.reserve(2 * n + 1);
  betas.reserve(2 * n);
  knots.push_back(space.knot(0));
  for (std::size_t i = 1; i <= n; ++i) {
    knots.push_back(space.midpoint(i));
    knots.push_back(space.knot(i));
    betas.push_back(space.beta(i));
    betas.push_back(space.beta(i));
  }
  return GqsSpace(Partition(std::move(knots)), BetaSequence(std::move(betas)));
}

std::vector<SparseEntry> refinement_coefficients(const GqsSpace& space, std::size_t k) {
  const std::size_t n = space.intervals();
  if (k >= space.dimension()) {
    std::ostringstream os;
    os << "basis index " << k << " is outside [0, " << space.dimension() - 1 << "]";
    throw ValidationError(os.str());
  }
  // Weights (1/2 - beta/4, 1/2 + beta/4) split the middle of each interval.
  const auto lo = [&](std::size_t i) { return 0.5 - 0.25 * space.beta(i); };
  const auto hi = [&](std::size_t i) { return 0.5 + 0.25 * space.beta(i); };

  if (k == 0) return {{0, 1.0}, {1, 0.5}};
  if (k == 2 * n + 1) return {{4 * n, 0.5}, {4 * n + 1, 1.0}};
  if (k == 1) return {{1, 0.5}, {2, lo(1)}, {3, hi(1)}};
  if (k == 2 * n) return {{4 * n - 2, hi(n)}, {4 * n - 1, lo(n)}, {4 * n, 0.5}};

  const std::size_t i = k / 2;
  const double w = space.omega(i);
  if (k % 2 == 0) {
    return {{4 * i - 2, hi(i)},
            {4 * i - 1, lo(i)},
            {4 * i, 0.5 * (1.0 + w)},
            {4 * i + 1, 0.5 * w}};
  }
  // The trailing pair lives on interval i + 1 and carries its beta.
  return {{4 * i, 0.5 * (1.0 - w)},
          {4 * i + 1, 0.5 * (2.0 - w)},
          {4 * i + 2, lo(i + 1)},
          {4 * i + 3, hi(i + 1)}};
}

double RefinementStep::column_sum(std::size_t l) const {
  double sum = 0.0;
  for (const auto& row : rows) {
    for (const SparseEntry& e : row) {
      if (e.index == l) sum += e.weight;
    }
  }
  return sum;
}

RefinementStep refinement_step(const GqsSpace& space) {
  RefinementStep step{space, refine_space(space), {}};
  step.rows.reserve(space.dimension());
  for (std::size_t k = 0; k < space.dimension(); ++k) {
    step.rows.push_back(refinement_coefficients(space, k));
  }
  return step;
}

GqsSpline corner_cut(const GqsSpline& spline) {
  const GqsSpace& space = spline.space();
  const std::size_t n = space.intervals();
  const auto g = spline.coeffs();
  std::vector<double> fine(4 * n + 2);
  for (std::size_t i = 0; i <= n; ++i) {
    const double w = space.omega(i);
    fine[4 * i] = 0.5 * (1.0 + w) * g[2 * i] + 0.5 * (1.0 - w) * g[2 * i + 1];
    fine[4 * i + 1] = 0.5 * w * g[2 * i] + 0.5 * (2.0 - w) * g[2 * i + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const double lo = 0.5 - 0.25 * space.beta(i);
    const double hi = 0.5 + 0.25 * space.beta(i);
    fine[4 * i - 2] = lo * g[2 * i - 1] + hi * g[2 * i];
    fine[4 * i - 1] = hi * g[2 * i - 1] + lo * g[2 * i];
  }
  return GqsSpline(refine_space(space), std::move(fine));
}

double coefficient_gap(const GqsSpline& spline) {
  const auto g = spline.coeffs();
  double gap = 0.0;
  for (std::size_t k = 1; k < g.size(); ++k) {
    gap = std::max(gap, std::abs(g[k] - g[k - 1]));
  }
  return gap;
}

bool PolygonSequence::halving_bound_holds(double slack) const {
  for (std::size_t j = 0; j < gaps.size(); ++j) {
    if (gaps[j] > std::ldexp(gaps.front(), -static_cast<int>(j)) + slack) return false;
  }
  return true;
}

bool PolygonSequence::stepwise_halving_holds(double slack) const {
  for (std::size_t j = 1; j < gaps.size(); ++j) {
    if (gaps[j] > 0.5 * gaps[j - 1] + slack) return false;
  }
  return true;
}

PolygonSequence polygon_sequence(const GqsSpline& spline, int levels) {
  if (levels < 0 || levels > kMaxRefineLevels) {
    std::ostringstream os;
    os << "refinement level " << levels << " is outside [0, " << kMaxRefineLevels << "]";
    throw ValidationError(os.str());
  }
  PolygonSequence seq;
  GqsSpline current = spline;
  seq.polygons.push_back(scp(current));
  seq.gaps.push_back(coefficient_gap(current));
  for (int m = 0; m < levels; ++m) {
    current = corner_cut(current);
    seq.polygons.push_back(scp(current));
    seq.gaps.push_back(coefficient_gap(current));
  }
  return seq;
}

double polygon_distance(const GqsSpline& spline, const ControlPolygon& polygon, int levels) {
  double dist = 0.0;
  for (const DyadicRow& row : spline.sample(levels)) {
    dist = std::max(dist, std::abs(row.value - polygon.value_at(row.x)));
  }
  return dist;
}

}  // namespace gqs
