#pragma once

#include <cstddef>
#include <vector>

#include "gqs/basis.hpp"
#include "gqs/geometry.hpp"

namespace gqs {

/// Insert every interval midpoint, repeating each beta on both halves.
GqsSpace refine_space(const GqsSpace& space);

struct SparseEntry {
  std::size_t index = 0;
  double weight = 0.0;
};

/// Fine B-spline weights of the coarse B_k: B_k = sum weight * fineB_index.
std::vector<SparseEntry> refinement_coefficients(const GqsSpace& space, std::size_t k);

/// The whole two-scale relation of one midpoint refinement.
struct RefinementStep {
  GqsSpace coarse;
  GqsSpace fine;
  /// rows[k] holds the fine expansion of coarse B_k (at most four entries).
  std::vector<std::vector<SparseEntry>> rows;

  /// Sum over coarse k of the weight on fine index l.
  double column_sum(std::size_t l) const;
};

RefinementStep refinement_step(const GqsSpace& space);

/// Coefficients of the same function on refine_space(spline.space()). Each
/// new coefficient is a convex combination of two consecutive old ones.
GqsSpline corner_cut(const GqsSpline& spline);

/// Largest |c_{k+1} - c_k| over consecutive coefficients.
double coefficient_gap(const GqsSpline& spline);

inline constexpr int kMaxRefineLevels = 20;

struct PolygonSequence {
  /// SCPs P_0..P_m of the successive corner-cut representations.
  std::vector<ControlPolygon> polygons;
  /// Delta_0..Delta_m, the largest coefficient gap of each polygon.
  std::vector<double> gaps;

  /// Whether Delta_j <= 2^-j Delta_0 + slack for every level.
  bool halving_bound_holds(double slack = 1e-12) const;
  /// Whether Delta_{j+1} <= Delta_j / 2 + slack for every step.
  bool stepwise_halving_holds(double slack = 1e-12) const;
};

PolygonSequence polygon_sequence(const GqsSpline& spline, int levels);

/// Sup distance between the spline and a polygon, sampled at 2^levels + 1
/// dyadic points of every interval of the spline's partition.
double polygon_distance(const GqsSpline& spline, const ControlPolygon& polygon,
                        int levels = 12);

}  // namespace gqs
