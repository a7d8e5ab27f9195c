#pragma once

#include <vector>

namespace gqs {

/// Values and first derivatives at both ends of an interval of given width.
struct HermiteEndpointState {
  double f_left = 0.0;
  double d_left = 0.0;
  double f_right = 0.0;
  double d_right = 0.0;
  double width = 1.0;
};

struct PointValue {
  double value = 0.0;
  double derivative = 0.0;
};

struct DyadicRow {
  double x = 0.0;
  double value = 0.0;
  double derivative = 0.0;
};

/// Level budget for point evaluation.
inline constexpr int kMaxSubdivisionLevels = 40;
/// Level cap for materialized dyadic tables (2^24 + 1 rows).
inline constexpr int kMaxTableLevels = 24;

/// One Hermite subdivision step: value and derivative at the midpoint.
PointValue msa_midpoint(const HermiteEndpointState& state, double theta);

/// Limit function at the 2^levels + 1 dyadic points of the interval, with
/// abscissae origin + k * width / 2^levels.
std::vector<DyadicRow> dyadic_table(const HermiteEndpointState& state, double theta,
                                    int levels, double origin = 0.0);

/// Limit function at relative position t in [0, 1].
///
/// Bisects toward t until the deviation of the cell from its chord,
/// width * max |d - chord slope|, drops below tol, then interpolates the cell
/// endpoints linearly. Dyadic t hit during the descent is returned exactly.
/// Throws ToleranceError if the budget of kMaxSubdivisionLevels is exhausted.
PointValue eval_point(const HermiteEndpointState& state, double theta, double t,
                      double tol);

}  // namespace gqs
