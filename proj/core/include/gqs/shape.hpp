#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gqs/basis.hpp"
#include "gqs/geometry.hpp"

namespace gqs {

/// Shape of a spline read off its control polygon. A spline is monotone
/// (convex) exactly when its SCP is, so these flags describe the function.
struct ShapeReport {
  bool monotone_increasing = false;
  bool monotone_decreasing = false;
  bool convex = false;
  bool concave = false;
  /// First coefficient index breaking monotonicity in the sense set by the
  /// first nonzero coefficient difference; empty for monotone polygons.
  std::optional<std::size_t> first_violation;
};

/// Relative slack for the SCP comparisons, scaled by the largest coefficient
/// difference (monotonicity) or the largest segment slope (convexity).
inline constexpr double kShapeSlack = 1e-12;

ShapeReport diagnose(const GqsSpline& spline, double slack = kShapeSlack);

enum class Monotonicity { increasing, decreasing };
enum class Curvature { convex, concave };

/// Per-interval quantities driving the choice of theta.
struct IntervalData {
  double chord = 0.0;  ///< tau_i = (y_i - y_{i-1}) / h_i
  double mean = 0.0;   ///< mu_i = (p_{i-1} + p_i) / 2
  /// Critical threshold; +infinity when every theta in (0, 1/4] is admissible.
  double critical = 0.0;
};

std::vector<IntervalData> interval_data(const Partition& partition, const HermiteData& data);

struct ShapeFit {
  GqsSpline spline;
  std::vector<double> theta;
  std::vector<double> beta;
  std::vector<IntervalData> intervals;
};

/// Monotone interpolant. Requires strictly monotone values and slopes of the
/// same strict sign; picks theta_i = 1/4 when mu_i < 2 tau_i and
/// theta_i = min(1/4, bar_theta_i / 2) otherwise, bar_theta_i = tau_i / (2 mu_i).
ShapeFit fit_monotone(const Partition& partition, const HermiteData& data,
                      Monotonicity sense = Monotonicity::increasing);

/// Convex (concave) interpolant. Requires p_{i-1} < tau_i < p_i on every
/// interval (reversed for concave data).
ShapeFit fit_convex(const Partition& partition, const HermiteData& data,
                    Curvature sense = Curvature::convex);

/// Interpolant that is both monotone and convex (concave); same theta rule as
/// fit_convex, with the slopes additionally of the monotone sign.
ShapeFit fit_monotone_convex(const Partition& partition, const HermiteData& data,
                             Monotonicity monotone = Monotonicity::increasing,
                             Curvature curvature = Curvature::convex);

}  // namespace gqs
