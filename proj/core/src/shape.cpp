#include "gqs/shape.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gqs/error.hpp"

namespace gqs {
namespace {

void check_sizes(const Partition& partition, const HermiteData& data) {
  const std::size_t knots = partition.intervals() + 1;
  if (data.y.size() != knots || data.p.size() != knots) {
    std::ostringstream os;
    os << "Hermite data needs " << knots << " values and slopes, got " << data.y.size()
       << " and " << data.p.size();
    throw ValidationError(os.str());
  }
}

HermiteData negated(const HermiteData& data) {
  HermiteData out = data;
  for (double& v : out.y) v = -v;
  for (double& v : out.p) v = -v;
  return out;
}

ShapeFit assemble(const Partition& partition, const HermiteData& data,
                  std::vector<double> theta, std::vector<IntervalData> intervals) {
  std::vector<double> beta(theta.size());
  std::transform(theta.begin(), theta.end(), beta.begin(), beta_from_theta);
  GqsSpace space(partition, BetaSequence(beta));
  GqsSpline spline = hermite_to_spline(space, data);
  return {std::move(spline), std::move(theta), std::move(beta), std::move(intervals)};
}

ShapeFit flipped(ShapeFit fit) {
  std::vector<double> coeffs(fit.spline.coeffs().begin(), fit.spline.coeffs().end());
  for (double& c : coeffs) c = -c;
  for (IntervalData& d : fit.intervals) {
    d.chord = -d.chord;
    d.mean = -d.mean;
  }
  return {GqsSpline(fit.spline.space(), std::move(coeffs)), std::move(fit.theta),
          std::move(fit.beta), std::move(fit.intervals)};
}

[[noreturn]] void reject(std::size_t i, const std::string& what) {
  throw ShapePreconditionError(i, what);
}

template <class Fit>
ShapeFit fit_mirrored(const HermiteData& data, const char* sense, Fit fit) {
  try {
    return flipped(fit(negated(data)));
  } catch (const ShapePreconditionError& e) {
    reject(e.interval(), e.condition() + " on the negated data (" + sense + " sense)");
  }
}

// Increasing data: Delta y_{i-1} > 0 and p > 0 at both ends of every interval.
ShapeFit fit_increasing(const Partition& partition, const HermiteData& data) {
  auto intervals = interval_data(partition, data);
  const std::size_t n = partition.intervals();
  std::vector<double> theta(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const double dy = data.y[i] - data.y[i - 1];
    if (!(dy > 0.0)) {
      std::ostringstream os;
      os << "y_" << i << " - y_" << i - 1 << " = " << dy << " must be > 0 (Delta y > 0)";
      reject(i, os.str());
    }
    for (std::size_t j : {i - 1, i}) {
      if (!(data.p[j] > 0.0)) {
        std::ostringstream os;
        os << "p_" << j << " = " << data.p[j] << " must be > 0 (p > 0)";
        reject(i, os.str());
      }
    }
    IntervalData& d = intervals[i - 1];
    d.critical = 0.5 * d.chord / d.mean;
    theta[i - 1] = d.critical > 0.25 ? 0.25 : std::min(0.25, 0.5 * d.critical);
  }
  return assemble(partition, data, std::move(theta), std::move(intervals));
}

// Convex data: p_{i-1} < tau_i < p_i on every interval.
ShapeFit fit_strictly_convex(const Partition& partition, const HermiteData& data) {
  auto intervals = interval_data(partition, data);
  const std::size_t n = partition.intervals();
  std::vector<double> theta(n);
  for (std::size_t i = 1; i <= n; ++i) {
    IntervalData& d = intervals[i - 1];
    const double p0 = data.p[i - 1];
    const double p1 = data.p[i];
    if (!(p0 < d.chord && d.chord < p1)) {
      std::ostringstream os;
      os << "p_" << i - 1 << " = " << p0 << ", tau_" << i << " = " << d.chord << ", p_" << i
         << " = " << p1 << " violate p_{i-1} < tau_i < p_i (strict convexity)";
      reject(i, os.str());
    }
    const double spread = p1 - p0;
    d.critical = std::min(d.chord - p0, p1 - d.chord) / spread;
    theta[i - 1] = std::min(0.25, d.critical);
  }
  return assemble(partition, data, std::move(theta), std::move(intervals));
}

}  // namespace

ShapeReport diagnose(const GqsSpline& spline, double slack) {
  const auto coeffs = spline.coeffs();
  const ControlPolygon poly = scp(spline);
  const std::size_t segments = coeffs.size() - 1;

  std::vector<double> diff(segments), slope(segments);
  double diff_scale = 0.0;
  double slope_scale = 0.0;
  for (std::size_t k = 0; k < segments; ++k) {
    diff[k] = coeffs[k + 1] - coeffs[k];
    slope[k] = diff[k] / (poly.vertices[k + 1].x - poly.vertices[k].x);
    diff_scale = std::max(diff_scale, std::abs(diff[k]));
    slope_scale = std::max(slope_scale, std::abs(slope[k]));
  }
  const double diff_tol = slack * diff_scale;
  const double slope_tol = slack * slope_scale;

  ShapeReport r;
  r.monotone_increasing = std::all_of(diff.begin(), diff.end(),
                                      [&](double v) { return v >= -diff_tol; });
  r.monotone_decreasing = std::all_of(diff.begin(), diff.end(),
                                      [&](double v) { return v <= diff_tol; });
  r.convex = true;
  r.concave = true;
  for (std::size_t k = 1; k < segments; ++k) {
    if (slope[k] < slope[k - 1] - slope_tol) r.convex = false;
    if (slope[k] > slope[k - 1] + slope_tol) r.concave = false;
  }

  double sense = 0.0;
  for (std::size_t k = 0; k < segments; ++k) {
    if (sense == 0.0) {
      if (std::abs(diff[k]) > diff_tol) sense = diff[k] > 0.0 ? 1.0 : -1.0;
    } else if (sense * diff[k] < -diff_tol) {
      r.first_violation = k + 1;
      break;
    }
  }
  return r;
}

std::vector<IntervalData> interval_data(const Partition& partition, const HermiteData& data) {
  check_sizes(partition, data);
  const std::size_t n = partition.intervals();
  std::vector<IntervalData> out(n);
  for (std::size_t i = 1; i <= n; ++i) {
    IntervalData& d = out[i - 1];
    d.chord = (data.y[i] - data.y[i - 1]) / partition.width(i);
    d.mean = 0.5 * (data.p[i - 1] + data.p[i]);
    d.critical = std::numeric_limits<double>::infinity();
  }
  return out;
}

ShapeFit fit_monotone(const Partition& partition, const HermiteData& data,
                      Monotonicity sense) {
  check_sizes(partition, data);
  if (sense == Monotonicity::increasing) return fit_increasing(partition, data);
  return fit_mirrored(data, "decreasing",
                      [&](const HermiteData& d) { return fit_increasing(partition, d); });
}

ShapeFit fit_convex(const Partition& partition, const HermiteData& data, Curvature sense) {
  check_sizes(partition, data);
  if (sense == Curvature::convex) return fit_strictly_convex(partition, data);
  return fit_mirrored(data, "concave",
                      [&](const HermiteData& d) { return fit_strictly_convex(partition, d); });
}

ShapeFit fit_monotone_convex(const Partition& partition, const HermiteData& data,
                             Monotonicity monotone, Curvature curvature) {
  check_sizes(partition, data);
  const double sign = monotone == Monotonicity::increasing ? 1.0 : -1.0;
  for (std::size_t i = 1; i <= partition.intervals(); ++i) {
    for (std::size_t j : {i - 1, i}) {
      if (!(sign * data.p[j] > 0.0)) {
        std::ostringstream os;
        os << "p_" << j << " = " << data.p[j] << " must be "
           << (sign > 0.0 ? "> 0 (increasing)" : "< 0 (decreasing)");
        reject(i, os.str());
      }
    }
  }
  return fit_convex(partition, data, curvature);
}

}  // namespace gqs
