#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "gqs/geometry.hpp"
#include "gqs/msa.hpp"

namespace gqs {

/// Values y_0..y_n and slopes p_0..p_n at the knots.
struct HermiteData {
  std::vector<double> y;
  std::vector<double> p;
};

/// B-coefficients [a_{i-1}, d_{i-1}, c_i, a_i] of a spline on one interval.
struct LocalCoeffs {
  double a_left = 0.0;
  double d = 0.0;
  double c = 0.0;
  double a_right = 0.0;
};

struct Vertex {
  double x = 0.0;
  double y = 0.0;
};

/// Piecewise-linear polygon through ordered vertices.
struct ControlPolygon {
  std::vector<Vertex> vertices;

  /// Linear interpolation between vertices; x must lie in the abscissa range.
  double value_at(double x) const;
  /// Largest |y_{k+1} - y_k| over consecutive vertices.
  double max_gap() const;
};

/// Default point-evaluation tolerance.
inline constexpr double kDefaultTolerance = 1e-10;

/// An element of GS_2(beta): a space plus its 2n + 2 global B-coefficients.
class GqsSpline {
 public:
  GqsSpline(GqsSpace space, std::vector<double> coeffs);

  const GqsSpace& space() const noexcept { return space_; }
  std::span<const double> coeffs() const noexcept { return coeffs_; }
  double coeff(std::size_t k) const { return coeffs_.at(k); }
  std::size_t intervals() const noexcept { return space_.intervals(); }

  /// Local B-coefficients on interval i (1-based).
  LocalCoeffs local(std::size_t i) const;
  /// Hermite data at the ends of interval i (1-based).
  HermiteEndpointState local_state(std::size_t i) const;

  PointValue eval(double x, double tol = kDefaultTolerance) const;

  /// Limit values at 2^levels + 1 dyadic points of every interval, knots shared.
  std::vector<DyadicRow> sample(int levels) const;

 private:
  GqsSpace space_;
  std::vector<double> coeffs_;
};

/// Local B-coefficients on interval i for an arbitrary coefficient vector.
LocalCoeffs local_coeffs(const GqsSpace& space, std::span<const double> coeffs,
                         std::size_t i);
HermiteEndpointState local_state(const GqsSpace& space, const LocalCoeffs& local,
                                 std::size_t i);

GqsSpline hermite_to_spline(const GqsSpace& space, const HermiteData& data);
HermiteData spline_to_hermite(const GqsSpline& spline);

PointValue eval(const GqsSpline& spline, double x, double tol = kDefaultTolerance);

/// Closed support [lo, hi] of B_k.
std::pair<double, double> basis_support(const GqsSpace& space, std::size_t k);

/// B_k(x), computed by subdivision from the unit coefficient vector e_k.
double basis_function(const GqsSpace& space, std::size_t k, double x,
                      double tol = kDefaultTolerance);
/// All 2n + 2 basis values at x; only the (at most four) active ones are nonzero.
std::vector<double> basis_values(const GqsSpace& space, double x,
                                 double tol = kDefaultTolerance);

/// B'_k at the knots. Only B_{2j} and B_{2j+1} have nonzero slope at x_j:
/// B'_{2j}(x_j) = -1 / (eta_j - xi_j) = -B'_{2j+1}(x_j).
class KnotDerivativeTable {
 public:
  explicit KnotDerivativeTable(const GqsSpace& space);

  /// B'_k(x_j).
  double at(std::size_t k, std::size_t j) const;
  std::size_t knots() const noexcept { return even_.size(); }

 private:
  std::vector<double> even_;
};

KnotDerivativeTable knot_derivatives(const GqsSpace& space);

/// Spline control polygon with vertices (xi_j, c_{2j}), (eta_j, c_{2j+1}).
ControlPolygon scp(const GqsSpline& spline);
/// Local control polygon on interval i: abscissae x_{i-1}, eta_{i-1}, xi_i, x_i.
ControlPolygon lcp(const GqsSpline& spline, std::size_t i);

}  // namespace gqs
