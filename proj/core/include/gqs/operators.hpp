#pragma once

#include <functional>
#include <vector>

#include "gqs/basis.hpp"
#include "gqs/geometry.hpp"
#include "gqs/tridiagonal.hpp"

namespace gqs {

using SampleFunction = std::function<double(double)>;

/// Quasi-interpolant Qf = sum f(xi_j) B_{2j} + f(eta_j) B_{2j+1}. Exact on
/// affine functions, of norm one, and shape preserving.
GqsSpline quasi_interpolant(const GqsSpace& space, const SampleFunction& f);

/// Interpolation nodes of the Lagrange operator in increasing order:
/// a, then the quarter points m'_i, m''_i of every interval, then b.
std::vector<double> lagrange_nodes(const GqsSpace& space);

/// The 2n equations in the unknowns c_1..c_{2n} for node values ordered as
/// lagrange_nodes(); c_0 = f(a) and c_{2n+1} = f(b) are folded into rhs.
Tridiagonal lagrange_system(const GqsSpace& space, const std::vector<double>& node_values);

/// Lagrange interpolant from node values ordered as lagrange_nodes().
GqsSpline lagrange_from_nodes(const GqsSpace& space, const std::vector<double>& node_values);
GqsSpline lagrange_interpolant(const GqsSpace& space, const SampleFunction& f);

/// Second route to the Lagrange interpolant, assembled in the local
/// B-coefficients a_{i,1}, a_{i,2} with the C^1 junction
///   a_{i,0} = a_{i-1,3} = (l_{i-1} a_{i-1,2} + l_i a_{i,1}) / (l_{i-1} + l_i),
/// where l_i = 1 / (theta_i h_i).
Tridiagonal lagrange_alternative_matrix(const GqsSpace& space,
                                        const std::vector<double>& node_values);

/// Local coefficient lists produced by the alternative route, one per interval.
std::vector<LocalCoeffs> lagrange_alternative_local(const GqsSpace& space,
                                                    const std::vector<double>& node_values);

GqsSpline lagrange_alternative_system(const GqsSpace& space, const SampleFunction& f);

/// Partition-independent bound 4 (3b - 1) / (b (5 - 3b)) on the sup norm of
/// the Lagrange operator, b the largest beta.
double lagrange_norm_bound(const BetaSequence& betas);
double lagrange_norm_bound(double beta_max);

/// Largest |value| over 2^levels + 1 dyadic samples per interval.
double sup_norm(const GqsSpline& spline, int levels = 8);

/// Largest |f - spline| over 2^levels + 1 dyadic samples per interval.
double max_error(const GqsSpline& spline, const SampleFunction& f, int levels = 5);

/// max_x sum_j |l_j(x)| over dyadic samples, l_j the cardinal Lagrange splines.
double lagrange_lebesgue_constant(const GqsSpace& space, int levels = 8);

enum class ApproximationOperator { quasi_interpolant, lagrange };

struct OrderStudy {
  std::vector<double> widths;
  std::vector<double> errors;
  /// Least-squares slope of log(error) against log(width).
  double slope = 0.0;
};

/// Approximation order on uniform partitions of [a, b] with 2^level
/// intervals for level in [first_level, last_level], constant beta.
OrderStudy empirical_order(const SampleFunction& f, double a, double b, double beta,
                           ApproximationOperator op, int first_level, int last_level,
                           int sample_levels = 5);

}  // namespace gqs
