#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace gqs {

/// Strictly increasing knots a = x_0 < x_1 < ... < x_n = b, n >= 1.
class Partition {
 public:
  explicit Partition(std::vector<double> knots);

  static Partition uniform(double a, double b, std::size_t intervals);

  std::size_t intervals() const noexcept { return knots_.size() - 1; }
  std::span<const double> knots() const noexcept { return knots_; }
  double knot(std::size_t j) const { return knots_.at(j); }
  double a() const noexcept { return knots_.front(); }
  double b() const noexcept { return knots_.back(); }
  /// Length of the i-th interval [x_{i-1}, x_i], 1 <= i <= n.
  double width(std::size_t i) const { return knots_.at(i) - knots_.at(i - 1); }

 private:
  std::vector<double> knots_;
};

/// Shape parameters beta_1..beta_n, each in [-1, 0).
class BetaSequence {
 public:
  explicit BetaSequence(std::vector<double> betas);

  static BetaSequence constant(double beta, std::size_t intervals);

  std::size_t size() const noexcept { return betas_.size(); }
  std::span<const double> values() const noexcept { return betas_; }
  /// 1-based access matching interval numbering.
  double beta(std::size_t i) const { return betas_.at(i - 1); }
  double max() const;

 private:
  std::vector<double> betas_;
};

/// theta = beta / (2 (beta - 1)), mapping [-1, 0) onto (0, 1/4].
double theta_from_beta(double beta);
/// Inverse of theta_from_beta; rejects theta outside (0, 1/4].
double beta_from_theta(double theta);
/// Hoelder exponent -log2(1 + beta/2) of the derivative on an interval.
double holder_exponent(double beta);

/// Partition plus shape parameters with every derived abscissa and weight.
///
/// Intervals are numbered 1..n and knots 0..n. Greville-type points satisfy
/// x_0 = xi_0 <= eta_0 < xi_1 < eta_1 < ... < xi_n <= eta_n = x_n, and the
/// junction weights follow omega_0 = 1, omega_n = 0.
class GqsSpace {
 public:
  GqsSpace(Partition partition, BetaSequence betas);

  std::size_t intervals() const noexcept { return partition_.intervals(); }
  /// Number of global B-splines, 2n + 2.
  std::size_t dimension() const noexcept { return 2 * intervals() + 2; }

  const Partition& partition() const noexcept { return partition_; }
  const BetaSequence& betas() const noexcept { return betas_; }

  double a() const noexcept { return partition_.a(); }
  double b() const noexcept { return partition_.b(); }
  double knot(std::size_t j) const { return partition_.knot(j); }
  double width(std::size_t i) const { return partition_.width(i); }

  double beta(std::size_t i) const { return betas_.beta(i); }
  double theta(std::size_t i) const { return theta_.at(i - 1); }
  double alpha(std::size_t i) const { return -0.5 * theta(i); }
  double holder(std::size_t i) const { return holder_.at(i - 1); }
  double midpoint(std::size_t i) const { return mid_.at(i - 1); }

  /// theta_i h_i with the convention h_0 = h_{n+1} = 0, so i may be 0..n+1.
  double theta_width(std::size_t i) const { return theta_width_.at(i); }

  double omega(std::size_t j) const { return omega_.at(j); }
  double xi(std::size_t j) const { return xi_.at(j); }
  double eta(std::size_t j) const { return eta_.at(j); }

  std::span<const double> thetas() const noexcept { return theta_; }
  std::span<const double> omegas() const noexcept { return omega_; }
  std::span<const double> xis() const noexcept { return xi_; }
  std::span<const double> etas() const noexcept { return eta_; }
  std::span<const double> midpoints() const noexcept { return mid_; }

  /// Interval i in 1..n with x in [x_{i-1}, x_i]; x = b maps to n.
  /// Throws ValidationError when x lies outside [a, b].
  std::size_t locate(double x) const;

 private:
  Partition partition_;
  BetaSequence betas_;
  std::vector<double> theta_;
  std::vector<double> holder_;
  std::vector<double> theta_width_;
  std::vector<double> omega_;
  std::vector<double> xi_;
  std::vector<double> eta_;
  std::vector<double> mid_;
};

GqsSpace build_space(Partition partition, BetaSequence betas);

/// Minimum admissible interval length relative to b - a.
inline constexpr double kMinRelativeWidth = 1e-14;

}  // namespace gqs
