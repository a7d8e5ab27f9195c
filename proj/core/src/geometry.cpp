#include "gqs/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gqs/error.hpp"

namespace gqs {

Partition::Partition(std::vector<double> knots) : knots_(std::move(knots)) {
  if (knots_.size() < 2) {
    throw ValidationError("partition needs at least two knots");
  }
  for (std::size_t j = 0; j < knots_.size(); ++j) {
    if (!std::isfinite(knots_[j])) {
      std::ostringstream os;
      os << "knot " << j << " is not finite";
      throw ValidationError(os.str());
    }
  }
  const double span = knots_.back() - knots_.front();
  if (!(span > 0.0)) {
    throw ValidationError("knots must be strictly increasing");
  }
  const double min_width = kMinRelativeWidth * span;
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i] - knots_[i - 1] > min_width)) {
      std::ostringstream os;
      os << "knots must be strictly increasing: x_" << i - 1 << " = "
         << knots_[i - 1] << ", x_" << i << " = " << knots_[i];
      throw ValidationError(os.str());
    }
  }
}

Partition Partition::uniform(double a, double b, std::size_t intervals) {
  if (intervals == 0) {
    throw ValidationError("uniform partition needs at least one interval");
  }
  std::vector<double> knots(intervals + 1);
  for (std::size_t j = 0; j <= intervals; ++j) {
    knots[j] = a + (b - a) * static_cast<double>(j) / static_cast<double>(intervals);
  }
  knots.back() = b;
  return Partition(std::move(knots));
}

BetaSequence::BetaSequence(std::vector<double> betas) : betas_(std::move(betas)) {
  if (betas_.empty()) {
    throw ValidationError("beta sequence is empty");
  }
  for (std::size_t i = 0; i < betas_.size(); ++i) {
    const double b = betas_[i];
    if (!std::isfinite(b) || b < -1.0 || b >= 0.0) {
      std::ostringstream os;
      os << "beta_" << i + 1 << " = " << b << " is outside [-1, 0)";
      throw ValidationError(os.str());
    }
  }
}

BetaSequence BetaSequence::constant(double beta, std::size_t intervals) {
  return BetaSequence(std::vector<double>(intervals, beta));
}

double BetaSequence::max() const {
  return *std::max_element(betas_.begin(), betas_.end());
}

double theta_from_beta(double beta) {
  if (!std::isfinite(beta) || beta < -1.0 || beta >= 0.0) {
    std::ostringstream os;
    os << "beta = " << beta << " is outside [-1, 0)";
    throw ValidationError(os.str());
  }
  return 0.5 * beta / (beta - 1.0);
}

double beta_from_theta(double theta) {
  if (!std::isfinite(theta) || theta <= 0.0 || theta > 0.25) {
    std::ostringstream os;
    os << "theta = " << theta << " is outside (0, 1/4]";
    throw ValidationError(os.str());
  }
  return 2.0 * theta / (2.0 * theta - 1.0);
}

double holder_exponent(double beta) {
  theta_from_beta(beta);  // range check
  return -std::log2(1.0 + 0.5 * beta);
}

GqsSpace::GqsSpace(Partition partition, BetaSequence betas)
    : partition_(std::move(partition)), betas_(std::move(betas)) {
  const std::size_t n = partition_.intervals();
  if (betas_.size() != n) {
    std::ostringstream os;
    os << "beta sequence has " << betas_.size() << " entries, partition has " << n
       << " intervals";
    throw ValidationError(os.str());
  }

  theta_.resize(n);
  holder_.resize(n);
  mid_.resize(n);
  theta_width_.assign(n + 2, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    theta_[i - 1] = theta_from_beta(betas_.beta(i));
    holder_[i - 1] = holder_exponent(betas_.beta(i));
    mid_[i - 1] = 0.5 * (partition_.knot(i - 1) + partition_.knot(i));
    theta_width_[i] = theta_[i - 1] * partition_.width(i);
  }

  omega_.resize(n + 1);
  xi_.resize(n + 1);
  eta_.resize(n + 1);
  omega_[0] = 1.0;
  omega_[n] = 0.0;
  for (std::size_t j = 1; j < n; ++j) {
    omega_[j] = theta_width_[j + 1] / (theta_width_[j] + theta_width_[j + 1]);
  }
  for (std::size_t j = 0; j <= n; ++j) {
    xi_[j] = partition_.knot(j) - theta_width_[j];
    eta_[j] = partition_.knot(j) + theta_width_[j + 1];
  }
  xi_[0] = partition_.a();
  eta_[n] = partition_.b();
}

std::size_t GqsSpace::locate(double x) const {
  if (!(x >= a() && x <= b())) {
    std::ostringstream os;
    os << "x = " << x << " is outside [" << a() << ", " << b() << "]";
    throw ValidationError(os.str());
  }
  const auto knots = partition_.knots();
  const auto it = std::upper_bound(knots.begin(), knots.end(), x);
  const auto i = static_cast<std::size_t>(it - knots.begin());
  return std::clamp<std::size_t>(i, 1, intervals());
}

GqsSpace build_space(Partition partition, BetaSequence betas) {
  return GqsSpace(std::move(partition), std::move(betas));
}

}  // namespace gqs
