#include "gqs/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gqs/error.hpp"

namespace gqs {
namespace {

double sample(const SampleFunction& f, double x) {
  const double v = f(x);
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "function value at x = " << x << " is not finite";
    throw ValidationError(os.str());
  }
  return v;
}

std::vector<double> node_values(const GqsSpace& space, const SampleFunction& f) {
  const auto nodes = lagrange_nodes(space);
  std::vector<double> values(nodes.size());
  std::transform(nodes.begin(), nodes.end(), values.begin(),
                 [&](double x) { return sample(f, x); });
  return values;
}

void check_node_values(const GqsSpace& space, const std::vector<double>& values) {
  if (values.size() != space.dimension()) {
    std::ostringstream os;
    os << "Lagrange data needs " << space.dimension() << " node values, got "
       << values.size();
    throw ValidationError(os.str());
  }
  for (double v : values) {
    if (!std::isfinite(v)) throw ValidationError("Lagrange node value is not finite");
  }
}

GqsSpline with_ends(const GqsSpace& space, const std::vector<double>& values,
                    const std::vector<double>& interior) {
  std::vector<double> coeffs(space.dimension());
  coeffs.front() = values.front();
  coeffs.back() = values.back();
  std::copy(interior.begin(), interior.end(), coeffs.begin() + 1);
  return GqsSpline(space, std::move(coeffs));
}

}  // namespace

GqsSpline quasi_interpolant(const GqsSpace& space, const SampleFunction& f) {
  std::vector<double> coeffs(space.dimension());
  for (std::size_t j = 0; j <= space.intervals(); ++j) {
    coeffs[2 * j] = sample(f, space.xi(j));
    coeffs[2 * j + 1] = sample(f, space.eta(j));
  }
  return GqsSpline(space, std::move(coeffs));
}

std::vector<double> lagrange_nodes(const GqsSpace& space) {
  std::vector<double> nodes;
  nodes.reserve(space.dimension());
  nodes.push_back(space.a());
  for (std::size_t i = 1; i <= space.intervals(); ++i) {
    const double left = space.knot(i - 1);
    const double mid = space.midpoint(i);
    const double right = space.knot(i);
    nodes.push_back(0.5 * (left + mid));
    nodes.push_back(0.5 * (mid + right));
  }
  nodes.push_back(space.b());
  return nodes;
}

Tridiagonal lagrange_system(const GqsSpace& space, const std::vector<double>& v) {
  check_node_values(space, v);
  const std::size_t n = space.intervals();
  Tridiagonal t;
  t.sub.assign(2 * n, 0.0);
  t.diag.assign(2 * n, 0.0);
  t.super.assign(2 * n, 0.0);
  t.rhs.assign(2 * n, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const double half_beta = 0.5 * space.beta(i);
    const double w_left = space.omega(i - 1);
    const double w_right = space.omega(i);

    // Value at m'_i.
    const std::size_t r = 2 * i - 2;
    t.sub[r] = w_left;
    t.diag[r] = 3.0 - w_left - half_beta;
    t.super[r] = 1.0 + half_beta;
    t.rhs[r] = 4.0 * v[2 * i - 1];
    if (i == 1) {
      t.rhs[r] -= w_left * v.front();
      t.sub[r] = 0.0;
    }

    // Value at m''_i.
    const std::size_t s = 2 * i - 1;
    t.sub[s] = 1.0 + half_beta;
    t.diag[s] = 2.0 + w_right - half_beta;
    t.super[s] = 1.0 - w_right;
    t.rhs[s] = 4.0 * v[2 * i];
    if (i == n) {
      t.rhs[s] -= (1.0 - w_right) * v.back();
      t.super[s] = 0.0;
    }
  }
  return t;
}

GqsSpline lagrange_from_nodes(const GqsSpace& space, const std::vector<double>& node_values) {
  const Tridiagonal system = lagrange_system(space, node_values);
  return with_ends(space, node_values, solve_tridiagonal(system));
}

GqsSpline lagrange_interpolant(const GqsSpace& space, const SampleFunction& f) {
  return lagrange_from_nodes(space, node_values(space, f));
}

Tridiagonal lagrange_alternative_matrix(const GqsSpace& space, const std::vector<double>& v) {
  check_node_values(space, v);
  const std::size_t n = space.intervals();
  const auto weight = [&](std::size_t i) { return 1.0 / space.theta_width(i); };

  Tridiagonal t;
  t.sub.assign(2 * n, 0.0);
  t.diag.assign(2 * n, 0.0);
  t.super.assign(2 * n, 0.0);
  t.rhs.assign(2 * n, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const double half_beta = 0.5 * space.beta(i);
    const double l = weight(i);

    // 4 g(m'_i) = a_{i,0} + (2 - beta/2) a_{i,1} + (1 + beta/2) a_{i,2}
    const std::size_t r = 2 * i - 2;
    t.diag[r] = 2.0 - half_beta;
    t.super[r] = 1.0 + half_beta;
    t.rhs[r] = 4.0 * v[2 * i - 1];
    if (i == 1) {
      t.rhs[r] -= v.front();
    } else {
      const double l_prev = weight(i - 1);
      t.sub[r] = l_prev / (l_prev + l);
      t.diag[r] += l / (l_prev + l);
    }

    // 4 g(m''_i) = (1 + beta/2) a_{i,1} + (2 - beta/2) a_{i,2} + a_{i,3}
    const std::size_t s = 2 * i - 1;
    t.sub[s] = 1.0 + half_beta;
    t.diag[s] = 2.0 - half_beta;
    t.rhs[s] = 4.0 * v[2 * i];
    if (i == n) {
      t.rhs[s] -= v.back();
    } else {
      const double l_next = weight(i + 1);
      t.diag[s] += l / (l + l_next);
      t.super[s] = l_next / (l + l_next);
    }
  }
  return t;
}

std::vector<LocalCoeffs> lagrange_alternative_local(const GqsSpace& space,
                                                    const std::vector<double>& v) {
  const std::vector<double> u = solve_tridiagonal(lagrange_alternative_matrix(space, v));
  const std::size_t n = space.intervals();
  const auto weight = [&](std::size_t i) { return 1.0 / space.theta_width(i); };
  // junction[j] is the common value a_{j,3} = a_{j+1,0} at knot x_j.
  std::vector<double> junction(n + 1);
  junction.front() = v.front();
  junction.back() = v.back();
  for (std::size_t j = 1; j < n; ++j) {
    const double l_left = weight(j);
    const double l_right = weight(j + 1);
    junction[j] = (l_left * u[2 * j - 1] + l_right * u[2 * j]) / (l_left + l_right);
  }
  std::vector<LocalCoeffs> local(n);
  for (std::size_t i = 1; i <= n; ++i) {
    local[i - 1] = {junction[i - 1], u[2 * i - 2], u[2 * i - 1], junction[i]};
  }
  return local;
}

GqsSpline lagrange_alternative_system(const GqsSpace& space, const SampleFunction& f) {
  const std::vector<double> v = node_values(space, f);
  const auto local = lagrange_alternative_local(space, v);
  std::vector<double> interior;
  interior.reserve(2 * local.size());
  for (const LocalCoeffs& l : local) {
    interior.push_back(l.d);
    interior.push_back(l.c);
  }
  return with_ends(space, v, interior);
}

double lagrange_norm_bound(double beta_max) {
  theta_from_beta(beta_max);  // range check
  return 4.0 * (3.0 * beta_max - 1.0) / (beta_max * (5.0 - 3.0 * beta_max));
}

double lagrange_norm_bound(const BetaSequence& betas) {
  return lagrange_norm_bound(betas.max());
}

double sup_norm(const GqsSpline& spline, int levels) {
  double norm = 0.0;
  for (const DyadicRow& row : spline.sample(levels)) {
    norm = std::max(norm, std::abs(row.value));
  }
  return norm;
}

double max_error(const GqsSpline& spline, const SampleFunction& f, int levels) {
  double err = 0.0;
  for (const DyadicRow& row : spline.sample(levels)) {
    err = std::max(err, std::abs(sample(f, row.x) - row.value));
  }
  return err;
}

double lagrange_lebesgue_constant(const GqsSpace& space, int levels) {
  std::vector<double> unit(space.dimension(), 0.0);
  std::vector<double> lebesgue;
  for (std::size_t j = 0; j < unit.size(); ++j) {
    unit[j] = 1.0;
    const auto rows = lagrange_from_nodes(space, unit).sample(levels);
    unit[j] = 0.0;
    if (lebesgue.empty()) lebesgue.assign(rows.size(), 0.0);
    for (std::size_t k = 0; k < rows.size(); ++k) lebesgue[k] += std::abs(rows[k].value);
  }
  return *std::max_element(lebesgue.begin(), lebesgue.end());
}

OrderStudy empirical_order(const SampleFunction& f, double a, double b, double beta,
                           ApproximationOperator op, int first_level, int last_level,
                           int sample_levels) {
  if (first_level < 0 || last_level < first_level || last_level > 20) {
    throw ValidationError("order study levels must satisfy 0 <= first <= last <= 20");
  }
  OrderStudy study;
  for (int level = first_level; level <= last_level; ++level) {
    const std::size_t n = std::size_t{1} << level;
    const GqsSpace space(Partition::uniform(a, b, n), BetaSequence::constant(beta, n));
    const GqsSpline spline = op == ApproximationOperator::quasi_interpolant
                                 ? quasi_interpolant(space, f)
                                 : lagrange_interpolant(space, f);
    study.widths.push_back((b - a) / static_cast<double>(n));
    study.errors.push_back(max_error(spline, f, sample_levels));
  }

  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  int count = 0;
  for (std::size_t k = 0; k < study.errors.size(); ++k) {
    if (!(study.errors[k] > 0.0)) continue;
    const double x = std::log(study.widths[k]);
    const double y = std::log(study.errors[k]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  study.slope = count >= 2 ? (count * sxy - sx * sy) / (count * sxx - sx * sx)
                           : std::numeric_limits<double>::quiet_NaN();
  return study;
}

}  // namespace gqs
