#include "gqs/basis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gqs/error.hpp"

namespace gqs {
namespace {

void check_index(const GqsSpace& space, std::size_t k) {
  if (k >= space.dimension()) {
    std::ostringstream os;
    os << "basis index " << k << " is outside [0, " << space.dimension() - 1 << "]";
    throw ValidationError(os.str());
  }
}

void check_interval(const GqsSpace& space, std::size_t i) {
  if (i < 1 || i > space.intervals()) {
    std::ostringstream os;
    os << "interval index " << i << " is outside [1, " << space.intervals() << "]";
    throw ValidationError(os.str());
  }
}

PointValue eval_coeffs(const GqsSpace& space, std::span<const double> coeffs, double x,
                       double tol) {
  const std::size_t i = space.locate(x);
  const HermiteEndpointState state = local_state(space, local_coeffs(space, coeffs, i), i);
  const double t = std::clamp((x - space.knot(i - 1)) / space.width(i), 0.0, 1.0);
  if (x == space.knot(i - 1)) return eval_point(state, space.theta(i), 0.0, tol);
  if (x == space.knot(i)) return eval_point(state, space.theta(i), 1.0, tol);
  if (x == space.midpoint(i)) return eval_point(state, space.theta(i), 0.5, tol);
  return eval_point(state, space.theta(i), t, tol);
}

}  // namespace

double ControlPolygon::value_at(double x) const {
  if (vertices.empty()) {
    throw ValidationError("empty control polygon");
  }
  if (x <= vertices.front().x) return vertices.front().y;
  if (x >= vertices.back().x) return vertices.back().y;
  const auto it = std::upper_bound(vertices.begin(), vertices.end(), x,
                                   [](double v, const Vertex& p) { return v < p.x; });
  const Vertex& right = *it;
  const Vertex& left = *(it - 1);
  const double dx = right.x - left.x;
  if (dx <= 0.0) return right.y;
  const double u = (x - left.x) / dx;
  return left.y + u * (right.y - left.y);
}

double ControlPolygon::max_gap() const {
  double gap = 0.0;
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    gap = std::max(gap, std::abs(vertices[k].y - vertices[k - 1].y));
  }
  return gap;
}

GqsSpline::GqsSpline(GqsSpace space, std::vector<double> coeffs)
    : space_(std::move(space)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != space_.dimension()) {
    std::ostringstream os;
    os << "spline needs " << space_.dimension() << " coefficients, got " << coeffs_.size();
    throw ValidationError(os.str());
  }
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!std::isfinite(coeffs_[k])) {
      std::ostringstream os;
      os << "coefficient " << k << " is not finite";
      throw ValidationError(os.str());
    }
  }
}

LocalCoeffs GqsSpline::local(std::size_t i) const {
  return local_coeffs(space_, coeffs_, i);
}

HermiteEndpointState GqsSpline::local_state(std::size_t i) const {
  return gqs::local_state(space_, local(i), i);
}

PointValue GqsSpline::eval(double x, double tol) const {
  return eval_coeffs(space_, coeffs_, x, tol);
}

std::vector<DyadicRow> GqsSpline::sample(int levels) const {
  std::vector<DyadicRow> rows;
  const std::size_t n = intervals();
  rows.reserve(n * ((std::size_t{1} << std::max(levels, 0)) + 1));
  for (std::size_t i = 1; i <= n; ++i) {
    auto table = dyadic_table(local_state(i), space_.theta(i), levels, space_.knot(i - 1));
    table.front().x = space_.knot(i - 1);
    table.back().x = space_.knot(i);
    rows.insert(rows.end(), table.begin() + (i == 1 ? 0 : 1), table.end());
  }
  return rows;
}

LocalCoeffs local_coeffs(const GqsSpace& space, std::span<const double> coeffs,
                         std::size_t i) {
  check_interval(space, i);
  const double w_left = space.omega(i - 1);
  const double w_right = space.omega(i);
  LocalCoeffs l;
  l.d = coeffs[2 * i - 1];
  l.c = coeffs[2 * i];
  l.a_left = w_left * coeffs[2 * i - 2] + (1.0 - w_left) * l.d;
  l.a_right = w_right * l.c + (1.0 - w_right) * coeffs[2 * i + 1];
  return l;
}

HermiteEndpointState local_state(const GqsSpace& space, const LocalCoeffs& l,
                                 std::size_t i) {
  check_interval(space, i);
  const double tw = space.theta_width(i);
  return {l.a_left, (l.d - l.a_left) / tw, l.a_right, (l.a_right - l.c) / tw,
          space.width(i)};
}

GqsSpline hermite_to_spline(const GqsSpace& space, const HermiteData& data) {
  const std::size_t n = space.intervals();
  if (data.y.size() != n + 1 || data.p.size() != n + 1) {
    std::ostringstream os;
    os << "Hermite data needs " << n + 1 << " values and slopes, got " << data.y.size()
       << " and " << data.p.size();
    throw ValidationError(os.str());
  }
  std::vector<double> coeffs(space.dimension());
  for (std::size_t j = 0; j <= n; ++j) {
    if (!std::isfinite(data.y[j]) || !std::isfinite(data.p[j])) {
      std::ostringstream os;
      os << "Hermite data at knot " << j << " is not finite";
      throw ValidationError(os.str());
    }
    coeffs[2 * j] = data.y[j] - space.theta_width(j) * data.p[j];
    coeffs[2 * j + 1] = data.y[j] + space.theta_width(j + 1) * data.p[j];
  }
  return GqsSpline(space, std::move(coeffs));
}

HermiteData spline_to_hermite(const GqsSpline& spline) {
  const GqsSpace& space = spline.space();
  const std::size_t n = space.intervals();
  HermiteData data;
  data.y.resize(n + 1);
  data.p.resize(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    const double c = spline.coeff(2 * j);
    const double d = spline.coeff(2 * j + 1);
    const double w = space.omega(j);
    data.y[j] = w * c + (1.0 - w) * d;
    data.p[j] = (d - c) / (space.theta_width(j) + space.theta_width(j + 1));
  }
  return data;
}

PointValue eval(const GqsSpline& spline, double x, double tol) {
  return spline.eval(x, tol);
}

std::pair<double, double> basis_support(const GqsSpace& space, std::size_t k) {
  check_index(space, k);
  const std::size_t n = space.intervals();
  const std::size_t j = k / 2;
  if (k == 0) return {space.a(), space.midpoint(1)};
  if (k == 1) return {space.a(), space.knot(1)};
  if (k == 2 * n) return {space.knot(n - 1), space.b()};
  if (k == 2 * n + 1) return {space.midpoint(n), space.b()};
  if (k % 2 == 0) return {space.knot(j - 1), space.midpoint(j + 1)};
  return {space.midpoint(j), space.knot(j + 1)};
}

double basis_function(const GqsSpace& space, std::size_t k, double x, double tol) {
  check_index(space, k);
  const auto [lo, hi] = basis_support(space, k);
  if (x < lo || x > hi) {
    space.locate(x);  // range check
    return 0.0;
  }
  std::vector<double> unit(space.dimension(), 0.0);
  unit[k] = 1.0;
  return eval_coeffs(space, unit, x, tol).value;
}

std::vector<double> basis_values(const GqsSpace& space, double x, double tol) {
  const std::size_t i = space.locate(x);
  std::vector<double> values(space.dimension(), 0.0);
  std::vector<double> unit(space.dimension(), 0.0);
  for (std::size_t k = 2 * i - 2; k <= 2 * i + 1; ++k) {
    unit[k] = 1.0;
    values[k] = eval_coeffs(space, unit, x, tol).value;
    unit[k] = 0.0;
  }
  return values;
}

KnotDerivativeTable::KnotDerivativeTable(const GqsSpace& space)
    : even_(space.intervals() + 1) {
  for (std::size_t j = 0; j < even_.size(); ++j) {
    even_[j] = -1.0 / (space.theta_width(j) + space.theta_width(j + 1));
  }
}

double KnotDerivativeTable::at(std::size_t k, std::size_t j) const {
  if (j >= even_.size() || k >= 2 * even_.size()) {
    throw ValidationError("knot derivative index out of range");
  }
  if (k == 2 * j) return even_[j];
  if (k == 2 * j + 1) return -even_[j];
  return 0.0;
}

KnotDerivativeTable knot_derivatives(const GqsSpace& space) {
  return KnotDerivativeTable(space);
}

ControlPolygon scp(const GqsSpline& spline) {
  const GqsSpace& space = spline.space();
  ControlPolygon poly;
  poly.vertices.reserve(space.dimension());
  for (std::size_t j = 0; j <= space.intervals(); ++j) {
    poly.vertices.push_back({space.xi(j), spline.coeff(2 * j)});
    poly.vertices.push_back({space.eta(j), spline.coeff(2 * j + 1)});
  }
  return poly;
}

ControlPolygon lcp(const GqsSpline& spline, std::size_t i) {
  const GqsSpace& space = spline.space();
  const LocalCoeffs l = spline.local(i);
  return ControlPolygon{{{space.knot(i - 1), l.a_left},
                         {space.eta(i - 1), l.d},
                         {space.xi(i), l.c},
                         {space.knot(i), l.a_right}}};
}

}  // namespace gqs
