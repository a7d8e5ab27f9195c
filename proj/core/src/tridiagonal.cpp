#include "gqs/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gqs/error.hpp"

namespace gqs {
namespace {

void check_bands(const Tridiagonal& s) {
  const std::size_t n = s.size();
  if (n == 0 || s.sub.size() != n || s.super.size() != n || s.rhs.size() != n) {
    std::ostringstream os;
    os << "tridiagonal bands have sizes " << s.sub.size() << "/" << s.diag.size() << "/"
       << s.super.size() << " and rhs " << s.rhs.size();
    throw ValidationError(os.str());
  }
}

}  // namespace

double Tridiagonal::dominance_margin() const {
  const std::size_t n = size();
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t r = 0; r < n; ++r) {
    const double off = (r > 0 ? std::abs(sub[r]) : 0.0) + (r + 1 < n ? std::abs(super[r]) : 0.0);
    margin = std::min(margin, std::abs(diag[r]) - off);
  }
  return margin;
}

std::vector<double> Tridiagonal::residual(const std::vector<double>& x) const {
  const std::size_t n = size();
  std::vector<double> r(n);
  for (std::size_t k = 0; k < n; ++k) {
    double v = diag[k] * x[k] - rhs[k];
    if (k > 0) v += sub[k] * x[k - 1];
    if (k + 1 < n) v += super[k] * x[k + 1];
    r[k] = v;
  }
  return r;
}

std::vector<double> solve_tridiagonal(const Tridiagonal& system) {
  check_bands(system);
  const double margin = system.dominance_margin();
  if (!(margin > 0.0)) {
    std::ostringstream os;
    os << "tridiagonal system is not strictly diagonally dominant (margin " << margin << ")";
    throw DominanceError(os.str());
  }

  const std::size_t n = system.size();
  std::vector<double> upper(n);
  std::vector<double> x(n);
  double pivot = system.diag[0];
  upper[0] = system.super[0] / pivot;
  x[0] = system.rhs[0] / pivot;
  for (std::size_t r = 1; r < n; ++r) {
    pivot = system.diag[r] - system.sub[r] * upper[r - 1];
    upper[r] = system.super[r] / pivot;
    x[r] = (system.rhs[r] - system.sub[r] * x[r - 1]) / pivot;
  }
  for (std::size_t r = n - 1; r > 0; --r) {
    x[r - 1] -= upper[r - 1] * x[r];
  }
  return x;
}

}  // namespace gqs
