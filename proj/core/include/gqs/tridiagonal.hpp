#pragma once

#include <vector>

namespace gqs {

/// Square tridiagonal system. Row r reads
///   sub[r] x[r-1] + diag[r] x[r] + super[r] x[r+1] = rhs[r],
/// with sub[0] and super[size-1] ignored.
struct Tridiagonal {
  std::vector<double> sub;
  std::vector<double> diag;
  std::vector<double> super;
  std::vector<double> rhs;

  std::size_t size() const noexcept { return diag.size(); }
  /// Smallest |diag| - |sub| - |super| over the rows; positive iff strictly
  /// diagonally dominant.
  double dominance_margin() const;
  /// A x - rhs.
  std::vector<double> residual(const std::vector<double>& x) const;
};

/// Thomas elimination without pivoting. Throws DominanceError when the
/// system is not strictly diagonally dominant by rows and ValidationError on
/// inconsistent band sizes.
std::vector<double> solve_tridiagonal(const Tridiagonal& system);

}  // namespace gqs
