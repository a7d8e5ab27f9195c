#include "gqs/msa.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gqs/error.hpp"

namespace gqs {
namespace {

void check_state(const HermiteEndpointState& s, double theta) {
  if (!(std::isfinite(s.f_left) && std::isfinite(s.d_left) && std::isfinite(s.f_right) &&
        std::isfinite(s.d_right))) {
    throw ValidationError("Hermite endpoint data must be finite");
  }
  if (!(std::isfinite(s.width) && s.width > 0.0)) {
    throw ValidationError("interval width must be positive");
  }
  if (!(theta > 0.0 && theta <= 0.25)) {
    std::ostringstream os;
    os << "theta = " << theta << " is outside (0, 1/4]";
    throw ValidationError(os.str());
  }
}

// A subdivision cell. The chord slope is carried alongside the endpoint
// values so that deep levels never divide a value difference by a tiny width.
struct Cell {
  double f_a, d_a, f_b, d_b;
  double chord;
  double width;
};

Cell root_cell(const HermiteEndpointState& s) {
  return {s.f_left, s.d_left, s.f_right, s.d_right, (s.f_right - s.f_left) / s.width,
          s.width};
}

struct Split {
  double f_m, d_m;
  double chord_left, chord_right;
};

Split split(const Cell& c, double theta) {
  const double jump = c.d_b - c.d_a;
  Split s;
  s.f_m = 0.5 * ((c.f_a + c.f_b) - theta * c.width * jump);
  s.d_m = (c.chord - theta * (c.d_a + c.d_b)) / (1.0 - 2.0 * theta);
  s.chord_left = c.chord - theta * jump;
  s.chord_right = c.chord + theta * jump;
  return s;
}

}  // namespace

PointValue msa_midpoint(const HermiteEndpointState& state, double theta) {
  check_state(state, theta);
  const Split s = split(root_cell(state), theta);
  return {s.f_m, s.d_m};
}

std::vector<DyadicRow> dyadic_table(const HermiteEndpointState& state, double theta,
                                    int levels, double origin) {
  check_state(state, theta);
  if (levels < 0 || levels > kMaxTableLevels) {
    std::ostringstream os;
    os << "dyadic level " << levels << " is outside [0, " << kMaxTableLevels << "]";
    throw ValidationError(os.str());
  }

  // Breadth-first doubling: nodes hold (f, d), cells hold the chord slope.
  std::vector<double> f{state.f_left, state.f_right};
  std::vector<double> d{state.d_left, state.d_right};
  std::vector<double> chord{(state.f_right - state.f_left) / state.width};
  double width = state.width;
  for (int level = 0; level < levels; ++level) {
    const std::size_t cells = chord.size();
    std::vector<double> nf(2 * cells + 1), nd(2 * cells + 1), nchord(2 * cells);
    for (std::size_t k = 0; k < cells; ++k) {
      const Cell c{f[k], d[k], f[k + 1], d[k + 1], chord[k], width};
      const Split s = split(c, theta);
      nf[2 * k] = f[k];
      nd[2 * k] = d[k];
      nf[2 * k + 1] = s.f_m;
      nd[2 * k + 1] = s.d_m;
      nchord[2 * k] = s.chord_left;
      nchord[2 * k + 1] = s.chord_right;
    }
    nf[2 * cells] = f[cells];
    nd[2 * cells] = d[cells];
    f = std::move(nf);
    d = std::move(nd);
    chord = std::move(nchord);
    width *= 0.5;
  }

  const std::size_t rows = f.size();
  const double step = state.width / static_cast<double>(rows - 1);
  std::vector<DyadicRow> table(rows);
  for (std::size_t k = 0; k < rows; ++k) {
    table[k] = {origin + step * static_cast<double>(k), f[k], d[k]};
  }
  table.back().x = origin + state.width;
  return table;
}

PointValue eval_point(const HermiteEndpointState& state, double theta, double t,
                      double tol) {
  check_state(state, theta);
  if (!(tol > 0.0)) {
    throw ValidationError("tolerance must be positive");
  }
  if (!(t >= 0.0 && t <= 1.0)) {
    std::ostringstream os;
    os << "relative coordinate t = " << t << " is outside [0, 1]";
    throw ValidationError(os.str());
  }
  if (t == 0.0) return {state.f_left, state.d_left};
  if (t == 1.0) return {state.f_right, state.d_right};

  Cell c = root_cell(state);
  double lo = 0.0;
  double hi = 1.0;
  for (int level = 0;; ++level) {
    const Split s = split(c, theta);
    const double mid = 0.5 * (lo + hi);
    if (t == mid) return {s.f_m, s.d_m};
    const double deviation = std::max(std::abs(c.d_a - c.chord), std::abs(c.d_b - c.chord));
    if (c.width * deviation <= tol) {
      const double u = (t - lo) / (hi - lo);
      return {c.f_a + u * (c.f_b - c.f_a), c.d_a + u * (c.d_b - c.d_a)};
    }
    if (level == kMaxSubdivisionLevels) {
      std::ostringstream os;
      os << "tolerance " << tol << " not reached within " << kMaxSubdivisionLevels
         << " subdivision levels";
      throw ToleranceError(os.str());
    }
    const double half = 0.5 * c.width;
    if (t < mid) {
      c = {c.f_a, c.d_a, s.f_m, s.d_m, s.chord_left, half};
      hi = mid;
    } else {
      c = {s.f_m, s.d_m, c.f_b, c.d_b, s.chord_right, half};
      lo = mid;
    }
  }
}

}  // namespace gqs
