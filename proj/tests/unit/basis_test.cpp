#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "gqs/basis.hpp"
#include "gqs/error.hpp"
#include "testkit.hpp"

namespace gqs {
namespace {

GqsSpace classical_two() {
  return GqsSpace(Partition({0, 1, 2}), BetaSequence::constant(-1, 2));
}

// x^2 sampled at the knots 0, 1, 2.
GqsSpline square_spline() {
  return hermite_to_spline(classical_two(), {{0, 1, 4}, {0, 2, 4}});
}

std::vector<double> unit(std::size_t size, std::size_t k) {
  std::vector<double> e(size, 0.0);
  e[k] = 1.0;
  return e;
}

TEST(Basis, HermiteToSpline) {
  const GqsSpace s = classical_two();
  const GqsSpline constant = hermite_to_spline(s, {{5, 5, 5}, {0, 0, 0}});
  for (double c : constant.coeffs()) EXPECT_EQ(c, 5.0);

  const double expected[] = {0, 0, 0.5, 1.5, 3, 4};
  const GqsSpline sq = square_spline();
  for (std::size_t k = 0; k < 6; ++k) EXPECT_NEAR(sq.coeff(k), expected[k], 1e-15) << k;

  const GqsSpace r(Partition({-1, 0.5, 2, 2.5}), BetaSequence({-1, -0.3, -0.6}));
  const GqsSpline e1 = hermite_to_spline(r, {{-1, 0.5, 2, 2.5}, {1, 1, 1, 1}});
  for (std::size_t j = 0; j <= 3; ++j) {
    EXPECT_NEAR(e1.coeff(2 * j), r.xi(j), 1e-15);
    EXPECT_NEAR(e1.coeff(2 * j + 1), r.eta(j), 1e-15);
  }
  EXPECT_THROW(hermite_to_spline(s, {{0, 1}, {0, 1}}), ValidationError);
  EXPECT_THROW(GqsSpline(s, {1, 2, 3}), ValidationError);
  EXPECT_THROW(GqsSpline(s, {0, 0, 0, std::nan(""), 0, 0}), ValidationError);
}

TEST(Basis, SplineToHermite) {
  const HermiteData d = spline_to_hermite(square_spline());
  const double y[] = {0, 1, 4}, p[] = {0, 2, 4};
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_NEAR(d.y[j], y[j], 1e-15);
    EXPECT_NEAR(d.p[j], p[j], 1e-15);
  }
  const HermiteData c = spline_to_hermite(GqsSpline(classical_two(), std::vector<double>(6, 2.5)));
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(c.y[j], 2.5);
    EXPECT_EQ(c.p[j], 0.0);
  }
  const GqsSpace r(Partition({0, 0.3, 1.7}), BetaSequence({-0.2, -0.9}));
  std::vector<double> g;
  for (std::size_t j = 0; j <= 2; ++j) {
    g.push_back(r.xi(j));
    g.push_back(r.eta(j));
  }
  for (double slope : spline_to_hermite(GqsSpline(r, g)).p) EXPECT_NEAR(slope, 1.0, 1e-14);
}

TEST(Basis, LocalCoefficients) {
  const GqsSpline sq = square_spline();
  const LocalCoeffs l1 = sq.local(1);
  EXPECT_NEAR(l1.a_left, 0.0, 1e-15);
  EXPECT_NEAR(l1.d, 0.0, 1e-15);
  EXPECT_NEAR(l1.c, 0.5, 1e-15);
  EXPECT_NEAR(l1.a_right, 1.0, 1e-15);
  EXPECT_NEAR(sq.local(2).a_left, 1.0, 1e-15);
  EXPECT_NEAR(sq.local(2).a_right, 4.0, 1e-15);
  EXPECT_THROW(sq.local(0), ValidationError);
  EXPECT_THROW(sq.local(3), ValidationError);
}

TEST(Basis, Eval) {
  const GqsSpline sq = square_spline();
  const PointValue m = sq.eval(0.5);
  EXPECT_NEAR(m.value, 0.25, 1e-15);
  EXPECT_NEAR(m.derivative, 1.0, 1e-15);
  for (double x : {0.0, 0.3, 0.77, 1.0, 1.4, 2.0}) {
    const PointValue v = eval(sq, x);
    EXPECT_NEAR(v.value, x * x, 1e-10) << x;
    EXPECT_NEAR(v.derivative, 2 * x, 1e-5) << x;
  }
  EXPECT_THROW(sq.eval(-0.1), ValidationError);
  EXPECT_THROW(sq.eval(2.1), ValidationError);
}

TEST(Basis, KnotDerivatives) {
  const GqsSpace one(Partition({0, 1}), BetaSequence({-1}));
  const KnotDerivativeTable t1 = knot_derivatives(one);
  EXPECT_DOUBLE_EQ(t1.at(0, 0), -4.0);
  EXPECT_DOUBLE_EQ(t1.at(1, 0), 4.0);
  EXPECT_DOUBLE_EQ(t1.at(2, 1), -4.0);
  EXPECT_DOUBLE_EQ(t1.at(3, 1), 4.0);
  EXPECT_EQ(t1.at(2, 0), 0.0);

  const KnotDerivativeTable t2 = knot_derivatives(classical_two());
  EXPECT_DOUBLE_EQ(t2.at(2, 1), -2.0);
  EXPECT_DOUBLE_EQ(t2.at(3, 1), 2.0);
  EXPECT_EQ(t2.knots(), 3u);
  EXPECT_THROW(t2.at(6, 0), ValidationError);
  EXPECT_THROW(t2.at(0, 3), ValidationError);
}

TEST(Basis, KnotDerivativesMatchFiniteDifferences) {
  testkit::Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const GqsSpace s = testkit::random_space(rng, {1, 6, -1.0, -0.3});
    const KnotDerivativeTable table(s);
    // One-sided quotients converge like (h / theta_i h_i)^gamma_i.
    const double h = 1e-7 * (s.b() - s.a());
    double rate = 0.0;
    for (std::size_t i = 1; i <= s.intervals(); ++i) {
      rate = std::max(rate, std::pow(h / s.theta_width(i), s.holder(i)));
    }
    for (std::size_t k = 0; k < s.dimension(); ++k) {
      const GqsSpline b(s, unit(s.dimension(), k));
      for (std::size_t j = 0; j <= s.intervals(); ++j) {
        // Exact derivative from the Hermite data, plus a one-sided quotient.
        EXPECT_NEAR(b.eval(s.knot(j)).derivative, table.at(k, j), 1e-9);
        const double x = s.knot(j);
        const double q = j < s.intervals() ? (b.eval(x + h).value - b.eval(x).value) / h
                                           : (b.eval(x).value - b.eval(x - h).value) / h;
        EXPECT_NEAR(q, table.at(k, j), 4.0 * rate / s.theta_width(std::max<std::size_t>(j, 1)));
      }
    }
  }
}

TEST(Basis, ControlPolygons) {
  const GqsSpline sq = square_spline();
  const ControlPolygon p = scp(sq);
  const Vertex expected[] = {{0, 0}, {0.25, 0}, {0.75, 0.5}, {1.25, 1.5}, {1.75, 3}, {2, 4}};
  ASSERT_EQ(p.vertices.size(), 6u);
  for (std::size_t k = 0; k < 6; ++k) {
    EXPECT_NEAR(p.vertices[k].x, expected[k].x, 1e-15);
    EXPECT_NEAR(p.vertices[k].y, expected[k].y, 1e-15);
  }
  const ControlPolygon l = lcp(sq, 1);
  const Vertex local[] = {{0, 0}, {0.25, 0}, {0.75, 0.5}, {1, 1}};
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_NEAR(l.vertices[k].x, local[k].x, 1e-15);
    EXPECT_NEAR(l.vertices[k].y, local[k].y, 1e-15);
  }
  const double slope = (l.vertices[2].y - l.vertices[1].y) / (l.vertices[2].x - l.vertices[1].x);
  EXPECT_NEAR(slope, sq.eval(0.5).derivative, 1e-15);
  EXPECT_THROW(lcp(sq, 0), ValidationError);
  EXPECT_THROW(lcp(sq, 3), ValidationError);
  EXPECT_DOUBLE_EQ(p.max_gap(), 1.5);
  EXPECT_DOUBLE_EQ(p.value_at(1.0), 1.0);

  const ControlPolygon flat = scp(GqsSpline(classical_two(), std::vector<double>(6, -3.0)));
  for (const Vertex& v : flat.vertices) EXPECT_EQ(v.y, -3.0);
}

TEST(Basis, MidpointTangentOnRandomSplines) {
  testkit::Rng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const GqsSpace s = testkit::random_space(rng);
    const GqsSpline g = testkit::random_spline(rng, s);
    for (std::size_t i = 1; i <= s.intervals(); ++i) {
      const ControlPolygon l = lcp(g, i);
      const double slope =
          (l.vertices[2].y - l.vertices[1].y) / (l.vertices[2].x - l.vertices[1].x);
      const PointValue m = g.eval(s.midpoint(i));
      EXPECT_NEAR(slope, m.derivative, 1e-9 * (1.0 + std::abs(slope)));
      EXPECT_NEAR(0.5 * (l.vertices[1].y + l.vertices[2].y), m.value, 1e-12);
    }
  }
}

TEST(Basis, Supports) {
  const GqsSpace s(Partition({0, 1, 3, 4}), BetaSequence({-1, -0.5, -0.2}));
  EXPECT_EQ(basis_support(s, 0), std::make_pair(0.0, 0.5));
  EXPECT_EQ(basis_support(s, 1), std::make_pair(0.0, 1.0));
  EXPECT_EQ(basis_support(s, 2), std::make_pair(0.0, 2.0));
  EXPECT_EQ(basis_support(s, 3), std::make_pair(0.5, 3.0));
  EXPECT_EQ(basis_support(s, 4), std::make_pair(1.0, 3.5));
  EXPECT_EQ(basis_support(s, 6), std::make_pair(3.0, 4.0));
  EXPECT_EQ(basis_support(s, 7), std::make_pair(3.5, 4.0));
  EXPECT_THROW(basis_support(s, 8), ValidationError);
  EXPECT_THROW(basis_function(s, 8, 0.5), ValidationError);
}

TEST(BasisProperty, RoundTrip) {
  testkit::Rng rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const GqsSpace s = testkit::random_space(rng);
    const GqsSpline g = testkit::random_spline(rng, s);
    const GqsSpline back = hermite_to_spline(s, spline_to_hermite(g));
    for (std::size_t k = 0; k < s.dimension(); ++k) {
      ASSERT_NEAR(back.coeff(k), g.coeff(k), 1e-12 * (1.0 + std::abs(g.coeff(k))));
    }
  }
}

TEST(BasisProperty, PartitionOfUnityAndLinearPrecision) {
  testkit::Rng rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const GqsSpace s = testkit::random_space(rng);
    for (int sample = 0; sample < 200; ++sample) {
      const double x = rng.uniform(s.a(), s.b());
      const auto values = basis_values(s, x, 1e-13);
      double sum = 0.0, line = 0.0;
      for (std::size_t j = 0; j <= s.intervals(); ++j) {
        sum += values[2 * j] + values[2 * j + 1];
        line += s.xi(j) * values[2 * j] + s.eta(j) * values[2 * j + 1];
      }
      ASSERT_NEAR(sum, 1.0, 1e-10);
      ASSERT_NEAR(line, x, 1e-10 * (s.b() - s.a()));
    }
  }
}

TEST(BasisProperty, SupportAndNonnegativity) {
  testkit::Rng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const GqsSpace s = testkit::random_space(rng, {1, 8, -1.0, -0.05});
    for (std::size_t k = 0; k < s.dimension(); ++k) {
      const GqsSpline b(s, unit(s.dimension(), k));
      const auto [lo, hi] = basis_support(s, k);
      for (const DyadicRow& r : b.sample(10)) {
        ASSERT_GE(r.value, -1e-14) << "B_" << k << " at " << r.x;
        if (r.x < lo || r.x > hi) ASSERT_LE(std::abs(r.value), 1e-12) << "B_" << k;
      }
      EXPECT_EQ(basis_function(s, k, hi), b.eval(hi).value);
    }
  }
}

TEST(BasisProperty, ConvexHullAndKnotInterpolation) {
  testkit::Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const GqsSpace s = testkit::random_space(rng);
    const GqsSpline g = testkit::random_spline(rng, s);
    const auto [lo, hi] = std::minmax_element(g.coeffs().begin(), g.coeffs().end());
    for (const DyadicRow& r : g.sample(6)) {
      ASSERT_GE(r.value, *lo - 1e-12);
      ASSERT_LE(r.value, *hi + 1e-12);
    }
    const HermiteData d = spline_to_hermite(g);
    for (std::size_t j = 0; j <= s.intervals(); ++j) {
      const PointValue v = g.eval(s.knot(j));
      ASSERT_NEAR(v.value, d.y[j], 1e-15 * (1.0 + std::abs(d.y[j])));
      ASSERT_NEAR(v.derivative, d.p[j], 1e-12 * (1.0 + std::abs(d.p[j])));
    }
  }
}

TEST(BasisProperty, ClassicalCaseMatchesOracle) {
  testkit::Rng rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const GqsSpace s = testkit::random_space(rng, {1, 20, -1.0, -1.0});
    const GqsSpline g = testkit::random_spline(rng, s);
    for (int sample = 0; sample < 100; ++sample) {
      const double x = rng.uniform(s.a(), s.b());
      const std::size_t i = s.locate(x);
      const double t = (x - s.knot(i - 1)) / s.width(i);
      const PointValue o = testkit::oracle_eval(g.local_state(i), t);
      ASSERT_NEAR(g.eval(x, 1e-12).value, o.value, 1e-11);
    }
  }
}

}  // namespace
}  // namespace gqs
