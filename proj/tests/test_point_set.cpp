#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "sensnet/point_set.hpp"

using namespace sensnet;

TEST_CASE("zero intensity gives an empty pattern") {
  const Window w{0, 0, 10, 10, 0};
  const PointSet ps = sample_poisson(w, 0.0, 1);
  CHECK(ps.n() == 0);
}

TEST_CASE("negative intensity is rejected") {
  const Window w{0, 0, 10, 10, 0};
  CHECK_THROWS_AS(sample_poisson(w, -1.0, 1), std::invalid_argument);
}

TEST_CASE("sampling is a pure function of window, intensity and seed") {
  const Window w{-5, -5, 5, 5, 1};
  const PointSet a = sample_poisson(w, 2.0, 99);
  const PointSet b = sample_poisson(w, 2.0, 99);
  CHECK(a == b);
  const PointSet c = sample_poisson(w, 2.0, 100);
  CHECK(a.points != c.points);
}

TEST_CASE("every sample lies in the padded window") {
  const Window w{0, 0, 6, 4, 1.5};
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const PointSet ps = sample_poisson(w, 3.0, seed);
    for (const Point& p : ps.points) CHECK(w.padded_contains(p));
  }
}

TEST_CASE("counts concentrate around intensity times area") {
  // 10 x 10 window, no margin, intensity 1.568: mean count 156.8.
  const Window w{0, 0, 10, 10, 0};
  const double expect = 156.8;
  double total = 0.0;
  const int seeds = 1000;
  for (int s = 0; s < seeds; ++s) total += sample_poisson(w, 1.568, static_cast<std::uint64_t>(s)).n();
  const double mean = total / seeds;
  // Poisson sd is sqrt(mean); allow four standard errors.
  const double se = std::sqrt(expect) / std::sqrt(static_cast<double>(seeds));
  CHECK(std::abs(mean - expect) < 4.0 * se);
}

TEST_CASE("disjoint regions fill independently") {
  // Counts in opposite quadrants of one sample should be uncorrelated.
  const Window w{0, 0, 10, 10, 0};
  const int seeds = 2000;
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (int s = 0; s < seeds; ++s) {
    const PointSet ps = sample_poisson(w, 1.0, static_cast<std::uint64_t>(s) + 7000);
    double lo = 0, hi = 0;
    for (const Point& p : ps.points) {
      if (p.x < 5 && p.y < 5) lo += 1;
      if (p.x >= 5 && p.y >= 5) hi += 1;
    }
    sx += lo;
    sy += hi;
    sxx += lo * lo;
    syy += hi * hi;
    sxy += lo * hi;
  }
  const double n = seeds;
  const double cov = sxy / n - (sx / n) * (sy / n);
  const double vx = sxx / n - (sx / n) * (sx / n);
  const double vy = syy / n - (sy / n) * (sy / n);
  const double corr = cov / std::sqrt(vx * vy);
  CHECK(std::abs(corr) < 0.05);
}

TEST_CASE("margins widen the sampling region") {
  const Window w{0, 0, 4, 4, 2};
  const PointSet ps = sample_poisson(w, 2.0, 3);
  bool outside_core = false;
  for (const Point& p : ps.points)
    if (!w.contains(p)) outside_core = true;
  CHECK(outside_core);
  // Expected count scales with the padded area, not the core area.
  double total = 0.0;
  for (std::uint64_t s = 0; s < 400; ++s) total += sample_poisson(w, 2.0, s).n();
  const double mean = total / 400.0;
  const double expect = 2.0 * w.padded_area();
  CHECK(std::abs(mean - expect) < 4.0 * std::sqrt(expect) / std::sqrt(400.0));
}
