#include "sensnet/point_set.hpp"

#include <cmath>
#include <stdexcept>

#include "sensnet/rng.hpp"

namespace sensnet {

PointSet sample_poisson(const Window& w, double lambda, std::uint64_t seed) {
  validate(w);
  if (lambda < 0.0 || !std::isfinite(lambda))
    throw std::invalid_argument("sample_poisson: lambda must be finite and non-negative");

  PointSet ps;
  ps.lambda = lambda;
  ps.seed = seed;
  ps.window = w;

  const double mean = lambda * w.padded_area();
  auto eng = make_engine(seed);
  long long n = 0;
  if (mean > 0.0) {
    std::poisson_distribution<long long> pn(mean);
    n = pn(eng);
  }
  ps.points.reserve(static_cast<std::size_t>(n));
  std::uniform_real_distribution<double> ux(w.px_min(), w.px_max());
  std::uniform_real_distribution<double> uy(w.py_min(), w.py_max());
  for (long long i = 0; i < n; ++i) {
    const double x = ux(eng);
    const double y = uy(eng);
    ps.points.push_back(Point{x, y});
  }
  return ps;
}

}  // namespace sensnet
