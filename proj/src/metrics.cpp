#include "copkde/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace copkde {

namespace {

void check_spec(const QuadratureSpec& spec)
{
  if (spec.resolution < 32)
    throw std::invalid_argument("quadrature: resolution must be >= 32");
  if (spec.rule == QuadratureRule::simpson && spec.resolution % 2 == 0)
    throw std::invalid_argument("quadrature: simpson needs an odd node count per axis");
}

void check_node(double f, double u, double v)
{
  if (!std::isfinite(f))
    throw std::runtime_error("quad2d: non-finite integrand value at (" +
                             std::to_string(u) + ", " + std::to_string(v) + ")");
}

double quad2d_midpoint(const Density2D& f, int m)
{
  const double cell = 1.0 / m;
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    const double u = (i + 0.5) * cell;
    for (int j = 0; j < m; ++j) {
      const double v = (j + 0.5) * cell;
      const double val = f(u, v);
      check_node(val, u, v);
      acc += val;
    }
  }
  return acc * cell * cell;
}

double simpson_weight(int i, int m)
{
  if (i == 0 || i == m - 1)
    return 1.0;
  return i % 2 == 1 ? 4.0 : 2.0;
}

double quad2d_simpson(const Density2D& f, int m)
{
  const double step = 1.0 / (m - 1);
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    const double wu = simpson_weight(i, m);
    const double u = i * step;
    double row = 0.0;
    for (int j = 0; j < m; ++j) {
      const double v = j * step;
      const double val = f(u, v);
      check_node(val, u, v);
      row += simpson_weight(j, m) * val;
    }
    acc += wu * row;
  }
  return acc * step * step / 9.0;
}

} // namespace

double quad2d(const Density2D& f, const QuadratureSpec& spec)
{
  check_spec(spec);
  return spec.rule == QuadratureRule::midpoint ? quad2d_midpoint(f, spec.resolution)
                                               : quad2d_simpson(f, spec.resolution);
}

double ise(const Density2D& estimate, const Density2D& truth, const QuadratureSpec& spec)
{
  return quad2d(
    [&](double u, double v) {
      const double d = estimate(u, v) - truth(u, v);
      return d * d;
    },
    spec);
}

double ise(const DensityGrid& estimate, const Density2D& truth)
{
  const int m = estimate.resolution;
  if (m % 2 == 0)
    throw std::invalid_argument("ise: grid resolution must be odd for simpson nodes");
  const double step = 1.0 / (m - 1);
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    double row = 0.0;
    for (int j = 0; j < m; ++j) {
      const double d = estimate.at(i, j) - truth(estimate.node(i), estimate.node(j));
      row += simpson_weight(j, m) * d * d;
    }
    acc += simpson_weight(i, m) * row;
  }
  return acc * step * step / 9.0;
}

double roughness_chat(const MirrorSet& mirror, const Kernel& kernel, double h)
{
  if (kernel.kind() == KernelKind::gaussian)
    throw std::invalid_argument("roughness_chat: compact kernel required");
  if (!(h > 0.0))
    throw std::invalid_argument("roughness_chat: bandwidth must be positive");

  const std::size_t n = mirror.source_n;
  const double window = 2.0 * h; // (K*K) support

  // mirror copies co-sorted by u for window pruning
  const std::size_t total = mirror.size();
  std::vector<std::size_t> order(total);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return mirror.u[a] < mirror.u[b]; });
  std::vector<double> su(total), sv(total);
  for (std::size_t k = 0; k < total; ++k) {
    su[k] = mirror.u[order[k]];
    sv[k] = mirror.v[order[k]];
  }

  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ui = mirror.u[9 * i]; // original copy of source point i
    const double vi = mirror.v[9 * i];
    const auto lo = std::lower_bound(su.begin(), su.end(), ui - window);
    const auto hi = std::upper_bound(lo, su.end(), ui + window);
    for (auto it = lo; it != hi; ++it) {
      const std::size_t k = static_cast<std::size_t>(it - su.begin());
      const double dv = vi - sv[k];
      if (std::fabs(dv) > window)
        continue;
      acc += kernel.self_convolution((ui - *it) / h) * kernel.self_convolution(dv / h);
    }
  }
  return acc / (static_cast<double>(n) * static_cast<double>(n) * h * h);
}

double roughness_true(const Density2D& density, const QuadratureSpec& spec)
{
  return quad2d([&](double u, double v) {
    const double c = density(u, v);
    return c * c;
  }, spec);
}

} // namespace copkde
