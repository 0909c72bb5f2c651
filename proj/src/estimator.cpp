#include "copkde/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace copkde {

namespace {

void check_config(const EstimatorConfig& config, EstimatorVariant expected)
{
  if (!(config.bandwidth > 0.0))
    throw std::invalid_argument("estimator: bandwidth must be positive");
  if (config.variant != expected)
    throw std::invalid_argument("estimator: config variant does not match estimator");
}

} // namespace

SortedPointSum::SortedPointSum(const std::vector<double>& u, const std::vector<double>& v)
{
  const std::size_t n = u.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
  u_.resize(n);
  v_.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    u_[k] = u[order[k]];
    v_[k] = v[order[k]];
  }
}

double SortedPointSum::kernel_sum(const Kernel& k, double h, double u, double v) const
{
  const double r = k.cutoff_radius() * h;
  const auto lo = std::lower_bound(u_.begin(), u_.end(), u - r);
  const auto hi = std::upper_bound(lo, u_.end(), u + r);
  double acc = 0.0;
  for (auto it = lo; it != hi; ++it) {
    const std::size_t idx = static_cast<std::size_t>(it - u_.begin());
    const double dv = v - v_[idx];
    if (std::fabs(dv) > r)
      continue;
    acc += k((u - *it) / h) * k(dv / h);
  }
  return acc;
}

MirrorDensity::MirrorDensity(const MirrorSet& mirror, const EstimatorConfig& config)
  : points_(mirror.u, mirror.v)
  , config_(config)
  , n_(mirror.source_n)
{
  check_config(config, EstimatorVariant::mirror);
  if (n_ == 0)
    throw std::invalid_argument("estimator: empty mirror set");
}

double MirrorDensity::operator()(double u, double v) const
{
  if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0)
    return 0.0;
  const double h = config_.bandwidth;
  return points_.kernel_sum(config_.kernel, h, u, v) / (static_cast<double>(n_) * h * h);
}

DensityGrid MirrorDensity::grid(int resolution) const
{
  if (resolution < 2)
    throw std::invalid_argument("estimator: grid resolution must be >= 2");
  DensityGrid g;
  g.resolution = resolution;
  g.config = config_;
  g.source_n = n_;
  g.values.resize(static_cast<std::size_t>(resolution) * resolution);
  const double step = 1.0 / (resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    const double u = i * step;
    for (int j = 0; j < resolution; ++j)
      g.values[static_cast<std::size_t>(i) * resolution + j] = (*this)(u, j * step);
  }
  return g;
}

NaiveDensity::NaiveDensity(const PseudoSample& pseudo, const EstimatorConfig& config)
  : points_(pseudo.u, pseudo.v)
  , config_(config)
  , n_(pseudo.size())
{
  check_config(config, EstimatorVariant::naive);
  if (n_ == 0)
    throw std::invalid_argument("estimator: empty sample");
}

double NaiveDensity::operator()(double u, double v) const
{
  const double h = config_.bandwidth;
  return points_.kernel_sum(config_.kernel, h, u, v) / (static_cast<double>(n_) * h * h);
}

DensityGrid NaiveDensity::grid(int resolution) const
{
  if (resolution < 2)
    throw std::invalid_argument("estimator: grid resolution must be >= 2");
  DensityGrid g;
  g.resolution = resolution;
  g.config = config_;
  g.source_n = n_;
  g.values.resize(static_cast<std::size_t>(resolution) * resolution);
  const double step = 1.0 / (resolution - 1);
  for (int i = 0; i < resolution; ++i)
    for (int j = 0; j < resolution; ++j)
      g.values[static_cast<std::size_t>(i) * resolution + j] = (*this)(i * step, j * step);
  return g;
}

double mirror_kde_at(const MirrorSet& mirror, const EstimatorConfig& config, double u, double v)
{
  return MirrorDensity(mirror, config)(u, v);
}

DensityGrid mirror_kde_grid(const MirrorSet& mirror, const EstimatorConfig& config, int resolution)
{
  return MirrorDensity(mirror, config).grid(resolution);
}

double naive_kde_at(const PseudoSample& pseudo, const EstimatorConfig& config, double u, double v)
{
  return NaiveDensity(pseudo, config)(u, v);
}

} // namespace copkde
