#include "copkde/bandwidth.hpp"

#include "copkde/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace copkde {

namespace {

constexpr double inv_sqrt_2pi = 0.3989422804014327;

double gaussian_pdf_trunc(double x)
{
  return std::fabs(x) > 8.0 ? 0.0 : inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

// d2/dx2 and d4/dx4 of the standard normal density
double gaussian_d2(double x)
{
  return gaussian_pdf_trunc(x) * (x * x - 1.0);
}

double gaussian_d4(double x)
{
  const double x2 = x * x;
  return gaussian_pdf_trunc(x) * (x2 * x2 - 6.0 * x2 + 3.0);
}

struct SortedSample
{
  std::vector<double> u; // ascending
  std::vector<double> v;
  std::vector<std::size_t> owner; // source index (mirror sets)
};

SortedSample sort_by_u(const std::vector<double>& u, const std::vector<double>& v,
                       bool with_owner)
{
  const std::size_t n = u.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
  SortedSample s;
  s.u.resize(n);
  s.v.resize(n);
  if (with_owner)
    s.owner.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    s.u[k] = u[order[k]];
    s.v[k] = v[order[k]];
    if (with_owner)
      s.owner[k] = order[k] / 9;
  }
  return s;
}

void check_pseudo(const PseudoSample& pseudo, std::size_t min_n)
{
  if (pseudo.size() < min_n)
    throw std::invalid_argument("bandwidth: sample too small for this criterion");
  const auto [umin, umax] = std::minmax_element(pseudo.u.begin(), pseudo.u.end());
  const auto [vmin, vmax] = std::minmax_element(pseudo.v.begin(), pseudo.v.end());
  if (*umin == *umax && *vmin == *vmax)
    throw std::runtime_error("bandwidth: degenerate sample, all pseudo-observations coincide");
}

} // namespace

std::string method_name(SelectorMethod m)
{
  switch (m) {
  case SelectorMethod::rule_of_thumb:
    return "rule_of_thumb";
  case SelectorMethod::lscv_full:
    return "lscv_full";
  case SelectorMethod::lscv_gamma:
    return "lscv_gamma";
  case SelectorMethod::bcv:
    return "bcv";
  }
  return "?";
}

SelectorMethod method_from_name(const std::string& name)
{
  if (name == "rot" || name == "rule_of_thumb" || name == "rule-of-thumb")
    return SelectorMethod::rule_of_thumb;
  if (name == "lscv" || name == "lscv_full" || name == "lscv-full")
    return SelectorMethod::lscv_full;
  if (name == "lscv_gamma" || name == "lscv-gamma" || name == "gamma")
    return SelectorMethod::lscv_gamma;
  if (name == "bcv")
    return SelectorMethod::bcv;
  throw std::invalid_argument("unknown bandwidth method '" + name + "'");
}

double amise(double h, int n, const Kernel& kernel, const CurvatureBeta& beta)
{
  if (!(h > 0.0) || n < 2)
    throw std::invalid_argument("amise: need h > 0 and n >= 2");
  const double r2 = kernel.roughness() * kernel.roughness();
  const double mu2 = kernel.mu2();
  return r2 / (n * h * h) + 0.25 * h * h * h * h * mu2 * mu2 * beta.beta;
}

BandwidthSelection rule_of_thumb(int n, const Kernel& kernel, double tau_hat)
{
  if (n < 2)
    throw std::invalid_argument("rule_of_thumb: n must be >= 2");
  double theta = 0.0;
  try {
    theta = invert_kendall_tau(tau_hat);
  } catch (const std::invalid_argument&) {
    throw std::runtime_error("rule_of_thumb: reference family degenerate "
                             "(tau ~ 0 or out of range), supply h manually");
  }
  const CurvatureBeta beta = beta_functional(FrankCopula(theta));
  const double r2 = kernel.roughness() * kernel.roughness();
  const double mu2 = kernel.mu2();
  const double h = std::pow(2.0 * r2 / (n * mu2 * mu2 * beta.beta), 1.0 / 6.0);
  if (!(h < 1.0))
    throw std::runtime_error("rule_of_thumb: reference family degenerate "
                             "(implied bandwidth spans the whole square), supply h manually");
  BandwidthSelection sel;
  sel.h = h;
  sel.method = SelectorMethod::rule_of_thumb;
  return sel;
}

double lscv_full(const PseudoSample& pseudo, const Kernel& kernel, double h,
                 bool nine_point_loo)
{
  check_pseudo(pseudo, 3);
  if (!(h > 0.0))
    throw std::invalid_argument("lscv_full: bandwidth must be positive");
  const std::size_t n = pseudo.size();
  const MirrorSet mirror = mirror_reflect(pseudo);

  const double rough = roughness_chat(mirror, kernel, h);

  // leave-one-out sum: evaluate the kernel sum at each mirror copy of point
  // i over all copies not owned by i (plain kernel sum, no zero extension)
  const SortedSample s = sort_by_u(mirror.u, mirror.v, true);
  const double r = kernel.cutoff_radius() * h;

  double loo = 0.0;
  const std::size_t eval_count = nine_point_loo ? mirror.size() : n;
  for (std::size_t e = 0; e < eval_count; ++e) {
    const std::size_t idx = nine_point_loo ? e : 9 * e; // original copy when l = 1 only
    const double ue = mirror.u[idx];
    const double ve = mirror.v[idx];
    const std::size_t own = idx / 9;
    const auto lo = std::lower_bound(s.u.begin(), s.u.end(), ue - r);
    const auto hi = std::upper_bound(lo, s.u.end(), ue + r);
    double acc = 0.0;
    for (auto it = lo; it != hi; ++it) {
      const std::size_t k = static_cast<std::size_t>(it - s.u.begin());
      if (s.owner[k] == own)
        continue;
      const double dv = ve - s.v[k];
      if (std::fabs(dv) > r)
        continue;
      acc += kernel((ue - *it) / h) * kernel(dv / h);
    }
    loo += acc;
  }
  loo /= static_cast<double>(n - 1) * h * h;
  return rough - 2.0 * loo / static_cast<double>(n);
}

double lscv_gamma_term(const Kernel& kernel, double t1, double t2)
{
  return kernel.self_convolution(t1) * kernel.self_convolution(t2) -
         2.0 * kernel(t1) * kernel(t2);
}

double lscv_gamma(const PseudoSample& pseudo, const Kernel& kernel, double h)
{
  check_pseudo(pseudo, 2);
  if (!(h > 0.0))
    throw std::invalid_argument("lscv_gamma: bandwidth must be positive");
  const std::size_t n = pseudo.size();
  const SortedSample s = sort_by_u(pseudo.u, pseudo.v, false);

  // gamma vanishes once either |tau| exceeds twice the kernel radius
  const double window = 2.0 * kernel.cutoff_radius() * h;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n && s.u[j] - s.u[i] <= window; ++j) {
      const double dv = s.v[i] - s.v[j];
      if (std::fabs(dv) > window)
        continue;
      acc += lscv_gamma_term(kernel, (s.u[i] - s.u[j]) / h, dv / h);
    }
  }
  const double r2 = kernel.roughness() * kernel.roughness();
  const double nh2 = static_cast<double>(n) * h * h;
  return r2 / nh2 + 2.0 * acc / (static_cast<double>(n) * nh2);
}

double bcv(const PseudoSample& pseudo, double h)
{
  check_pseudo(pseudo, 3);
  if (!(h > 0.0))
    throw std::invalid_argument("bcv: bandwidth must be positive");
  const Kernel kernel(KernelKind::gaussian);
  const std::size_t n = pseudo.size();
  const MirrorSet mirror = mirror_reflect(pseudo);
  const SortedSample s = sort_by_u(mirror.u, mirror.v, true);
  const double r = kernel.cutoff_radius() * h;

  // leave-one-out plug-ins for the fourth-derivative expectations,
  // evaluated at the original pseudo-observations
  double sum_u4 = 0.0, sum_v4 = 0.0, sum_u2v2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ui = pseudo.u[i];
    const double vi = pseudo.v[i];
    const auto lo = std::lower_bound(s.u.begin(), s.u.end(), ui - r);
    const auto hi = std::upper_bound(lo, s.u.end(), ui + r);
    for (auto it = lo; it != hi; ++it) {
      const std::size_t k = static_cast<std::size_t>(it - s.u.begin());
      if (s.owner[k] == i)
        continue;
      const double tu = (ui - *it) / h;
      const double tv = (vi - s.v[k]) / h;
      if (std::fabs(tv) > kernel.cutoff_radius())
        continue;
      sum_u4 += gaussian_d4(tu) * gaussian_pdf_trunc(tv);
      sum_v4 += gaussian_pdf_trunc(tu) * gaussian_d4(tv);
      sum_u2v2 += gaussian_d2(tu) * gaussian_d2(tv);
    }
  }
  const double h6 = std::pow(h, 6.0);
  const double scale = 1.0 / (static_cast<double>(n) * static_cast<double>(n - 1) * h6);
  const double i_u4 = sum_u4 * scale;
  const double i_v4 = sum_v4 * scale;
  const double i_u2v2 = sum_u2v2 * scale;

  const double r2 = kernel.roughness() * kernel.roughness();
  const double mu2 = kernel.mu2();
  return r2 / (static_cast<double>(n) * h * h) +
         0.25 * h * h * h * h * mu2 * mu2 * (i_u4 + i_v4 + 2.0 * i_u2v2);
}

BandwidthSelection minimize_criterion(const PseudoSample& pseudo, const Kernel& kernel,
                                      SelectorMethod method, std::span<const double> h_grid)
{
  if (h_grid.size() < 10)
    throw std::invalid_argument("minimize_criterion: need a grid of at least 10 bandwidths");
  if (!std::is_sorted(h_grid.begin(), h_grid.end()) ||
      std::adjacent_find(h_grid.begin(), h_grid.end()) != h_grid.end())
    throw std::invalid_argument("minimize_criterion: h grid must be strictly increasing");
  if (method == SelectorMethod::rule_of_thumb)
    throw std::invalid_argument("minimize_criterion: rule_of_thumb is not a grid criterion");
  check_pseudo(pseudo, 3);

  BandwidthSelection sel;
  sel.method = method;
  sel.score_curve.reserve(h_grid.size());
  std::size_t best = 0;
  for (std::size_t k = 0; k < h_grid.size(); ++k) {
    const double h = h_grid[k];
    double score = 0.0;
    switch (method) {
    case SelectorMethod::lscv_full:
      score = lscv_full(pseudo, kernel, h);
      break;
    case SelectorMethod::lscv_gamma:
      score = lscv_gamma(pseudo, kernel, h);
      break;
    case SelectorMethod::bcv:
      score = bcv(pseudo, h);
      break;
    default:
      break;
    }
    sel.score_curve.emplace_back(h, score);
    if (score < sel.score_curve[best].second)
      best = k;
  }
  sel.h = h_grid[best];
  sel.diagnostics.boundary_minimum = (best == 0 || best + 1 == h_grid.size());
  sel.diagnostics.grid_min = h_grid.front();
  sel.diagnostics.grid_max = h_grid.back();
  sel.diagnostics.grid_points = static_cast<int>(h_grid.size());
  return sel;
}

std::vector<double> default_h_grid()
{
  constexpr int points = 60;
  const double lo = std::log(0.01);
  const double hi = std::log(0.6);
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = std::exp(lo + (hi - lo) * i / (points - 1));
  return grid;
}

std::vector<double> linear_h_grid(double lo, double hi, double step)
{
  if (!(lo > 0.0) || !(step > 0.0) || hi < lo)
    throw std::invalid_argument("bandwidth grid: need 0 < lo <= hi and step > 0");
  std::vector<double> grid;
  for (double h = lo; h <= hi + 0.5 * step; h += step)
    grid.push_back(h);
  return grid;
}

} // namespace copkde
