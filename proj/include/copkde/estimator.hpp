#pragma once

#include "copkde/kernels.hpp"
#include "copkde/transform.hpp"

#include <vector>

namespace copkde {

enum class EstimatorVariant
{
  mirror,
  naive
};

struct EstimatorConfig
{
  double bandwidth = 0.1;
  Kernel kernel{ KernelKind::epanechnikov };
  EstimatorVariant variant = EstimatorVariant::mirror;
};

//! Rectangular evaluation of an estimate over the closed unit square.
//! Node (i, j) sits at (i/(m-1), j/(m-1)).
struct DensityGrid
{
  int resolution = 0;
  std::vector<double> values; // row-major, u index major
  EstimatorConfig config;
  std::size_t source_n = 0;

  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * resolution + j]; }
  double node(int i) const { return static_cast<double>(i) / (resolution - 1); }
};

//! Shared machinery: points co-sorted by the first coordinate so that a
//! query only visits entries with |u - u_i| within the kernel window.
class SortedPointSum {
public:
  SortedPointSum(const std::vector<double>& u, const std::vector<double>& v);

  //! sum over points of K((u-u_i)/h) * K((v-v_i)/h)
  double kernel_sum(const Kernel& k, double h, double u, double v) const;

  const std::vector<double>& u() const { return u_; }
  const std::vector<double>& v() const { return v_; }

private:
  std::vector<double> u_; // ascending
  std::vector<double> v_; // co-sorted
};

//! Mirror-reflection estimate: (1/(n h^2)) sum_i sum_l K_h(u - U_il) K_h(v - V_il)
//! on the closed unit square, 0 outside.
class MirrorDensity {
public:
  MirrorDensity(const MirrorSet& mirror, const EstimatorConfig& config);

  double operator()(double u, double v) const;
  DensityGrid grid(int resolution) const;

  const EstimatorConfig& config() const { return config_; }
  std::size_t source_n() const { return n_; }

private:
  SortedPointSum points_;
  EstimatorConfig config_;
  std::size_t n_;
};

//! Kernel estimate without reflection (boundary-biased baseline);
//! evaluates anywhere, no unit-square truncation.
class NaiveDensity {
public:
  NaiveDensity(const PseudoSample& pseudo, const EstimatorConfig& config);

  double operator()(double u, double v) const;
  DensityGrid grid(int resolution) const;

private:
  SortedPointSum points_;
  EstimatorConfig config_;
  std::size_t n_;
};

//! One-shot helpers matching the operation signatures; construct the
//! sorted evaluator internally (prefer the classes in loops).
double mirror_kde_at(const MirrorSet& mirror, const EstimatorConfig& config, double u, double v);
DensityGrid mirror_kde_grid(const MirrorSet& mirror, const EstimatorConfig& config, int resolution);
double naive_kde_at(const PseudoSample& pseudo, const EstimatorConfig& config, double u, double v);

} // namespace copkde
