#include "copkde/kernels.hpp"

#include <cmath>

namespace copkde {

namespace {

constexpr double inv_sqrt_2pi = 0.3989422804014327;
constexpr double inv_2_sqrt_pi = 0.28209479177387814; // 1/(2 sqrt(pi))

double gaussian_pdf(double x)
{
  return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

// double factorial (k-1)!! for even k: standard normal moments
double normal_even_moment(int k)
{
  double m = 1.0;
  for (int j = k - 1; j > 1; j -= 2)
    m *= j;
  return m;
}

} // namespace

double Kernel::operator()(double x) const
{
  switch (kind_) {
  case KernelKind::epanechnikov:
    return std::fabs(x) < 1.0 ? 0.75 * (1.0 - x * x) : 0.0;
  case KernelKind::gaussian:
    return std::fabs(x) > 8.0 ? 0.0 : gaussian_pdf(x);
  case KernelKind::uniform:
    return std::fabs(x) <= 1.0 ? 0.5 : 0.0;
  }
  return 0.0;
}

double Kernel::roughness() const
{
  switch (kind_) {
  case KernelKind::epanechnikov:
    return 0.6; // int (3/4)^2 (1-x^2)^2 = 3/5
  case KernelKind::gaussian:
    return inv_2_sqrt_pi;
  case KernelKind::uniform:
    return 0.5;
  }
  return 0.0;
}

double Kernel::moment(int k) const
{
  if (k < 0 || k > 8)
    throw std::invalid_argument("kernel moment order must be in [0, 8]");
  if (k % 2 == 1)
    return 0.0; // symmetry
  switch (kind_) {
  case KernelKind::epanechnikov:
    // int x^k 3/4 (1-x^2) dx on [-1,1] = 3 / ((k+1)(k+3))
    return 3.0 / ((k + 1.0) * (k + 3.0));
  case KernelKind::gaussian:
    return normal_even_moment(k);
  case KernelKind::uniform:
    return 1.0 / (k + 1.0);
  }
  return 0.0;
}

double Kernel::self_convolution(double x) const
{
  const double a = std::fabs(x);
  switch (kind_) {
  case KernelKind::epanechnikov: {
    if (a >= 2.0)
      return 0.0;
    // int_{a-1}^{1} (3/4)^2 (1-t^2)(1-(a-t)^2) dt, single polynomial on [0,2]
    const double d = 2.0 - a;
    return (3.0 / 160.0) * d * d * d * (a * a + 6.0 * a + 4.0);
  }
  case KernelKind::gaussian:
    // N(0,2) density
    return a > 16.0 ? 0.0 : std::exp(-0.25 * x * x) / (2.0 * std::sqrt(M_PI));
  case KernelKind::uniform:
    // triangular on [-2,2]
    return a >= 2.0 ? 0.0 : 0.25 * (2.0 - a);
  }
  return 0.0;
}

std::string Kernel::name() const
{
  switch (kind_) {
  case KernelKind::epanechnikov:
    return "epanechnikov";
  case KernelKind::gaussian:
    return "gaussian";
  case KernelKind::uniform:
    return "uniform";
  }
  return "?";
}

Kernel kernel_from_name(const std::string& name)
{
  if (name == "epanechnikov" || name == "epan" || name == "e")
    return Kernel(KernelKind::epanechnikov);
  if (name == "gaussian" || name == "normal" || name == "g")
    return Kernel(KernelKind::gaussian);
  if (name == "uniform" || name == "u")
    return Kernel(KernelKind::uniform);
  throw std::invalid_argument("unknown kernel '" + name +
                              "'; expected epanechnikov, gaussian or uniform");
}

} // namespace copkde
