#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace copkde {

enum class KernelKind
{
  epanechnikov,
  gaussian,
  uniform
};

//! Symmetric univariate smoothing kernel together with the derived
//! quantities (moments, roughness, self-convolution) used by the
//! estimators and bandwidth selectors.
//!
//! All quantities are closed forms; the test suite pins them against
//! quadrature oracles.
class Kernel {
public:
  explicit Kernel(KernelKind kind)
    : kind_(kind)
  {
  }

  KernelKind kind() const { return kind_; }

  //! K(x). Compact kernels are exactly 0 outside [-1, 1]; the Gaussian is
  //! truncated at |x| > 8 where its density falls below 1e-14.
  double operator()(double x) const;

  //! Radius of the support: 1 for compact kernels, +inf for the Gaussian.
  double support_radius() const
  {
    return kind_ == KernelKind::gaussian ? std::numeric_limits<double>::infinity() : 1.0;
  }

  //! Radius beyond which evaluation returns 0 (truncation point for the
  //! Gaussian); used for pruning windowed sums.
  double cutoff_radius() const { return kind_ == KernelKind::gaussian ? 8.0 : 1.0; }

  //! R(K) = int K(x)^2 dx
  double roughness() const;

  //! mu_2 = int x^2 K(x) dx
  double mu2() const { return moment(2); }

  //! mu_k = int x^k K(x) dx, k <= 8
  double moment(int k) const;

  //! (K*K)(x); 0 for |x| > 2 * cutoff_radius()
  double self_convolution(double x) const;

  std::string name() const;

private:
  KernelKind kind_;
};

Kernel kernel_from_name(const std::string& name);

} // namespace copkde
