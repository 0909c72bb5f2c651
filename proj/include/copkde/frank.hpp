#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace copkde {

//! Raw bivariate observations (also used for samples already on [0,1]^2).
struct BivariateSample
{
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return x.size(); }
};

struct SecondPartials
{
  double cuu;
  double cvv;
};

//! Curvature functional beta = int int [c_uu + c_vv]^2 du dv of a reference
//! copula, with the resolution it converged at.
struct CurvatureBeta
{
  double beta = 0.0;
  int quadrature_resolution = 0;
};

//! Frank copula with dependence parameter theta (theta != 0; the
//! independence limit is taken for |theta| < 1e-6).
//!
//! Used as the parametric reference family of the rule-of-thumb selector
//! and as the data generator of the simulation harness.
class FrankCopula {
public:
  explicit FrankCopula(double theta);

  double theta() const { return theta_; }

  //! copula density c(u,v)
  double density(double u, double v) const;

  //! C(u,v)
  double cdf(double u, double v) const;

  //! analytic second-order partials (c_uu, c_vv) at an interior point
  SecondPartials second_partials(double u, double v) const;

  //! conditional quantile of V given U = u at probability p
  double conditional_quantile(double u, double p) const;

  //! n i.i.d. pairs with this copula and uniform margins
  //! (conditional-inversion method; bit-identical for a fixed seed)
  BivariateSample sample(std::size_t n, std::uint64_t seed) const;

private:
  double theta_;
};

double frank_density(double u, double v, double theta);

//! tau(theta) = 1 + 4 (D1(theta) - 1) / theta with the Debye function D1
double kendall_tau(double theta);

//! Solve kendall_tau(theta) = tau to |tau(theta) - tau| <= 1e-8.
//! Throws for tau outside the achievable range or tau ~= 0.
double invert_kendall_tau(double tau);

//! beta = int int [c_uu + c_vv]^2 over the unit square by midpoint
//! tensor-product quadrature with `resolution` cells per axis (nodes sit
//! half a cell off the boundary). Throws if doubling the resolution moves
//! the result by more than 0.5%.
CurvatureBeta beta_functional(const FrankCopula& model, int resolution = 512);

} // namespace copkde
