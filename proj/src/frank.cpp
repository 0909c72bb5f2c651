#include "copkde/frank.hpp"

#include "copkde/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace copkde {

namespace {

constexpr double independence_eps = 1e-6;

// adaptive Simpson on [a,b]
double adaptive_simpson_rec(double (*f)(double), double a, double b, double fa,
                            double fm, double fb, double whole, double tol, int depth)
{
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double adaptive_simpson(double (*f)(double), double a, double b, double tol)
{
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

double debye_integrand(double t)
{
  // t / (e^t - 1), removable singularity at 0
  if (std::fabs(t) < 1e-12)
    return 1.0;
  return t / std::expm1(t);
}

// D1(theta) = (1/theta) int_0^theta t/(e^t - 1) dt
double debye1(double theta)
{
  return adaptive_simpson(debye_integrand, 0.0, theta, 1e-12) / theta;
}

void check_finite_unit(double u, double v)
{
  if (!std::isfinite(u) || !std::isfinite(v))
    throw std::invalid_argument("frank: non-finite input");
}

} // namespace

FrankCopula::FrankCopula(double theta)
  : theta_(theta)
{
  if (!std::isfinite(theta))
    throw std::invalid_argument("frank: theta must be finite");
}

double FrankCopula::density(double u, double v) const
{
  check_finite_unit(u, v);
  if (std::fabs(theta_) < independence_eps)
    return 1.0;
  const double a = -std::expm1(-theta_);        // 1 - e^{-theta}
  const double eu = -std::expm1(-theta_ * u);   // 1 - e^{-theta u}
  const double ev = -std::expm1(-theta_ * v);
  const double d = a - eu * ev;
  return theta_ * a * std::exp(-theta_ * (u + v)) / (d * d);
}

double FrankCopula::cdf(double u, double v) const
{
  check_finite_unit(u, v);
  if (std::fabs(theta_) < independence_eps)
    return u * v;
  return -std::log1p(std::expm1(-theta_ * u) * std::expm1(-theta_ * v) /
                     std::expm1(-theta_)) / theta_;
}

SecondPartials FrankCopula::second_partials(double u, double v) const
{
  check_finite_unit(u, v);
  if (std::fabs(theta_) < independence_eps)
    return { 0.0, 0.0 };
  const auto cuu_at = [this](double s, double t) {
    const double a = -std::expm1(-theta_);
    const double e = std::exp(-theta_ * s);
    const double f = std::exp(-theta_ * t);
    const double d = a - (-std::expm1(-theta_ * s)) * (-std::expm1(-theta_ * t));
    const double p = e * (1.0 - f);
    const double d2 = d * d;
    return theta_ * theta_ * theta_ * a * e * f *
           (6.0 * p * p - 6.0 * p * d + d2) / (d2 * d2);
  };
  // c_vv(u,v) = c_uu(v,u) by exchangeability
  return { cuu_at(u, v), cuu_at(v, u) };
}

double FrankCopula::conditional_quantile(double u, double p) const
{
  if (std::fabs(theta_) < independence_eps)
    return p;
  const double dm = std::expm1(-theta_); // e^{-theta} - 1
  const double w = p * dm / (std::exp(-theta_ * u) * (1.0 - p) + p);
  return -std::log1p(w) / theta_;
}

BivariateSample FrankCopula::sample(std::size_t n, std::uint64_t seed) const
{
  if (n < 1)
    throw std::invalid_argument("frank: sample size must be >= 1");
  SeededRng rng(seed);
  BivariateSample out;
  out.x.resize(n);
  out.y.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    const double p = rng.uniform();
    out.x[i] = u;
    out.y[i] = conditional_quantile(u, p);
  }
  return out;
}

double frank_density(double u, double v, double theta)
{
  return FrankCopula(theta).density(u, v);
}

double kendall_tau(double theta)
{
  if (std::fabs(theta) < independence_eps)
    return theta / 9.0; // small-theta expansion
  return 1.0 + 4.0 * (debye1(theta) - 1.0) / theta;
}

double invert_kendall_tau(double tau)
{
  if (!(std::fabs(tau) < 1.0))
    throw std::invalid_argument("invert_kendall_tau: |tau| must be < 1");
  if (std::fabs(tau) < 1e-10)
    throw std::invalid_argument("invert_kendall_tau: tau ~ 0 (independence limit)");
  const double target = std::fabs(tau);
  constexpr double theta_max = 700.0;
  if (target >= kendall_tau(theta_max))
    throw std::invalid_argument("invert_kendall_tau: tau outside achievable range");

  // tau(theta) is increasing; bisect until the tau gap closes
  double lo = 0.0, hi = theta_max;
  double mid = 1.0;
  for (int it = 0; it < 200; ++it) {
    mid = 0.5 * (lo + hi);
    const double t = kendall_tau(mid);
    if (std::fabs(t - target) <= 1e-8 && it > 8)
      break;
    (t < target ? lo : hi) = mid;
  }
  return tau > 0 ? mid : -mid;
}

CurvatureBeta beta_functional(const FrankCopula& model, int resolution)
{
  if (resolution < 64)
    throw std::invalid_argument("beta_functional: resolution must be >= 64");

  const auto eval = [&](int m) {
    // midpoint rule; nodes half a cell away from the boundary
    const double cell = 1.0 / m;
    double acc = 0.0;
    for (int i = 0; i < m; ++i) {
      const double ui = (i + 0.5) * cell;
      for (int j = 0; j < m; ++j) {
        const double vj = (j + 0.5) * cell;
        const auto [cuu, cvv] = model.second_partials(ui, vj);
        const double s = cuu + cvv;
        acc += s * s;
      }
    }
    return acc * cell * cell;
  };

  const double coarse = eval(resolution);
  const double fine = eval(2 * resolution);
  const double change = std::fabs(fine - coarse) / std::max(std::fabs(fine), 1e-300);
  if (change > 0.005)
    throw std::runtime_error("beta_functional: quadrature not converged "
                             "(doubling the grid moved the result by more than 0.5%)");
  return { fine, 2 * resolution };
}

} // namespace copkde
