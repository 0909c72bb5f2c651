#pragma once

#include "copkde/frank.hpp"
#include "copkde/kernels.hpp"
#include "copkde/transform.hpp"

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace copkde {

enum class SelectorMethod
{
  rule_of_thumb,
  lscv_full,
  lscv_gamma,
  bcv
};

std::string method_name(SelectorMethod m);
SelectorMethod method_from_name(const std::string& name);

struct SelectionDiagnostics
{
  bool boundary_minimum = false;
  double grid_min = 0.0;
  double grid_max = 0.0;
  int grid_points = 0;
};

struct BandwidthSelection
{
  double h = 0.0;
  SelectorMethod method = SelectorMethod::rule_of_thumb;
  std::vector<std::pair<double, double>> score_curve; // (h, criterion)
  SelectionDiagnostics diagnostics;
};

//! AMISE(h) = (n h^2)^{-1} R(K)^2 + (h^4 mu2(K)^2 / 4) beta
double amise(double h, int n, const Kernel& kernel, const CurvatureBeta& beta);

//! Reference-copula rule of thumb: invert Kendall's tau to a Frank
//! parameter, take beta from the fitted reference, and return
//!   h* = [2 R(K)^2 / (n mu2(K)^2 beta)]^{1/6}.
//! Throws when the reference degenerates (tau ~ 0 drives beta -> 0 and the
//! formula past the width of the support).
BandwidthSelection rule_of_thumb(int n, const Kernel& kernel, double tau_hat);

//! Leave-one-out least-squares CV criterion:
//!   R(c-hat) - (2/n) sum_i sum_l chat_{-i}(U_il, V_il)
//! with the roughness term from the pairwise-convolution formula and the
//! leave-one-out estimate evaluated as a plain kernel sum at the reflected
//! copies as well (no zero truncation outside the square).
//! `nine_point_loo = false` restricts the outer sum to the original copies
//! (l = 1), the form whose expectation matches the gamma criterion.
double lscv_full(const PseudoSample& pseudo, const Kernel& kernel, double h,
                 bool nine_point_loo = true);

//! gamma(t1, t2) = (K*K)(t1) (K*K)(t2) - 2 K(t1) K(t2)
double lscv_gamma_term(const Kernel& kernel, double t1, double t2);

//! Pairwise approximation of the LSCV criterion:
//!   R(K)^2/(n h^2) + (2/(n^2 h^2)) sum_{i<j} gamma(tau_ij1, tau_ij2)
double lscv_gamma(const PseudoSample& pseudo, const Kernel& kernel, double h);

//! Biased cross-validation: AMISE with the three curvature integrals
//! replaced by leave-one-out plug-ins built from analytic fourth
//! derivatives of the Gaussian product kernel over the mirror set.
double bcv(const PseudoSample& pseudo, double h);

//! Full grid evaluation of the chosen criterion (no descent; LSCV surfaces
//! can carry several local minima). Returns the global grid minimizer with
//! the full score curve; flags minima on the grid edge.
BandwidthSelection minimize_criterion(const PseudoSample& pseudo, const Kernel& kernel,
                                      SelectorMethod method, std::span<const double> h_grid);

//! 60 log-spaced points in [0.01, 0.6]; the default simulation grid.
std::vector<double> default_h_grid();

std::vector<double> linear_h_grid(double lo, double hi, double step);

} // namespace copkde
