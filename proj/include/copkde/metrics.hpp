#pragma once

#include "copkde/estimator.hpp"
#include "copkde/kernels.hpp"
#include "copkde/transform.hpp"

#include <functional>

namespace copkde {

enum class QuadratureRule
{
  midpoint,
  simpson
};

//! Tensor-product quadrature over the closed unit square.
//! `resolution` is the node count per axis for simpson (must be odd) and
//! the cell count per axis for midpoint.
struct QuadratureSpec
{
  int resolution = 201;
  QuadratureRule rule = QuadratureRule::simpson;
};

using Density2D = std::function<double(double, double)>;

double quad2d(const Density2D& f, const QuadratureSpec& spec);

//! Integrated squared error int int (estimate - truth)^2 over the unit square.
double ise(const Density2D& estimate, const Density2D& truth, const QuadratureSpec& spec);

//! ISE with the estimate's own grid nodes as quadrature nodes
//! (simpson; requires an odd grid resolution).
double ise(const DensityGrid& estimate, const Density2D& truth);

//! Roughness R(c-hat) of the mirror estimate over the unit square via the
//! pairwise self-convolution formula, exact for h <= 1/2.
//!
//! Pairing each source point against the full mirror set of every other
//! point unfolds the reflections: for compact kernels and h <= 1/2,
//!   int_0^1 prod of reflected kernel sums = h * sum over the 3 u-copies
//! per axis, so
//!   R(c-hat) = (1/(n^2 h^2)) sum_i sum_j sum_{m=1}^9
//!              (K*K)((U_i - U_jm)/h) (K*K)((V_i - V_jm)/h).
//! The quadrature oracle in the test suite pins this identity.
double roughness_chat(const MirrorSet& mirror, const Kernel& kernel, double h);

//! int int c^2 by quadrature.
double roughness_true(const Density2D& density, const QuadratureSpec& spec);

} // namespace copkde
