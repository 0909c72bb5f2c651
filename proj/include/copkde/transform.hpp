#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace copkde {

enum class EcdfScaling
{
  over_n,         // ranks / n       (raw empirical CDF, max = 1)
  over_n_plus_one // ranks / (n + 1) (default; keeps points off the boundary)
};

//! Pseudo-observations on the unit square obtained by the marginal rank
//! transform. Ties get average ranks.
struct PseudoSample
{
  std::vector<double> u;
  std::vector<double> v;
  EcdfScaling scaling = EcdfScaling::over_n_plus_one;

  std::size_t size() const { return u.size(); }
};

//! The 9-fold reflected point set backing the mirror estimator.
//!
//! Points are stored in blocks of nine per source point, in the fixed order
//!   (u,v), (u,-v), (-u,v), (-u,-v), (u,2-v), (-u,2-v), (2-u,v), (2-u,-v),
//!   (2-u,2-v)
//! so entry 9*i is source point i itself and entry 9*i + l its l-th
//! reflection.
struct MirrorSet
{
  std::vector<double> u; // 9n
  std::vector<double> v;
  std::size_t source_n = 0;

  std::size_t size() const { return u.size(); }
  std::size_t owner(std::size_t idx) const { return idx / 9; }
};

PseudoSample ecdf_transform(std::span<const double> x,
                            std::span<const double> y,
                            EcdfScaling scaling = EcdfScaling::over_n_plus_one);

MirrorSet mirror_reflect(const PseudoSample& pseudo);

//! Average ranks (1-based, ties averaged) of a single coordinate list.
std::vector<double> average_ranks(std::span<const double> x);

//! Sample Kendall rank correlation (tau-b; tie-corrected).
double sample_kendall_tau(std::span<const double> x, std::span<const double> y);

} // namespace copkde
