#include "copkde/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace copkde {

std::vector<double> average_ranks(std::span<const double> x)
{
  const std::size_t n = x.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });

  std::vector<double> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && x[order[j + 1]] == x[order[i]])
      ++j;
    // tied block [i, j]: average of ranks i+1 .. j+1
    const double r = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k)
      ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

PseudoSample ecdf_transform(std::span<const double> x,
                            std::span<const double> y,
                            EcdfScaling scaling)
{
  if (x.size() != y.size())
    throw std::invalid_argument("ecdf_transform: coordinate lists differ in length");
  const std::size_t n = x.size();
  if (n < 2)
    throw std::invalid_argument("ecdf_transform: need at least 2 observations");
  for (std::size_t i = 0; i < n; ++i)
    if (!std::isfinite(x[i]) || !std::isfinite(y[i]))
      throw std::invalid_argument("ecdf_transform: non-finite observation");

  const double s =
    scaling == EcdfScaling::over_n ? 1.0 / static_cast<double>(n)
                                   : 1.0 / static_cast<double>(n + 1);

  PseudoSample out;
  out.scaling = scaling;
  out.u = average_ranks(x);
  out.v = average_ranks(y);
  for (double& r : out.u)
    r *= s;
  for (double& r : out.v)
    r *= s;
  return out;
}

MirrorSet mirror_reflect(const PseudoSample& pseudo)
{
  const std::size_t n = pseudo.size();
  MirrorSet m;
  m.source_n = n;
  m.u.reserve(9 * n);
  m.v.reserve(9 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double a = pseudo.u[i];
    const double b = pseudo.v[i];
    const double ru[9] = { a, a, -a, -a, a, -a, 2 - a, 2 - a, 2 - a };
    const double rv[9] = { b, -b, b, -b, 2 - b, 2 - b, b, -b, 2 - b };
    m.u.insert(m.u.end(), ru, ru + 9);
    m.v.insert(m.v.end(), rv, rv + 9);
  }
  return m;
}

} // namespace copkde
