#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "slt/problem.hpp"

namespace slt {

/// Real function sampled on a per-side grid. Each side's abscissae are
/// strictly increasing and uniform; the left side's last point and the right
/// side's first point carry the one-sided limits at the interface, so the
/// interface never appears as a shared node.
struct GridFunction {
  std::vector<double> x_left, y_left;
  std::vector<double> x_right, y_right;

  std::size_t size() const { return y_left.size() + y_right.size(); }
};

/// Uniform per-side grid (endpoints included) with zeroed values.
/// points_per_side must be odd and >= 5 so composite Simpson applies cleanly.
GridFunction make_report_grid(const ValidatedSpec& spec, std::size_t points_per_side = 2001);

/// Sample fn(side, x) on the report grid.
GridFunction sample(const ValidatedSpec& spec, const std::function<double(Side, double)>& fn,
                    std::size_t points_per_side = 2001);

/// Throws GridMismatch unless both functions share identical abscissae.
void require_conforming(const GridFunction& y, const GridFunction& z);

/// Composite Simpson over a uniform grid of n points with spacing h.
/// Odd interval counts are handled by splitting the final panel with the
/// 3-point right-half rule, keeping fourth-order accuracy.
double simpson_uniform(std::span<const double> f, double h);

/// Running integral: out[k] = integral from x0 to x_k, same panel-splitting
/// rule for odd prefixes. out[0] = 0.
std::vector<double> simpson_cumulative(std::span<const double> f, double h);

}  // namespace slt
