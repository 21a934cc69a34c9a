#pragma once

#include <string>
#include <utility>
#include <vector>

#include "supnorm/bergman.hpp"
#include "supnorm/geometry.hpp"

namespace supnorm {

struct Region {
  enum class Kind { FundamentalCapped, Compact, Strip };
  Kind kind = Kind::FundamentalCapped;
  /// 0 for FundamentalCapped means the cap k/(2 pi) + 1.
  double y_max = 0.0;
  double y_min = 0.0;
  double width = 1.0;

  /// {|x| <= 1/2, |z| >= 1, y <= cap}.
  static Region fundamental(double y_cap = 0.0) { return {Kind::FundamentalCapped, y_cap, 0.0, 1.0}; }
  /// {|x| <= 1/2, |z| >= 1, y <= y_max}.
  static Region compact(double y_max) { return {Kind::Compact, y_max, 0.0, 1.0}; }
  /// {|x| <= a/2, y_min <= y <= y_max}.
  static Region strip(double a, double y_min, double y_max) { return {Kind::Strip, y_max, y_min, a}; }

  /// Upper y limit for a given weight.
  double top(int weight) const;
  /// Lower y limit of the column at abscissa x.
  double bottom(double x) const;
  double half_width() const { return width / 2.0; }
  bool contains(double x, double y, int weight) const;
  std::string describe() const;
};

struct GridSpec {
  int nx = 200;
  int ny = 200;
  /// After the grid: 24 rounds of compass search in (x, log y) from the grid
  /// argmax, up to 8 points per round, appended with refined = true.
  bool refine = true;
};

struct ScanPoint {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
  bool refined = false;
};

struct ScanResult {
  int weight = 0;
  double sup_value = 0.0;
  UpperHalfPoint argmax{0.0, 1.0};
  Region region{};
  GridSpec grid{};
  std::vector<ScanPoint> points;
};

/// Geodesic midpoint of z and w (via the hyperboloid model).
UpperHalfPoint geodesic_midpoint(const UpperHalfPoint& z, const UpperHalfPoint& w);

/// Max of the Bergman diagonal over a grid uniform in x and geometric in y
/// (per column, from the region floor to its top), optionally followed by one
/// pass of geodesic midpoints between the argmax and its grid neighbours.
/// Ties resolve to the lowest point index, so the result is independent of threads.
/// Throws std::invalid_argument for grids below 2x2 or regions below the
/// evaluation floor.
ScanResult supnorm_scan(int weight, const Region& region, const GridSpec& grid, const OrthonormalBasis& basis,
                        int threads = 0);

struct SlopeFit {
  std::vector<std::pair<double, double>> points;
  double slope = 0.0;
  double intercept = 0.0;
  /// Root-mean-square residual in log sup.
  double residual = 0.0;
};

/// Least squares on (log k, log sup). Throws std::invalid_argument for fewer
/// than 3 points, non-positive entries, or all-equal k.
SlopeFit growth_fit(const std::vector<std::pair<double, double>>& points);

}  // namespace supnorm
