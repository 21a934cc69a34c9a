#include "supnorm/scan.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "supnorm/parallel.hpp"

namespace supnorm {

namespace {

constexpr double kFloor = 0.5;
constexpr int kRefineRounds = 24;

std::size_t argmax_of(const std::vector<ScanPoint>& pts) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (pts[i].value > pts[best].value) best = i;
  }
  return best;
}

}  // namespace

double Region::top(int weight) const {
  if (kind == Kind::FundamentalCapped && y_max <= 0.0) return (weight / 2.0) / (2.0 * std::numbers::pi) + 1.0;
  return y_max;
}

double Region::bottom(double x) const {
  if (kind == Kind::Strip) return y_min;
  return std::sqrt(std::max(0.0, 1.0 - x * x));
}

bool Region::contains(double x, double y, int weight) const {
  if (std::abs(x) > half_width() + 1e-12) return false;
  return y >= bottom(x) - 1e-12 && y <= top(weight) + 1e-12;
}

std::string Region::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::FundamentalCapped:
      os << "fundamental";
      if (y_max > 0.0) os << "(ycap=" << y_max << ")";
      break;
    case Kind::Compact:
      os << "compact(ymax=" << y_max << ")";
      break;
    case Kind::Strip:
      os << "strip(a=" << width << ",ymin=" << y_min << ",ymax=" << y_max << ")";
      break;
  }
  return os.str();
}

UpperHalfPoint geodesic_midpoint(const UpperHalfPoint& z, const UpperHalfPoint& w) {
  auto lift = [](const UpperHalfPoint& p) {
    const double r2 = p.x() * p.x() + p.y() * p.y();
    return std::array<double, 3>{(r2 + 1.0) / (2.0 * p.y()), (r2 - 1.0) / (2.0 * p.y()), p.x() / p.y()};
  };
  const auto a = lift(z), b = lift(w);
  std::array<double, 3> m{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  const double norm = std::sqrt(m[0] * m[0] - m[1] * m[1] - m[2] * m[2]);
  for (double& c : m) c /= norm;
  const double y = 1.0 / (m[0] - m[1]);
  return {m[2] * y, y};
}

ScanResult supnorm_scan(int weight, const Region& region, const GridSpec& grid, const OrthonormalBasis& basis,
                        int threads) {
  if (weight % 2) throw std::invalid_argument("odd weight " + std::to_string(weight));
  if (grid.nx < 2 || grid.ny < 2) throw std::invalid_argument("scan grid must be at least 2x2");
  if (basis.weight != weight) throw std::invalid_argument("scan: basis weight mismatch");
  if (basis.dimension() == 0) throw std::invalid_argument("scan: S_" + std::to_string(weight) + " is zero");
  const double top = region.top(weight);
  const double hw = region.half_width();
  if (region.kind == Region::Kind::Strip && region.y_min < kFloor) {
    throw std::invalid_argument("scan: strip y_min below evaluation floor 0.5");
  }
  if (!(top > region.bottom(hw))) throw std::invalid_argument("scan: empty region");

  ScanResult out;
  out.weight = weight;
  out.region = region;
  out.grid = grid;
  const std::size_t n = static_cast<std::size_t>(grid.nx) * static_cast<std::size_t>(grid.ny);
  out.points.resize(n);
  for (int i = 0; i < grid.nx; ++i) {
    const double x = -hw + 2.0 * hw * i / (grid.nx - 1);
    const double lo = region.bottom(x);
    const double ratio = std::pow(top / lo, 1.0 / (grid.ny - 1));
    for (int j = 0; j < grid.ny; ++j) {
      const double y = j + 1 == grid.ny ? top : lo * std::pow(ratio, j);
      out.points[static_cast<std::size_t>(i) * grid.ny + j] = {x, y, 0.0, false};
    }
  }
  const int workers = threads > 0 ? threads : default_threads();
  parallel_for(n, workers, [&](std::size_t p) {
    auto& pt = out.points[p];
    pt.value = bergman_kernel_diag(weight, UpperHalfPoint(pt.x, pt.y), basis);
  });

  if (grid.refine) {
    // compass search in (x, log y) around the grid argmax, step halved each round
    std::size_t best = argmax_of(out.points);
    double cx = out.points[best].x, cy = out.points[best].y, cv = out.points[best].value;
    double sx = 2.0 * hw / (grid.nx - 1);
    double sl = std::log(top / region.bottom(cx)) / (grid.ny - 1);
    for (int round = 0; round < kRefineRounds; ++round) {
      sx /= 2.0;
      sl /= 2.0;
      std::vector<ScanPoint> ring;
      for (int di = -1; di <= 1; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (!di && !dj) continue;
          const double x = cx + di * sx, y = cy * std::exp(dj * sl);
          if (region.contains(x, y, weight)) ring.push_back({x, y, 0.0, true});
        }
      }
      parallel_for(ring.size(), workers, [&](std::size_t p) {
        ring[p].value = bergman_kernel_diag(weight, UpperHalfPoint(ring[p].x, ring[p].y), basis);
      });
      for (const auto& r : ring) {
        if (r.value > cv) {
          cx = r.x;
          cy = r.y;
          cv = r.value;
        }
      }
      out.points.insert(out.points.end(), ring.begin(), ring.end());
    }
  }
  const std::size_t best = argmax_of(out.points);
  out.sup_value = out.points[best].value;
  out.argmax = UpperHalfPoint(out.points[best].x, out.points[best].y);
  return out;
}

SlopeFit growth_fit(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) throw std::invalid_argument("growth_fit needs at least 3 points");
  double sx = 0, sy = 0;
  for (const auto& [k, v] : points) {
    if (!(k > 0.0) || !(v > 0.0)) throw std::invalid_argument("growth_fit: non-positive input");
    sx += std::log(k);
    sy += std::log(v);
  }
  const double n = static_cast<double>(points.size());
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0;
  for (const auto& [k, v] : points) {
    const double dx = std::log(k) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(v) - my);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("growth_fit: all k equal");
  SlopeFit fit;
  fit.points = points;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss = 0;
  for (const auto& [k, v] : points) {
    const double r = std::log(v) - (fit.intercept + fit.slope * std::log(k));
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / n);
  return fit;
}

}  // namespace supnorm
