#include "zeit/raster.hpp"

#include <limits>
#include <string>

namespace zeit {

const char* to_string(RasterPart p) {
  switch (p) {
    case RasterPart::real: return "real";
    case RasterPart::imag: return "imag";
    default: return "abs";
  }
}

RasterPart raster_part_from_string(std::string_view s) {
  if (s == "real") return RasterPart::real;
  if (s == "imag") return RasterPart::imag;
  if (s == "abs") return RasterPart::abs;
  throw std::invalid_argument("unknown raster part: " + std::string(s));
}

std::pair<double, double> RasterGrid::finite_range() const {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (double v : values)
    if (!std::isnan(v)) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (lo > hi) return {0.0, 0.0};
  return {lo, hi};
}

RasterGrid rasterize(const ZernikeCoefficients& coeffs, int resolution, RasterPart part) {
  if (resolution < 2) throw std::invalid_argument("rasterize: resolution must be >= 2");
  RasterGrid grid;
  grid.resolution = resolution;
  grid.values.assign(static_cast<std::size_t>(resolution) * resolution,
                     std::numeric_limits<double>::quiet_NaN());

  // Collect in-disk points, evaluate in one parallel batch, scatter back.
  std::vector<std::pair<double, double>> points;
  std::vector<std::size_t> cells;
  const double step = 2.0 / (resolution - 1);
  for (int row = 0; row < resolution; ++row) {
    const double y = 1.0 - row * step;
    for (int col = 0; col < resolution; ++col) {
      const double x = -1.0 + col * step;
      const double r2 = x * x + y * y;
      if (r2 > 1.0) continue;
      points.emplace_back(std::sqrt(r2), std::atan2(y, x));
      cells.push_back(static_cast<std::size_t>(row) * resolution + col);
    }
  }
  std::vector<Complex> vals = eval_expansion(coeffs, points);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    switch (part) {
      case RasterPart::real: grid.values[cells[i]] = vals[i].real(); break;
      case RasterPart::imag: grid.values[cells[i]] = vals[i].imag(); break;
      case RasterPart::abs: grid.values[cells[i]] = std::abs(vals[i]); break;
    }
  }
  return grid;
}

}  // namespace zeit
