#pragma once

#include <string_view>

#include "zeit/zernike.hpp"

namespace zeit {

enum class RasterPart { real, imag, abs };

const char* to_string(RasterPart p);
RasterPart raster_part_from_string(std::string_view s);

// n x n sampling of a scalar field over [-1,1]^2. Row 0 is y = +1 (image
// orientation), column 0 is x = -1; cells outside the closed unit disk are
// NaN and stay NaN through every output format.
struct RasterGrid {
  int resolution = 0;
  std::vector<double> values;  // row-major

  double at(int row, int col) const {
    return values[static_cast<std::size_t>(row) * resolution + col];
  }
  bool absent(int row, int col) const { return std::isnan(at(row, col)); }
  // Finite min/max; (0, 0) when every cell is absent.
  std::pair<double, double> finite_range() const;
};

// Evaluates the truncated expansion on the grid and keeps the selected
// part. resolution must be >= 2 so the grid spans the full square.
RasterGrid rasterize(const ZernikeCoefficients& coeffs, int resolution, RasterPart part);

}  // namespace zeit
