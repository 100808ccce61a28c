#pragma once

#include <filesystem>

#include "zeit/inversion.hpp"
#include "zeit/raster.hpp"
#include "zeit/simulate.hpp"

// JSON interchange (full double precision, deterministic bytes) plus the
// CSV/PGM raster exports. Schemas are documented in the README.
namespace zeit::io {

enum class FileKind { coefficients, data_matrix, diagonal_data, boundary_samples, solution, unknown };

// Inspects the top-level keys of a JSON file without full validation.
FileKind peek_kind(const std::filesystem::path& file);

void save(const ZernikeCoefficients& coeffs, const std::filesystem::path& file);
void save(const DataMatrix& data, const std::filesystem::path& file);
void save(const DiagonalData& diag, const std::filesystem::path& file);
void save(const BoundarySamples& samples, const std::filesystem::path& file);
void save(const RegularizedSolution& sol, const std::filesystem::path& file);

ZernikeCoefficients load_coefficients(const std::filesystem::path& file);
DataMatrix load_data_matrix(const std::filesystem::path& file);
DiagonalData load_diagonal_data(const std::filesystem::path& file);
BoundarySamples load_boundary_samples(const std::filesystem::path& file);
RegularizedSolution load_solution(const std::filesystem::path& file);

// Noise bookkeeping written next to a noisy matrix.
void save_noise_meta(double delta, double sigma, std::uint64_t seed,
                     const std::filesystem::path& file);
double load_delta(const std::filesystem::path& file);

// Raster exports: CSV with "nan" for cells outside the disk; binary 8-bit
// PGM with 0 reserved for absent cells and data scaled linearly onto
// 1..255, scale recorded in a JSON sidecar.
void write_csv(const RasterGrid& grid, const std::filesystem::path& file);
void write_pgm(const RasterGrid& grid, RasterPart part, const std::filesystem::path& pgm_file,
               const std::filesystem::path& sidecar_file);

}  // namespace zeit::io
