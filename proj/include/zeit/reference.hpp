#pragma once

#include "zeit/simulate.hpp"

// Serial reference implementations of the parallel/FFT kernels. They follow
// the defining formulas term by term, with no grouping, no FFT and no
// threading, and exist so the optimized paths can be checked against them
// (and timed against them in the benchmark tool).
namespace zeit::ref {

// Plain term-by-term expansion sum via zernike_eval.
std::vector<Complex> eval_expansion_naive(const ZernikeCoefficients& coeffs,
                                          std::span<const std::pair<double, double>> points);

// out[n] = sum_l in[l] exp(-2 pi i n l / L), O(L^2).
std::vector<Complex> dft_direct(std::span<const Complex> in);

// Trapezoidal inner products <g_m, f_n> as explicit double sums.
DataMatrix data_matrix_direct(const BoundarySamples& samples);

// Boundary potential simulation with direct DFTs and std::polar synthesis.
BoundarySamples simulate_boundary_potentials_direct(const DiskInclusion& inclusion, int M, int N);

// Dense row-major M^2 x M^2 materialization of the block-diagonal operator
// (blocks j = -(M-1)..M-1 in order). Oracle for SVD and residual checks;
// the library itself never builds this.
std::vector<double> dense_operator(int M);

// y = A x for the dense materialization above.
std::vector<Complex> apply_dense(const std::vector<double>& dense, std::span<const Complex> x);

}  // namespace zeit::ref
