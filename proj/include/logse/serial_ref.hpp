#pragma once

#include "logse/grid.hpp"

namespace logse::serial {

// Plain single-threaded reference kernels. These mirror the parallel
// implementations one loop at a time and are used as oracles in tests
// and in the kernel benchmark; the DST here is the direct O(J^2)
// summation the fast transform is checked against.

GridFunction second_difference(const GridFunction& u, int axis);
GridFunction discrete_laplacian(const GridFunction& u);
GridFunction apply_f(const GridFunction& u);

std::vector<Complex> dst_forward(std::span<const Complex> line);
std::vector<Complex> dst_inverse(std::span<const Complex> coeffs);

GridFunction solve_shifted_laplacian(Complex sigma, const GridFunction& b);

}  // namespace logse::serial
