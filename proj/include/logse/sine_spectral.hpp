#pragma once

#include <memory>

#include "logse/grid.hpp"

namespace logse {

/// Eigenvalues of the Dirichlet second-difference operator on J cells:
/// lambda_k = -(4/h^2) sin^2(k pi / (2J)), k = 1..J-1.
std::vector<double> sine_eigenvalues(int J, double h);

/// Sine transform on interior lines of length J-1.
///
/// forward:  c_k = sum_{j=1}^{J-1} x_j sin(k pi j / J)
/// inverse:  x_j = (2/J) sum_k c_k sin(k pi j / J)
/// so inverse(forward(x)) == x up to roundoff. Backed by an FFTW DST-I
/// plan (O(J log J) for any J). Plan creation is not thread safe;
/// execution on distinct buffers is.
class SineTransform {
 public:
  explicit SineTransform(int J);
  ~SineTransform();
  SineTransform(SineTransform&&) noexcept;
  SineTransform& operator=(SineTransform&&) noexcept;
  SineTransform(const SineTransform&) = delete;
  SineTransform& operator=(const SineTransform&) = delete;

  int cells() const;
  int length() const;  // J - 1

  void forward(std::span<double> line) const;
  void inverse(std::span<double> line) const;
  void forward(std::span<Complex> line) const;
  void inverse(std::span<Complex> line) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::vector<Complex> dst_forward(std::span<const Complex> line);
std::vector<Complex> dst_inverse(std::span<const Complex> coeffs);

/// Direct solver for (sigma I + discrete Laplacian) w = b on X_h^0 via
/// per-axis sine transforms and a pointwise divide. Caches transform
/// plans and the per-node eigenvalue sums; reuse one instance across
/// time steps.
class ShiftedLaplacianSolver {
 public:
  explicit ShiftedLaplacianSolver(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }

  GridFunction solve(Complex sigma, const GridFunction& b) const;

 private:
  GridSpec spec_;
  std::array<std::unique_ptr<SineTransform>, 3> tx_;
  std::array<int, 3> m_{1, 1, 1};    // interior extents J_i - 1
  std::vector<double> eig_sum_;      // per interior node, row-major

  void transform_axis(std::vector<Complex>& w, int axis, bool forward_dir) const;
};

/// One-shot convenience wrapper (builds plans every call).
GridFunction solve_shifted_laplacian(Complex sigma, const GridFunction& b);

}  // namespace logse
