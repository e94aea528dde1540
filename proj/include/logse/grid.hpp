#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace logse {

using Complex = std::complex<double>;

/// Uniform tensor grid on a rectangular domain, dimensions 1-3.
/// Node j along axis i sits at lo[i] + j*spacing(i), j = 0..cells[i].
struct GridSpec {
  int dim = 1;
  std::array<double, 3> lo{};
  std::array<double, 3> hi{};
  std::array<int, 3> cells{};  // number of cells J_i per axis

  static GridSpec make(int dim, std::span<const double> lo,
                       std::span<const double> hi, std::span<const int> cells);
  static GridSpec interval(double a, double b, int J);
  static GridSpec square(double a, double b, int J);
  static GridSpec cube(double a, double b, int J);

  double spacing(int axis) const { return (hi[axis] - lo[axis]) / cells[axis]; }
  double max_spacing() const;
  int nodes(int axis) const { return cells[axis] + 1; }
  double coord(int axis, int j) const { return lo[axis] + j * spacing(axis); }
  double volume() const;

  std::size_t total_nodes() const;
  std::size_t interior_nodes() const;

  // Storage extents padded to 3 axes (missing axes have extent 1);
  // axis 0 is slowest, the last real axis is fastest.
  std::array<int, 3> extents() const;

  bool operator==(const GridSpec&) const = default;
};

/// Complex field over the full node lattice with zero values on the
/// boundary node set (membership in X_h^0). Layout is row-major with
/// the last axis fastest.
class GridFunction {
 public:
  explicit GridFunction(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }

  std::size_t index(int j, int k = 0, int l = 0) const {
    return (static_cast<std::size_t>(j) * ext_[1] + k) * ext_[2] + l;
  }
  Complex& at(int j, int k = 0, int l = 0) { return v_[index(j, k, l)]; }
  const Complex& at(int j, int k = 0, int l = 0) const {
    return v_[index(j, k, l)];
  }

  std::span<Complex> values() { return v_; }
  std::span<const Complex> values() const { return v_; }

  /// Evaluates f at every interior node coordinate; boundary stays zero.
  /// f takes std::array<double,3> (unused axes zero) and returns Complex.
  template <typename F>
  void fill_interior(F&& f) {
    const auto& s = spec_;
    const auto e = ext_;
#pragma omp parallel for collapse(2)
    for (int j = 0; j < e[0]; ++j) {
      for (int k = 0; k < e[1]; ++k) {
        for (int l = 0; l < e[2]; ++l) {
          if (!interior3(j, k, l)) continue;
          std::array<double, 3> x{s.coord(0, j), 0.0, 0.0};
          if (s.dim > 1) x[1] = s.coord(1, k);
          if (s.dim > 2) x[2] = s.coord(2, l);
          v_[index(j, k, l)] = f(x);
        }
      }
    }
  }

  bool interior3(int j, int k, int l) const {
    if (j < 1 || j > spec_.cells[0] - 1) return false;
    if (spec_.dim > 1 && (k < 1 || k > spec_.cells[1] - 1)) return false;
    if (spec_.dim > 2 && (l < 1 || l > spec_.cells[2] - 1)) return false;
    return true;
  }

  void zero_boundary();
  bool boundary_is_zero() const;
  bool is_finite() const;
  double max_abs() const;

 private:
  GridSpec spec_;
  std::array<int, 3> ext_;
  std::vector<Complex> v_;
};

// --- finite difference operators (outputs stay in X_h^0) ---

/// Central second difference along one axis, zero on boundary nodes.
GridFunction second_difference(const GridFunction& u, int axis);

/// Sum of second differences over all axes.
GridFunction discrete_laplacian(const GridFunction& u);

/// Forward difference along one axis, defined on cell offsets 0..J-1
/// along the axis and node offsets 0..J_b-1 along the other axes.
struct StaggeredField {
  int axis = 0;
  std::array<int, 3> extents{1, 1, 1};
  std::vector<Complex> values;
  std::size_t index(int j, int k = 0, int l = 0) const {
    return (static_cast<std::size_t>(j) * extents[1] + k) * extents[2] + l;
  }
};
StaggeredField forward_difference(const GridFunction& u, int axis);

/// Scaled interior sum h_1...h_d sum u conj(v); specs must match.
Complex inner_product(const GridFunction& u, const GridFunction& v);

/// <delta+_a u, delta+_a v>_h summed per the forward-difference index
/// ranges (boundary-adjacent offsets included).
Complex staggered_inner_product(const StaggeredField& du,
                                const StaggeredField& dv, const GridSpec& spec);

enum class NormKind { L2, Lr, SemiH1, SemiH2, Linf };

double norm(const GridFunction& u, NormKind kind, double r = 2.0);

double norm_l2(const GridFunction& u);
double norm_lr(const GridFunction& u, double r);
double seminorm_h1(const GridFunction& u);
double seminorm_h2(const GridFunction& u);
double norm_linf(const GridFunction& u);

// --- small arithmetic helpers ---

/// a*u + b*v as a new grid function.
GridFunction lincomb(Complex a, const GridFunction& u, Complex b,
                     const GridFunction& v);

}  // namespace logse
