#include "logse/grid.hpp"

#include <algorithm>
#include <limits>

namespace logse {

GridSpec GridSpec::make(int dim, std::span<const double> lo,
                        std::span<const double> hi,
                        std::span<const int> cells) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("GridSpec: dim must be 1, 2 or 3");
  if (lo.size() < static_cast<std::size_t>(dim) ||
      hi.size() < static_cast<std::size_t>(dim) ||
      cells.size() < static_cast<std::size_t>(dim))
    throw std::invalid_argument("GridSpec: per-axis arrays shorter than dim");
  GridSpec s;
  s.dim = dim;
  for (int i = 0; i < dim; ++i) {
    if (!(lo[i] < hi[i])) throw std::invalid_argument("GridSpec: requires a_i < b_i");
    if (cells[i] < 2) throw std::invalid_argument("GridSpec: requires J_i >= 2");
    s.lo[i] = lo[i];
    s.hi[i] = hi[i];
    s.cells[i] = cells[i];
  }
  return s;
}

GridSpec GridSpec::interval(double a, double b, int J) {
  const double lo[] = {a};
  const double hi[] = {b};
  const int c[] = {J};
  return make(1, lo, hi, c);
}

GridSpec GridSpec::square(double a, double b, int J) {
  const double lo[] = {a, a};
  const double hi[] = {b, b};
  const int c[] = {J, J};
  return make(2, lo, hi, c);
}

GridSpec GridSpec::cube(double a, double b, int J) {
  const double lo[] = {a, a, a};
  const double hi[] = {b, b, b};
  const int c[] = {J, J, J};
  return make(3, lo, hi, c);
}

double GridSpec::max_spacing() const {
  double h = 0.0;
  for (int i = 0; i < dim; ++i) h = std::max(h, spacing(i));
  return h;
}

double GridSpec::volume() const {
  double v = 1.0;
  for (int i = 0; i < dim; ++i) v *= hi[i] - lo[i];
  return v;
}

std::size_t GridSpec::total_nodes() const {
  std::size_t n = 1;
  for (int i = 0; i < dim; ++i) n *= static_cast<std::size_t>(cells[i] + 1);
  return n;
}

std::size_t GridSpec::interior_nodes() const {
  std::size_t n = 1;
  for (int i = 0; i < dim; ++i) n *= static_cast<std::size_t>(cells[i] - 1);
  return n;
}

std::array<int, 3> GridSpec::extents() const {
  std::array<int, 3> e{1, 1, 1};
  for (int i = 0; i < dim; ++i) e[i] = cells[i] + 1;
  return e;
}

GridFunction::GridFunction(const GridSpec& spec)
    : spec_(spec), ext_(spec.extents()), v_(spec.total_nodes(), Complex{}) {}

void GridFunction::zero_boundary() {
  const auto e = ext_;
  for (int j = 0; j < e[0]; ++j)
    for (int k = 0; k < e[1]; ++k)
      for (int l = 0; l < e[2]; ++l)
        if (!interior3(j, k, l)) v_[index(j, k, l)] = Complex{};
}

bool GridFunction::boundary_is_zero() const {
  const auto e = ext_;
  for (int j = 0; j < e[0]; ++j)
    for (int k = 0; k < e[1]; ++k)
      for (int l = 0; l < e[2]; ++l)
        if (!interior3(j, k, l) && v_[index(j, k, l)] != Complex{}) return false;
  return true;
}

bool GridFunction::is_finite() const {
  for (const auto& z : v_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const auto& z : v_) m = std::max(m, std::abs(z));
  return m;
}

namespace {

void check_axis(const GridSpec& s, int axis) {
  if (axis < 0 || axis >= s.dim) throw std::invalid_argument("axis out of range");
}

std::array<std::size_t, 3> strides(const std::array<int, 3>& ext) {
  return {static_cast<std::size_t>(ext[1]) * ext[2],
          static_cast<std::size_t>(ext[2]), 1};
}

}  // namespace

GridFunction second_difference(const GridFunction& u, int axis) {
  const GridSpec& s = u.spec();
  check_axis(s, axis);
  GridFunction out(s);
  const auto e = s.extents();
  const auto st = strides(e);
  const double inv_h2 = 1.0 / (s.spacing(axis) * s.spacing(axis));
  const std::size_t sa = st[axis];
  const auto* in = u.values().data();
  auto* ov = out.values().data();
#pragma omp parallel for collapse(2)
  for (int j = 0; j < e[0]; ++j) {
    for (int k = 0; k < e[1]; ++k) {
      for (int l = 0; l < e[2]; ++l) {
        if (!u.interior3(j, k, l)) continue;
        const std::size_t idx = u.index(j, k, l);
        ov[idx] = (in[idx + sa] - 2.0 * in[idx] + in[idx - sa]) * inv_h2;
      }
    }
  }
  return out;
}

GridFunction discrete_laplacian(const GridFunction& u) {
  const GridSpec& s = u.spec();
  GridFunction out(s);
  const auto e = s.extents();
  const auto st = strides(e);
  std::array<double, 3> inv_h2{};
  for (int a = 0; a < s.dim; ++a)
    inv_h2[a] = 1.0 / (s.spacing(a) * s.spacing(a));
  const auto* in = u.values().data();
  auto* ov = out.values().data();
  const int dim = s.dim;
#pragma omp parallel for collapse(2)
  for (int j = 0; j < e[0]; ++j) {
    for (int k = 0; k < e[1]; ++k) {
      for (int l = 0; l < e[2]; ++l) {
        if (!u.interior3(j, k, l)) continue;
        const std::size_t idx = u.index(j, k, l);
        Complex acc{};
        for (int a = 0; a < dim; ++a)
          acc += (in[idx + st[a]] - 2.0 * in[idx] + in[idx - st[a]]) * inv_h2[a];
        ov[idx] = acc;
      }
    }
  }
  return out;
}

StaggeredField forward_difference(const GridFunction& u, int axis) {
  const GridSpec& s = u.spec();
  check_axis(s, axis);
  StaggeredField f;
  f.axis = axis;
  for (int a = 0; a < s.dim; ++a) f.extents[a] = s.cells[a];
  f.values.assign(static_cast<std::size_t>(f.extents[0]) * f.extents[1] *
                      f.extents[2],
                  Complex{});
  const double inv_h = 1.0 / s.spacing(axis);
  const auto st = strides(s.extents());
  const std::size_t sa = st[axis];
  const auto* in = u.values().data();
#pragma omp parallel for collapse(2)
  for (int j = 0; j < f.extents[0]; ++j) {
    for (int k = 0; k < f.extents[1]; ++k) {
      for (int l = 0; l < f.extents[2]; ++l) {
        const std::size_t src = u.index(j, k, l);
        f.values[f.index(j, k, l)] = (in[src + sa] - in[src]) * inv_h;
      }
    }
  }
  return f;
}

Complex inner_product(const GridFunction& u, const GridFunction& v) {
  if (!(u.spec() == v.spec()))
    throw std::invalid_argument("inner_product: grid spec mismatch");
  const GridSpec& s = u.spec();
  double scale = 1.0;
  for (int a = 0; a < s.dim; ++a) scale *= s.spacing(a);
  const auto e = s.extents();
  // fixed-order summation: result is independent of thread count
  Complex acc{};
  for (int j = 0; j < e[0]; ++j)
    for (int k = 0; k < e[1]; ++k)
      for (int l = 0; l < e[2]; ++l)
        if (u.interior3(j, k, l))
          acc += u.at(j, k, l) * std::conj(v.at(j, k, l));
  return scale * acc;
}

Complex staggered_inner_product(const StaggeredField& du,
                                const StaggeredField& dv,
                                const GridSpec& spec) {
  if (du.axis != dv.axis || du.extents != dv.extents)
    throw std::invalid_argument("staggered_inner_product: field mismatch");
  double scale = 1.0;
  for (int a = 0; a < spec.dim; ++a) scale *= spec.spacing(a);
  Complex acc{};
  for (std::size_t i = 0; i < du.values.size(); ++i)
    acc += du.values[i] * std::conj(dv.values[i]);
  return scale * acc;
}

double norm_l2(const GridFunction& u) {
  return std::sqrt(std::abs(inner_product(u, u)));
}

double norm_lr(const GridFunction& u, double r) {
  // r in (0, 1) is a quasi-norm; still well defined on grid functions
  if (!(r > 0.0)) throw std::invalid_argument("norm_lr: requires r > 0");
  const GridSpec& s = u.spec();
  double scale = 1.0;
  for (int a = 0; a < s.dim; ++a) scale *= s.spacing(a);
  const auto e = s.extents();
  double acc = 0.0;
  for (int j = 0; j < e[0]; ++j)
    for (int k = 0; k < e[1]; ++k)
      for (int l = 0; l < e[2]; ++l)
        if (u.interior3(j, k, l))
          acc += std::pow(std::abs(u.at(j, k, l)), r);
  return std::pow(scale * acc, 1.0 / r);
}

double seminorm_h1(const GridFunction& u) {
  double acc = 0.0;
  for (int a = 0; a < u.spec().dim; ++a) {
    const StaggeredField d = forward_difference(u, a);
    acc += staggered_inner_product(d, d, u.spec()).real();
  }
  return std::sqrt(acc);
}

double seminorm_h2(const GridFunction& u) {
  return norm_l2(discrete_laplacian(u));
}

double norm_linf(const GridFunction& u) {
  const auto e = u.spec().extents();
  double m = 0.0;
  for (int j = 0; j < e[0]; ++j)
    for (int k = 0; k < e[1]; ++k)
      for (int l = 0; l < e[2]; ++l)
        if (u.interior3(j, k, l)) m = std::max(m, std::abs(u.at(j, k, l)));
  return m;
}

double norm(const GridFunction& u, NormKind kind, double r) {
  switch (kind) {
    case NormKind::L2: return norm_l2(u);
    case NormKind::Lr: return norm_lr(u, r);
    case NormKind::SemiH1: return seminorm_h1(u);
    case NormKind::SemiH2: return seminorm_h2(u);
    case NormKind::Linf: return norm_linf(u);
  }
  throw std::invalid_argument("norm: unknown kind");
}

GridFunction lincomb(Complex a, const GridFunction& u, Complex b,
                     const GridFunction& v) {
  if (!(u.spec() == v.spec()))
    throw std::invalid_argument("lincomb: grid spec mismatch");
  GridFunction out(u.spec());
  const auto* pu = u.values().data();
  const auto* pv = v.values().data();
  auto* po = out.values().data();
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.values().size());
#pragma omp parallel for
  for (std::ptrdiff_t i = 0; i < n; ++i) po[i] = a * pu[i] + b * pv[i];
  return out;
}

}  // namespace logse
