#include "logse/serial_ref.hpp"

#include <numbers>

#include "logse/nonlinearity.hpp"
#include "logse/sine_spectral.hpp"

namespace logse::serial {

GridFunction second_difference(const GridFunction& u, int axis) {
  const GridSpec& s = u.spec();
  if (axis < 0 || axis >= s.dim) throw std::invalid_argument("axis out of range");
  GridFunction out(s);
  const auto e = s.extents();
  const double inv_h2 = 1.0 / (s.spacing(axis) * s.spacing(axis));
  for (int j = 0; j < e[0]; ++j)
    for (int k = 0; k < e[1]; ++k)
      for (int l = 0; l < e[2]; ++l) {
        if (!u.interior3(j, k, l)) continue;
        std::array<int, 3> lo{j, k, l}, hi{j, k, l};
        lo[axis] -= 1;
        hi[axis] += 1;
        out.at(j, k, l) = (u.at(hi[0], hi[1], hi[2]) - 2.0 * u.at(j, k, l) +
                           u.at(lo[0], lo[1], lo[2])) *
                          inv_h2;
      }
  return out;
}

GridFunction discrete_laplacian(const GridFunction& u) {
  GridFunction out(u.spec());
  for (int a = 0; a < u.spec().dim; ++a) {
    const GridFunction d = serial::second_difference(u, a);
    for (std::size_t i = 0; i < out.values().size(); ++i)
      out.values()[i] += d.values()[i];
  }
  return out;
}

GridFunction apply_f(const GridFunction& u) {
  GridFunction out(u.spec());
  for (std::size_t i = 0; i < out.values().size(); ++i)
    out.values()[i] = f_log(u.values()[i]);
  return out;
}

std::vector<Complex> dst_forward(std::span<const Complex> line) {
  const int n = static_cast<int>(line.size());
  const int J = n + 1;
  std::vector<Complex> out(n);
  for (int k = 1; k <= n; ++k) {
    Complex acc{};
    for (int j = 1; j <= n; ++j)
      acc += line[j - 1] * std::sin(k * std::numbers::pi * j / J);
    out[k - 1] = acc;
  }
  return out;
}

std::vector<Complex> dst_inverse(std::span<const Complex> coeffs) {
  const int J = static_cast<int>(coeffs.size()) + 1;
  std::vector<Complex> out = dst_forward(coeffs);
  for (auto& z : out) z *= 2.0 / J;
  return out;
}

GridFunction solve_shifted_laplacian(Complex sigma, const GridFunction& b) {
  const GridSpec& s = b.spec();
  std::array<std::vector<double>, 3> ev;
  std::array<int, 3> m{1, 1, 1};
  for (int a = 0; a < s.dim; ++a) {
    ev[a] = sine_eigenvalues(s.cells[a], s.spacing(a));
    m[a] = s.cells[a] - 1;
  }

  // copy interior, transform along each axis with the direct DST
  std::vector<Complex> w(static_cast<std::size_t>(m[0]) * m[1] * m[2]);
  std::size_t idx = 0;
  for (int j = 1; j <= m[0]; ++j)
    for (int k = (s.dim > 1 ? 1 : 0); k <= (s.dim > 1 ? m[1] : 0); ++k)
      for (int l = (s.dim > 2 ? 1 : 0); l <= (s.dim > 2 ? m[2] : 0); ++l)
        w[idx++] = b.at(j, k, l);

  const std::array<std::size_t, 3> st{static_cast<std::size_t>(m[1]) * m[2],
                                      static_cast<std::size_t>(m[2]), 1};
  auto sweep = [&](int axis, bool fwd) {
    const int o1 = axis == 0 ? 1 : 0;
    const int o2 = axis == 2 ? 1 : 2;
    std::vector<Complex> line(m[axis]);
    for (int p = 0; p < m[o1]; ++p)
      for (int q = 0; q < m[o2]; ++q) {
        const std::size_t base = p * st[o1] + q * st[o2];
        for (int t = 0; t < m[axis]; ++t) line[t] = w[base + t * st[axis]];
        const std::vector<Complex> tr = fwd ? dst_forward(line) : dst_inverse(line);
        for (int t = 0; t < m[axis]; ++t) w[base + t * st[axis]] = tr[t];
      }
  };

  for (int a = 0; a < s.dim; ++a) sweep(a, true);
  idx = 0;
  for (int j = 0; j < m[0]; ++j)
    for (int k = 0; k < m[1]; ++k)
      for (int l = 0; l < m[2]; ++l) {
        double sum = ev[0][j];
        if (s.dim > 1) sum += ev[1][k];
        if (s.dim > 2) sum += ev[2][l];
        w[idx++] /= sigma + sum;
      }
  for (int a = 0; a < s.dim; ++a) sweep(a, false);

  GridFunction out(s);
  idx = 0;
  for (int j = 1; j <= m[0]; ++j)
    for (int k = (s.dim > 1 ? 1 : 0); k <= (s.dim > 1 ? m[1] : 0); ++k)
      for (int l = (s.dim > 2 ? 1 : 0); l <= (s.dim > 2 ? m[2] : 0); ++l)
        out.at(j, k, l) = w[idx++];
  return out;
}

}  // namespace logse::serial
