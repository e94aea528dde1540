#include "logse/sine_spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <numbers>
#include <sstream>

namespace logse {

std::vector<double> sine_eigenvalues(int J, double h) {
  if (J < 2) throw std::invalid_argument("sine_eigenvalues: requires J >= 2");
  if (!(h > 0.0)) throw std::invalid_argument("sine_eigenvalues: requires h > 0");
  std::vector<double> ev(J - 1);
  const double c = 4.0 / (h * h);
  for (int k = 1; k < J; ++k) {
    const double s = std::sin(k * std::numbers::pi / (2.0 * J));
    ev[k - 1] = -c * s * s;
  }
  return ev;
}

struct SineTransform::Impl {
  int J = 0;
  fftw_plan plan = nullptr;

  explicit Impl(int J_) : J(J_) {
    std::vector<double> dummy(J - 1, 0.0);
    // FFTW_RODFT00 of length J-1 computes 2 * sum x_j sin(k pi j / J);
    // FFTW_UNALIGNED lets the plan run on arbitrary caller buffers
    plan = fftw_plan_r2r_1d(J - 1, dummy.data(), dummy.data(), FFTW_RODFT00,
                            FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (!plan) throw std::runtime_error("SineTransform: fftw plan creation failed");
  }
  ~Impl() {
    if (plan) fftw_destroy_plan(plan);
  }
};

SineTransform::SineTransform(int J) {
  if (J < 2) throw std::invalid_argument("SineTransform: requires J >= 2");
  impl_ = std::make_unique<Impl>(J);
}

SineTransform::~SineTransform() = default;
SineTransform::SineTransform(SineTransform&&) noexcept = default;
SineTransform& SineTransform::operator=(SineTransform&&) noexcept = default;

int SineTransform::cells() const { return impl_->J; }
int SineTransform::length() const { return impl_->J - 1; }

namespace {

void check_length(std::size_t got, int want, const char* who) {
  if (got != static_cast<std::size_t>(want)) {
    std::ostringstream os;
    os << who << ": line length " << got << ", expected " << want;
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

void SineTransform::forward(std::span<double> line) const {
  check_length(line.size(), length(), "SineTransform::forward");
  fftw_execute_r2r(impl_->plan, line.data(), line.data());
  for (auto& x : line) x *= 0.5;
}

void SineTransform::inverse(std::span<double> line) const {
  check_length(line.size(), length(), "SineTransform::inverse");
  fftw_execute_r2r(impl_->plan, line.data(), line.data());
  const double s = 1.0 / impl_->J;
  for (auto& x : line) x *= s;
}

void SineTransform::forward(std::span<Complex> line) const {
  check_length(line.size(), length(), "SineTransform::forward");
  const int n = length();
  std::vector<double> re(n), im(n);
  for (int i = 0; i < n; ++i) {
    re[i] = line[i].real();
    im[i] = line[i].imag();
  }
  forward(std::span<double>(re));
  forward(std::span<double>(im));
  for (int i = 0; i < n; ++i) line[i] = Complex(re[i], im[i]);
}

void SineTransform::inverse(std::span<Complex> line) const {
  check_length(line.size(), length(), "SineTransform::inverse");
  const int n = length();
  std::vector<double> re(n), im(n);
  for (int i = 0; i < n; ++i) {
    re[i] = line[i].real();
    im[i] = line[i].imag();
  }
  inverse(std::span<double>(re));
  inverse(std::span<double>(im));
  for (int i = 0; i < n; ++i) line[i] = Complex(re[i], im[i]);
}

std::vector<Complex> dst_forward(std::span<const Complex> line) {
  if (line.empty()) throw std::invalid_argument("dst_forward: empty line");
  SineTransform tx(static_cast<int>(line.size()) + 1);
  std::vector<Complex> out(line.begin(), line.end());
  tx.forward(std::span<Complex>(out));
  return out;
}

std::vector<Complex> dst_inverse(std::span<const Complex> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("dst_inverse: empty line");
  SineTransform tx(static_cast<int>(coeffs.size()) + 1);
  std::vector<Complex> out(coeffs.begin(), coeffs.end());
  tx.inverse(std::span<Complex>(out));
  return out;
}

ShiftedLaplacianSolver::ShiftedLaplacianSolver(const GridSpec& spec)
    : spec_(spec) {
  for (int a = 0; a < spec.dim; ++a) {
    tx_[a] = std::make_unique<SineTransform>(spec.cells[a]);
    m_[a] = spec.cells[a] - 1;
  }
  std::array<std::vector<double>, 3> ev;
  for (int a = 0; a < spec.dim; ++a)
    ev[a] = sine_eigenvalues(spec.cells[a], spec.spacing(a));
  eig_sum_.resize(static_cast<std::size_t>(m_[0]) * m_[1] * m_[2]);
  std::size_t idx = 0;
  for (int j = 0; j < m_[0]; ++j)
    for (int k = 0; k < m_[1]; ++k)
      for (int l = 0; l < m_[2]; ++l) {
        double s = ev[0][j];
        if (spec.dim > 1) s += ev[1][k];
        if (spec.dim > 2) s += ev[2][l];
        eig_sum_[idx++] = s;
      }
}

void ShiftedLaplacianSolver::transform_axis(std::vector<Complex>& w, int axis,
                                            bool forward_dir) const {
  const std::array<std::size_t, 3> st{static_cast<std::size_t>(m_[1]) * m_[2],
                                      static_cast<std::size_t>(m_[2]), 1};
  const int o1 = axis == 0 ? 1 : 0;
  const int o2 = axis == 2 ? 1 : 2;
  const int len = m_[axis];
  const SineTransform& tx = *tx_[axis];
  Complex* data = w.data();
#pragma omp parallel for collapse(2)
  for (int p = 0; p < m_[o1]; ++p) {
    for (int q = 0; q < m_[o2]; ++q) {
      std::vector<double> re(len), im(len);
      const std::size_t base = p * st[o1] + q * st[o2];
      for (int t = 0; t < len; ++t) {
        const Complex z = data[base + t * st[axis]];
        re[t] = z.real();
        im[t] = z.imag();
      }
      if (forward_dir) {
        tx.forward(std::span<double>(re));
        tx.forward(std::span<double>(im));
      } else {
        tx.inverse(std::span<double>(re));
        tx.inverse(std::span<double>(im));
      }
      for (int t = 0; t < len; ++t)
        data[base + t * st[axis]] = Complex(re[t], im[t]);
    }
  }
}

GridFunction ShiftedLaplacianSolver::solve(Complex sigma,
                                           const GridFunction& b) const {
  if (!(b.spec() == spec_))
    throw std::invalid_argument("ShiftedLaplacianSolver: grid spec mismatch");

  std::vector<Complex> w(eig_sum_.size());
  std::size_t idx = 0;
  for (int j = 1; j <= m_[0]; ++j)
    for (int k = (spec_.dim > 1 ? 1 : 0); k <= (spec_.dim > 1 ? m_[1] : 0); ++k)
      for (int l = (spec_.dim > 2 ? 1 : 0); l <= (spec_.dim > 2 ? m_[2] : 0); ++l)
        w[idx++] = b.at(j, k, l);

  for (int a = 0; a < spec_.dim; ++a) transform_axis(w, a, true);

  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(w.size());
  std::ptrdiff_t bad = -1;
#pragma omp parallel for
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const Complex denom = sigma + eig_sum_[i];
    if (std::abs(denom) < 1e-300) {
#pragma omp critical
      bad = i;
      continue;
    }
    w[i] /= denom;
  }
  if (bad >= 0) {
    std::ostringstream os;
    os << "ShiftedLaplacianSolver: singular multiplier at mode " << bad
       << " (sigma + eigenvalue sum = " << (sigma + eig_sum_[bad]) << ")";
    throw std::runtime_error(os.str());
  }

  for (int a = 0; a < spec_.dim; ++a) transform_axis(w, a, false);

  GridFunction out(spec_);
  idx = 0;
  for (int j = 1; j <= m_[0]; ++j)
    for (int k = (spec_.dim > 1 ? 1 : 0); k <= (spec_.dim > 1 ? m_[1] : 0); ++k)
      for (int l = (spec_.dim > 2 ? 1 : 0); l <= (spec_.dim > 2 ? m_[2] : 0); ++l)
        out.at(j, k, l) = w[idx++];
  return out;
}

GridFunction solve_shifted_laplacian(Complex sigma, const GridFunction& b) {
  return ShiftedLaplacianSolver(b.spec()).solve(sigma, b);
}

}  // namespace logse
