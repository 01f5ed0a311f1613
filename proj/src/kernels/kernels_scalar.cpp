#include "ugsb/kernels/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace ugsb::kernels {
namespace {

void lincomb_scalar(double* out, const double* base, double h, const double* coefs,
                    const double* const* vecs, std::size_t nvec, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < nvec; ++j) acc += coefs[j] * vecs[j][i];
    out[i] = (base ? base[i] : 0.0) + h * acc;
  }
}

void caxpy_scalar(cplx* y, cplx a, const cplx* x, std::size_t n) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = cplx(y[i].real() + ar * xr - ai * xi, y[i].imag() + ar * xi + ai * xr);
  }
}

SquaredNorms scaled_sq_norms_scalar(const double* err_a, const double* err_b, const double* y0,
                                    const double* y1, double atol, double rtol, std::size_t n) {
  SquaredNorms s;
  for (std::size_t i = 0; i < n; ++i) {
    const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    const double ea = err_a[i] / scale;
    s.first += ea * ea;
    if (err_b) {
      const double eb = err_b[i] / scale;
      s.second += eb * eb;
    }
  }
  return s;
}

double phase_line_abs2_scalar(cplx a, cplx b, cplx c, const double* cos_tab, const double* sin_tab,
                              std::size_t n) {
  // A + B z + C z* = A + (B + C) cos + i (B - C) sin
  const cplx plus = b + c;
  const cplx minus = b - c;
  double sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double re = a.real() + plus.real() * cos_tab[k] - minus.imag() * sin_tab[k];
    const double im = a.imag() + plus.imag() * cos_tab[k] + minus.real() * sin_tab[k];
    sum += re * re + im * im;
  }
  return sum;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &lincomb_scalar, &caxpy_scalar, &scaled_sq_norms_scalar,
                                 &phase_line_abs2_scalar};
  return table;
}

}  // namespace ugsb::kernels
