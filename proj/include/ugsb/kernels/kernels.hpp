#pragma once

// Data-parallel inner loops shared by the integrators and fidelity code.
//
// Every kernel has a scalar reference implementation; an AVX2/FMA variant is
// compiled when the toolchain targets x86-64 and is selected at runtime when
// the CPU reports avx2+fma. Setting UGSB_KERNELS=scalar forces the reference
// table. All complex arrays are interleaved (re, im) std::complex<double>.

#include <complex>
#include <cstddef>
#include <string_view>

namespace ugsb::kernels {

using cplx = std::complex<double>;

struct SquaredNorms {
  double first = 0.0;
  double second = 0.0;
};

struct KernelTable {
  std::string_view name;

  // out[i] = base[i] + h * sum_j coefs[j] * vecs[j][i], over n doubles.
  // base may be null (treated as zero). out may alias base.
  void (*lincomb)(double* out, const double* base, double h, const double* coefs,
                  const double* const* vecs, std::size_t nvec, std::size_t n);

  // y[i] += a * x[i] for n complex values.
  void (*caxpy)(cplx* y, cplx a, const cplx* x, std::size_t n);

  // Sums of (err_a[i]/s_i)^2 and (err_b[i]/s_i)^2 with
  // s_i = atol + rtol * max(|y0[i]|, |y1[i]|), over n doubles. err_b may be null.
  SquaredNorms (*scaled_sq_norms)(const double* err_a, const double* err_b, const double* y0,
                                  const double* y1, double atol, double rtol, std::size_t n);

  // sum_k |A + B z_k + C conj(z_k)|^2 with z_k = cos_tab[k] + i sin_tab[k].
  double (*phase_line_abs2)(cplx a, cplx b, cplx c, const double* cos_tab, const double* sin_tab,
                            std::size_t n);
};

const KernelTable& scalar_kernels();

// Null when the AVX2 variant was not compiled or the CPU lacks avx2/fma.
const KernelTable* avx2_kernels();

// Table chosen once at first use.
const KernelTable& active_kernels();

}  // namespace ugsb::kernels
