// Compiled with -mavx2 -mfma; only reached through avx2_kernels() after a
// runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "ugsb/kernels/kernels.hpp"

namespace ugsb::kernels {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void lincomb_avx2(double* out, const double* base, double h, const double* coefs,
                  const double* const* vecs, std::size_t nvec, std::size_t n) {
  const __m256d vh = _mm256_set1_pd(h);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < nvec; ++j) {
      acc = _mm256_fmadd_pd(_mm256_set1_pd(coefs[j]), _mm256_loadu_pd(vecs[j] + i), acc);
    }
    const __m256d b = base ? _mm256_loadu_pd(base + i) : _mm256_setzero_pd();
    _mm256_storeu_pd(out + i, _mm256_fmadd_pd(vh, acc, b));
  }
  for (; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < nvec; ++j) acc += coefs[j] * vecs[j][i];
    out[i] = (base ? base[i] : 0.0) + h * acc;
  }
}

void caxpy_avx2(cplx* y, cplx a, const cplx* x, std::size_t n) {
  auto* yd = reinterpret_cast<double*>(y);
  const auto* xd = reinterpret_cast<const double*>(x);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  // two complex values per register: [r0 i0 r1 i1]
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d xs = _mm256_permute_pd(xv, 0b0101);  // [i0 r0 i1 r1]
    // ar*x + (-ai*xi, +ai*xr)
    const __m256d t = _mm256_mul_pd(ai, xs);
    const __m256d prod = _mm256_fmaddsub_pd(ar, xv, t);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(_mm256_loadu_pd(yd + 2 * i), prod));
  }
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] = cplx(y[i].real() + a.real() * xr - a.imag() * xi,
                y[i].imag() + a.real() * xi + a.imag() * xr);
  }
}

SquaredNorms scaled_sq_norms_avx2(const double* err_a, const double* err_b, const double* y0,
                                  const double* y1, double atol, double rtol, std::size_t n) {
  const __m256d vatol = _mm256_set1_pd(atol);
  const __m256d vrtol = _mm256_set1_pd(rtol);
  const __m256d absmask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  __m256d sa = _mm256_setzero_pd();
  __m256d sb = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d m = _mm256_max_pd(_mm256_and_pd(_mm256_loadu_pd(y0 + i), absmask),
                                    _mm256_and_pd(_mm256_loadu_pd(y1 + i), absmask));
    const __m256d scale = _mm256_fmadd_pd(vrtol, m, vatol);
    const __m256d ea = _mm256_div_pd(_mm256_loadu_pd(err_a + i), scale);
    sa = _mm256_fmadd_pd(ea, ea, sa);
    if (err_b) {
      const __m256d eb = _mm256_div_pd(_mm256_loadu_pd(err_b + i), scale);
      sb = _mm256_fmadd_pd(eb, eb, sb);
    }
  }
  SquaredNorms s{hsum(sa), hsum(sb)};
  for (; i < n; ++i) {
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

double phase_line_abs2_avx2(cplx a, cplx b, cplx c, const double* cos_tab, const double* sin_tab,
                            std::size_t n) {
  const cplx plus = b + c;
  const cplx minus = b - c;
  const __m256d are = _mm256_set1_pd(a.real());
  const __m256d aim = _mm256_set1_pd(a.imag());
  const __m256d pre = _mm256_set1_pd(plus.real());
  const __m256d pim = _mm256_set1_pd(plus.imag());
  const __m256d mre = _mm256_set1_pd(minus.real());
  const __m256d nmim = _mm256_set1_pd(-minus.imag());
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d cs = _mm256_loadu_pd(cos_tab + k);
    const __m256d sn = _mm256_loadu_pd(sin_tab + k);
    const __m256d re = _mm256_fmadd_pd(nmim, sn, _mm256_fmadd_pd(pre, cs, are));
    const __m256d im = _mm256_fmadd_pd(mre, sn, _mm256_fmadd_pd(pim, cs, aim));
    acc = _mm256_fmadd_pd(re, re, _mm256_fmadd_pd(im, im, acc));
  }
  double sum = hsum(acc);
  for (; k < n; ++k) {
    const double re = a.real() + plus.real() * cos_tab[k] - minus.imag() * sin_tab[k];
    const double im = a.imag() + plus.imag() * cos_tab[k] + minus.real() * sin_tab[k];
    sum += re * re + im * im;
  }
  return sum;
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2", &lincomb_avx2, &caxpy_avx2, &scaled_sq_norms_avx2,
                                 &phase_line_abs2_avx2};
  return table;
}

}  // namespace ugsb::kernels
