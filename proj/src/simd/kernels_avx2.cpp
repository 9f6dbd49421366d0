// Compiled with -mavx2 -mfma; only reached after the runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "cdk/simd/kernels.hpp"

namespace cdk::simd::avx2 {

namespace {

inline __m256d abs_pd(__m256d v) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v); }

inline double hmax(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_max_pd(lo, hi);
  return std::max(_mm_cvtsd_f64(m), _mm_cvtsd_f64(_mm_unpackhi_pd(m, m)));
}

}  // namespace

void cgemm(std::size_t n, const Complex* a, const Complex* b, Complex* c) {
  std::fill(c, c + n * n, Complex(0.0, 0.0));
  // Two complex numbers per register: [re0, im0, re1, im1].
  const std::size_t body = n & ~std::size_t{1};
  for (std::size_t i = 0; i < n; ++i) {
    double* ci = reinterpret_cast<double*>(c + i * n);
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex(0.0, 0.0)) continue;
      const __m256d ar = _mm256_set1_pd(aik.real());
      const __m256d ai = _mm256_set1_pd(aik.imag());
      const double* bk = reinterpret_cast<const double*>(b + k * n);
      std::size_t j = 0;
      for (; j < body; j += 2) {
        const __m256d bv = _mm256_loadu_pd(bk + 2 * j);
        const __m256d bswap = _mm256_permute_pd(bv, 0b0101);
        // even lanes: ar*br - ai*bi, odd lanes: ar*bi + ai*br
        const __m256d prod = _mm256_fmaddsub_pd(ar, bv, _mm256_mul_pd(ai, bswap));
        _mm256_storeu_pd(ci + 2 * j, _mm256_add_pd(_mm256_loadu_pd(ci + 2 * j), prod));
      }
      for (; j < n; ++j) {
        const double br = bk[2 * j], bi = bk[2 * j + 1];
        ci[2 * j] += aik.real() * br - aik.imag() * bi;
        ci[2 * j + 1] += aik.real() * bi + aik.imag() * br;
      }
    }
  }
}

void axpy(std::size_t len, double alpha, const double* x, double* y) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4)
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  for (; i < len; ++i) y[i] += alpha * x[i];
}

double scaled_error(std::size_t len, const double* err, const double* y0, const double* y1, double atol, double rtol) {
  const __m256d at = _mm256_set1_pd(atol);
  const __m256d rt = _mm256_set1_pd(rtol);
  __m256d worst = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4) {
    const __m256d mag = _mm256_max_pd(abs_pd(_mm256_loadu_pd(y0 + i)), abs_pd(_mm256_loadu_pd(y1 + i)));
    const __m256d scale = _mm256_fmadd_pd(rt, mag, at);
    worst = _mm256_max_pd(worst, _mm256_div_pd(abs_pd(_mm256_loadu_pd(err + i)), scale));
  }
  double out = hmax(worst);
  for (; i < len; ++i) {
    const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    out = std::max(out, std::abs(err[i]) / scale);
  }
  return out;
}

}  // namespace cdk::simd::avx2
