#include <algorithm>
#include <cmath>

#include "cdk/simd/kernels.hpp"

namespace cdk::simd::base {

void cgemm(std::size_t n, const Complex* a, const Complex* b, Complex* c) {
  std::fill(c, c + n * n, Complex(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    Complex* ci = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* bk = b + k * n;
      for (std::size_t j = 0; j < n; ++j) {
        // explicit form keeps the rounding identical to the vector path modulo FMA
        const double re = aik.real() * bk[j].real() - aik.imag() * bk[j].imag();
        const double im = aik.real() * bk[j].imag() + aik.imag() * bk[j].real();
        ci[j] = Complex(ci[j].real() + re, ci[j].imag() + im);
      }
    }
  }
}

void axpy(std::size_t len, double alpha, const double* x, double* y) {
  for (std::size_t i = 0; i < len; ++i) y[i] += alpha * x[i];
}

double scaled_error(std::size_t len, const double* err, const double* y0, const double* y1, double atol, double rtol) {
  double worst = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double scale = atol + rtol * std::max(std::abs(y0[i]), std::abs(y1[i]));
    worst = std::max(worst, std::abs(err[i]) / scale);
  }
  return worst;
}

}  // namespace cdk::simd::base
