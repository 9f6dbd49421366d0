#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace cdk::simd {

using Complex = std::complex<double>;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// Inner loops of the transport integrators. Every entry has a scalar
/// reference in simd::base and may have a vector twin; the twins are
/// equivalence-tested against the reference.
struct KernelTable {
  Isa isa;
  /// c = a * b for n x n row-major complex matrices; c must not alias a or b.
  void (*cgemm)(std::size_t n, const Complex* a, const Complex* b, Complex* c);
  /// y += alpha * x over len doubles.
  void (*axpy)(std::size_t len, double alpha, const double* x, double* y);
  /// max_i |err_i| / (atol + rtol * max(|y0_i|, |y1_i|)) over len doubles.
  double (*scaled_error)(std::size_t len, const double* err, const double* y0, const double* y1, double atol,
                         double rtol);
};

bool isa_available(Isa isa) noexcept;
/// Table for a specific instruction set; throws std::runtime_error if the CPU
/// or the build lacks it.
const KernelTable& kernels(Isa isa);
/// Best available table, unless CDK_SIMD=scalar forces the reference path.
const KernelTable& kernels();

namespace base {
void cgemm(std::size_t n, const Complex* a, const Complex* b, Complex* c);
void axpy(std::size_t len, double alpha, const double* x, double* y);
double scaled_error(std::size_t len, const double* err, const double* y0, const double* y1, double atol, double rtol);
}  // namespace base

#ifdef CDK_HAVE_AVX2
namespace avx2 {
void cgemm(std::size_t n, const Complex* a, const Complex* b, Complex* c);
void axpy(std::size_t len, double alpha, const double* x, double* y);
double scaled_error(std::size_t len, const double* err, const double* y0, const double* y1, double atol, double rtol);
}  // namespace avx2
#endif

}  // namespace cdk::simd
