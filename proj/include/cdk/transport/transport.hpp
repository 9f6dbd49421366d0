#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cdk/simd/kernels.hpp"
#include "cdk/transport/chamber_path.hpp"
#include "cdk/transport/connection.hpp"

namespace cdk::transport {

enum class Method { ode, dyson };

struct StepStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  /// Largest accepted local error estimate, in units of the tolerance scale times tol.
  double max_local_error = 0.0;
  double min_step = 0.0;
};

struct TransportResult {
  Method method = Method::ode;
  std::size_t dim = 0;
  /// dim x dim, row-major.
  std::vector<Complex> matrix;
  StepStats stats;
};

struct OdeOptions {
  double tol = 1e-10;
  /// Smallest admissible step in the segment parameter.
  double min_step = 1e-14;
  std::size_t max_steps = 50'000'000;
  /// Kernel table override; the dispatched table when null.
  const simd::KernelTable* kernels = nullptr;
};

/// W(1) for dW/dt = A(t) W, W(0) = I, A(t) = sum_k x_k'(t) Omega_k(x(t)), over
/// every segment in order, with an embedded Dormand-Prince 5(4) pair. Steps
/// are capped at half the parameter time to the nearest wall. Throws
/// ChamberError naming the segment if the step size underflows.
TransportResult transport_ode(const ConnectionMatrix& omega, const ChamberPath& path, const OdeOptions& options = {});

/// Truncated Dyson series sum_{m<=order} of the time-ordered iterated
/// integrals of A over the whole path. Each segment is split into `steps`
/// intervals; the nested integrals use Simpson's rule on the half-step grid.
TransportResult transport_dyson(const ConnectionMatrix& omega, const ChamberPath& path, unsigned order, unsigned steps,
                                const simd::KernelTable* kernels = nullptr);

std::vector<Complex> identity_matrix(std::size_t dim);
std::vector<Complex> multiply(std::span<const Complex> a, std::span<const Complex> b, std::size_t dim);
/// Maximum absolute row sum.
double inf_norm(std::span<const Complex> a, std::size_t dim);
double inf_norm_diff(std::span<const Complex> a, std::span<const Complex> b, std::size_t dim);
/// ||a - I||_inf
double identity_deviation(std::span<const Complex> a, std::size_t dim);

std::string method_name(Method m);
nlohmann::json matrix_to_json(std::span<const Complex> a);
nlohmann::json to_json(const StepStats& stats);

}  // namespace cdk::transport
