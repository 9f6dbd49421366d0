#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "cdk/transport/connection.hpp"
#include "cdk/transport/transport.hpp"

namespace cdk::transport {

struct PlaneWaveOptions {
  double lambda_max = 64.0;
  /// Ratio between successive sample dilations.
  double ratio = 2.0;
  OdeOptions ode;
};

struct PlaneWaveReport {
  std::size_t dim = 0;
  bool generic = true;
  std::vector<double> lambdas;
  /// E(lambda x0)^-1 W(lambda) E(x0) with E(x) = diag_s exp(i sum_k p_{s^-1(k)} x_k).
  std::vector<std::vector<Complex>> stripped_frames;
  /// ||S(lambda_{m+1}) - S(lambda_m)||_inf
  std::vector<double> differences;
  /// First index from which the differences decrease monotonically, if the tail does.
  std::optional<std::size_t> monotone_from;
};

/// Transports the frame E(x0) along the ray lambda x0, lambda in [1, lambda_max],
/// and strips the free phase at each sample. Convergence is reported, not asserted.
/// Throws ChamberError if x0 is not in the chamber.
PlaneWaveReport plane_wave_map(const ConnectionMatrix& omega, const std::vector<double>& x0,
                               const PlaneWaveOptions& options = {});
nlohmann::json to_json(const PlaneWaveReport& report);

/// diag_s exp(i sum_k p_{s^-1(k)} x_k) as a dense matrix.
std::vector<Complex> free_phase(const ConnectionMatrix& omega, const std::vector<double>& x);

}  // namespace cdk::transport
