#include "cdk/transport/plane_wave.hpp"

#include <cmath>
#include <stdexcept>

#include "cdk/transport/chamber_path.hpp"

namespace cdk::transport {

std::vector<Complex> free_phase(const ConnectionMatrix& omega, const std::vector<double>& x) {
  const std::size_t d = omega.dim();
  std::vector<Complex> e(d * d);
  for (std::size_t row = 0; row < d; ++row) {
    double phase = 0.0;
    for (std::size_t k = 0; k < omega.n(); ++k)
      phase += omega.momentum()[omega.diagonal_momentum(k, row)].get_d() * x[k];
    e[row * d + row] = std::polar(1.0, phase);
  }
  return e;
}

PlaneWaveReport plane_wave_map(const ConnectionMatrix& omega, const std::vector<double>& x0,
                               const PlaneWaveOptions& options) {
  if (!(options.lambda_max >= 1.0)) throw std::invalid_argument("lambda_max must be at least 1");
  if (!(options.ratio > 1.0)) throw std::invalid_argument("dilation ratio must exceed 1");
  // Validates x0 against the chamber.
  const ChamberPath base(omega.n(), {x0});

  PlaneWaveReport report;
  report.dim = omega.dim();
  report.generic = is_generic(omega.momentum());
  for (double l = 1.0; l < options.lambda_max; l *= options.ratio) report.lambdas.push_back(l);
  report.lambdas.push_back(options.lambda_max);

  const std::size_t d = omega.dim();
  auto scaled = [&](double l) {
    std::vector<double> x(x0);
    for (auto& v : x) v *= l;
    return x;
  };
  const std::vector<Complex> e0 = free_phase(omega, x0);
  std::vector<Complex> w = identity_matrix(d);
  for (std::size_t m = 0; m < report.lambdas.size(); ++m) {
    if (m > 0) {
      const ChamberPath step(omega.n(), {scaled(report.lambdas[m - 1]), scaled(report.lambdas[m])}, base.margin());
      w = multiply(transport_ode(omega, step, options.ode).matrix, w, d);
    }
    std::vector<Complex> inv_phase = free_phase(omega, scaled(report.lambdas[m]));
    for (std::size_t i = 0; i < d; ++i) inv_phase[i * d + i] = std::conj(inv_phase[i * d + i]);
    report.stripped_frames.push_back(multiply(multiply(inv_phase, w, d), e0, d));
  }
  for (std::size_t m = 1; m < report.stripped_frames.size(); ++m)
    report.differences.push_back(inf_norm_diff(report.stripped_frames[m], report.stripped_frames[m - 1], d));
  if (!report.differences.empty()) {
    std::size_t from = report.differences.size() - 1;
    while (from > 0 && report.differences[from] < report.differences[from - 1]) --from;
    if (from + 1 < report.differences.size()) report.monotone_from = from;
  }
  return report;
}

nlohmann::json to_json(const PlaneWaveReport& report) {
  nlohmann::json frames = nlohmann::json::array();
  for (const auto& f : report.stripped_frames) frames.push_back(matrix_to_json(f));
  nlohmann::json j{{"dim", report.dim},
                   {"generic", report.generic},
                   {"lambdas", report.lambdas},
                   {"strippedFrames", frames},
                   {"differences", report.differences}};
  j["monotoneFrom"] = report.monotone_from ? nlohmann::json(*report.monotone_from) : nlohmann::json(nullptr);
  return j;
}

}  // namespace cdk::transport
