#include "cdk/transport/transport.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace cdk::transport {

namespace {

const simd::KernelTable& pick(const simd::KernelTable* k) { return k ? *k : simd::kernels(); }

double* as_doubles(std::vector<Complex>& v) { return reinterpret_cast<double*>(v.data()); }
const double* as_doubles(const std::vector<Complex>& v) { return reinterpret_cast<const double*>(v.data()); }

// Dormand-Prince 5(4)
constexpr std::array<double, 7> kC{0.0, 1.0 / 5, 3.0 / 10, 4.0 / 5, 8.0 / 9, 1.0, 1.0};
constexpr std::array<std::array<double, 6>, 7> kA{{
    {},
    {1.0 / 5},
    {3.0 / 40, 9.0 / 40},
    {44.0 / 45, -56.0 / 15, 32.0 / 9},
    {19372.0 / 6561, -25360.0 / 2187, 64448.0 / 6561, -212.0 / 729},
    {9017.0 / 3168, -355.0 / 33, 46732.0 / 5247, 49.0 / 176, -5103.0 / 18656},
    {35.0 / 384, 0.0, 500.0 / 1113, 125.0 / 192, -2187.0 / 6784, 11.0 / 84},
}};
constexpr std::array<double, 7> kE{71.0 / 57600,  0.0,        -71.0 / 16695, 71.0 / 1920,
                                   -17253.0 / 339200, 22.0 / 525, -1.0 / 40};

// Parameter time until the nearest gap would close, halved; 1 if none is closing.
double wall_step_cap(std::span<const double> x, std::span<const double> v) {
  double cap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double rate = v[i + 1] - v[i];
    if (rate < 0.0) cap = std::min(cap, 0.5 * (x[i + 1] - x[i]) / -rate);
  }
  return std::min(cap, 1.0);
}

class SegmentIntegrator {
 public:
  SegmentIntegrator(const ConnectionMatrix& omega, const simd::KernelTable& k, const OdeOptions& opt)
      : omega_(omega), k_(k), opt_(opt), dim_(omega.dim()), len_(2 * dim_ * dim_), a_(dim_ * dim_) {
    for (auto& s : stages_) s.assign(dim_ * dim_, Complex{});
    y_stage_.assign(dim_ * dim_, Complex{});
    y_new_.assign(dim_ * dim_, Complex{});
    err_.assign(dim_ * dim_, Complex{});
  }

  // Advances w across segment `seg` of the path.
  void run(const ChamberPath& path, std::size_t seg, std::vector<Complex>& w, StepStats& stats, double& h) {
    a_pt_ = path.waypoints()[seg];
    v_ = path.velocity(seg);
    if (std::all_of(v_.begin(), v_.end(), [](double c) { return c == 0.0; })) return;
    double t = 0.0;
    rhs(0.0, w, stages_[0]);
    while (t < 1.0) {
      const auto x = point(t);
      const double cap = wall_step_cap(x, v_);
      const bool last = std::min(h, cap) >= 1.0 - t;
      h = std::min(h, cap);
      if (h < opt_.min_step)
        throw ChamberError("step size underflow on segment " + std::to_string(seg) + " at parameter " +
                               std::to_string(t),
                           seg);
      if (stats.accepted + stats.rejected >= opt_.max_steps)
        throw ChamberError("step limit exceeded on segment " + std::to_string(seg), seg);

      const double step = last ? 1.0 - t : h;
      for (std::size_t s = 1; s < 7; ++s) {
        y_stage_ = w;
        for (std::size_t r = 0; r < s; ++r)
          if (kA[s][r] != 0.0) k_.axpy(len_, step * kA[s][r], as_doubles(stages_[r]), as_doubles(y_stage_));
        rhs(t + kC[s] * step, y_stage_, stages_[s]);
      }
      // The seventh stage point is the fifth-order solution (FSAL).
      y_new_ = y_stage_;
      std::fill(err_.begin(), err_.end(), Complex{});
      for (std::size_t s = 0; s < 7; ++s)
        if (kE[s] != 0.0) k_.axpy(len_, step * kE[s], as_doubles(stages_[s]), as_doubles(err_));
      const double e = k_.scaled_error(len_, as_doubles(err_), as_doubles(w), as_doubles(y_new_), opt_.tol, opt_.tol);

      if (e <= 1.0) {
        t = last ? 1.0 : t + step;
        w.swap(y_new_);
        stages_[0].swap(stages_[6]);
        ++stats.accepted;
        stats.max_local_error = std::max(stats.max_local_error, e * opt_.tol);
        stats.min_step = stats.accepted == 1 ? step : std::min(stats.min_step, step);
        const double grow = e == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(e, -0.2), 0.2, 5.0);
        h = last ? std::max(h, step * grow) : step * grow;
      } else {
        ++stats.rejected;
        const double shrink = std::isfinite(e) ? std::clamp(0.9 * std::pow(e, -0.2), 0.1, 0.9) : 0.1;
        h = step * shrink;
      }
    }
  }

 private:
  std::vector<double> point(double t) const {
    std::vector<double> x(a_pt_.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = a_pt_[i] + t * v_[i];
    return x;
  }

  void rhs(double t, const std::vector<Complex>& y, std::vector<Complex>& out) {
    omega_.evaluate_along(point(t), v_, a_.data());
    k_.cgemm(dim_, a_.data(), y.data(), out.data());
  }

  const ConnectionMatrix& omega_;
  const simd::KernelTable& k_;
  const OdeOptions& opt_;
  std::size_t dim_;
  std::size_t len_;
  std::vector<Complex> a_;
  std::array<std::vector<Complex>, 7> stages_;
  std::vector<Complex> y_stage_, y_new_, err_;
  std::vector<double> a_pt_, v_;
};

}  // namespace

std::vector<Complex> identity_matrix(std::size_t dim) {
  std::vector<Complex> m(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
  return m;
}

std::vector<Complex> multiply(std::span<const Complex> a, std::span<const Complex> b, std::size_t dim) {
  std::vector<Complex> c(dim * dim);
  simd::kernels().cgemm(dim, a.data(), b.data(), c.data());
  return c;
}

double inf_norm(std::span<const Complex> a, std::size_t dim) {
  double out = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim; ++j) row += std::abs(a[i * dim + j]);
    out = std::max(out, row);
  }
  return out;
}

double inf_norm_diff(std::span<const Complex> a, std::span<const Complex> b, std::size_t dim) {
  double out = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < dim; ++j) row += std::abs(a[i * dim + j] - b[i * dim + j]);
    out = std::max(out, row);
  }
  return out;
}

double identity_deviation(std::span<const Complex> a, std::size_t dim) {
  return inf_norm_diff(a, identity_matrix(dim), dim);
}

TransportResult transport_ode(const ConnectionMatrix& omega, const ChamberPath& path, const OdeOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (path.n() != omega.n()) throw std::invalid_argument("path and system differ in N");
  const simd::KernelTable& k = pick(options.kernels);
  TransportResult result;
  result.method = Method::ode;
  result.dim = omega.dim();
  result.matrix = identity_matrix(result.dim);
  SegmentIntegrator integrator(omega, k, options);
  double h = 1.0 / 16;
  for (std::size_t s = 0; s < path.segment_count(); ++s) integrator.run(path, s, result.matrix, result.stats, h);
  return result;
}

TransportResult transport_dyson(const ConnectionMatrix& omega, const ChamberPath& path, unsigned order, unsigned steps,
                                const simd::KernelTable* kernels) {
  if (order < 1 || steps < 1) throw std::invalid_argument("Dyson series needs order >= 1 and steps >= 1");
  if (path.n() != omega.n()) throw std::invalid_argument("path and system differ in N");
  const simd::KernelTable& k = pick(kernels);
  const std::size_t d = omega.dim();
  const std::size_t sz = d * d;
  const std::size_t len = 2 * sz;

  // level[m] holds I_m at the left node of the current interval.
  std::vector<std::vector<Complex>> at_left(order + 1, std::vector<Complex>(sz));
  at_left[0] = identity_matrix(d);
  std::vector<std::vector<Complex>> at_mid(order + 1, std::vector<Complex>(sz));
  std::vector<std::vector<Complex>> at_right(order + 1, std::vector<Complex>(sz));
  at_mid[0] = at_left[0];
  at_right[0] = at_left[0];
  std::array<std::vector<Complex>, 3> a_node, g;
  for (auto& m : a_node) m.assign(sz, Complex{});
  for (auto& m : g) m.assign(sz, Complex{});

  const double h = 1.0 / steps;
  for (std::size_t s = 0; s < path.segment_count(); ++s) {
    const auto v = path.velocity(s);
    if (std::all_of(v.begin(), v.end(), [](double c) { return c == 0.0; })) continue;
    omega.evaluate_along(path.point(s, 0.0), v, a_node[0].data());
    for (unsigned q = 0; q < steps; ++q) {
      omega.evaluate_along(path.point(s, (q + 0.5) * h), v, a_node[1].data());
      omega.evaluate_along(path.point(s, (q + 1.0) * h), v, a_node[2].data());
      for (unsigned m = 1; m <= order; ++m) {
        k.cgemm(d, a_node[0].data(), at_left[m - 1].data(), g[0].data());
        k.cgemm(d, a_node[1].data(), at_mid[m - 1].data(), g[1].data());
        k.cgemm(d, a_node[2].data(), at_right[m - 1].data(), g[2].data());
        // integral to the midpoint: h/24 (5 g0 + 8 g1 - g2); to the right node: h/6 (g0 + 4 g1 + g2)
        at_mid[m] = at_left[m];
        k.axpy(len, 5.0 * h / 24, as_doubles(g[0]), as_doubles(at_mid[m]));
        k.axpy(len, 8.0 * h / 24, as_doubles(g[1]), as_doubles(at_mid[m]));
        k.axpy(len, -h / 24, as_doubles(g[2]), as_doubles(at_mid[m]));
        at_right[m] = at_left[m];
        k.axpy(len, h / 6, as_doubles(g[0]), as_doubles(at_right[m]));
        k.axpy(len, 4.0 * h / 6, as_doubles(g[1]), as_doubles(at_right[m]));
        k.axpy(len, h / 6, as_doubles(g[2]), as_doubles(at_right[m]));
      }
      for (unsigned m = 1; m <= order; ++m) at_left[m].swap(at_right[m]);
      a_node[0].swap(a_node[2]);
    }
  }

  TransportResult result;
  result.method = Method::dyson;
  result.dim = d;
  result.matrix.assign(sz, Complex{});
  for (unsigned m = 0; m <= order; ++m) k.axpy(len, 1.0, as_doubles(at_left[m]), as_doubles(result.matrix));
  result.stats.accepted = static_cast<std::size_t>(steps) * path.segment_count();
  result.stats.min_step = h;
  return result;
}

std::string method_name(Method m) { return m == Method::ode ? "ode" : "dyson"; }

nlohmann::json matrix_to_json(std::span<const Complex> a) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& z : a) out.push_back({z.real(), z.imag()});
  return out;
}

nlohmann::json to_json(const StepStats& stats) {
  return {{"accepted", stats.accepted},
          {"rejected", stats.rejected},
          {"maxLocalError", stats.max_local_error},
          {"minStep", stats.min_step}};
}

}  // namespace cdk::transport
