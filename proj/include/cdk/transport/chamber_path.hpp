#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace cdk::transport {

inline constexpr double kDefaultMargin = 1e-6;

/// A path that leaves the chamber interior, or an integration that cannot stay inside it.
class ChamberError : public std::runtime_error {
 public:
  ChamberError(const std::string& what, std::size_t index) : std::runtime_error(what), index_(index) {}
  /// Offending waypoint or segment, 0-based.
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Piecewise-linear path through the open chamber x_1 < ... < x_N. Every
/// consecutive gap is at least `margin` at every waypoint, hence along every
/// segment as well (gaps are affine in the segment parameter).
class ChamberPath {
 public:
  /// Throws std::invalid_argument on malformed input and ChamberError if a
  /// waypoint violates the margin.
  ChamberPath(std::size_t n, std::vector<std::vector<double>> waypoints, double margin = kDefaultMargin);

  /// {"N": .., "margin": .., "waypoints": [[..], ..]}; margin optional.
  static ChamberPath from_json(const nlohmann::json& j);
  static ChamberPath load(const std::filesystem::path& file);
  nlohmann::json to_json() const;

  std::size_t n() const noexcept { return n_; }
  double margin() const noexcept { return margin_; }
  const std::vector<std::vector<double>>& waypoints() const noexcept { return waypoints_; }
  std::size_t segment_count() const noexcept { return waypoints_.size() - 1; }
  bool is_closed() const;

  /// Point at parameter t in [0, 1] of segment s.
  std::vector<double> point(std::size_t segment, double t) const;
  /// Constant derivative of segment s with respect to its parameter.
  std::vector<double> velocity(std::size_t segment) const;

  ChamberPath reversed() const;
  /// This path followed by `next`; next must start where this one ends.
  ChamberPath concatenated(const ChamberPath& next) const;

 private:
  std::size_t n_;
  std::vector<std::vector<double>> waypoints_;
  double margin_;
};

/// Smallest consecutive gap x_{i+1} - x_i.
double min_gap(std::span<const double> x);

}  // namespace cdk::transport
