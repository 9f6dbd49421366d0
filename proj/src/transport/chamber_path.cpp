#include "cdk/transport/chamber_path.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

namespace cdk::transport {

double min_gap(std::span<const double> x) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < x.size(); ++i) gap = std::min(gap, x[i + 1] - x[i]);
  return gap;
}

ChamberPath::ChamberPath(std::size_t n, std::vector<std::vector<double>> waypoints, double margin)
    : n_(n), waypoints_(std::move(waypoints)), margin_(margin) {
  if (n_ < 2) throw std::invalid_argument("path needs N >= 2");
  if (!(margin_ > 0.0) || !std::isfinite(margin_)) throw std::invalid_argument("margin must be positive");
  if (waypoints_.empty()) throw std::invalid_argument("path needs at least one waypoint");
  for (std::size_t w = 0; w < waypoints_.size(); ++w) {
    const auto& x = waypoints_[w];
    if (x.size() != n_)
      throw std::invalid_argument("waypoint " + std::to_string(w) + " has " + std::to_string(x.size()) +
                                  " coordinates, expected " + std::to_string(n_));
    if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); }))
      throw std::invalid_argument("waypoint " + std::to_string(w) + " is not finite");
    const double gap = min_gap(x);
    if (!(gap >= margin_))
      throw ChamberError("waypoint " + std::to_string(w) + " has gap " + std::to_string(gap) +
                             ", below the chamber margin " + std::to_string(margin_),
                         w);
  }
}

ChamberPath ChamberPath::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("N") || !j.contains("waypoints"))
    throw std::invalid_argument("path JSON needs fields N and waypoints");
  const auto n = j.at("N").get<std::size_t>();
  const double margin = j.value("margin", kDefaultMargin);
  return ChamberPath(n, j.at("waypoints").get<std::vector<std::vector<double>>>(), margin);
}

ChamberPath ChamberPath::load(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open path file " + file.string());
  nlohmann::json j;
  try {
    in >> j;
    return from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("malformed path file " + file.string() + ": " + e.what());
  }
}

nlohmann::json ChamberPath::to_json() const { return {{"N", n_}, {"margin", margin_}, {"waypoints", waypoints_}}; }

bool ChamberPath::is_closed() const { return waypoints_.front() == waypoints_.back(); }

std::vector<double> ChamberPath::point(std::size_t segment, double t) const {
  const auto& a = waypoints_.at(segment);
  const auto& b = waypoints_.at(segment + 1);
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i) x[i] = a[i] + t * (b[i] - a[i]);
  return x;
}

std::vector<double> ChamberPath::velocity(std::size_t segment) const {
  const auto& a = waypoints_.at(segment);
  const auto& b = waypoints_.at(segment + 1);
  std::vector<double> v(n_);
  for (std::size_t i = 0; i < n_; ++i) v[i] = b[i] - a[i];
  return v;
}

ChamberPath ChamberPath::reversed() const {
  return ChamberPath(n_, {waypoints_.rbegin(), waypoints_.rend()}, margin_);
}

ChamberPath ChamberPath::concatenated(const ChamberPath& next) const {
  if (next.n_ != n_) throw std::invalid_argument("paths differ in N");
  if (next.waypoints_.front() != waypoints_.back()) throw std::invalid_argument("paths do not share an endpoint");
  auto w = waypoints_;
  w.insert(w.end(), next.waypoints_.begin() + 1, next.waypoints_.end());
  return ChamberPath(n_, std::move(w), std::min(margin_, next.margin_));
}

}  // namespace cdk::transport
