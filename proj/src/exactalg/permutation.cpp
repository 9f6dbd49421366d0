#include "cdk/exactalg/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cdk {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw std::invalid_argument("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw std::out_of_range("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[i], p.images_[j]);
  return p;
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::size_t> img(n);
  std::iota(img.begin(), img.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t m = 0; m < images_.size(); ++m) inv[images_[m]] = m;
  return Permutation(std::move(inv));
}

int Permutation::sign() const {
  std::vector<bool> visited(images_.size(), false);
  int s = 1;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t m = start; !visited[m]; m = images_[m]) {
      visited[m] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool Permutation::is_identity() const {
  for (std::size_t m = 0; m < images_.size(); ++m)
    if (images_[m] != m) return false;
  return true;
}

Exponents Permutation::act_on_exponents(std::span<const std::uint32_t> a) const {
  Exponents out(a.size());
  for (std::size_t m = 0; m < a.size(); ++m) out[images_[m]] = a[m];
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<std::size_t> img(a.size());
  for (std::size_t m = 0; m < img.size(); ++m) img[m] = a.images_[b.images_[m]];
  return Permutation(std::move(img));
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t m = 0; m < images_.size(); ++m) {
    if (m) out += ",";
    out += std::to_string(images_[m] + 1);
  }
  return out + "]";
}

GroupElementIndex::GroupElementIndex(std::size_t n) : n_(n), elements_(Permutation::all(n)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) lookup_.emplace(elements_[i], i);
}

std::size_t GroupElementIndex::index_of(const Permutation& p) const {
  auto it = lookup_.find(p);
  if (it == lookup_.end()) throw std::out_of_range("permutation not in S_N");
  return it->second;
}

}  // namespace cdk
