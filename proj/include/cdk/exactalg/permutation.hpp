#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cdk {

using Exponents = std::vector<std::uint32_t>;

/// Element of S_N stored by its images on {0..N-1}.
///
/// Acting on functions, sigma substitutes x_m -> x_{sigma(m)}. With this
/// convention (sigma * tau) . f == sigma . (tau . f), where the product is
/// composition (sigma * tau)(m) = sigma(tau(m)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
  /// All of S_n in lexicographic order of the image vector.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::size_t operator()(std::size_t m) const { return images_[m]; }
  std::span<const std::size_t> images() const noexcept { return images_; }

  Permutation inverse() const;
  int sign() const;
  bool is_identity() const;

  /// Exponent vector of sigma . x^a: result[sigma(m)] = a[m].
  Exponents act_on_exponents(std::span<const std::uint32_t> a) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  /// One-line form "[2,1,3]" using 1-based images.
  std::string to_string() const;

 private:
  std::vector<std::size_t> images_;
};

/// Fixed enumeration of S_N, used to index the N!-dimensional component space.
class GroupElementIndex {
 public:
  explicit GroupElementIndex(std::size_t n);

  std::size_t degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const Permutation& element(std::size_t index) const { return elements_[index]; }
  const std::vector<Permutation>& elements() const noexcept { return elements_; }
  std::size_t index_of(const Permutation& p) const;

 private:
  std::size_t n_;
  std::vector<Permutation> elements_;
  std::map<Permutation, std::size_t> lookup_;
};

}  // namespace cdk
