#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace fpg {

// Bijection on {0..n-1}; composition is left-to-right (apply *this, then other),
// matching the right action used by coset tables.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  std::span<const std::uint32_t> images() const { return images_; }
  bool is_identity() const;

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  std::uint64_t order() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

  std::string cycles() const;

 private:
  std::vector<std::uint32_t> images_;
};

}  // namespace fpg
