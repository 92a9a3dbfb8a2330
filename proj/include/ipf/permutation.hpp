#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ipf/vec.hpp"

namespace ipf {

// A permutation of {1..n} in one-line form: image(i) is (i)sigma.
// Permutations act on the right and compose left to right:
// (i)(s * t) = ((i)s)t.
class Permutation {
 public:
  Permutation() = default;

  // One-based one-line form; throws NotAPermutation if not a bijection of
  // {1..n}.
  explicit Permutation(std::span<Int const> one_line);
  Permutation(std::initializer_list<Int> one_line);

  static Permutation identity(std::size_t n);
  // Transposition of positions i and j (one-based).
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
  // The cycle 1 -> 2 -> ... -> n -> 1.
  static Permutation cycle(std::size_t n);

  // All of S_n in lexicographic order of one-line form.
  static std::vector<Permutation> all(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  // One-based image of the one-based point i.
  std::size_t image(std::size_t i) const noexcept { return img_[i - 1] + 1u; }
  std::vector<Int> one_line() const;

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation operator*(Permutation const &then) const;

  // Coordinate action: component j of the result is z_{(j)sigma^-1}, i.e. the
  // entry at position i moves to position (i)sigma.
  IntVec apply(IntVec const &z) const;
  // The action of the inverse, without building it.
  IntVec apply_inverse(IntVec const &z) const;

  bool operator==(Permutation const &other) const noexcept;
  std::strong_ordering operator<=>(Permutation const &other) const noexcept;

 private:
  std::array<std::uint8_t, kMaxDim> img_{};  // zero-based
  std::size_t n_ = 0;
};

// perm_apply
inline IntVec perm_apply(Permutation const &sigma, IntVec const &z) {
  return sigma.apply(z);
}

std::string format_permutation(Permutation const &p);

}  // namespace ipf
