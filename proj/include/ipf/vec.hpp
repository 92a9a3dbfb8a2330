#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ipf/error.hpp"

namespace ipf {

using Int = std::int64_t;

// Hard storage limit for coordinates and permutations. The configurable
// enumeration cap (dimension_cap) never exceeds this.
inline constexpr std::size_t kMaxDim = 16;

// Default cap on dimensions for which S_n is enumerated.
inline constexpr std::size_t kDefaultDimCap = 8;

// Dimension cap for unit enumeration and normal closure; IPF_MAX_DIM
// overrides the default, clamped to kMaxDim.
std::size_t dimension_cap();

namespace checked {

[[noreturn]] void overflow(char const *op);

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) [[unlikely]] {
    overflow("addition");
  }
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) [[unlikely]] {
    overflow("subtraction");
  }
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) [[unlikely]] {
    overflow("multiplication");
  }
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

}  // namespace checked

// A vector of n integers, stored inline. Arithmetic is checked and raises
// ErrorKind::Overflow instead of wrapping.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::size_t n, Int fill = 0) : n_(n) {
    if (n > kMaxDim) [[unlikely]] {
      storage_exceeded(n);
    }
    std::fill_n(data_.begin(), n, fill);
  }
  IntVec(std::initializer_list<Int> values);
  explicit IntVec(std::span<Int const> values);

  static IntVec ones(std::size_t n) { return IntVec(n, 1); }
  static IntVec unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return n_; }
  Int operator[](std::size_t i) const noexcept { return data_[i]; }
  Int &operator[](std::size_t i) noexcept { return data_[i]; }

  Int const *begin() const noexcept { return data_.data(); }
  Int const *end() const noexcept { return data_.data() + n_; }
  std::span<Int const> span() const noexcept { return {data_.data(), n_}; }
  std::vector<Int> to_vector() const { return {begin(), end()}; }

  bool is_zero() const noexcept;
  Int min() const noexcept { return *std::min_element(begin(), end()); }
  Int max() const noexcept { return *std::max_element(begin(), end()); }

  // Componentwise order of the product order on Z^n.
  bool leq(IntVec const &other) const;
  bool geq(IntVec const &other) const { return other.leq(*this); }

  IntVec operator+(IntVec const &other) const;
  IntVec operator-(IntVec const &other) const;
  IntVec operator-() const;
  IntVec operator*(Int k) const;
  IntVec plus_scalar(Int k) const;

  friend IntVec max(IntVec const &a, IntVec const &b);
  friend IntVec min(IntVec const &a, IntVec const &b);

  bool operator==(IntVec const &other) const noexcept;
  std::strong_ordering operator<=>(IntVec const &other) const noexcept;

 private:
  [[noreturn]] static void storage_exceeded(std::size_t n);

  std::array<Int, kMaxDim> data_{};
  std::size_t n_ = 0;
};

// Componentwise max and min.
IntVec max(IntVec const &a, IntVec const &b);
IntVec min(IntVec const &a, IntVec const &b);

// "[a,b,c]"
std::string format_ints(IntVec const &v);

[[noreturn]] void dimension_mismatch(std::size_t a, std::size_t b, char const *what);

inline void require_same_dim(std::size_t a, std::size_t b, char const *what) {
  if (a != b) [[unlikely]] {
    dimension_mismatch(a, b, what);
  }
}

// An element of N^n (every coordinate >= 1); also a principal-filter
// generator.
class Point {
 public:
  explicit Point(IntVec coords) : v_(coords) {
    if (v_.size() == 0 || v_.min() < 1) [[unlikely]] {
      reject(v_);
    }
  }
  Point(std::initializer_list<Int> coords) : Point(IntVec(coords)) {}

  static Point ones(std::size_t n) { return Point(IntVec::ones(n)); }

  std::size_t size() const noexcept { return v_.size(); }
  Int operator[](std::size_t i) const noexcept { return v_[i]; }
  IntVec const &vec() const noexcept { return v_; }
  operator IntVec const &() const noexcept { return v_; }

  bool operator==(Point const &other) const noexcept = default;
  std::strong_ordering operator<=>(Point const &other) const noexcept = default;

 private:
  [[noreturn]] static void reject(IntVec const &coords);

  IntVec v_;
};

}  // namespace ipf
