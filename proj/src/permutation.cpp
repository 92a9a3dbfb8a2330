#include "ipf/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace ipf {

Permutation::Permutation(std::span<Int const> one_line) : n_(one_line.size()) {
  if (n_ == 0) {
    throw Error(ErrorKind::NotAPermutation, "empty permutation");
  }
  if (n_ > kMaxDim) {
    throw Error(ErrorKind::CapExceeded,
                "permutation degree " + std::to_string(n_) +
                    " exceeds storage limit " + std::to_string(kMaxDim));
  }
  std::array<bool, kMaxDim> seen{};
  for (std::size_t i = 0; i < n_; ++i) {
    Int v = one_line[i];
    if (v < 1 || static_cast<std::size_t>(v) > n_ || seen[v - 1]) {
      throw Error(ErrorKind::NotAPermutation,
                  "not a bijection of {1.." + std::to_string(n_) +
                      "}: " + format_ints(IntVec(one_line)));
    }
    seen[v - 1] = true;
    img_[i] = static_cast<std::uint8_t>(v - 1);
  }
}

Permutation::Permutation(std::initializer_list<Int> one_line)
    : Permutation(std::span<Int const>(one_line.begin(), one_line.size())) {}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Int> v(n);
  std::iota(v.begin(), v.end(), Int{1});
  return Permutation(v);
}

Permutation Permutation::transposition(std::size_t n, std::size_t i,
                                       std::size_t j) {
  std::vector<Int> v(n);
  std::iota(v.begin(), v.end(), Int{1});
  std::swap(v.at(i - 1), v.at(j - 1));
  return Permutation(v);
}

Permutation Permutation::cycle(std::size_t n) {
  std::vector<Int> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Int>((i + 1) % n + 1);
  }
  return Permutation(v);
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<Int> v(n);
  std::iota(v.begin(), v.end(), Int{1});
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::vector<Int> Permutation::one_line() const {
  std::vector<Int> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i] = img_[i] + 1;
  }
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    if (img_[i] != i) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    r.img_[img_[i]] = static_cast<std::uint8_t>(i);
  }
  return r;
}

Permutation Permutation::operator*(Permutation const &then) const {
  require_same_dim(n_, then.n_, "permutation product");
  Permutation r = *this;
  for (std::size_t i = 0; i < n_; ++i) {
    r.img_[i] = then.img_[img_[i]];
  }
  return r;
}

IntVec Permutation::apply(IntVec const &z) const {
  require_same_dim(n_, z.size(), "perm_apply");
  IntVec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[img_[i]] = z[i];
  }
  return out;
}

IntVec Permutation::apply_inverse(IntVec const &z) const {
  require_same_dim(n_, z.size(), "perm_apply");
  IntVec out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    out[i] = z[img_[i]];
  }
  return out;
}

bool Permutation::operator==(Permutation const &other) const noexcept {
  return n_ == other.n_ &&
         std::equal(img_.begin(), img_.begin() + n_, other.img_.begin());
}

std::strong_ordering Permutation::operator<=>(
    Permutation const &other) const noexcept {
  if (auto c = n_ <=> other.n_; c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(
      img_.begin(), img_.begin() + n_, other.img_.begin(),
      other.img_.begin() + other.n_);
}

std::string format_permutation(Permutation const &p) {
  return format_ints(IntVec(p.one_line()));
}

}  // namespace ipf
