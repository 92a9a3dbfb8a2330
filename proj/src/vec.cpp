#include "ipf/vec.hpp"

#include <cstdlib>
#include <string>

namespace ipf {

std::size_t dimension_cap() {
  char const *env = std::getenv("IPF_MAX_DIM");
  if (env == nullptr || *env == '\0') {
    return kDefaultDimCap;
  }
  char *end = nullptr;
  long value = std::strtol(env, &end, 10);
  if (*end != '\0' || value < 1) {
    return kDefaultDimCap;
  }
  return std::min<std::size_t>(static_cast<std::size_t>(value), kMaxDim);
}

namespace checked {

void overflow(char const *op) {
  throw Error(ErrorKind::Overflow, std::string("integer ") + op + " overflow");
}

}  // namespace checked

void dimension_mismatch(std::size_t a, std::size_t b, char const *what) {
  throw Error(ErrorKind::DimensionMismatch,
              std::string(what) + ": dimensions " + std::to_string(a) +
                  " and " + std::to_string(b));
}

void IntVec::storage_exceeded(std::size_t n) {
  throw Error(ErrorKind::CapExceeded, "dimension " + std::to_string(n) +
                                          " exceeds storage limit " +
                                          std::to_string(kMaxDim));
}

IntVec::IntVec(std::initializer_list<Int> values)
    : IntVec(std::span<Int const>(values.begin(), values.size())) {}

IntVec::IntVec(std::span<Int const> values) : IntVec(values.size()) {
  std::copy(values.begin(), values.end(), data_.begin());
}

IntVec IntVec::unit(std::size_t n, std::size_t i) {
  IntVec v(n);
  v[i] = 1;
  return v;
}

bool IntVec::is_zero() const noexcept {
  return std::all_of(begin(), end(), [](Int c) { return c == 0; });
}


bool IntVec::leq(IntVec const &other) const {
  require_same_dim(n_, other.n_, "leq");
  for (std::size_t i = 0; i < n_; ++i) {
    if (data_[i] > other.data_[i]) {
      return false;
    }
  }
  return true;
}

IntVec IntVec::operator+(IntVec const &other) const {
  require_same_dim(n_, other.n_, "add");
  IntVec r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r[i] = checked::add(data_[i], other.data_[i]);
  }
  return r;
}

IntVec IntVec::operator-(IntVec const &other) const {
  require_same_dim(n_, other.n_, "subtract");
  IntVec r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r[i] = checked::sub(data_[i], other.data_[i]);
  }
  return r;
}

IntVec IntVec::operator-() const {
  IntVec r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r[i] = checked::neg(data_[i]);
  }
  return r;
}

IntVec IntVec::operator*(Int k) const {
  IntVec r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r[i] = checked::mul(data_[i], k);
  }
  return r;
}

IntVec IntVec::plus_scalar(Int k) const {
  IntVec r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    r[i] = checked::add(data_[i], k);
  }
  return r;
}

IntVec max(IntVec const &a, IntVec const &b) {
  require_same_dim(a.n_, b.n_, "max");
  IntVec r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    r[i] = std::max(a[i], b[i]);
  }
  return r;
}

IntVec min(IntVec const &a, IntVec const &b) {
  require_same_dim(a.n_, b.n_, "min");
  IntVec r(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    r[i] = std::min(a[i], b[i]);
  }
  return r;
}

bool IntVec::operator==(IntVec const &other) const noexcept {
  return n_ == other.n_ && std::equal(begin(), end(), other.begin());
}

std::strong_ordering IntVec::operator<=>(IntVec const &other) const noexcept {
  if (auto c = n_ <=> other.n_; c != 0) {
    return c;
  }
  return std::lexicographical_compare_three_way(begin(), end(), other.begin(),
                                                other.end());
}

std::string format_ints(IntVec const &v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += std::to_string(v[i]);
  }
  out += ']';
  return out;
}

void Point::reject(IntVec const &coords) {
  if (coords.size() == 0) {
    throw Error(ErrorKind::DimensionMismatch, "point of dimension 0");
  }
  for (Int c : coords) {
    if (c < 1) {
      throw Error(ErrorKind::NonPositiveCoordinate,
                  "coordinate " + std::to_string(c) + " in " + format_ints(coords));
    }
  }
  throw Error(ErrorKind::NonPositiveCoordinate, "invalid point " + format_ints(coords));
}

}  // namespace ipf
