#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "ipf/element.hpp"

namespace ipf {

// A finite partial injective map on the box [1..B]^n. This is the
// brute-force model every algebraic formula is checked against: it only
// knows how to evaluate points and compose tables.
class GridMap {
 public:
  GridMap(std::size_t n, Int bound);

  std::size_t dim() const noexcept { return n_; }
  Int bound() const noexcept { return bound_; }
  std::map<IntVec, IntVec> const &entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t size() const noexcept { return entries_.size(); }

  // Throws if the key or value leaves the box or injectivity would break.
  void insert(IntVec const &key, IntVec const &value);
  std::optional<IntVec> at(IntVec const &key) const;

  bool operator==(GridMap const &) const = default;

 private:
  std::size_t n_;
  Int bound_;
  std::map<IntVec, IntVec> entries_;
  std::map<IntVec, IntVec> converse_;
};

// Restriction of a to the box. Throws BoxTooSmall unless every coordinate of
// a.x and a.y is at most bound.
GridMap realize(IpfElement const &a, Int bound);

GridMap grid_compose(GridMap const &f, GridMap const &g);

// True iff dom f and ran f are box intervals [u, U] (a principal filter cut
// by the finite window) and f is monotone with monotone converse. The empty
// map is rejected.
bool is_order_iso(GridMap const &f);

// Recovers the canonical triple from a realized table. Throws NotOrderIso or
// InsufficientBox (when the points x + e_i fall outside the table).
IpfElement grid_recognize(GridMap const &f);

// First idempotent e (lexicographic in e.x, coordinates <= bound) with
// b e = a.
std::optional<IpfElement> witness_leq(IpfElement const &a, IpfElement const &b,
                                      Int bound);

// First idempotent e (lexicographic in e.x, coordinates <= bound) with
// a e = b e.
std::optional<IpfElement> witness_mg(IpfElement const &a, IpfElement const &b,
                                     Int bound);

// "grid{n=..;B=..}" followed by one sorted "(k1,..)->(v1,..)" line per entry.
std::string format_grid(GridMap const &f);

}  // namespace ipf
