#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "ipf/permutation.hpp"
#include "ipf/vec.hpp"

namespace ipf {

// An order isomorphism between principal filters of N^n, stored as the
// canonical triple (sigma, x, y): the map z -> (z - x)sigma + y from the
// filter above x onto the filter above y. The triple is unique per map, so
// structural equality is element equality.
class IpfElement {
 public:
  IpfElement(Permutation sigma, Point x, Point y);

  std::size_t dim() const noexcept { return sigma_.size(); }
  Permutation const &sigma() const noexcept { return sigma_; }
  Point const &x() const noexcept { return x_; }  // dom = up(x)
  Point const &y() const noexcept { return y_; }  // ran = up(y)

  bool operator==(IpfElement const &other) const noexcept = default;
  // Lexicographic by (x, y, sigma).
  std::strong_ordering operator<=>(IpfElement const &other) const noexcept;

 private:
  Permutation sigma_;
  Point x_;
  Point y_;
};

IpfElement make_element(std::size_t n, Permutation const &sigma, IntVec const &x,
                        IntVec const &y);
IpfElement identity_element(std::size_t n);
IpfElement idempotent_on(Point const &x);

IpfElement compose(IpfElement const &a, IpfElement const &b);
IpfElement inverse(IpfElement const &a);
bool is_idempotent(IpfElement const &a);

// Image of z under a; throws OutsideDomain unless z >= a.x.
Point apply_point(IpfElement const &a, Point const &z);
bool in_domain(IpfElement const &a, IntVec const &z);

struct Factorization {
  IpfElement rho;     // (id, x, 1): shifts dom a onto N^n
  IpfElement unit;    // (sigma, 1, 1)
  IpfElement lambda;  // (id, 1, y): shifts N^n onto ran a
};

Factorization factorize(IpfElement const &a);

struct GreenFlags {
  bool L = false;
  bool R = false;
  bool H = false;
  bool D = false;
  bool J = false;

  bool operator==(GreenFlags const &) const = default;
};

GreenFlags green_relations(IpfElement const &a, IpfElement const &b);

// a <= b in the natural partial order (a = b e for an idempotent e): same
// sigma, same translation invariant (x)sigma - y, and a.x >= b.x.
bool natural_leq(IpfElement const &a, IpfElement const &b);

// The group of units {(sigma, 1, 1)}; throws CapExceeded past dimension_cap().
std::vector<IpfElement> enumerate_units(std::size_t n);

// alpha with alpha alpha^-1 = e and alpha^-1 alpha = i.
IpfElement connect_idempotents(IpfElement const &e, IpfElement const &i);

// All elements of dimension n with every coordinate of x and y in [1, max],
// sorted.
std::vector<IpfElement> enumerate_universe(std::size_t n, Int max);

// All idempotents of dimension n with coordinates in [1, max].
std::vector<IpfElement> enumerate_idempotents(std::size_t n, Int max);

// Every point of [lo, hi] (componentwise), lexicographic.
std::vector<IntVec> box_points(IntVec const &lo, IntVec const &hi);

}  // namespace ipf
