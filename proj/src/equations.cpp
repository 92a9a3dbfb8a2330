#include "ipf/equations.hpp"

#include <algorithm>

#include "ipf/quotient.hpp"

namespace ipf {

std::vector<IpfElement> up_set(IpfElement const &a) {
  std::size_t const n = a.dim();
  IntVec const gap = upsilon(a).z;
  std::vector<IpfElement> out;
  for (auto const &x : box_points(IntVec::ones(n), a.x())) {
    IntVec const y = a.sigma().apply(x) - gap;
    if (y.min() >= 1) {
      out.emplace_back(a.sigma(), Point(x), Point(y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

template <class Equation>
std::vector<IpfElement> filter_candidates(IpfElement const &bound_below,
                                          Equation holds) {
  std::vector<IpfElement> out;
  for (auto const &chi : up_set(bound_below)) {
    if (holds(chi)) {
      out.push_back(chi);
    }
  }
  return out;
}

}  // namespace

std::vector<IpfElement> solve_left(IpfElement const &a, IpfElement const &b) {
  require_same_dim(a.dim(), b.dim(), "solve_left");
  // chi a = b gives chi (a a^-1) = b a^-1, a restriction of chi.
  return filter_candidates(compose(b, inverse(a)),
                           [&](IpfElement const &chi) { return compose(chi, a) == b; });
}

std::vector<IpfElement> solve_right(IpfElement const &a, IpfElement const &b) {
  require_same_dim(a.dim(), b.dim(), "solve_right");
  // a chi = b gives (a^-1 a) chi = a^-1 b, a restriction of chi.
  return filter_candidates(compose(inverse(a), b),
                           [&](IpfElement const &chi) { return compose(a, chi) == b; });
}

IpfElement shift_element(std::size_t n, Int k) {
  if (k < 0) {
    throw Error(ErrorKind::NonPositiveCoordinate, "shift step must be non-negative");
  }
  return IpfElement(Permutation::identity(n), Point::ones(n),
                    Point(IntVec::ones(n).plus_scalar(k)));
}

}  // namespace ipf
