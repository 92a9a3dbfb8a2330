#pragma once

#include <cstddef>
#include <vector>

#include "ipf/element.hpp"

namespace ipf {

// {xi : a <= xi} in the natural order. Finite: xi.x ranges over the points
// below a.x. Sorted by (x, y).
std::vector<IpfElement> up_set(IpfElement const &a);

// {chi : chi a = b}, sorted.
std::vector<IpfElement> solve_left(IpfElement const &a, IpfElement const &b);

// {chi : a chi = b}, sorted.
std::vector<IpfElement> solve_right(IpfElement const &a, IpfElement const &b);

// The total map z -> z + k*1.
IpfElement shift_element(std::size_t n, Int k);

}  // namespace ipf
