#pragma once

#include <string>

#include "ipf/element.hpp"

namespace ipf {

// An element of S_n x| C^n(p,q): a permutation together with n bicyclic
// pairs [first, second] stored zero-based, one pair per coordinate.
struct SemidirectPair {
  Permutation sigma;
  IntVec first;
  IntVec second;

  bool operator==(SemidirectPair const &) const = default;
  auto operator<=>(SemidirectPair const &) const = default;
};

// An element (sigma, z) of S_n x| Z^n.
struct QuotientElement {
  Permutation sigma;
  IntVec z;

  bool operator==(QuotientElement const &) const = default;
  auto operator<=>(QuotientElement const &) const = default;
};

// The bicyclic product on N_0 x N_0:
// (i,j) * (k,l) = (i + max(j,k) - j, l + max(j,k) - k).
std::pair<Int, Int> bicyclic_mul(std::pair<Int, Int> g, std::pair<Int, Int> h);

// a -> (sigma, [(x)sigma - 1, y - 1]); a monoid isomorphism.
SemidirectPair psi(IpfElement const &a);

// (s, P) * (t, Q) = (s t, (P)t * Q) with the coordinate action applied to
// both halves of P and the bicyclic product taken coordinatewise.
SemidirectPair sd_mul(SemidirectPair const &g, SemidirectPair const &h);

// a -> (sigma, (x)sigma - y); its kernel is the least group congruence.
QuotientElement upsilon(IpfElement const &a);

QuotientElement quotient_identity(std::size_t n);
QuotientElement quotient_mul(QuotientElement const &g, QuotientElement const &h);
QuotientElement quotient_inv(QuotientElement const &g);

bool mg_related(IpfElement const &a, IpfElement const &b);

// The maximum of the mg-class of a under the natural partial order: the
// class member with the smallest generators, obtained by lowering y to
// max(1, 1 - d) coordinatewise where d = (x)sigma - y.
IpfElement top_of_class(IpfElement const &a);

// "quo{s=[2,1]; z=[0,-1]}"
std::string format_quotient(QuotientElement const &g);
// "sdp{s=[2,1]; p=[(0,0),(1,2)]}"
std::string format_semidirect(SemidirectPair const &g);

}  // namespace ipf
