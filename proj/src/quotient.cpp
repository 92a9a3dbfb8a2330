#include "ipf/quotient.hpp"

#include <algorithm>

namespace ipf {

std::pair<Int, Int> bicyclic_mul(std::pair<Int, Int> g, std::pair<Int, Int> h) {
  auto const [i, j] = g;
  auto const [k, l] = h;
  Int const m = std::max(j, k);
  return {checked::add(i, m - j), checked::add(l, m - k)};
}

SemidirectPair psi(IpfElement const &a) {
  return SemidirectPair{a.sigma(), a.sigma().apply(a.x()).plus_scalar(-1),
                        a.y().vec().plus_scalar(-1)};
}

SemidirectPair sd_mul(SemidirectPair const &g, SemidirectPair const &h) {
  require_same_dim(g.sigma.size(), h.sigma.size(), "sd_mul");
  IntVec const gf = h.sigma.apply(g.first);
  IntVec const gs = h.sigma.apply(g.second);
  std::size_t const n = gf.size();
  SemidirectPair r{g.sigma * h.sigma, IntVec(n), IntVec(n)};
  for (std::size_t i = 0; i < n; ++i) {
    auto const [p, q] = bicyclic_mul({gf[i], gs[i]}, {h.first[i], h.second[i]});
    r.first[i] = p;
    r.second[i] = q;
  }
  return r;
}

QuotientElement upsilon(IpfElement const &a) {
  return QuotientElement{a.sigma(), a.sigma().apply(a.x()) - a.y()};
}

QuotientElement quotient_identity(std::size_t n) {
  return QuotientElement{Permutation::identity(n), IntVec(n)};
}

QuotientElement quotient_mul(QuotientElement const &g, QuotientElement const &h) {
  require_same_dim(g.sigma.size(), h.sigma.size(), "quotient_mul");
  return QuotientElement{g.sigma * h.sigma, h.sigma.apply(g.z) + h.z};
}

QuotientElement quotient_inv(QuotientElement const &g) {
  Permutation const inv = g.sigma.inverse();
  return QuotientElement{inv, -inv.apply(g.z)};
}

bool mg_related(IpfElement const &a, IpfElement const &b) {
  require_same_dim(a.dim(), b.dim(), "mg_related");
  return upsilon(a) == upsilon(b);
}

IpfElement top_of_class(IpfElement const &a) {
  std::size_t const n = a.dim();
  IntVec const d = upsilon(a).z;
  // y - d = (x)sigma must stay positive, so y >= max(1, 1 - d).
  IntVec const y = max(IntVec::ones(n), IntVec::ones(n) - d);
  IntVec const x = a.sigma().inverse().apply(y + d);
  return IpfElement(a.sigma(), Point(x), Point(y));
}

std::string format_quotient(QuotientElement const &g) {
  return "quo{s=" + format_permutation(g.sigma) + "; z=" + format_ints(g.z) + "}";
}

std::string format_semidirect(SemidirectPair const &g) {
  std::string out = "sdp{s=" + format_permutation(g.sigma) + "; p=[";
  for (std::size_t i = 0; i < g.first.size(); ++i) {
    if (i != 0) {
      out += ',';
    }
    out += '(' + std::to_string(g.first[i]) + ',' + std::to_string(g.second[i]) + ')';
  }
  return out + "]}";
}

}  // namespace ipf
