#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ipf/lattice.hpp"
#include "ipf/quotient.hpp"

namespace ipf {

// A normal subgroup N of S_n x| Z^n in coset form:
//   N = { (pi, r_pi + l) : pi in K, l in L }
// where K is the projection of N to S_n and L = N intersected with Z^n.
struct NormalSubgroupRep {
  std::size_t n = 0;
  // K with its coset representatives, reduced modulo L; sorted by one-line
  // form of the permutation.
  std::map<Permutation, IntVec> reps;
  LatticeBasis lattice;

  std::vector<Permutation> perm_part() const;
  bool operator==(NormalSubgroupRep const &) const = default;
};

// Least normal subgroup containing gens. Throws CapExceeded past
// dimension_cap() and RepresentationFailure if the fixpoint is not closed.
NormalSubgroupRep normal_closure(std::span<QuotientElement const> gens,
                                 std::size_t n);

bool subgroup_contains(NormalSubgroupRep const &N, QuotientElement const &g);

// Checks every closure property of the coset form: subgroup axioms on K x L,
// S_n-invariance of L, and closure under conjugation by generators of
// S_n x| Z^n. Used after saturation and by tests.
bool is_closed_normal(NormalSubgroupRep const &N);

enum class CongruenceKind { Identity, Group };

// Every congruence other than equality contains the least group congruence,
// so it is the kernel of S_n x| Z^n -> (S_n x| Z^n)/N pulled back along
// upsilon.
struct CongruenceDescriptor {
  CongruenceKind kind = CongruenceKind::Identity;
  std::optional<NormalSubgroupRep> subgroup;  // present iff kind == Group
};

CongruenceDescriptor congruence_from_pair(IpfElement const &a, IpfElement const &b);

bool congruence_relates(CongruenceDescriptor const &desc, IpfElement const &c,
                        IpfElement const &d);

// "cong{kind=group; K=[[1,2],[2,1]]; reps=[[0,0],[0,0]]; L=[[1,-1]]}" or
// "cong{kind=identity}".
std::string format_congruence(CongruenceDescriptor const &desc);

}  // namespace ipf
