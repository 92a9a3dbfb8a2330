#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ipf/vec.hpp"

namespace ipf {

// A sublattice of Z^n given by its row-style Hermite normal form: pivots
// move strictly right going down, pivots are positive, and entries above a
// pivot lie in [0, pivot).
struct LatticeBasis {
  std::size_t n = 0;
  std::vector<IntVec> rows;

  std::size_t rank() const noexcept { return rows.size(); }
  bool operator==(LatticeBasis const &) const = default;
};

// Entries beyond this magnitude raise Overflow.
inline constexpr Int kLatticeEntryCap = Int{1} << 62;

LatticeBasis hnf_basis(std::size_t n, std::span<IntVec const> vectors);

bool lattice_contains(LatticeBasis const &lattice, IntVec const &v);

// Canonical representative of v + L: pivot coordinates reduced into
// [0, pivot).
IntVec lattice_reduce(LatticeBasis const &lattice, IntVec v);

// Column index of the first nonzero entry of a basis row.
std::size_t pivot_column(IntVec const &row);

}  // namespace ipf
