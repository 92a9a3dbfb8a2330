#include "ipf/lattice.hpp"

#include <cstdlib>
#include <string>

namespace ipf {

namespace {

Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

void axpy(IntVec &target, Int q, IntVec const &row) {
  if (q != 0) {
    target = target - row * q;
  }
}

void check_cap(IntVec const &v) {
  for (Int c : v) {
    if (c > kLatticeEntryCap || c < -kLatticeEntryCap) {
      throw Error(ErrorKind::Overflow, "lattice entry exceeds 2^62");
    }
  }
}

}  // namespace

std::size_t pivot_column(IntVec const &row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 0) {
      return i;
    }
  }
  return row.size();
}

LatticeBasis hnf_basis(std::size_t n, std::span<IntVec const> vectors) {
  std::vector<IntVec> rows;
  for (auto const &v : vectors) {
    require_same_dim(n, v.size(), "hnf_basis");
    if (!v.is_zero()) {
      rows.push_back(v);
    }
  }

  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    // Euclid on column col among rows[r..] until one nonzero entry remains.
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] != 0 &&
            (best == rows.size() ||
             std::llabs(rows[i][col]) < std::llabs(rows[best][col]))) {
          best = i;
        }
      }
      if (best == rows.size()) {
        break;
      }
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] != 0) {
          axpy(rows[i], rows[i][col] / rows[r][col], rows[r]);
          check_cap(rows[i]);
          done = done && rows[i][col] == 0;
        }
      }
      if (done) {
        if (rows[r][col] < 0) {
          rows[r] = -rows[r];
        }
        ++r;
        break;
      }
    }
  }
  rows.resize(r);

  for (std::size_t k = 0; k < rows.size(); ++k) {
    std::size_t const p = pivot_column(rows[k]);
    for (std::size_t j = 0; j < k; ++j) {
      axpy(rows[j], floor_div(rows[j][p], rows[k][p]), rows[k]);
      check_cap(rows[j]);
    }
  }
  return LatticeBasis{n, std::move(rows)};
}

bool lattice_contains(LatticeBasis const &lattice, IntVec const &v) {
  require_same_dim(lattice.n, v.size(), "lattice_contains");
  IntVec rest = v;
  for (auto const &row : lattice.rows) {
    std::size_t const p = pivot_column(row);
    for (std::size_t c = 0; c < p; ++c) {
      if (rest[c] != 0) {
        return false;
      }
    }
    if (rest[p] % row[p] != 0) {
      return false;
    }
    axpy(rest, rest[p] / row[p], row);
  }
  return rest.is_zero();
}

IntVec lattice_reduce(LatticeBasis const &lattice, IntVec v) {
  require_same_dim(lattice.n, v.size(), "lattice_reduce");
  for (auto const &row : lattice.rows) {
    std::size_t const p = pivot_column(row);
    axpy(v, floor_div(v[p], row[p]), row);
  }
  return v;
}

}  // namespace ipf
