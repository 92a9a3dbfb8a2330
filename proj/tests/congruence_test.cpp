#include <doctest.h>

#include <set>

#include "ipf/congruence.hpp"
#include "ipf/lattice.hpp"
#include "ipf/quotient.hpp"
#include "test_util.hpp"

using namespace ipf;

namespace {

LatticeBasis hnf(std::size_t n, std::vector<IntVec> const &vs) { return hnf_basis(n, vs); }

QuotientElement quo(std::initializer_list<Int> s, std::initializer_list<Int> z) {
  return {Permutation(s), IntVec(z)};
}

NormalSubgroupRep closure(std::vector<QuotientElement> const &gens, std::size_t n) {
  return normal_closure(gens, n);
}

// Lattice points in [-r, r]^2 spanned by small combinations of the inputs.
std::set<IntVec> brute_span(std::vector<IntVec> const &vs, Int r) {
  std::set<IntVec> out;
  Int const c = 8;
  for (Int a = -c; a <= c; ++a)
    for (Int b = -c; b <= c; ++b)
      for (Int d = -c; d <= c; ++d) {
        IntVec v = vs[0] * a + vs[1] * b + vs[2] * d;
        if (v.min() >= -r && v.max() <= r) out.insert(v);
      }
  return out;
}

}  // namespace

TEST_CASE("hnf_basis") {
  std::vector<IntVec> const gens{{2, 0}, {0, 2}, {1, 1}};
  auto const basis = hnf(2, gens);
  CHECK(basis.rows == std::vector<IntVec>{{1, 1}, {0, 2}});
  auto const spanned = brute_span(gens, 4);
  for (auto const &v : box_points(IntVec{-4, -4}, IntVec{4, 4})) {
    CHECK(lattice_contains(basis, v) == (spanned.count(v) == 1));
  }
  CHECK(hnf(2, {}).rank() == 0);
  CHECK(hnf(1, {IntVec{3}}).rows == std::vector<IntVec>{{3}});
  CHECK(hnf(1, {IntVec{-6}, IntVec{4}}).rows == std::vector<IntVec>{{2}});
  CHECK(hnf(2, {IntVec{0, 0}}).rank() == 0);
  CHECK(hnf(3, {IntVec{1, 2, 3}, IntVec{2, 4, 6}}).rows == std::vector<IntVec>{{1, 2, 3}});
  CHECK(error_kind([] { hnf(2, {IntVec{1, 2, 3}}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("lattice_contains and lattice_reduce") {
  auto const l = hnf(2, {IntVec{1, 1}, IntVec{0, 2}});
  CHECK(lattice_contains(l, IntVec{2, 4}));
  CHECK(lattice_contains(l, IntVec{0, 0}));
  CHECK_FALSE(lattice_contains(l, IntVec{1, 2}));
  auto const three = hnf(1, {IntVec{3}});
  CHECK_FALSE(lattice_contains(three, IntVec{4}));
  CHECK(lattice_contains(three, IntVec{-9}));
  CHECK(lattice_contains(hnf(2, {}), IntVec{0, 0}));
  CHECK(lattice_reduce(three, IntVec{-4}) == IntVec{2});
  CHECK(lattice_reduce(l, IntVec{5, 2}) == lattice_reduce(l, IntVec{1, 2}));
  CHECK(lattice_reduce(l, IntVec{5, 2}) != lattice_reduce(l, IntVec{1, 1}));
}

TEST_CASE("normal_closure, hand derived") {
  auto const n1 = closure({quo({1}, {3})}, 1);
  CHECK(n1.perm_part() == std::vector<Permutation>{Permutation{1}});
  CHECK(n1.lattice.rows == std::vector<IntVec>{{3}});

  auto const z2 = closure({quo({1, 2}, {1, 0})}, 2);
  CHECK(z2.perm_part() == std::vector<Permutation>{Permutation{1, 2}});
  CHECK(z2.lattice.rows == std::vector<IntVec>{{1, 0}, {0, 1}});

  auto const sw = closure({quo({2, 1}, {0, 0})}, 2);
  CHECK(sw.perm_part() == std::vector<Permutation>{Permutation{1, 2}, Permutation{2, 1}});
  CHECK(sw.lattice.rows == std::vector<IntVec>{{1, -1}});
  CHECK(sw.reps.at(Permutation{2, 1}) == IntVec{0, 0});
  CHECK(is_closed_normal(sw));

  auto const trivial = closure({quotient_identity(2)}, 2);
  CHECK(trivial.perm_part().size() == 1);
  CHECK(trivial.lattice.rank() == 0);
}

TEST_CASE("normal_closure in dimension 3") {
  // A 3-cycle generates A_3; the translation part is forced to the sum-zero
  // lattice by the (e_i)pi - e_i vectors.
  auto const a3 = closure({quo({2, 3, 1}, {0, 0, 0})}, 3);
  CHECK(a3.perm_part().size() == 3);
  CHECK(a3.lattice.rows == std::vector<IntVec>{{1, 0, -1}, {0, 1, -1}});
  CHECK(is_closed_normal(a3));

  auto const s3 = closure({quo({2, 1, 3}, {0, 0, 0})}, 3);
  CHECK(s3.perm_part().size() == 6);
  CHECK(is_closed_normal(s3));

  auto const t = closure({quo({1, 2, 3}, {1, 0, 0})}, 3);
  CHECK(t.lattice.rank() == 3);
  CHECK(t.perm_part().size() == 1);
}

TEST_CASE("subgroup_contains") {
  auto const sw = closure({quo({2, 1}, {0, 0})}, 2);
  CHECK(subgroup_contains(sw, quo({1, 2}, {1, -1})));
  CHECK_FALSE(subgroup_contains(sw, quo({1, 2}, {1, 1})));
  CHECK(subgroup_contains(sw, quotient_identity(2)));
  CHECK(subgroup_contains(sw, quo({2, 1}, {3, -3})));
  CHECK_FALSE(subgroup_contains(sw, quo({2, 1}, {1, 0})));
}

TEST_CASE("congruence_from_pair") {
  auto const a = elem({2, 1}, {2, 1}, {1, 3});
  auto const same = congruence_from_pair(a, a);
  CHECK(same.kind == CongruenceKind::Identity);
  CHECK(format_congruence(same) == "cong{kind=identity}");
  CHECK(congruence_relates(same, a, a));
  CHECK_FALSE(congruence_relates(same, a, identity_element(2)));

  // Same upsilon image: the least group congruence.
  auto const b = elem({2, 1}, {3, 2}, {2, 4});
  auto const mg = congruence_from_pair(a, b);
  CHECK(mg.kind == CongruenceKind::Group);
  CHECK(mg.subgroup->perm_part().size() == 1);
  CHECK(mg.subgroup->lattice.rank() == 0);
  auto const u = enumerate_universe(2, 2);
  for (auto const &c : u) {
    for (auto const &d : u) {
      CHECK(congruence_relates(mg, c, d) == mg_related(c, d));
    }
  }

  auto const gap3 = congruence_from_pair(elem({1}, {4}, {1}), elem({1}, {1}, {1}));
  CHECK(gap3.subgroup->lattice.rows == std::vector<IntVec>{{3}});
  // Upsilon gaps 6 and 4.
  CHECK(congruence_relates(gap3, elem({1}, {7}, {1}), elem({1}, {1}, {1})));
  CHECK_FALSE(congruence_relates(gap3, elem({1}, {5}, {1}), elem({1}, {1}, {1})));

  auto const swap = congruence_from_pair(elem({2, 1}, {1, 1}, {1, 1}), identity_element(2));
  CHECK(format_congruence(swap) ==
        "cong{kind=group; K=[[1,2],[2,1]]; reps=[[0,0],[0,0]]; L=[[1,-1]]}");
}
