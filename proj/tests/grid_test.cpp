#include <doctest.h>

#include "ipf/grid.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace ipf;

namespace {

IpfElement worked() { return elem({2, 1}, {2, 1}, {1, 3}); }

GridMap identity_table(Int bound) {
  GridMap f(2, bound);
  for (auto const &z : box_points(IntVec{1, 1}, IntVec{bound, bound})) {
    f.insert(z, z);
  }
  return f;
}

}  // namespace

TEST_CASE("realize") {
  CHECK(realize(identity_element(2), 3) == identity_table(3));
  CHECK(realize(identity_element(2), 3).size() == 9);
  auto const r = realize(worked(), 4);
  CHECK(r.at(IntVec{2, 1}) == IntVec{1, 3});
  CHECK_FALSE(r.at(IntVec{1, 4}).has_value());
  // (z)a = (z2, z1 + 1) on up(2,1); (4,4) -> (4,5) leaves the box.
  CHECK_FALSE(r.at(IntVec{4, 4}).has_value());
  CHECK(r.at(IntVec{3, 3}) == IntVec{3, 4});
  CHECK(error_kind([] { realize(elem({1, 2}, {5, 5}, {1, 1}), 4); }) ==
        ErrorKind::BoxTooSmall);
  CHECK(error_kind([] { GridMap(2, 1); }) == ErrorKind::BoxTooSmall);
}

TEST_CASE("grid_compose") {
  auto const a = worked();
  auto const b = elem({1, 2}, {2, 2}, {1, 1});
  auto const c = grid_compose(realize(a, 8), realize(b, 8));
  auto const direct = realize(compose(a, b), 8);
  // Truncation may drop points from the composite, never add or change them.
  for (auto const &[k, v] : c.entries()) {
    CHECK(direct.at(k) == v);
  }
  CHECK(c.size() > 0);
  GridMap const empty(2, 8);
  CHECK(grid_compose(empty, realize(a, 8)).empty());
  CHECK(grid_compose(realize(a, 8), empty).empty());
  CHECK(error_kind([&] { grid_compose(realize(a, 8), realize(b, 9)); }) ==
        ErrorKind::BoxMismatch);
}

TEST_CASE("insert keeps the table injective and inside the box") {
  GridMap f(2, 3);
  f.insert(IntVec{1, 1}, IntVec{2, 2});
  CHECK_THROWS_AS(f.insert(IntVec{1, 2}, IntVec{2, 2}), Error);
  CHECK_THROWS_AS(f.insert(IntVec{4, 1}, IntVec{1, 1}), Error);
}

TEST_CASE("is_order_iso") {
  for (auto const &a : enumerate_universe(2, 2)) {
    CHECK(is_order_iso(realize(a, 6)));
  }
  GridMap swapped = GridMap(2, 3);
  for (auto const &z : box_points(IntVec{1, 1}, IntVec{3, 3})) {
    IntVec v = z;
    if (z == IntVec{1, 2}) v = IntVec{2, 1};
    if (z == IntVec{2, 1}) v = IntVec{1, 2};
    swapped.insert(z, v);
  }
  CHECK_FALSE(is_order_iso(swapped));
  CHECK_FALSE(is_order_iso(GridMap(2, 3)));
  // A domain that is not an interval.
  GridMap holes(1, 4);
  holes.insert(IntVec{1}, IntVec{1});
  holes.insert(IntVec{3}, IntVec{2});
  CHECK_FALSE(is_order_iso(holes));
}

TEST_CASE("grid_recognize") {
  CHECK(grid_recognize(identity_table(3)) == identity_element(2));
  CHECK(grid_recognize(realize(worked(), 8)) == worked());
  GridMap swapped(2, 3);
  for (auto const &z : box_points(IntVec{1, 1}, IntVec{3, 3})) {
    swapped.insert(z, z == IntVec{1, 2}   ? IntVec{2, 1}
                      : z == IntVec{2, 1} ? IntVec{1, 2}
                                          : z);
  }
  CHECK(error_kind([&] { grid_recognize(swapped); }) == ErrorKind::NotOrderIso);
  // The generator sits in the corner, so x + e_i is outside the box.
  CHECK(error_kind([] { grid_recognize(realize(elem({1, 2}, {3, 3}, {1, 1}), 3)); }) ==
        ErrorKind::InsufficientBox);
}

TEST_CASE("grid realization agrees with the test oracle") {
  for (auto const &a : enumerate_universe(2, 2)) {
    oracle::Triple const t{a.sigma().one_line(), a.x().vec().to_vector(),
                           a.y().vec().to_vector()};
    auto const r = realize(a, 5);
    for (auto const &z : oracle::box(2, 5)) {
      auto const want = oracle::apply(t, z);
      auto const got = r.at(IntVec(std::span<Int const>(z)));
      bool const inside = want && (*want)[0] <= 5 && (*want)[1] <= 5;
      CHECK(got.has_value() == inside);
      if (got && inside) {
        CHECK(got->to_vector() == *want);
      }
    }
  }
}

TEST_CASE("witness_leq") {
  auto const a = elem({1}, {3}, {2});
  auto const b = elem({1}, {2}, {1});
  auto const w = witness_leq(a, b, 5);
  REQUIRE(w.has_value());
  // The witness restricts b's range: e = idempotent_on(a.y).
  CHECK(*w == idempotent_on(Point{2}));
  CHECK(compose(b, *w) == a);
  CHECK(witness_leq(b, b, 5).has_value());
  CHECK(compose(b, idempotent_on(b.y())) == b);
  CHECK_FALSE(witness_leq(a, elem({1}, {2}, {2}), 10).has_value());
}

TEST_CASE("witness_mg") {
  auto const a = worked();
  auto const b = elem({2, 1}, {3, 2}, {2, 4});
  auto const e = idempotent_on(Point{2, 4});
  CHECK(compose(a, e) == compose(b, e));
  auto const w = witness_mg(a, b, 4);
  REQUIRE(w.has_value());
  CHECK(compose(a, *w) == compose(b, *w));
  CHECK(witness_mg(a, a, 4) == idempotent_on(Point{1, 1}));
  CHECK_FALSE(witness_mg(a, elem({1, 2}, {2, 1}, {1, 3}), 4).has_value());
  CHECK_FALSE(witness_mg(a, elem({1, 2}, {2, 1}, {1, 3}), 8).has_value());
}

TEST_CASE("format_grid") {
  GridMap f(1, 3);
  f.insert(IntVec{2}, IntVec{1});
  f.insert(IntVec{3}, IntVec{2});
  CHECK(format_grid(f) == "grid{n=1;B=3}\n(2)->(1)\n(3)->(2)\n");
}
