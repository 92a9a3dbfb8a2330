#include <doctest.h>

#include "ipf/quotient.hpp"
#include "test_util.hpp"

using namespace ipf;

namespace {

IpfElement worked() { return elem({2, 1}, {2, 1}, {1, 3}); }
IpfElement partner() { return elem({1, 2}, {2, 2}, {1, 1}); }

QuotientElement quo(std::initializer_list<Int> s, std::initializer_list<Int> z) {
  return {Permutation(s), IntVec(z)};
}

}  // namespace

TEST_CASE("bicyclic_mul") {
  CHECK(bicyclic_mul({0, 1}, {1, 0}) == std::pair<Int, Int>{0, 0});
  CHECK(bicyclic_mul({1, 0}, {0, 1}) == std::pair<Int, Int>{1, 1});
  CHECK(bicyclic_mul({2, 3}, {1, 4}) == std::pair<Int, Int>{2, 6});
  // Associative on a small window.
  for (Int a = 0; a < 4; ++a)
    for (Int b = 0; b < 4; ++b)
      for (Int c = 0; c < 4; ++c)
        for (Int d = 0; d < 4; ++d)
          for (Int e = 0; e < 3; ++e)
            for (Int f = 0; f < 3; ++f) {
              CHECK(bicyclic_mul(bicyclic_mul({a, b}, {c, d}), {e, f}) ==
                    bicyclic_mul({a, b}, bicyclic_mul({c, d}, {e, f})));
            }
}

TEST_CASE("psi") {
  CHECK(format_semidirect(psi(identity_element(2))) == "sdp{s=[1,2]; p=[(0,0),(0,0)]}");
  CHECK(format_semidirect(psi(worked())) == "sdp{s=[2,1]; p=[(0,0),(1,2)]}");
  CHECK(psi(worked()) == SemidirectPair{Permutation{2, 1}, IntVec{0, 1}, IntVec{0, 2}});
  CHECK(sd_mul(psi(worked()), psi(partner())) == psi(compose(worked(), partner())));
  auto const u = enumerate_universe(2, 2);
  for (auto const &a : u) {
    for (auto const &b : u) {
      CHECK(sd_mul(psi(a), psi(b)) == psi(compose(a, b)));
    }
  }
}

TEST_CASE("upsilon") {
  for (auto const &e : enumerate_idempotents(2, 3)) {
    CHECK(upsilon(e) == quotient_identity(2));
  }
  CHECK(upsilon(worked()) == quo({2, 1}, {0, -1}));
  CHECK(format_quotient(upsilon(worked())) == "quo{s=[2,1]; z=[0,-1]}");
  CHECK(upsilon(compose(worked(), partner())) ==
        quotient_mul(upsilon(worked()), upsilon(partner())));
}

TEST_CASE("quotient group operations") {
  CHECK(quotient_mul(quo({2, 1}, {0, -1}), quo({2, 1}, {0, -1})) == quo({1, 2}, {-1, -1}));
  CHECK(quotient_inv(quo({1, 2}, {3, -2})) == quo({1, 2}, {-3, 2}));
  CHECK(quotient_inv(quo({2, 1}, {0, -1})) == quo({2, 1}, {1, 0}));
  auto const g = quo({2, 3, 1}, {4, -1, 7});
  CHECK(quotient_inv(quotient_inv(g)) == g);
  CHECK(quotient_mul(g, quotient_inv(g)) == quotient_identity(3));
  CHECK(quotient_mul(quotient_inv(g), g) == quotient_identity(3));
}

TEST_CASE("mg_related") {
  auto const b = elem({2, 1}, {3, 2}, {2, 4});
  CHECK(mg_related(worked(), b));
  CHECK(upsilon(b) == quo({2, 1}, {0, -1}));
  CHECK(mg_related(worked(), worked()));
  CHECK_FALSE(mg_related(worked(), elem({1, 2}, {2, 1}, {1, 3})));
}

TEST_CASE("top_of_class") {
  CHECK(top_of_class(elem({1, 2}, {3, 2}, {2, 4})) == elem({1, 2}, {2, 1}, {1, 3}));
  CHECK(top_of_class(identity_element(3)) == identity_element(3));
  // Lowering each coordinate independently beats a uniform shift.
  auto const t = top_of_class(worked());
  CHECK(t == elem({2, 1}, {1, 1}, {1, 2}));
  CHECK(mg_related(t, worked()));
  CHECK(natural_leq(worked(), t));
  CHECK(top_of_class(elem({1, 2}, {3, 3}, {3, 2})) == elem({1, 2}, {1, 2}, {1, 1}));
  for (auto const &a : enumerate_universe(2, 3)) {
    auto const top = top_of_class(a);
    CHECK(natural_leq(a, top));
    CHECK(top_of_class(top) == top);
  }
}
