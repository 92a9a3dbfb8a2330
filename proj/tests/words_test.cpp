#include <doctest.h>

#include <random>

#include "ipf/equations.hpp"
#include "ipf/quotient.hpp"
#include "ipf/words.hpp"
#include "test_util.hpp"

using namespace ipf;

namespace {

IpfElement eval(std::string_view text, std::size_t n) { return evaluate(parse(text), n); }

std::optional<std::size_t> syntax_offset(std::string_view text) {
  try {
    parse(text);
  } catch (Error const &e) {
    if (e.kind() == ErrorKind::SyntaxError) return e.position();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("parse builds the expected tree") {
  auto const e = parse("P1*Q1");
  auto const *prod = std::get_if<Product>(&e.node);
  REQUIRE(prod != nullptr);
  REQUIRE(std::holds_alternative<GenP>(prod->left->node));
  REQUIRE(std::holds_alternative<GenQ>(prod->right->node));
  CHECK(std::get<GenP>(prod->left->node).index == 1);
  CHECK(prod->right->offset == 3);

  auto const inv = parse("ipf{n=2; s=[2,1]; x=[2,1]; y=[1,3]}^-1");
  auto const *node = std::get_if<Inverse>(&inv.node);
  REQUIRE(node != nullptr);
  REQUIRE(std::holds_alternative<ElementLiteral>(node->child->node));
  CHECK(std::get<ElementLiteral>(node->child->node).value == elem({2, 1}, {2, 1}, {1, 3}));
}

TEST_CASE("syntax errors carry offsets") {
  CHECK(syntax_offset("P1**Q1") == 3);
  CHECK(syntax_offset("") == 0);
  CHECK(syntax_offset("(P1") == 3);
  CHECK(syntax_offset("P") == 1);
  CHECK(syntax_offset("P1 Q1") == 3);
  CHECK(syntax_offset("s[2,1") == 5);
  CHECK(syntax_offset("P99999999999999999999999") == 1);
  CHECK(syntax_offset("ipf{n=2; s=[2,1]; x=[0,1]; y=[1,3]}").has_value());
  CHECK(syntax_offset(std::string(300, '(') + "I" + std::string(300, ')')).has_value());
  CHECK_FALSE(syntax_offset(" ( P1 * Q2 ) ^-1 ").has_value());
}

TEST_CASE("evaluate") {
  CHECK(eval("P1*Q1", 2) == identity_element(2));
  CHECK(eval("Q1*P1", 2) == elem({1, 2}, {2, 1}, {2, 1}));
  CHECK(eval("s[2,1]*s[2,1]", 2) == identity_element(2));
  CHECK(eval("I", 3) == identity_element(3));
  CHECK(eval("e[2,3]", 2) == idempotent_on(Point{2, 3}));
  CHECK(eval("P1*P2", 2) == shift_element(2, 1));
  CHECK(eval("(P1*s[2,1])^-1", 2) == inverse(compose(eval("P1", 2), eval("s[2,1]", 2))));
  CHECK(eval("ipf{n=2; s=[2,1]; x=[2,1]; y=[1,3]} * ipf{n=2; s=[1,2]; x=[2,2]; y=[1,1]}", 2) ==
        elem({2, 1}, {2, 2}, {1, 2}));
  CHECK(error_kind([] { eval("P3", 2); }) == ErrorKind::IndexOutOfRange);
  CHECK(error_kind([] { eval("Q0", 2); }) == ErrorKind::IndexOutOfRange);
  CHECK(error_kind([] { eval("s[2,1]", 3); }) == ErrorKind::DimensionMismatch);
  CHECK(error_kind([] { eval("s[2,2]", 2); }) == ErrorKind::NotAPermutation);
}

TEST_CASE("generator laws") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t i = 1; i <= n; ++i) {
      auto const p = "P" + std::to_string(i);
      auto const q = "Q" + std::to_string(i);
      CHECK(eval(p + "*" + q, n) == identity_element(n));
      IntVec up = IntVec::ones(n);
      up[i - 1] = 2;
      CHECK(eval(q + "*" + p, n) == idempotent_on(Point(up)));
    }
  }
}

TEST_CASE("infer_dimension") {
  CHECK(infer_dimension(parse("P1*Q1")) == std::nullopt);
  CHECK(infer_dimension(parse("P1*s[2,3,1]")) == 3);
  CHECK(infer_dimension(parse("e[4]")) == 1);
  CHECK(infer_dimension(parse("ipf{n=2; s=[1,2]; x=[1,1]; y=[1,1]}^-1")) == 2);
}

TEST_CASE("format_element round trip") {
  CHECK(format_element(identity_element(2)) == "ipf{n=2; s=[1,2]; x=[1,1]; y=[1,1]}");
  for (auto const &a : enumerate_universe(2, 3)) {
    CHECK(eval(format_element(a), 2) == a);
  }
}

TEST_CASE("bicyclic_word") {
  auto const alpha = eval("P1", 2);
  CHECK(bicyclic_word(alpha, "pq") == identity_element(2));
  CHECK(bicyclic_word(alpha, "qp") == idempotent_on(Point{2, 1}));
  CHECK(bicyclic_word(alpha, "") == identity_element(2));
  CHECK(error_kind([] { bicyclic_word(identity_element(2), "p"); }) ==
        ErrorKind::NotProperEmbedding);
  CHECK(error_kind([&] { bicyclic_word(alpha, "px"); }) == ErrorKind::SyntaxError);

  // q^i p^j is (id, (i+1)1, (j+1)1), and products follow the bicyclic rule.
  auto const g = shift_element(2, 1);
  auto word = [](Int i, Int j) { return std::string(i, 'q') + std::string(j, 'p'); };
  for (Int i = 0; i < 4; ++i)
    for (Int j = 0; j < 4; ++j) {
      CHECK(bicyclic_word(g, word(i, j)) == elem({1, 2}, {i + 1, i + 1}, {j + 1, j + 1}));
      for (Int k = 0; k < 3; ++k)
        for (Int l = 0; l < 3; ++l) {
          auto const [s, t] = bicyclic_mul({i, j}, {k, l});
          CHECK(compose(bicyclic_word(g, word(i, j)), bicyclic_word(g, word(k, l))) ==
                bicyclic_word(g, word(s, t)));
        }
    }
}

TEST_CASE("parser survives random input") {
  std::mt19937_64 rng(7);
  std::string const alphabet = "PQIse ipf{}[]=;,n=xy*()^-10123456789 ";
  for (int round = 0; round < 5000; ++round) {
    std::string text(rng() % 40, ' ');
    for (auto &c : text) c = alphabet[rng() % alphabet.size()];
    try {
      evaluate(parse(text), 2);
    } catch (Error const &) {
    }
  }
  CHECK(true);
}
