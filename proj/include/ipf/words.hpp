#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ipf/element.hpp"

namespace ipf {

// Expression language over IPF(N^n), version 1:
//
//   expr    := term ('*' term)*
//   term    := atom | atom '^-1'
//   atom    := 'P' index | 'Q' index | 'I' | permlit | elemlit | idemlit
//            | '(' expr ')'
//   permlit := 's[' ints ']'
//   idemlit := 'e[' ints ']'
//   elemlit := 'ipf{n=' int '; s=[' ints ']; x=[' ints ']; y=[' ints ']}'
//
// Products are read left to right in application order: "A*B" applies A
// first. Whitespace between tokens is ignored.
//
// P_i is the total map shifting coordinate i up by one and Q_i is its
// inverse, so P_i*Q_i = I while Q_i*P_i is the identity of the filter above
// 1 + e_i. Permutation literals denote the units (sigma, 1, 1).

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct ElementLiteral {
  IpfElement value;
};
struct GenP {
  std::size_t index;
};
struct GenQ {
  std::size_t index;
};
struct IdentityLiteral {};
struct PermLiteral {
  std::vector<Int> image;
};
struct IdemLiteral {
  std::vector<Int> coords;
};
struct Product {
  ExprPtr left;
  ExprPtr right;
};
struct Inverse {
  ExprPtr child;
};

struct Expr {
  std::variant<ElementLiteral, GenP, GenQ, IdentityLiteral, PermLiteral,
               IdemLiteral, Product, Inverse>
      node;
  std::size_t offset = 0;  // where the node starts in the source text
};

// Throws SyntaxError carrying the byte offset of the first bad token.
Expr parse(std::string_view text);

// Throws IndexOutOfRange, DimensionMismatch or the construction errors of
// the literals.
IpfElement evaluate(Expr const &e, std::size_t n);

// Dimension fixed by the first literal in e, if any.
std::optional<std::size_t> infer_dimension(Expr const &e);

// "ipf{n=2; s=[2,1]; x=[2,1]; y=[1,3]}"
std::string format_element(IpfElement const &a);

// Maps p to alpha and q to alpha^-1 and folds the word; the empty word is
// the identity alpha alpha^-1 of the bicyclic submonoid. Requires
// up(alpha.y) to be a proper subset of up(alpha.x).
IpfElement bicyclic_word(IpfElement const &alpha, std::string_view word);

}  // namespace ipf
