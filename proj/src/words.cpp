#include "ipf/words.hpp"

#include <cctype>
#include <string>

namespace ipf {

namespace {

constexpr std::size_t kMaxNesting = 256;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) {
      fail("unexpected trailing input");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(std::string const &what) const { fail_at(pos_, what); }

  [[noreturn]] void fail_at(std::size_t pos, std::string const &what) const {
    throw Error(ErrorKind::SyntaxError,
                what + " at offset " + std::to_string(pos), pos);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (peek(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      fail(std::string("expected '") + c + "'");
    }
  }

  void expect_word(std::string_view w) {
    for (char c : w) {
      expect(c);
    }
  }

  Int integer() {
    skip_ws();
    std::size_t const start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer");
    }
    Int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Int digit = text_[pos_] - '0';
      if (__builtin_mul_overflow(value, Int{10}, &value) ||
          __builtin_add_overflow(value, digit, &value)) {
        fail_at(start, "integer too large");
      }
      ++pos_;
    }
    return negative ? -value : value;
  }

  std::vector<Int> int_list() {
    expect('[');
    std::vector<Int> out;
    if (accept(']')) {
      return out;
    }
    do {
      out.push_back(integer());
    } while (accept(','));
    expect(']');
    return out;
  }

  std::size_t index() {
    skip_ws();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected generator index");
    }
    Int v = integer();
    return static_cast<std::size_t>(v);
  }

  Expr expr() {
    if (++depth_ > kMaxNesting) {
      fail("expression nested too deeply");
    }
    Expr left = term();
    while (accept('*')) {
      Expr right = term();
      std::size_t const offset = left.offset;
      left = Expr{Product{std::make_unique<Expr>(std::move(left)),
                          std::make_unique<Expr>(std::move(right))},
                  offset};
    }
    --depth_;
    return left;
  }

  Expr term() {
    Expr a = atom();
    if (accept('^')) {
      expect('-');
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != '1') {
        fail("expected '1'");
      }
      ++pos_;
      std::size_t const offset = a.offset;
      return Expr{Inverse{std::make_unique<Expr>(std::move(a))}, offset};
    }
    return a;
  }

  Expr atom() {
    skip_ws();
    std::size_t const start = pos_;
    if (pos_ >= text_.size()) {
      fail("unexpected end of input");
    }
    char const c = text_[pos_];
    switch (c) {
      case 'P':
        ++pos_;
        return Expr{GenP{index()}, start};
      case 'Q':
        ++pos_;
        return Expr{GenQ{index()}, start};
      case 'I':
        ++pos_;
        return Expr{IdentityLiteral{}, start};
      case 's':
        ++pos_;
        return Expr{PermLiteral{int_list()}, start};
      case 'e':
        ++pos_;
        return Expr{IdemLiteral{int_list()}, start};
      case 'i':
        return element_literal();
      case '(': {
        ++pos_;
        Expr inner = expr();
        expect(')');
        inner.offset = start;
        return inner;
      }
      default:
        fail(std::string("unexpected character '") + c + "'");
    }
  }

  Expr element_literal() {
    std::size_t const start = pos_;
    expect_word("ipf");
    expect('{');
    expect_word("n=");
    Int const n = integer();
    expect(';');
    expect_word("s=");
    auto const s = int_list();
    expect(';');
    expect_word("x=");
    auto const x = int_list();
    expect(';');
    expect_word("y=");
    auto const y = int_list();
    expect('}');
    if (n < 1 || static_cast<std::size_t>(n) > kMaxDim) {
      fail_at(start, "element dimension out of range");
    }
    try {
      return Expr{ElementLiteral{make_element(static_cast<std::size_t>(n),
                                              Permutation(s), IntVec(x), IntVec(y))},
                  start};
    } catch (Error const &err) {
      fail_at(start, std::string("invalid element literal (") + err.what() + ")");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

void check_index(std::size_t i, std::size_t n, char gen) {
  if (i < 1 || i > n) {
    throw Error(ErrorKind::IndexOutOfRange,
                std::string(1, gen) + std::to_string(i) + " in dimension " +
                    std::to_string(n));
  }
}

IpfElement shift_up(std::size_t n, std::size_t i) {
  return IpfElement(Permutation::identity(n), Point::ones(n),
                    Point(IntVec::ones(n) + IntVec::unit(n, i - 1)));
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

IpfElement evaluate(Expr const &e, std::size_t n) {
  return std::visit(
      overloaded{
          [&](ElementLiteral const &lit) {
            require_same_dim(n, lit.value.dim(), "element literal");
            return lit.value;
          },
          [&](GenP const &g) {
            check_index(g.index, n, 'P');
            return shift_up(n, g.index);
          },
          [&](GenQ const &g) {
            check_index(g.index, n, 'Q');
            return inverse(shift_up(n, g.index));
          },
          [&](IdentityLiteral const &) { return identity_element(n); },
          [&](PermLiteral const &p) {
            require_same_dim(n, p.image.size(), "permutation literal");
            Permutation const sigma(p.image);
            return IpfElement(sigma, Point::ones(n), Point::ones(n));
          },
          [&](IdemLiteral const &lit) {
            require_same_dim(n, lit.coords.size(), "idempotent literal");
            return idempotent_on(Point(IntVec(lit.coords)));
          },
          [&](Product const &p) {
            return compose(evaluate(*p.left, n), evaluate(*p.right, n));
          },
          [&](Inverse const &inv) { return inverse(evaluate(*inv.child, n)); },
      },
      e.node);
}

std::optional<std::size_t> infer_dimension(Expr const &e) {
  return std::visit(
      overloaded{
          [](ElementLiteral const &lit) -> std::optional<std::size_t> {
            return lit.value.dim();
          },
          [](PermLiteral const &p) -> std::optional<std::size_t> {
            return p.image.size();
          },
          [](IdemLiteral const &lit) -> std::optional<std::size_t> {
            return lit.coords.size();
          },
          [](Product const &p) {
            auto left = infer_dimension(*p.left);
            return left ? left : infer_dimension(*p.right);
          },
          [](Inverse const &inv) { return infer_dimension(*inv.child); },
          [](auto const &) -> std::optional<std::size_t> { return std::nullopt; },
      },
      e.node);
}

std::string format_element(IpfElement const &a) {
  return "ipf{n=" + std::to_string(a.dim()) + "; s=" + format_permutation(a.sigma()) +
         "; x=" + format_ints(a.x()) + "; y=" + format_ints(a.y()) + "}";
}

IpfElement bicyclic_word(IpfElement const &alpha, std::string_view word) {
  if (!alpha.x().vec().leq(alpha.y()) || alpha.x() == alpha.y()) {
    throw Error(ErrorKind::NotProperEmbedding,
                "range of " + format_element(alpha) +
                    " is not a proper subfilter of its domain");
  }
  IpfElement const alpha_inv = inverse(alpha);
  IpfElement acc = compose(alpha, alpha_inv);
  for (std::size_t i = 0; i < word.size(); ++i) {
    switch (word[i]) {
      case 'p':
        acc = compose(acc, alpha);
        break;
      case 'q':
        acc = compose(acc, alpha_inv);
        break;
      default:
        throw Error(ErrorKind::SyntaxError,
                    std::string("bicyclic words use only p and q, got '") + word[i] + "'",
                    i);
    }
  }
  return acc;
}

}  // namespace ipf
