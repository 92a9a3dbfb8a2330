#include "ipf/element.hpp"

#include <string>

namespace ipf {

IpfElement::IpfElement(Permutation sigma, Point x, Point y)
    : sigma_(std::move(sigma)), x_(std::move(x)), y_(std::move(y)) {
  require_same_dim(sigma_.size(), x_.size(), "element x");
  require_same_dim(sigma_.size(), y_.size(), "element y");
}

std::strong_ordering IpfElement::operator<=>(
    IpfElement const &other) const noexcept {
  if (auto c = x_ <=> other.x_; c != 0) {
    return c;
  }
  if (auto c = y_ <=> other.y_; c != 0) {
    return c;
  }
  return sigma_ <=> other.sigma_;
}

IpfElement make_element(std::size_t n, Permutation const &sigma,
                        IntVec const &x, IntVec const &y) {
  require_same_dim(n, sigma.size(), "make_element sigma");
  require_same_dim(n, x.size(), "make_element x");
  require_same_dim(n, y.size(), "make_element y");
  return IpfElement(sigma, Point(x), Point(y));
}

IpfElement identity_element(std::size_t n) {
  return IpfElement(Permutation::identity(n), Point::ones(n), Point::ones(n));
}

IpfElement idempotent_on(Point const &x) {
  return IpfElement(Permutation::identity(x.size()), x, x);
}

IpfElement compose(IpfElement const &a, IpfElement const &b) {
  std::size_t const n = a.dim();
  require_same_dim(n, b.dim(), "compose");
  Permutation const &sa = a.sigma();
  Permutation const &sb = b.sigma();
  // The composite is defined on the preimage under a of up(m), m = max(a.y, b.x):
  // x = (m - a.y)sa^-1 + a.x and y = (m - b.x)sb + b.y.
  IntVec x(n);
  IntVec y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Int const m = std::max(a.y()[i], b.x()[i]);
    std::size_t const j = sa.image(i + 1) - 1;
    x[i] = checked::add(std::max(a.y()[j], b.x()[j]) - a.y()[j], a.x()[i]);
    std::size_t const k = sb.image(i + 1) - 1;
    y[k] = checked::add(m - b.x()[i], b.y()[k]);
  }
  return IpfElement(sa * sb, Point(x), Point(y));
}

IpfElement inverse(IpfElement const &a) {
  return IpfElement(a.sigma().inverse(), a.y(), a.x());
}

bool is_idempotent(IpfElement const &a) {
  return a.sigma().is_identity() && a.x() == a.y();
}

bool in_domain(IpfElement const &a, IntVec const &z) {
  return a.x().vec().leq(z);
}

Point apply_point(IpfElement const &a, Point const &z) {
  require_same_dim(a.dim(), z.size(), "apply_point");
  if (!in_domain(a, z)) {
    throw Error(ErrorKind::OutsideDomain, format_ints(z) +
                                              " is not above " +
                                              format_ints(a.x()));
  }
  return Point(a.sigma().apply(z.vec() - a.x().vec()) + a.y().vec());
}

Factorization factorize(IpfElement const &a) {
  std::size_t const n = a.dim();
  Permutation const id = Permutation::identity(n);
  return Factorization{IpfElement(id, a.x(), Point::ones(n)),
                       IpfElement(a.sigma(), Point::ones(n), Point::ones(n)),
                       IpfElement(id, Point::ones(n), a.y())};
}

GreenFlags green_relations(IpfElement const &a, IpfElement const &b) {
  require_same_dim(a.dim(), b.dim(), "green_relations");
  GreenFlags g;
  g.L = a.x() == b.x();
  g.R = a.y() == b.y();
  g.H = g.L && g.R;
  // IPF(N^n) is bisimple.
  g.D = true;
  g.J = true;
  return g;
}

bool natural_leq(IpfElement const &a, IpfElement const &b) {
  require_same_dim(a.dim(), b.dim(), "natural_leq");
  if (a.sigma() != b.sigma()) {
    return false;
  }
  IntVec const ga = a.sigma().apply(a.x()) - a.y();
  IntVec const gb = b.sigma().apply(b.x()) - b.y();
  return ga == gb && b.x().vec().leq(a.x());
}

std::vector<IpfElement> enumerate_units(std::size_t n) {
  if (n == 0 || n > dimension_cap()) {
    throw Error(ErrorKind::CapExceeded,
                "unit enumeration for n=" + std::to_string(n) +
                    " (cap " + std::to_string(dimension_cap()) + ")");
  }
  std::vector<IpfElement> out;
  for (auto const &sigma : Permutation::all(n)) {
    out.emplace_back(sigma, Point::ones(n), Point::ones(n));
  }
  return out;
}

IpfElement connect_idempotents(IpfElement const &e, IpfElement const &i) {
  require_same_dim(e.dim(), i.dim(), "connect_idempotents");
  if (!is_idempotent(e) || !is_idempotent(i)) {
    throw Error(ErrorKind::NotIdempotent, "connect_idempotents needs idempotents");
  }
  return IpfElement(Permutation::identity(e.dim()), e.x(), i.x());
}

std::vector<IntVec> box_points(IntVec const &lo, IntVec const &hi) {
  require_same_dim(lo.size(), hi.size(), "box_points");
  std::vector<IntVec> out;
  if (!lo.leq(hi)) {
    return out;
  }
  IntVec cur = lo;
  std::size_t const n = lo.size();
  while (true) {
    out.push_back(cur);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (cur[k] < hi[k]) {
        ++cur[k];
        break;
      }
      cur[k] = lo[k];
      if (k == 0) {
        return out;
      }
    }
  }
}

std::vector<IpfElement> enumerate_universe(std::size_t n, Int max) {
  auto const points = box_points(IntVec::ones(n), IntVec(n, max));
  auto const perms = Permutation::all(n);
  std::vector<IpfElement> out;
  out.reserve(points.size() * points.size() * perms.size());
  for (auto const &x : points) {
    for (auto const &y : points) {
      for (auto const &s : perms) {
        out.emplace_back(s, Point(x), Point(y));
      }
    }
  }
  return out;
}

std::vector<IpfElement> enumerate_idempotents(std::size_t n, Int max) {
  std::vector<IpfElement> out;
  for (auto const &x : box_points(IntVec::ones(n), IntVec(n, max))) {
    out.push_back(idempotent_on(Point(x)));
  }
  return out;
}

}  // namespace ipf
