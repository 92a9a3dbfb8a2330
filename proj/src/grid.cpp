#include "ipf/grid.hpp"

#include <string>

namespace ipf {

namespace {

bool in_box(IntVec const &p, Int bound) {
  for (Int c : p) {
    if (c < 1 || c > bound) {
      return false;
    }
  }
  return true;
}

// Lower and upper corners of a nonempty key set.
std::pair<IntVec, IntVec> corners(std::map<IntVec, IntVec> const &m,
                                  bool keys) {
  auto const &first = keys ? m.begin()->first : m.begin()->second;
  IntVec lo = first;
  IntVec hi = first;
  for (auto const &[k, v] : m) {
    auto const &p = keys ? k : v;
    lo = min(lo, p);
    hi = max(hi, p);
  }
  return {lo, hi};
}

bool fills_interval(std::size_t count, IntVec const &lo, IntVec const &hi) {
  std::size_t expected = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    expected *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
  }
  return expected == count;
}

bool monotone_on_covers(std::map<IntVec, IntVec> const &m, std::size_t n) {
  for (auto const &[p, fp] : m) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVec q = p;
      ++q[i];
      auto it = m.find(q);
      if (it != m.end() && !fp.leq(it->second)) {
        return false;
      }
    }
  }
  return true;
}

std::string format_tuple(IntVec const &v) {
  std::string s = format_ints(v);
  s.front() = '(';
  s.back() = ')';
  return s;
}

}  // namespace

GridMap::GridMap(std::size_t n, Int bound) : n_(n), bound_(bound) {
  if (n == 0 || n > kMaxDim) {
    throw Error(ErrorKind::DimensionMismatch, "grid dimension " + std::to_string(n));
  }
  if (bound < 2) {
    throw Error(ErrorKind::BoxTooSmall, "box bound must be at least 2");
  }
}

void GridMap::insert(IntVec const &key, IntVec const &value) {
  require_same_dim(n_, key.size(), "grid key");
  require_same_dim(n_, value.size(), "grid value");
  if (!in_box(key, bound_) || !in_box(value, bound_)) {
    throw Error(ErrorKind::BoxTooSmall, "entry outside box");
  }
  auto c = converse_.find(value);
  if (c != converse_.end() && c->second != key) {
    throw Error(ErrorKind::NotOrderIso, "grid map would not be injective");
  }
  auto old = entries_.find(key);
  if (old != entries_.end()) {
    converse_.erase(old->second);
  }
  entries_[key] = value;
  converse_[value] = key;
}

std::optional<IntVec> GridMap::at(IntVec const &key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    return std::nullopt;
  }
  return it->second;
}

GridMap realize(IpfElement const &a, Int bound) {
  if (a.x().vec().max() > bound || a.y().vec().max() > bound) {
    throw Error(ErrorKind::BoxTooSmall,
                "bound " + std::to_string(bound) + " below generators of element");
  }
  std::size_t const n = a.dim();
  GridMap f(n, bound);
  for (auto const &z : box_points(a.x(), IntVec(n, bound))) {
    IntVec image = apply_point(a, Point(z));
    if (in_box(image, bound)) {
      f.insert(z, image);
    }
  }
  return f;
}

GridMap grid_compose(GridMap const &f, GridMap const &g) {
  require_same_dim(f.dim(), g.dim(), "grid_compose");
  if (f.bound() != g.bound()) {
    throw Error(ErrorKind::BoxMismatch, "grid_compose on different boxes");
  }
  GridMap h(f.dim(), f.bound());
  for (auto const &[z, fz] : f.entries()) {
    if (auto gz = g.at(fz)) {
      h.insert(z, *gz);
    }
  }
  return h;
}

bool is_order_iso(GridMap const &f) {
  if (f.empty()) {
    return false;
  }
  auto const &m = f.entries();
  auto const [dlo, dhi] = corners(m, true);
  auto const [rlo, rhi] = corners(m, false);
  if (!fills_interval(m.size(), dlo, dhi) || !fills_interval(m.size(), rlo, rhi)) {
    return false;
  }
  std::map<IntVec, IntVec> converse;
  for (auto const &[k, v] : m) {
    converse.emplace(v, k);
  }
  return monotone_on_covers(m, f.dim()) && monotone_on_covers(converse, f.dim());
}

IpfElement grid_recognize(GridMap const &f) {
  if (!is_order_iso(f)) {
    throw Error(ErrorKind::NotOrderIso, "table is not an order isomorphism of box intervals");
  }
  std::size_t const n = f.dim();
  IntVec const x = corners(f.entries(), true).first;
  IntVec const y = *f.at(x);
  std::vector<Int> one_line(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto image = f.at(x + IntVec::unit(n, i));
    if (!image) {
      throw Error(ErrorKind::InsufficientBox,
                  "x + e_" + std::to_string(i + 1) + " is outside the table");
    }
    IntVec const step = *image - y;
    std::size_t hits = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (step[j] == 1) {
        one_line[i] = static_cast<Int>(j + 1);
        ++hits;
      } else if (step[j] != 0) {
        hits = 2;
      }
    }
    if (hits != 1) {
      throw Error(ErrorKind::NotOrderIso, "x + e_i does not map to a unit step");
    }
  }
  Permutation sigma = [&] {
    try {
      return Permutation(one_line);
    } catch (Error const &) {
      throw Error(ErrorKind::NotOrderIso, "unit steps do not form a permutation");
    }
  }();
  IpfElement a(sigma, Point(x), Point(y));
  for (auto const &[z, fz] : f.entries()) {
    if (apply_point(a, Point(z)) != fz) {
      throw Error(ErrorKind::NotOrderIso, "table is not a translated coordinate permutation");
    }
  }
  return a;
}

std::optional<IpfElement> witness_leq(IpfElement const &a, IpfElement const &b,
                                      Int bound) {
  require_same_dim(a.dim(), b.dim(), "witness_leq");
  for (auto const &e : enumerate_idempotents(a.dim(), bound)) {
    if (compose(b, e) == a) {
      return e;
    }
  }
  return std::nullopt;
}

std::optional<IpfElement> witness_mg(IpfElement const &a, IpfElement const &b,
                                     Int bound) {
  require_same_dim(a.dim(), b.dim(), "witness_mg");
  for (auto const &e : enumerate_idempotents(a.dim(), bound)) {
    if (compose(a, e) == compose(b, e)) {
      return e;
    }
  }
  return std::nullopt;
}

std::string format_grid(GridMap const &f) {
  std::string out = "grid{n=" + std::to_string(f.dim()) +
                    ";B=" + std::to_string(f.bound()) + "}\n";
  for (auto const &[k, v] : f.entries()) {
    out += format_tuple(k) + "->" + format_tuple(v) + "\n";
  }
  return out;
}

}  // namespace ipf
