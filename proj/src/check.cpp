#include "ipf/check.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "ipf/congruence.hpp"
#include "ipf/element.hpp"
#include "ipf/equations.hpp"
#include "ipf/grid.hpp"
#include "ipf/quotient.hpp"
#include "ipf/words.hpp"

namespace ipf::check {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string name) { r_.name = std::move(name); }

  template <class Detail>
  void expect(bool ok, Detail &&detail) {
    ++r_.cases;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.detail = detail();
    }
  }

  void fail(std::string detail) {
    expect(false, [&] { return detail; });
  }

  // Runs one case, turning engine errors into a failure.
  template <class Body>
  void guarded(Body &&body, std::function<std::string()> const &context) {
    try {
      body();
    } catch (Error const &e) {
      fail(context() + ": " + e.what());
    }
  }

  bool passed() const { return r_.passed; }
  Result result() && { return std::move(r_); }

 private:
  Result r_;
};

std::string show(IpfElement const &a) { return format_element(a); }

std::string show2(IpfElement const &a, IpfElement const &b) {
  return show(a) + " , " + show(b);
}

std::string show3(IpfElement const &a, IpfElement const &b, IpfElement const &c) {
  return show(a) + " , " + show(b) + " , " + show(c);
}

IpfElement random_element(std::mt19937_64 &rng, std::vector<Permutation> const &perms,
                          std::size_t n, Int limit) {
  IntVec x(n);
  IntVec y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(limit));
    y[i] = 1 + static_cast<Int>(rng() % static_cast<std::uint64_t>(limit));
  }
  return IpfElement(perms[rng() % perms.size()], Point(x), Point(y));
}

template <class T>
T const &pick(std::mt19937_64 &rng, std::vector<T> const &v) {
  return v[rng() % v.size()];
}

// Points of the window [1, side]^n that lie in the set described by `keep`.
std::set<IntVec> window_set(std::map<IntVec, IntVec> const &m, bool keys, Int side) {
  std::set<IntVec> out;
  for (auto const &[k, v] : m) {
    IntVec const &p = keys ? k : v;
    if (p.max() <= side) {
      out.insert(p);
    }
  }
  return out;
}

}  // namespace

Result oracle_composition(std::size_t n, Int limit, Int bound) {
  Recorder rec("oracle_composition");
  auto const universe = enumerate_universe(n, limit);
  std::vector<GridMap> grids;
  grids.reserve(universe.size());
  for (auto const &a : universe) {
    grids.push_back(realize(a, bound));
    rec.expect(is_order_iso(grids.back()), [&] { return "not order iso: " + show(a); });
    rec.guarded([&] { rec.expect(grid_recognize(grids.back()) == a, [&] {
                        return "round trip: " + show(a);
                      }); },
                [&] { return "round trip " + show(a); });
  }
  auto const probes = box_points(IntVec::ones(n), IntVec(n, limit + 2));
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (std::size_t j = 0; j < universe.size(); ++j) {
      auto const &a = universe[i];
      auto const &b = universe[j];
      rec.guarded(
          [&] {
            IpfElement const ab = compose(a, b);
            IpfElement const seen = grid_recognize(grid_compose(grids[i], grids[j]));
            rec.expect(seen == ab, [&] {
              return show2(a, b) + " -> " + show(ab) + " but grid gives " + show(seen);
            });
            for (auto const &z : probes) {
              bool const lhs = in_domain(ab, z);
              bool const rhs = in_domain(a, z) && in_domain(b, apply_point(a, Point(z)));
              bool agree = lhs == rhs;
              if (agree && lhs) {
                agree = apply_point(ab, Point(z)) ==
                        apply_point(b, apply_point(a, Point(z)));
              }
              rec.expect(agree, [&] {
                return "functoriality at " + format_ints(z) + " for " + show2(a, b);
              });
            }
          },
          [&] { return show2(a, b); });
    }
  }
  return std::move(rec).result();
}

Result associativity_exhaustive(std::size_t n, Int limit) {
  Recorder rec("associativity_exhaustive");
  auto const u = enumerate_universe(n, limit);
  for (auto const &a : u) {
    for (auto const &b : u) {
      IpfElement const ab = compose(a, b);
      for (auto const &c : u) {
        rec.expect(compose(ab, c) == compose(a, compose(b, c)),
                   [&] { return show3(a, b, c); });
      }
    }
  }
  return std::move(rec).result();
}

Result associativity_random(std::size_t n, Int limit, std::size_t samples,
                            std::uint64_t seed) {
  Recorder rec("associativity_random");
  std::mt19937_64 rng(seed);
  auto const perms = Permutation::all(n);
  for (std::size_t s = 0; s < samples; ++s) {
    auto const a = random_element(rng, perms, n, limit);
    auto const b = random_element(rng, perms, n, limit);
    auto const c = random_element(rng, perms, n, limit);
    rec.expect(compose(compose(a, b), c) == compose(a, compose(b, c)),
               [&] { return show3(a, b, c); });
  }
  return std::move(rec).result();
}

Result inverse_laws(std::size_t n, Int limit) {
  Recorder rec("inverse_laws");
  auto const u = enumerate_universe(n, limit);
  for (auto const &a : u) {
    IpfElement const inv = inverse(a);
    rec.expect(compose(compose(a, inv), a) == a, [&] { return "a a' a: " + show(a); });
    rec.expect(compose(compose(inv, a), inv) == inv, [&] { return "a' a a': " + show(a); });
    rec.expect(compose(a, inv) == idempotent_on(a.x()), [&] { return "a a': " + show(a); });
    rec.expect(compose(inv, a) == idempotent_on(a.y()), [&] { return "a' a: " + show(a); });
    rec.expect(inverse(inv) == a, [&] { return "involution: " + show(a); });
    rec.expect(is_idempotent(a) == (compose(a, a) == a),
               [&] { return "idempotent characterization: " + show(a); });
    auto const f = factorize(a);
    rec.expect(compose(compose(f.rho, f.unit), f.lambda) == a,
               [&] { return "factorization: " + show(a); });
  }
  auto const idem = enumerate_idempotents(n, limit);
  for (auto const &e : idem) {
    for (auto const &f : idem) {
      IpfElement const meet = idempotent_on(Point(max(e.x().vec(), f.x().vec())));
      rec.expect(compose(e, f) == meet && compose(f, e) == meet,
                 [&] { return "idempotents commute: " + show2(e, f); });
    }
  }
  return std::move(rec).result();
}

Result inverse_uniqueness(std::size_t n, Int limit) {
  Recorder rec("inverse_uniqueness");
  auto const u = enumerate_universe(n, limit);
  for (auto const &a : u) {
    IpfElement const inv = inverse(a);
    for (auto const &b : u) {
      bool const axioms = compose(compose(a, b), a) == a && compose(compose(b, a), b) == b;
      rec.expect(axioms == (b == inv), [&] { return show2(a, b); });
    }
  }
  return std::move(rec).result();
}

Result psi_homomorphism(std::size_t n, Int limit) {
  Recorder rec("psi_homomorphism");
  auto const u = enumerate_universe(n, limit);
  std::set<SemidirectPair> images;
  for (auto const &a : u) {
    images.insert(psi(a));
    for (auto const &b : u) {
      rec.expect(sd_mul(psi(a), psi(b)) == psi(compose(a, b)), [&] { return show2(a, b); });
    }
  }
  rec.expect(images.size() == u.size(), [] { return std::string("psi not injective"); });
  return std::move(rec).result();
}

Result upsilon_homomorphism(std::size_t n, Int limit) {
  Recorder rec("upsilon_homomorphism");
  auto const u = enumerate_universe(n, limit);
  for (auto const &a : u) {
    for (auto const &b : u) {
      rec.expect(quotient_mul(upsilon(a), upsilon(b)) == upsilon(compose(a, b)),
                 [&] { return show2(a, b); });
    }
  }
  // Every (sigma, z) with |z_i| <= limit has a preimage in E(n, 2 limit + 1).
  std::set<QuotientElement> hit;
  for (auto const &a : enumerate_universe(n, 2 * limit + 1)) {
    hit.insert(upsilon(a));
  }
  for (auto const &sigma : Permutation::all(n)) {
    for (auto const &z : box_points(IntVec(n, -limit), IntVec(n, limit))) {
      rec.expect(hit.count(QuotientElement{sigma, z}) == 1, [&] {
        return "no preimage for " + format_quotient({sigma, z});
      });
    }
  }
  return std::move(rec).result();
}

Result mg_witness(std::size_t n, Int limit, Int bound) {
  Recorder rec("mg_witness");
  auto const u = enumerate_universe(n, limit);
  for (auto const &a : u) {
    for (auto const &b : u) {
      rec.expect(mg_related(a, b) == witness_mg(a, b, bound).has_value(),
                 [&] { return show2(a, b); });
    }
  }
  return std::move(rec).result();
}

Result natural_order_witness(std::size_t n, Int limit, Int bound) {
  Recorder rec("natural_order_witness");
  auto const u = enumerate_universe(n, limit);
  for (auto const &a : u) {
    for (auto const &b : u) {
      rec.expect(natural_leq(a, b) == witness_leq(a, b, bound).has_value(),
                 [&] { return show2(a, b); });
    }
  }
  return std::move(rec).result();
}

Result natural_order_axioms(std::size_t n, Int limit) {
  Recorder rec("natural_order_axioms");
  auto const u = enumerate_universe(n, limit);
  for (auto const &a : u) {
    rec.expect(natural_leq(a, a), [&] { return "reflexivity: " + show(a); });
    for (auto const &b : u) {
      bool const ab = natural_leq(a, b);
      if (ab && natural_leq(b, a)) {
        rec.expect(a == b, [&] { return "antisymmetry: " + show2(a, b); });
      }
      for (auto const &c : u) {
        if (ab && natural_leq(b, c)) {
          rec.expect(natural_leq(a, c), [&] { return "transitivity: " + show3(a, b, c); });
        }
        if (ab) {
          rec.expect(natural_leq(compose(c, a), compose(c, b)) &&
                         natural_leq(compose(a, c), compose(b, c)),
                     [&] { return "compatibility: " + show3(a, b, c); });
        }
      }
    }
  }
  for (auto const &e : enumerate_idempotents(n, limit)) {
    for (auto const &f : enumerate_idempotents(n, limit)) {
      rec.expect(natural_leq(e, f) == e.x().vec().geq(f.x()),
                 [&] { return "idempotent order: " + show2(e, f); });
    }
  }
  return std::move(rec).result();
}

Result e_unitary(std::size_t n, Int limit, Int idempotent_max) {
  Recorder rec("e_unitary");
  auto const idem = enumerate_idempotents(n, idempotent_max);
  for (auto const &a : enumerate_universe(n, limit)) {
    for (auto const &e : idem) {
      if (is_idempotent(compose(a, e))) {
        rec.expect(is_idempotent(a), [&] { return show2(a, e); });
      } else {
        rec.expect(true, [] { return std::string(); });
      }
    }
  }
  return std::move(rec).result();
}

Result unit_group(std::size_t n) {
  Recorder rec("unit_group");
  auto const units = enumerate_units(n);
  std::size_t factorial = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    factorial *= k;
  }
  rec.expect(units.size() == factorial, [&] {
    return "expected " + std::to_string(factorial) + " units, got " +
           std::to_string(units.size());
  });
  std::set<IpfElement> const group(units.begin(), units.end());
  for (auto const &u : units) {
    rec.expect(group.count(inverse(u)) == 1, [&] { return "inverse: " + show(u); });
    rec.expect(compose(u, inverse(u)) == identity_element(n), [&] { return show(u); });
    GridMap const g = realize(u, 4);
    rec.expect(is_order_iso(g), [&] { return "order iso: " + show(u); });
    rec.guarded([&] { rec.expect(grid_recognize(g) == u, [&] { return "recognize: " + show(u); }); },
                [&] { return show(u); });
  }
  // Products of all pairs only for small groups; closure is also implied by
  // the generator check below.
  if (units.size() <= 720) {
    for (auto const &u : units) {
      for (auto const &v : units) {
        rec.expect(group.count(compose(u, v)) == 1, [&] { return "closure: " + show2(u, v); });
      }
    }
  }
  return std::move(rec).result();
}

Result green_vs_grid(std::size_t n, Int limit) {
  Recorder rec("green_vs_grid");
  Int const bound = 2 * limit + 3;
  // Inside this window the box truncation never cuts domains or ranges.
  Int const window = bound - limit + 1;
  auto const u = enumerate_universe(n, limit);
  std::vector<std::set<IntVec>> doms;
  std::vector<std::set<IntVec>> rans;
  for (auto const &a : u) {
    GridMap const g = realize(a, bound);
    doms.push_back(window_set(g.entries(), true, window));
    rans.push_back(window_set(g.entries(), false, window));
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    for (std::size_t j = 0; j < u.size(); ++j) {
      GreenFlags const f = green_relations(u[i], u[j]);
      bool const l = doms[i] == doms[j];
      bool const r = rans[i] == rans[j];
      rec.expect(f.L == l && f.R == r && f.H == (l && r) && f.D && f.J,
                 [&] { return show2(u[i], u[j]); });
    }
  }
  return std::move(rec).result();
}

Result bisimplicity(std::size_t n, Int idempotent_max) {
  Recorder rec("bisimplicity");
  auto const idem = enumerate_idempotents(n, idempotent_max);
  for (auto const &e : idem) {
    for (auto const &i : idem) {
      IpfElement const a = connect_idempotents(e, i);
      rec.expect(compose(a, inverse(a)) == e && compose(inverse(a), a) == i,
                 [&] { return show2(e, i); });
    }
  }
  return std::move(rec).result();
}

Result f_inverse(std::size_t n, Int limit, Int class_max) {
  Recorder rec("f_inverse");
  std::map<QuotientElement, std::vector<IpfElement>> classes;
  for (auto const &c : enumerate_universe(n, class_max)) {
    classes[upsilon(c)].push_back(c);
  }
  for (auto const &a : enumerate_universe(n, limit)) {
    IpfElement const top = top_of_class(a);
    rec.expect(mg_related(top, a) && natural_leq(a, top),
               [&] { return "top not above: " + show2(a, top); });
    for (auto const &c : classes[upsilon(a)]) {
      rec.expect(natural_leq(c, top), [&] { return "not maximum: " + show2(c, top); });
      if (natural_leq(top, c)) {
        rec.expect(c == top, [&] { return "not unique: " + show2(c, top); });
      }
    }
    auto const above = up_set(top);
    rec.expect(above.size() == 1 && above.front() == top,
               [&] { return "up_set(top) != {top}: " + show(top); });
    for (Int k = 0; k <= 3; ++k) {
      IpfElement const shifted(top.sigma(), Point(top.x().vec().plus_scalar(k)),
                               Point(top.y().vec().plus_scalar(k)));
      rec.expect(mg_related(shifted, top) && natural_leq(shifted, top),
                 [&] { return "k-shift: " + show(shifted); });
    }
  }
  return std::move(rec).result();
}

Result equations(std::size_t n, Int limit, Int candidate_max) {
  Recorder rec("equations");
  auto const u = enumerate_universe(n, limit);
  auto const candidates = enumerate_universe(n, candidate_max);
  for (auto const &a : u) {
    std::map<IpfElement, std::vector<IpfElement>> left;
    std::map<IpfElement, std::vector<IpfElement>> right;
    for (auto const &chi : candidates) {
      left[compose(chi, a)].push_back(chi);
      right[compose(a, chi)].push_back(chi);
    }
    for (auto const &b : u) {
      auto const sl = solve_left(a, b);
      auto const sr = solve_right(a, b);
      rec.expect(sl == left[b], [&] { return "solve_left " + show2(a, b); });
      rec.expect(sr == right[b], [&] { return "solve_right " + show2(a, b); });
      for (auto const &[sols, restricted] :
           {std::pair{&sl, compose(b, inverse(a))}, std::pair{&sr, compose(inverse(a), b)}}) {
        Int bound = 1;
        for (Int c : restricted.x().vec()) {
          bound *= c;
        }
        rec.expect(static_cast<Int>(sols->size()) <= bound,
                   [&] { return "down-set bound " + show2(a, b); });
      }
    }
  }
  return std::move(rec).result();
}

Result congruence_cyclic(Int d, Int limit) {
  Recorder rec("congruence_cyclic_d" + std::to_string(d));
  IpfElement const a = make_element(1, Permutation{1}, IntVec{d + 1}, IntVec{1});
  IpfElement const b = identity_element(1);
  auto const desc = congruence_from_pair(a, b);
  auto const u = enumerate_universe(1, limit);
  for (auto const &c : u) {
    for (auto const &e : u) {
      Int const gap = upsilon(c).z[0] - upsilon(e).z[0];
      rec.expect(congruence_relates(desc, c, e) == (gap % d == 0),
                 [&] { return show2(c, e); });
    }
  }
  return std::move(rec).result();
}

Result congruence_hand_derived() {
  Recorder rec("congruence_hand_derived");
  Permutation const id2 = Permutation::identity(2);
  Permutation const swap{2, 1};
  {
    QuotientElement const g{swap, IntVec{0, 0}};
    auto const N = normal_closure(std::span(&g, 1), 2);
    rec.expect(N.perm_part() == std::vector<Permutation>{id2, swap} &&
                   N.lattice.rows == std::vector<IntVec>{IntVec{1, -1}} &&
                   N.reps.at(swap) == IntVec{0, 0},
               [&] { return "swap closure: " + format_congruence({CongruenceKind::Group, N}); });
  }
  {
    QuotientElement const g{id2, IntVec{1, 0}};
    auto const N = normal_closure(std::span(&g, 1), 2);
    rec.expect(N.perm_part() == std::vector<Permutation>{id2} &&
                   N.lattice.rows == std::vector<IntVec>{IntVec{1, 0}, IntVec{0, 1}},
               [&] { return "(1,0) closure: " + format_congruence({CongruenceKind::Group, N}); });
  }
  {
    QuotientElement const g{Permutation{1}, IntVec{3}};
    auto const N = normal_closure(std::span(&g, 1), 1);
    rec.expect(N.lattice.rows == std::vector<IntVec>{IntVec{3}},
               [&] { return "3Z closure: " + format_congruence({CongruenceKind::Group, N}); });
  }
  return std::move(rec).result();
}

Result congruence_axioms(std::size_t n, Int limit, std::size_t samples,
                         std::uint64_t seed) {
  Recorder rec("congruence_axioms");
  std::mt19937_64 rng(seed);
  auto const u = enumerate_universe(n, limit);
  std::map<QuotientElement, CongruenceDescriptor> cache;
  std::set<QuotientElement> certified;

  auto related_to = [&](CongruenceDescriptor const &desc, IpfElement const &c) {
    std::vector<IpfElement> out;
    for (auto const &d : u) {
      if (congruence_relates(desc, c, d)) {
        out.push_back(d);
      }
    }
    return out;
  };

  for (std::size_t s = 0; s < samples; ++s) {
    IpfElement const a = pick(rng, u);
    IpfElement const b = pick(rng, u);
    rec.guarded(
        [&] {
          QuotientElement const gap = quotient_mul(upsilon(a), quotient_inv(upsilon(b)));
          CongruenceDescriptor desc;
          if (a == b) {
            desc = congruence_from_pair(a, b);
            rec.expect(desc.kind == CongruenceKind::Identity, [&] { return show(a); });
          } else {
            auto it = cache.find(gap);
            if (it == cache.end()) {
              it = cache.emplace(gap, congruence_from_pair(a, b)).first;
            }
            desc = it->second;
          }
          rec.expect(congruence_relates(desc, a, b), [&] { return "generator: " + show2(a, b); });

          IpfElement const c = pick(rng, u);
          IpfElement const e = pick(rng, u);
          auto const near_c = related_to(desc, c);
          IpfElement const d = pick(rng, near_c);
          auto const near_d = related_to(desc, d);
          IpfElement const f = pick(rng, near_d);
          rec.expect(congruence_relates(desc, c, c), [&] { return "reflexive " + show(c); });
          rec.expect(congruence_relates(desc, d, c), [&] { return "symmetric " + show2(c, d); });
          rec.expect(congruence_relates(desc, c, f), [&] { return "transitive " + show3(c, d, f); });
          rec.expect(congruence_relates(desc, compose(e, c), compose(e, d)) &&
                         congruence_relates(desc, compose(c, e), compose(d, e)),
                     [&] { return "compatible " + show3(c, d, e); });
          if (desc.kind == CongruenceKind::Group) {
            rec.expect(!mg_related(c, e) || congruence_relates(desc, c, e),
                       [&] { return "contains mg " + show2(c, e); });
          }

          // Dropping any lattice row leaves a set that is no longer a normal
          // subgroup containing the generator.
          if (desc.kind == CongruenceKind::Group && certified.insert(gap).second) {
            auto const &N = *desc.subgroup;
            if (gap == quotient_identity(n)) {
              rec.expect(N.reps.size() == 1 && N.lattice.rows.empty(),
                         [&] { return "mg descriptor not trivial " + show2(a, b); });
            }
            for (std::size_t row = 0; row < N.lattice.rows.size(); ++row) {
              NormalSubgroupRep smaller = N;
              smaller.lattice.rows.erase(smaller.lattice.rows.begin() +
                                         static_cast<std::ptrdiff_t>(row));
              rec.expect(!(is_closed_normal(smaller) && subgroup_contains(smaller, gap)),
                         [&] { return "not minimal: " + format_congruence(desc); });
            }
          }
        },
        [&] { return show2(a, b); });
  }
  return std::move(rec).result();
}

Result normal_closure_stability(std::size_t n, Int limit) {
  Recorder rec("normal_closure_stability");
  std::set<QuotientElement> gaps;
  auto const u = enumerate_universe(n, limit);
  for (auto const &a : u) {
    gaps.insert(quotient_mul(upsilon(a), quotient_inv(upsilon(u.front()))));
    gaps.insert(quotient_mul(upsilon(u.back()), quotient_inv(upsilon(a))));
  }
  auto const perms = Permutation::all(n);
  for (auto const &g : gaps) {
    auto const first = normal_closure(std::span(&g, 1), n);
    auto const second = normal_closure(std::span(&g, 1), n);
    rec.expect(first == second, [&] { return "rerun differs for " + format_quotient(g); });

    std::vector<QuotientElement> regen;
    for (auto const &[pi, r] : first.reps) {
      regen.push_back({pi, r});
    }
    for (auto const &row : first.lattice.rows) {
      regen.push_back({Permutation::identity(n), row});
    }
    rec.expect(normal_closure(regen, n) == first,
               [&] { return "resaturation differs for " + format_quotient(g); });
    rec.expect(is_closed_normal(first), [&] { return "not closed: " + format_quotient(g); });
    for (auto const &row : first.lattice.rows) {
      for (auto const &sigma : perms) {
        rec.expect(lattice_contains(first.lattice, sigma.apply(row)),
                   [&] { return "lattice not invariant: " + format_quotient(g); });
      }
    }
  }
  return std::move(rec).result();
}

Result generator_laws(std::size_t n) {
  Recorder rec("generator_laws");
  for (std::size_t dim = 1; dim <= n; ++dim) {
    for (std::size_t i = 1; i <= dim; ++i) {
      std::string const p = "P" + std::to_string(i);
      std::string const q = "Q" + std::to_string(i);
      rec.expect(evaluate(parse(p + "*" + q), dim) == identity_element(dim),
                 [&] { return p + "*" + q; });
      rec.expect(evaluate(parse(q + "*" + p), dim) ==
                     idempotent_on(Point(IntVec::ones(dim) + IntVec::unit(dim, i - 1))),
                 [&] { return q + "*" + p; });
    }
    IpfElement const gamma = shift_element(dim, 1);
    rec.expect(compose(gamma, inverse(gamma)) == identity_element(dim) &&
                   compose(inverse(gamma), gamma) == idempotent_on(Point(IntVec(dim, 2))),
               [&] { return "shift laws n=" + std::to_string(dim); });
    for (Int j = 0; j <= 4; ++j) {
      for (Int k = 0; k <= 4; ++k) {
        rec.expect(compose(shift_element(dim, j), shift_element(dim, k)) ==
                       shift_element(dim, j + k),
                   [&] { return "shift sum " + std::to_string(j) + "+" + std::to_string(k); });
      }
    }
  }
  return std::move(rec).result();
}

Result bicyclic_words(std::size_t n, std::size_t max_length) {
  Recorder rec("bicyclic_words");
  IpfElement const gamma = shift_element(n, 1);
  std::vector<std::string> words{""};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::string> next;
    for (auto const &w : words) {
      if (w.size() == len - 1) {
        next.push_back(w + "p");
        next.push_back(w + "q");
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  auto expected_pair = [](std::string const &w) {
    std::pair<Int, Int> acc{0, 0};
    for (char c : w) {
      acc = bicyclic_mul(acc, c == 'p' ? std::pair<Int, Int>{0, 1} : std::pair<Int, Int>{1, 0});
    }
    return acc;
  };
  for (auto const &w : words) {
    auto const [i, j] = expected_pair(w);
    IpfElement const expected(Permutation::identity(n), Point(IntVec(n, i + 1)),
                              Point(IntVec(n, j + 1)));
    rec.expect(bicyclic_word(gamma, w) == expected, [&] { return "word '" + w + "'"; });
  }
  for (auto const &v : words) {
    for (auto const &w : words) {
      if (v.size() + w.size() <= max_length) {
        rec.expect(compose(bicyclic_word(gamma, v), bicyclic_word(gamma, w)) ==
                       bicyclic_word(gamma, v + w),
                   [&] { return "concatenation '" + v + "' '" + w + "'"; });
      }
    }
  }
  return std::move(rec).result();
}

Result format_round_trip(std::size_t n, Int limit) {
  Recorder rec("format_round_trip");
  std::set<std::string> seen;
  for (auto const &a : enumerate_universe(n, limit)) {
    std::string const text = format_element(a);
    seen.insert(text);
    rec.guarded([&] { rec.expect(evaluate(parse(text), n) == a, [&] { return text; }); },
                [&] { return text; });
  }
  rec.expect(seen.size() == enumerate_universe(n, limit).size(),
             [] { return std::string("format not injective"); });
  return std::move(rec).result();
}

Result parser_fuzz(std::size_t samples, std::uint64_t seed) {
  Recorder rec("parser_fuzz");
  std::mt19937_64 rng(seed);
  static constexpr std::string_view kAlphabet = "PQIsepif{}[]()*^-1230=;, nxy";
  static std::vector<std::string> const kSeeds = {
      "P1*Q1", "ipf{n=2; s=[2,1]; x=[2,1]; y=[1,3]}^-1", "s[2,1]*e[2,3]",
      "(P2*Q1)^-1*I", "e[1,1]*(s[1,2]*P1)"};
  for (std::size_t s = 0; s < samples; ++s) {
    std::string text;
    if (s % 2 == 0) {
      std::size_t const len = rng() % 24;
      for (std::size_t i = 0; i < len; ++i) {
        text += kAlphabet[rng() % kAlphabet.size()];
      }
    } else {
      text = pick(rng, kSeeds);
      std::size_t const edits = 1 + rng() % 3;
      for (std::size_t k = 0; k < edits; ++k) {
        std::size_t const at = text.empty() ? 0 : rng() % (text.size() + 1);
        if (rng() % 2 == 0 && at < text.size()) {
          text.erase(at, 1);
        } else {
          text.insert(at, 1, kAlphabet[rng() % kAlphabet.size()]);
        }
      }
    }
    try {
      Expr const e = parse(text);
      try {
        (void)evaluate(e, 2);
      } catch (Error const &) {
      }
      rec.expect(true, [] { return std::string(); });
    } catch (Error const &err) {
      rec.expect(err.kind() == ErrorKind::SyntaxError && err.position().has_value() &&
                     *err.position() <= text.size(),
                 [&] { return "bad parse error for '" + text + "': " + err.what(); });
    } catch (std::exception const &err) {
      rec.fail("unexpected exception for '" + text + "': " + err.what());
    }
  }
  return std::move(rec).result();
}

bool is_suite(std::string_view name) {
  return std::find(std::begin(kSuites), std::end(kSuites), name) != std::end(kSuites);
}

std::vector<Result> run_suite(std::string_view suite, std::size_t n, Int limit,
                              std::uint64_t seed) {
  std::vector<Result> out;
  auto const size = static_cast<double>(enumerate_universe(n, limit).size());
  auto add = [&](std::string_view prefix, Result r) {
    r.name = std::string(prefix) + "/" + r.name;
    out.push_back(std::move(r));
  };
  bool const all = suite == "all";
  if (all || suite == "core") {
    if (size * size * size <= 5e6) {
      add("core", associativity_exhaustive(n, limit));
    } else {
      add("core", associativity_random(n, limit, 100000, seed));
    }
    add("core", inverse_laws(n, limit));
    if (size * size <= 3e7) {
      add("core", inverse_uniqueness(n, limit));
    }
    add("core", natural_order_witness(n, limit, limit + 1));
    add("core", natural_order_axioms(n, std::min<Int>(limit, 2)));
    add("core", e_unitary(n, limit, limit + 1));
    if (n <= dimension_cap()) {
      add("core", unit_group(n));
    }
    add("core", green_vs_grid(n, limit));
    add("core", bisimplicity(n, limit + 1));
  }
  if (all || suite == "oracle") {
    add("oracle", oracle_composition(n, limit, 2 * limit + 3));
  }
  if (all || suite == "quotient") {
    add("quotient", psi_homomorphism(n, limit));
    add("quotient", upsilon_homomorphism(n, limit));
    add("quotient", mg_witness(n, limit, limit + 1));
    add("quotient", f_inverse(n, limit, limit + 2));
  }
  if (all || suite == "congruence") {
    for (Int d = 1; d <= 4; ++d) {
      add("congruence", congruence_cyclic(d, std::max<Int>(limit, 8)));
    }
    add("congruence", congruence_hand_derived());
    add("congruence", congruence_axioms(n, limit, 10000, seed));
    add("congruence", normal_closure_stability(n, limit));
  }
  if (all || suite == "words") {
    add("words", generator_laws(n));
    add("words", bicyclic_words(n, 6));
    add("words", format_round_trip(n, limit));
    add("words", parser_fuzz(100000, seed));
  }
  if (all || suite == "equations") {
    add("equations", equations(n, limit, 2 * limit + 2));
  }
  return out;
}

std::string format_result(Result const &r) {
  std::string line = (r.passed ? "PASS " : "FAIL ") + r.name +
                     " cases=" + std::to_string(r.cases);
  if (!r.passed) {
    line += " : " + r.detail;
  }
  return line;
}

}  // namespace ipf::check
