#include "ipf/congruence.hpp"

#include <deque>
#include <string>

namespace ipf {

namespace {

// Generators of S_n: the transposition (1 2) and the n-cycle.
std::vector<Permutation> symmetric_generators(std::size_t n) {
  if (n < 2) {
    return {};
  }
  return {Permutation::transposition(n, 1, 2), Permutation::cycle(n)};
}

struct Saturation {
  std::size_t n;
  std::vector<QuotientElement> gens;
  LatticeBasis lattice;
  std::map<Permutation, IntVec> reps;
  std::vector<IntVec> pending;

  // Rebuilds K and its representatives from gens by breadth-first search;
  // every Cayley-graph edge whose endpoint already has a different
  // representative contributes the difference to L.
  void enumerate_cosets() {
    reps.clear();
    Permutation const id = Permutation::identity(n);
    reps.emplace(id, IntVec(n));
    std::deque<Permutation> queue{id};
    while (!queue.empty()) {
      Permutation const pi = queue.front();
      queue.pop_front();
      IntVec const r = reps.at(pi);
      for (auto const &g : gens) {
        QuotientElement const next = quotient_mul({pi, r}, g);
        IntVec const reduced = lattice_reduce(lattice, next.z);
        auto [it, inserted] = reps.emplace(next.sigma, reduced);
        if (inserted) {
          queue.push_back(next.sigma);
        } else if (it->second != reduced) {
          pending.push_back(reduced - it->second);
        }
      }
    }
  }

  // Conjugation by (id, e_i) forces (e_i)pi - e_i into L for every pi in K.
  void translation_conjugates() {
    for (auto const &[pi, r] : reps) {
      for (std::size_t i = 0; i < n; ++i) {
        IntVec const e = IntVec::unit(n, i);
        pending.push_back(pi.apply(e) - e);
      }
    }
  }

  void lattice_invariance() {
    for (auto const &row : lattice.rows) {
      for (auto const &s : symmetric_generators(n)) {
        pending.push_back(s.apply(row));
      }
    }
  }

  // Conjugation by (s, 0): (s^-1, 0)(pi, r)(s, 0) = (s^-1 pi s, (r)s).
  // Returns true if a new permutation joined the generators.
  bool permutation_conjugates() {
    bool grew = false;
    for (auto const &s : symmetric_generators(n)) {
      Permutation const s_inv = s.inverse();
      for (auto const &[pi, r] : reps) {
        Permutation const c = s_inv * pi * s;
        IntVec const rc = s.apply(r);
        auto it = reps.find(c);
        if (it != reps.end()) {
          pending.push_back(rc - it->second);
        } else if (!grew) {
          // One new generator per round; the next BFS absorbs the rest.
          gens.push_back({c, rc});
          grew = true;
        }
      }
    }
    return grew;
  }

  bool absorb_pending() {
    std::vector<IntVec> all = lattice.rows;
    for (auto const &v : pending) {
      if (!v.is_zero() && !lattice_contains(lattice, v)) {
        all.push_back(v);
      }
    }
    pending.clear();
    LatticeBasis next = hnf_basis(n, all);
    bool const changed = next != lattice;
    lattice = std::move(next);
    return changed;
  }
};

}  // namespace

std::vector<Permutation> NormalSubgroupRep::perm_part() const {
  std::vector<Permutation> out;
  for (auto const &[pi, r] : reps) {
    out.push_back(pi);
  }
  return out;
}

NormalSubgroupRep normal_closure(std::span<QuotientElement const> gens,
                                 std::size_t n) {
  if (n == 0 || n > dimension_cap()) {
    throw Error(ErrorKind::CapExceeded,
                "normal closure for n=" + std::to_string(n) + " (cap " +
                    std::to_string(dimension_cap()) + ")");
  }
  Saturation sat{n, {}, LatticeBasis{n, {}}, {}, {}};
  for (auto const &g : gens) {
    require_same_dim(n, g.sigma.size(), "normal_closure");
    require_same_dim(n, g.z.size(), "normal_closure");
    if (g.sigma.is_identity()) {
      sat.pending.push_back(g.z);
    } else {
      sat.gens.push_back(g);
    }
  }
  sat.absorb_pending();

  while (true) {
    bool changed = false;
    // Lattice steps first, then group steps.
    sat.enumerate_cosets();
    sat.translation_conjugates();
    changed |= sat.absorb_pending();
    sat.lattice_invariance();
    changed |= sat.absorb_pending();
    if (changed) {
      continue;
    }
    changed |= sat.permutation_conjugates();
    changed |= sat.absorb_pending();
    if (!changed) {
      break;
    }
  }

  NormalSubgroupRep N{n, std::move(sat.reps), std::move(sat.lattice)};
  if (!is_closed_normal(N)) {
    throw Error(ErrorKind::RepresentationFailure,
                "saturation fixpoint is not a normal subgroup in coset form");
  }
  return N;
}

bool subgroup_contains(NormalSubgroupRep const &N, QuotientElement const &g) {
  require_same_dim(N.n, g.sigma.size(), "subgroup_contains");
  require_same_dim(N.n, g.z.size(), "subgroup_contains");
  auto it = N.reps.find(g.sigma);
  return it != N.reps.end() && lattice_contains(N.lattice, g.z - it->second);
}

bool is_closed_normal(NormalSubgroupRep const &N) {
  std::size_t const n = N.n;
  auto const id = N.reps.find(Permutation::identity(n));
  if (id == N.reps.end() || !lattice_contains(N.lattice, id->second)) {
    return false;
  }
  for (auto const &row : N.lattice.rows) {
    for (auto const &s : symmetric_generators(n)) {
      if (!lattice_contains(N.lattice, s.apply(row))) {
        return false;
      }
    }
  }
  // Products are checked against all of K when it is small and against a
  // fixed stride sample otherwise.
  std::vector<QuotientElement> factors;
  std::size_t const stride = N.reps.size() <= 720 ? 1 : N.reps.size() / 64;
  std::size_t index = 0;
  for (auto const &[tau, t] : N.reps) {
    if (index++ % stride == 0) {
      factors.push_back({tau, t});
    }
  }
  for (auto const &[pi, r] : N.reps) {
    QuotientElement const g{pi, r};
    if (!subgroup_contains(N, quotient_inv(g))) {
      return false;
    }
    for (auto const &h : factors) {
      if (!subgroup_contains(N, quotient_mul(g, h))) {
        return false;
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      QuotientElement const shift{Permutation::identity(n), IntVec::unit(n, i)};
      if (!subgroup_contains(N, quotient_mul(quotient_mul(quotient_inv(shift), g), shift))) {
        return false;
      }
    }
    for (auto const &s : symmetric_generators(n)) {
      QuotientElement const u{s, IntVec(n)};
      if (!subgroup_contains(N, quotient_mul(quotient_mul(quotient_inv(u), g), u))) {
        return false;
      }
    }
  }
  return true;
}

CongruenceDescriptor congruence_from_pair(IpfElement const &a, IpfElement const &b) {
  require_same_dim(a.dim(), b.dim(), "congruence_from_pair");
  if (a == b) {
    return CongruenceDescriptor{};
  }
  QuotientElement const gap = quotient_mul(upsilon(a), quotient_inv(upsilon(b)));
  return CongruenceDescriptor{CongruenceKind::Group,
                              normal_closure(std::span(&gap, 1), a.dim())};
}

bool congruence_relates(CongruenceDescriptor const &desc, IpfElement const &c,
                        IpfElement const &d) {
  require_same_dim(c.dim(), d.dim(), "congruence_relates");
  if (desc.kind == CongruenceKind::Identity) {
    return c == d;
  }
  return subgroup_contains(*desc.subgroup,
                           quotient_mul(upsilon(c), quotient_inv(upsilon(d))));
}

std::string format_congruence(CongruenceDescriptor const &desc) {
  if (desc.kind == CongruenceKind::Identity) {
    return "cong{kind=identity}";
  }
  auto const &N = *desc.subgroup;
  std::string k = "[";
  std::string reps = "[";
  bool first = true;
  for (auto const &[pi, r] : N.reps) {
    if (!first) {
      k += ',';
      reps += ',';
    }
    first = false;
    k += format_permutation(pi);
    reps += format_ints(r);
  }
  std::string l = "[";
  for (std::size_t i = 0; i < N.lattice.rows.size(); ++i) {
    if (i != 0) {
      l += ',';
    }
    l += format_ints(N.lattice.rows[i]);
  }
  return "cong{kind=group; K=" + k + "]; reps=" + reps + "]; L=" + l + "]}";
}

}  // namespace ipf
