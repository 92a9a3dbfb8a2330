#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ipf/vec.hpp"

namespace ipf::check {

inline constexpr std::uint64_t kDefaultSeed = 20160419;

struct Result {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;  // first counterexample when failed
};

// Each check runs exhaustively over the universe E(n, limit) of elements whose
// generators have all coordinates in [1, max], unless noted.

// compose agrees with grid_recognize(grid_compose(realize, realize)) on a
// box of side `bound`, and realize/grid_recognize round-trips.
Result oracle_composition(std::size_t n, Int limit, Int bound);
Result associativity_exhaustive(std::size_t n, Int limit);
Result associativity_random(std::size_t n, Int limit, std::size_t samples,
                            std::uint64_t seed);
// aa^-1a = a, a^-1aa^-1 = a^-1, idempotent characterization, factorization,
// functoriality of apply_point.
Result inverse_laws(std::size_t n, Int limit);
// b is an inverse of a (aba = a, bab = b) iff b == inverse(a), on all pairs.
Result inverse_uniqueness(std::size_t n, Int limit);
Result psi_homomorphism(std::size_t n, Int limit);
Result upsilon_homomorphism(std::size_t n, Int limit);
// mg_related(a, b) iff witness_mg(a, b, bound) is present.
Result mg_witness(std::size_t n, Int limit, Int bound);
// natural_leq(a, b) iff witness_leq(a, b, bound) is present.
Result natural_order_witness(std::size_t n, Int limit, Int bound);
// Reflexive, antisymmetric, transitive and two-sided compatible.
Result natural_order_axioms(std::size_t n, Int limit);
Result e_unitary(std::size_t n, Int limit, Int idempotent_max);
Result unit_group(std::size_t n);
Result green_vs_grid(std::size_t n, Int limit);
Result bisimplicity(std::size_t n, Int idempotent_max);
// top_of_class is the unique maximum of the class within E(n, class_max).
Result f_inverse(std::size_t n, Int limit, Int class_max);
// solve_left/right against brute force over E(n, candidate_max).
Result equations(std::size_t n, Int limit, Int candidate_max);
// n = 1: the congruence from a gap-d pair relates c, e iff the gap of (c, e)
// is in dZ, for c, e in E(1, limit).
Result congruence_cyclic(Int d, Int limit);
Result congruence_hand_derived();
// Equivalence axioms, compatibility and the minimality certificate on
// sampled descriptors over E(n, limit).
Result congruence_axioms(std::size_t n, Int limit, std::size_t samples,
                         std::uint64_t seed);
Result normal_closure_stability(std::size_t n, Int limit);
Result generator_laws(std::size_t n);
Result bicyclic_words(std::size_t n, std::size_t max_length);
Result format_round_trip(std::size_t n, Int limit);
Result parser_fuzz(std::size_t samples, std::uint64_t seed);

inline constexpr std::string_view kSuites[] = {
    "all", "core", "oracle", "quotient", "congruence", "words", "equations"};

bool is_suite(std::string_view name);

// The parameterized suites behind `ipf check`.
std::vector<Result> run_suite(std::string_view suite, std::size_t n, Int limit,
                              std::uint64_t seed);

std::string format_result(Result const &r);

}  // namespace ipf::check
