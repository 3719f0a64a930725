#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "spectile/group.hpp"
#include "spectile/matrices.hpp"
#include "spectile/point_set.hpp"

// Reference implementations used only by the tests. They take the slow,
// definition-shaped road on purpose and share no machinery with the
// library's decision procedures.
namespace spectile::testutil {

// Exact-cover search for a translation complement: T with S + T covering
// every element of g exactly once. Backtracks on the first uncovered
// element, so it is exhaustive but prunes dead branches.
std::optional<PointSet> find_tiling_complement(const GroupSpec& g, const PointSet& s);

// Brute-force spectrum search: every |S|-subset of characters containing
// 0 is handed to verify_spectrum. Spectra are translation-invariant, so
// restricting to subsets through 0 loses nothing.
std::optional<PointSet> find_spectrum(const GroupSpec& g, const PointSet& s);

// Minimal generator count of the subgroup of Z_N^rows spanned by the
// columns of m, computed by enumerating the subgroup and counting
// p-divisibility: min generators = max over p | N of log_p |W / pW|.
// Requires rows <= 8 and modulus <= 256 (elements pack into 64 bits).
std::int64_t min_generator_count(const IntMatrixModN& m);

// Literal factorization search: does some L (rows x d) and A (d x cols)
// over Z_N reproduce m exactly? Enumerates every L and solves each column
// by enumerating coefficient vectors. Throws std::invalid_argument when
// the enumeration would exceed `limit` candidates.
bool factorization_exists(const IntMatrixModN& m, std::int64_t d,
                          std::uint64_t limit = 50'000'000);

// Uniform value in [0, n) by plain modulo; bias is irrelevant for tests
// and the results are identical on every platform.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t n);

// Random subset of g with `size` distinct elements (optionally forced to
// contain 0), sorted by element index.
PointSet random_subset(const GroupSpec& g, std::size_t size, std::mt19937_64& rng,
                       bool include_zero = false);

// Random equivalence scramble of a log-Hadamard matrix: row and column
// permutations composed with row/column dephasing shifts (multiples of
// 1/den). Equivalence preserves the log-Hadamard property and the
// canonical class, so canonicalization must see through it.
RationalMatrix scramble_log_hadamard(const RationalMatrix& m, std::mt19937_64& rng);

// Canonical parameter of the 4x4 one-parameter family: the orbit of t/n
// under t -> -t and t -> t + n/2 (n even), reduced, smallest residue.
Frac dita_orbit_min(std::int64_t t, std::int64_t n);

} // namespace spectile::testutil
