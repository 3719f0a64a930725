#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectile/diff.hpp"
#include "spectile/group.hpp"
#include "spectile/point_set.hpp"

namespace spectile {

enum class Verdict { Yes, No, Unknown };

enum class DecisionMethod { Divisibility, DiffSearch, Verification };

const char* verdict_name(Verdict v);
const char* decision_method_name(DecisionMethod m);

struct DecisionReport {
    Verdict verdict = Verdict::No;
    std::optional<PointSet> witness; // present and independently verified on Yes
    DecisionMethod method = DecisionMethod::Verification;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
};

/// True iff the translates {S + t : t in T} cover every element of g
/// exactly once. Requires the group within its enumeration cap.
bool verify_tiling(const GroupSpec& g, const PointSet& s, const PointSet& t);

/// True iff |L| = |S| and every difference of distinct characters of L
/// annihilates the indicator transform of S exactly: |S| pairwise
/// orthogonal characters span the functions on S. Translation-invariant
/// in L.
bool verify_spectrum(const GroupSpec& g, const PointSet& s, const PointSet& l);

/// Does S tile g by translation? Fast NO when |S| does not divide |g|;
/// otherwise a clique search for a tiling complement: E = g,
/// D = (S-S)^c with 0 restored, target |g|/|S|. A Yes witness is the
/// complement, re-checked by verify_tiling. Budget overrun gives Unknown.
DecisionReport is_tile(const GroupSpec& g, const PointSet& s, const SolveOptions& opts = {});

/// Is S spectral in g? Clique search over E = D = {0} union zero_set(g,S)
/// with target |S|. A Yes witness is a spectrum, re-checked by
/// verify_spectrum. Budget overrun gives Unknown.
DecisionReport is_spectral(const GroupSpec& g, const PointSet& s, const SolveOptions& opts = {});

struct ScanOptions {
    std::int64_t max_size = 5;      // subset sizes 1..max_size, at most 5
    bool exhaustive = true;         // else sample `sample_count` seeded draws
    std::int64_t sample_count = 0;
    std::uint64_t seed = 0;
    SolveOptions solve;
};

struct ScanReport {
    std::int64_t examined = 0;
    std::int64_t spectral = 0;
    std::int64_t tiles = 0;               // tiles among the spectral sets
    std::int64_t undecided = 0;           // budget-limited verdicts, if any
    std::vector<PointSet> violations;     // spectral but provably not a tile
};

/// Sweep subsets of g (canonicalized to contain 0; sizes up to max_size)
/// checking that every spectral set tiles. Exhaustive mode walks subsets
/// by size then lexicographic element order and refuses scans beyond 10^7
/// subsets; sample mode draws seeded random subsets. An empty `violations`
/// list is the expected outcome.
ScanReport scan_small_spectral_implies_tile(const GroupSpec& g, const ScanOptions& opts);

} // namespace spectile
