#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spectile/diff.hpp"
#include "spectile/group.hpp"
#include "spectile/matrices.hpp"
#include "spectile/point_set.hpp"
#include "spectile/tiling.hpp"

namespace spectile {

/// The packaged 6x6 example: H log-Hadamard with denominator 8, and the
/// exact factorization 8H = L*A mod 8 through inner dimension 3 that makes
/// the 6 columns of A a spectral, non-tiling set in Z_8^3.
struct CounterexampleFixtures {
    RationalMatrix h; // 6x6, denominator 8
    IntMatrixModN l;  // 6x3 mod 8
    IntMatrixModN a;  // 3x6 mod 8
};

CounterexampleFixtures paper_fixtures();

/// Columns of m as points of g (dim(g) = rows) / rows of m as points
/// (dim(g) = cols). Moduli of g must all equal the matrix modulus.
PointSet columns_as_points(const GroupSpec& g, const IntMatrixModN& m);
PointSet rows_as_points(const GroupSpec& g, const IntMatrixModN& m);

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct CounterexampleReport {
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

/// The five checks on the packaged fixtures: H log-Hadamard (exact),
/// 8H = L*A mod 8, mod-8 rank of 8H equals 3, the columns of A are
/// spectral in Z_8^3 with the rows of L as a spectrum, and A does not
/// tile Z_8^3 (6 does not divide 512). Failures are report entries.
CounterexampleReport verify_counterexample();

/// Same checks against caller-supplied matrices (for perturbation tests).
CounterexampleReport verify_counterexample_with(const CounterexampleFixtures& fx);

struct ExpandReport {
    GroupSpec group;          // Z_{8n}^3
    PointSet a_n;             // A + 8*[0,n)^3, size 6n^3
    Verdict tile_verdict = Verdict::Unknown;
    Verdict spectral_verdict = Verdict::Unknown;
    std::optional<PointSet> spectrum; // verified witness when spectral = yes
    std::uint64_t nodes = 0;
};

/// The blown-up set A_n = A + 8*[0,n)^3 inside Z_{8n}^3. Its size 6n^3
/// never divides (8n)^3, so the tile verdict is No by divisibility; the
/// spectrality search honors the solver options and may come back Unknown
/// on budget.
ExpandReport expand_counterexample(std::int64_t n, const SolveOptions& opts = {});

} // namespace spectile
