#include "spectile/counterexample.hpp"

#include <sstream>
#include <stdexcept>

#include "spectile/hadamard.hpp"

namespace spectile {

CounterexampleFixtures paper_fixtures() {
    CounterexampleFixtures fx;
    fx.h = RationalMatrix::from_rows(8, {{0, 0, 0, 0, 0, 0},
                                         {0, 4, 2, 6, 6, 2},
                                         {0, 2, 4, 1, 5, 6},
                                         {0, 6, 3, 4, 2, 7},
                                         {0, 6, 7, 2, 4, 3},
                                         {0, 2, 6, 5, 1, 4}});
    fx.l = IntMatrixModN::from_rows(8, {{0, 0, 0},
                                        {0, 1, 1},
                                        {1, 0, 0},
                                        {0, 1, 0},
                                        {0, 0, 1},
                                        {7, 1, 1}});
    fx.a = IntMatrixModN::from_rows(8, {{0, 2, 4, 1, 5, 6},
                                        {0, 6, 3, 4, 2, 7},
                                        {0, 6, 7, 2, 4, 3}});
    return fx;
}

PointSet columns_as_points(const GroupSpec& g, const IntMatrixModN& m) {
    if (g.dim() != m.rows())
        throw std::invalid_argument("columns_as_points: group dimension != matrix rows");
    for (std::int64_t n : g.moduli)
        if (n != m.modulus())
            throw std::invalid_argument("columns_as_points: group moduli != matrix modulus");
    std::vector<GroupElement> pts;
    pts.reserve(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        GroupElement x(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            x[i] = m.at(i, j);
        pts.push_back(std::move(x));
    }
    return PointSet(g, std::move(pts));
}

PointSet rows_as_points(const GroupSpec& g, const IntMatrixModN& m) {
    if (g.dim() != m.cols())
        throw std::invalid_argument("rows_as_points: group dimension != matrix cols");
    for (std::int64_t n : g.moduli)
        if (n != m.modulus())
            throw std::invalid_argument("rows_as_points: group moduli != matrix modulus");
    std::vector<GroupElement> pts;
    pts.reserve(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        GroupElement x(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j)
            x[j] = m.at(i, j);
        pts.push_back(std::move(x));
    }
    return PointSet(g, std::move(pts));
}

CounterexampleReport verify_counterexample() { return verify_counterexample_with(paper_fixtures()); }

CounterexampleReport verify_counterexample_with(const CounterexampleFixtures& fx) {
    CounterexampleReport rep;
    auto add = [&](std::string name, bool pass, std::string detail) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };

    add("log-hadamard", is_log_hadamard(fx.h),
        "every row pair of H gives an exactly vanishing sum of 8th roots of unity");

    bool decomposes = false;
    std::string decomp_detail = "L*A mod 8 reproduces the numerators of H";
    try {
        decomposes = verify_decomposition(fx.h, fx.l, fx.a);
    } catch (const std::invalid_argument& ex) {
        decomp_detail = ex.what();
    }
    add("decomposition", decomposes, decomp_detail);

    IntMatrixModN eight_h(fx.h.rows(), fx.h.cols(), fx.h.den());
    for (std::size_t i = 0; i < fx.h.rows(); ++i)
        for (std::size_t j = 0; j < fx.h.cols(); ++j)
            eight_h.set(i, j, fx.h.num(i, j));
    ModRankResult rank = mod_rank(eight_h);
    {
        std::ostringstream os;
        os << "minimal inner dimension of 8H mod 8 is " << rank.d;
        add("mod-rank-3", rank.d == 3, os.str());
    }

    GroupSpec g = make_group({fx.a.modulus(), fx.a.modulus(), fx.a.modulus()});
    bool spectral = false;
    std::string spectral_detail;
    bool tile_no = false;
    std::string tile_detail;
    try {
        PointSet s = columns_as_points(g, fx.a);
        PointSet spectrum = rows_as_points(g, fx.l);
        spectral = verify_spectrum(g, s, spectrum);
        spectral_detail = "rows of L are pairwise orthogonal on the columns of A";
        DecisionReport tile = is_tile(g, s);
        tile_no = tile.verdict == Verdict::No;
        std::ostringstream os;
        os << "|A| = " << s.size() << " does not divide |G| = " << g.order << " ("
           << decision_method_name(tile.method) << ")";
        tile_detail = os.str();
    } catch (const std::invalid_argument& ex) {
        // duplicate columns or mismatched shapes from a perturbed fixture
        spectral_detail = ex.what();
        tile_detail = ex.what();
    }
    add("spectral-with-given-spectrum", spectral, spectral_detail);
    add("not-a-tile", tile_no, tile_detail);

    rep.all_pass = true;
    for (const CheckResult& c : rep.checks)
        rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

ExpandReport expand_counterexample(std::int64_t n, const SolveOptions& opts) {
    if (n < 1)
        throw std::invalid_argument("expand_counterexample: n must be >= 1");
    CounterexampleFixtures fx = paper_fixtures();
    const std::int64_t base = fx.a.modulus();
    GroupSpec g = make_group({base * n, base * n, base * n});

    std::vector<GroupElement> pts;
    pts.reserve(static_cast<std::size_t>(fx.a.cols()) * static_cast<std::size_t>(n * n * n));
    for (std::size_t j = 0; j < fx.a.cols(); ++j)
        for (std::int64_t b0 = 0; b0 < n; ++b0)
            for (std::int64_t b1 = 0; b1 < n; ++b1)
                for (std::int64_t b2 = 0; b2 < n; ++b2)
                    pts.push_back({fx.a.at(0, j) + base * b0,
                                   fx.a.at(1, j) + base * b1,
                                   fx.a.at(2, j) + base * b2});

    ExpandReport rep;
    rep.group = g;
    rep.a_n = PointSet(g, std::move(pts));

    DecisionReport tile = is_tile(g, rep.a_n);
    rep.tile_verdict = tile.verdict;

    try {
        DecisionReport spectral = is_spectral(g, rep.a_n, opts);
        rep.spectral_verdict = spectral.verdict;
        rep.spectrum = spectral.witness;
        rep.nodes = spectral.nodes;
    } catch (const std::invalid_argument&) {
        // Zero sets beyond the solver's vertex cap (large n): the
        // spectrality question is left open rather than failed.
        rep.spectral_verdict = Verdict::Unknown;
    }
    return rep;
}

} // namespace spectile
