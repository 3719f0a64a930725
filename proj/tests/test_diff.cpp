#include "doctest.h"

#include <random>
#include <stdexcept>

#include "spectile/diff.hpp"
#include "oracles.hpp"

using namespace spectile;
using namespace spectile::testutil;

namespace {

// Literal witness re-check, independent of the solver's own verification.
void check_witness(const DiffInstance& inst, const DiffSolution& sol) {
    CHECK(sol.k == static_cast<std::int64_t>(sol.witness.size()));
    for (std::size_t i = 0; i < sol.witness.size(); ++i)
        for (std::size_t j = 0; j < sol.witness.size(); ++j) {
            CHECK(inst.e.contains(sol.witness[i]));
            CHECK(inst.d.contains(
                elem_combine(inst.group, sol.witness[i], sol.witness[j], CombineOp::Sub)));
        }
}

DiffInstance random_instance(std::mt19937_64& rng, std::int64_t max_n, std::size_t max_e,
                             std::optional<std::int64_t> target = std::nullopt) {
    std::int64_t n = 2 + static_cast<std::int64_t>(rng_below(rng, static_cast<std::uint64_t>(max_n - 1)));
    GroupSpec g = make_group({n});
    std::size_t esize =
        1 + rng_below(rng, std::min<std::uint64_t>(static_cast<std::uint64_t>(n), max_e));
    PointSet e = random_subset(g, esize, rng);
    std::size_t dsize = 1 + rng_below(rng, static_cast<std::uint64_t>(n));
    // Two thirds of the instances keep 0 in D, the rest drop it.
    PointSet d = random_subset(g, dsize, rng, rng_below(rng, 3) != 0);
    return DiffInstance(g, e, d, target);
}

} // namespace

TEST_CASE("solve_diff on a four-element group") {
    GroupSpec g = make_group({4});
    DiffInstance inst(g, PointSet::from_residues(g, {0, 1, 2, 3}),
                      PointSet::from_residues(g, {0, 2}));
    DiffSolution sol = solve_diff(inst);
    CHECK(sol.status == SearchStatus::Exact);
    CHECK(sol.k == 2);
    CHECK(sol.witness.indices() == std::vector<std::int64_t>{0, 2});
}

TEST_CASE("a difference set without zero admits only the empty set") {
    GroupSpec g = make_group({6});
    DiffInstance inst(g, PointSet::from_residues(g, {0, 1, 2, 3, 4, 5}),
                      PointSet::from_residues(g, {1, 2, 3, 4, 5}));
    DiffSolution sol = solve_diff(inst);
    CHECK(sol.status == SearchStatus::Exact);
    CHECK(sol.k == 0);
    CHECK(sol.witness.empty());
    DiffSolution brute = brute_force_diff(inst);
    CHECK(brute.k == 0);
}

TEST_CASE("target mode reports exactly the requested size") {
    GroupSpec g = make_group({8});
    PointSet e = PointSet::from_residues(g, {0, 1, 2, 3, 4, 5, 6, 7});
    PointSet d = PointSet::from_residues(g, {0, 2, 4, 6});

    DiffInstance hit(g, e, d, 3);
    DiffSolution sol = solve_diff(hit);
    CHECK(sol.status == SearchStatus::TargetReached);
    CHECK(sol.k == 3);
    CHECK(sol.witness.size() == 3);
    check_witness(hit, sol);

    // Unreachable target: the search exhausts and proves the true maximum.
    DiffInstance miss(g, e, d, 5);
    DiffSolution out = solve_diff(miss);
    CHECK(out.status == SearchStatus::Exact);
    CHECK(out.k == 4);

    DiffInstance zero(g, e, d, 0);
    DiffSolution z = solve_diff(zero);
    CHECK(z.status == SearchStatus::TargetReached);
    CHECK(z.k == 0);
}

TEST_CASE("instance validation") {
    GroupSpec g = make_group({6});
    PointSet e = PointSet::from_residues(g, {0, 1});
    PointSet d = PointSet::from_residues(g, {0});
    CHECK_THROWS_AS(DiffInstance(g, e, d, -1), std::invalid_argument);

    GroupSpec other = make_group({7});
    CHECK_THROWS_AS(DiffInstance(g, PointSet::from_residues(other, {0}), d, std::nullopt),
                    std::invalid_argument);

    DiffInstance ok(g, e, d);
    SolveOptions bad_budget;
    bad_budget.budget_seconds = 0.0;
    CHECK_THROWS_AS(solve_diff(ok, bad_budget), std::invalid_argument);
    SolveOptions bad_workers;
    bad_workers.workers = 0;
    CHECK_THROWS_AS(solve_diff(ok, bad_workers), std::invalid_argument);
}

TEST_CASE("the vertex cap rejects oversized candidate sets") {
    GroupSpec g = make_group({5000});
    PointSet e = full_group_set(g);
    PointSet d = PointSet::from_residues(g, {0, 1});
    CHECK_THROWS_AS(solve_diff(DiffInstance(g, e, d)), std::invalid_argument);
}

TEST_CASE("brute force rejects oversized inputs but matches hand values") {
    GroupSpec g = make_group({30});
    PointSet big = full_group_set(g);
    PointSet d = PointSet::from_residues(g, {0, 3});
    CHECK_THROWS_AS(brute_force_diff(DiffInstance(g, big, d)), std::invalid_argument);

    GroupSpec g6 = make_group({6});
    DiffInstance inst(g6, PointSet::from_residues(g6, {0, 1, 2, 3, 4, 5}),
                      PointSet::from_residues(g6, {0, 3}));
    DiffSolution sol = brute_force_diff(inst);
    CHECK(sol.k == 2);
    CHECK(sol.status == SearchStatus::Exact);
    check_witness(inst, sol);
}

TEST_CASE("solver matches the brute-force oracle on random instances") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 60; ++trial) {
        DiffInstance inst = random_instance(rng, 20, 14);
        DiffSolution fast = solve_diff(inst);
        DiffSolution slow = brute_force_diff(inst);
        CHECK(fast.status == SearchStatus::Exact);
        CHECK(fast.k == slow.k);
        check_witness(inst, fast);
        check_witness(inst, slow);
    }
}

TEST_CASE("enlarging D never shrinks the answer, shrinking E never grows it") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 25; ++trial) {
        DiffInstance inst = random_instance(rng, 18, 12);
        std::int64_t base = solve_diff(inst).k;

        PointSet bigger_d = union_sets(
            inst.d, random_subset(inst.group, 1 + rng_below(rng, 3), rng));
        CHECK(solve_diff(DiffInstance(inst.group, inst.e, bigger_d)).k >= base);

        if (inst.e.size() > 1) {
            std::vector<std::int64_t> idx = inst.e.indices();
            idx.erase(idx.begin() + static_cast<std::ptrdiff_t>(rng_below(rng, idx.size())));
            PointSet smaller_e = PointSet::from_indices(inst.group, idx);
            CHECK(solve_diff(DiffInstance(inst.group, smaller_e, inst.d)).k <= base);
        }
    }
}

TEST_CASE("k is schedule-independent and the single-worker witness is stable") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 12; ++trial) {
        DiffInstance inst = random_instance(rng, 30, 18);
        SolveOptions par;
        par.workers = 4;
        DiffSolution a = solve_diff(inst);
        DiffSolution b = solve_diff(inst, par);
        CHECK(a.status == SearchStatus::Exact);
        CHECK(b.status == SearchStatus::Exact);
        CHECK(a.k == b.k);
        DiffSolution c = solve_diff(inst);
        CHECK(a.witness == c.witness);
    }
}

TEST_CASE("an exhausted budget is reported, never silently truncated") {
    // Dense random conflict structure on a thousand vertices: the search
    // tree is far larger than the first budget probe.
    GroupSpec g = make_group({1500});
    std::mt19937_64 rng(109);
    std::vector<std::int64_t> dvals{0};
    for (std::int64_t v = 1; v <= 750; ++v) {
        std::int64_t x = 1 + static_cast<std::int64_t>(rng_below(rng, 1499));
        dvals.push_back(x);
        dvals.push_back(1500 - x);
    }
    std::sort(dvals.begin(), dvals.end());
    dvals.erase(std::unique(dvals.begin(), dvals.end()), dvals.end());
    PointSet d = PointSet::from_residues(g, dvals);
    PointSet e = full_group_set(g);
    SolveOptions opts;
    opts.budget_seconds = 1e-9;
    DiffSolution sol = solve_diff(DiffInstance(g, e, d), opts);
    CHECK(sol.status == SearchStatus::BudgetExhausted);
    CHECK(sol.exhausted());
    CHECK(sol.k >= 1); // the greedy seed is always kept
    CHECK(sol.k == static_cast<std::int64_t>(sol.witness.size()));
}

TEST_CASE("conflict graph edges require both differences in D") {
    GroupSpec g = make_group({4});
    DiffInstance inst(g, PointSet::from_residues(g, {0, 1, 2, 3}),
                      PointSet::from_residues(g, {0, 1}));
    ConflictGraph cg = build_conflict_graph(inst);
    CHECK(cg.n == 4);
    CHECK(cg.zero_allowed);
    // 1 in D but 3 = -1 mod 4 is not: no edges at all.
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK_FALSE(cg.has_edge(i, j));
    CHECK(solve_diff(inst).k == 1);
}
