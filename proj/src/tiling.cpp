#include "spectile/tiling.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "spectile/cyclotomic.hpp"

namespace spectile {

namespace {

void require_same_group(const GroupSpec& g, const PointSet& s, const char* what) {
    if (!(s.group() == g))
        throw std::invalid_argument(std::string(what) + ": set lives in a different group");
}

DecisionReport report_from_solution(const DiffSolution& sol) {
    DecisionReport rep;
    rep.method = DecisionMethod::DiffSearch;
    rep.nodes = sol.nodes;
    rep.seconds = sol.seconds;
    switch (sol.status) {
    case SearchStatus::TargetReached:
        rep.verdict = Verdict::Yes;
        rep.witness = sol.witness;
        break;
    case SearchStatus::Exact:
        rep.verdict = Verdict::No;
        break;
    case SearchStatus::BudgetExhausted:
        rep.verdict = Verdict::Unknown;
        break;
    }
    return rep;
}

} // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

const char* decision_method_name(DecisionMethod m) {
    switch (m) {
    case DecisionMethod::Divisibility: return "divisibility";
    case DecisionMethod::DiffSearch: return "diff-search";
    case DecisionMethod::Verification: return "verification";
    }
    return "?";
}

bool verify_tiling(const GroupSpec& g, const PointSet& s, const PointSet& t) {
    require_same_group(g, s, "verify_tiling");
    require_same_group(g, t, "verify_tiling");
    if (!g.within_cap())
        throw std::invalid_argument("verify_tiling: group order exceeds enumeration cap");
    if (static_cast<std::int64_t>(s.size()) * static_cast<std::int64_t>(t.size()) != g.order)
        return false;
    std::vector<std::uint8_t> covered(static_cast<std::size_t>(g.order), 0);
    for (const auto& a : s.points())
        for (const auto& b : t.points()) {
            std::size_t idx = static_cast<std::size_t>(
                index_of(g, elem_combine(g, a, b, CombineOp::Add)));
            if (covered[idx]++)
                return false; // double cover
        }
    return true; // |S||T| = |g| and no collision: every point hit once
}

bool verify_spectrum(const GroupSpec& g, const PointSet& s, const PointSet& l) {
    require_same_group(g, s, "verify_spectrum");
    require_same_group(g, l, "verify_spectrum");
    if (s.empty())
        throw std::invalid_argument("verify_spectrum: S is empty");
    if (l.size() != s.size())
        return false;
    for (std::size_t i = 0; i < l.size(); ++i)
        for (std::size_t j = 0; j < l.size(); ++j) {
            if (i == j)
                continue;
            GroupElement delta = elem_combine(g, l[i], l[j], CombineOp::Sub);
            if (!root_sum_is_zero(indicator_transform(g, s, delta)))
                return false;
        }
    return true;
}

DecisionReport is_tile(const GroupSpec& g, const PointSet& s, const SolveOptions& opts) {
    require_same_group(g, s, "is_tile");
    if (s.empty())
        throw std::invalid_argument("is_tile: S is empty");
    if (g.order % static_cast<std::int64_t>(s.size()) != 0) {
        DecisionReport rep;
        rep.verdict = Verdict::No;
        rep.method = DecisionMethod::Divisibility;
        return rep;
    }
    PointSet allowed = union_sets(complement_set(difference_set(s)),
                                  PointSet(g, {zero_element(g)}));
    DiffInstance inst(g, full_group_set(g), allowed,
                      g.order / static_cast<std::int64_t>(s.size()));
    DecisionReport rep = report_from_solution(solve_diff(inst, opts));
    if (rep.verdict == Verdict::Yes && !verify_tiling(g, s, *rep.witness))
        throw std::logic_error("is_tile: witness failed verify_tiling");
    return rep;
}

DecisionReport is_spectral(const GroupSpec& g, const PointSet& s, const SolveOptions& opts) {
    require_same_group(g, s, "is_spectral");
    if (s.empty())
        throw std::invalid_argument("is_spectral: S is empty");
    PointSet candidates = union_sets(zero_set(g, s), PointSet(g, {zero_element(g)}));
    DiffInstance inst(g, candidates, candidates, static_cast<std::int64_t>(s.size()));
    DecisionReport rep = report_from_solution(solve_diff(inst, opts));
    if (rep.verdict == Verdict::Yes && !verify_spectrum(g, s, *rep.witness))
        throw std::logic_error("is_spectral: witness failed verify_spectrum");
    return rep;
}

ScanReport scan_small_spectral_implies_tile(const GroupSpec& g, const ScanOptions& opts) {
    if (opts.max_size < 1 || opts.max_size > 5)
        throw std::invalid_argument("scan: max_size must be in 1..5");
    if (!g.within_cap())
        throw std::invalid_argument("scan: group order exceeds enumeration cap");

    ScanReport rep;
    auto examine = [&](const PointSet& s) {
        ++rep.examined;
        DecisionReport spectral = is_spectral(g, s, opts.solve);
        if (spectral.verdict == Verdict::Unknown) {
            ++rep.undecided;
            return;
        }
        if (spectral.verdict != Verdict::Yes)
            return;
        ++rep.spectral;
        DecisionReport tile = is_tile(g, s, opts.solve);
        if (tile.verdict == Verdict::Yes)
            ++rep.tiles;
        else if (tile.verdict == Verdict::Unknown)
            ++rep.undecided;
        else
            rep.violations.push_back(s);
    };

    const std::int64_t order = g.order;
    const std::int64_t max_size = std::min<std::int64_t>(opts.max_size, order);

    if (opts.exhaustive) {
        // Subsets contain 0 by translation invariance, so a size-s subset
        // is 0 plus s-1 of the remaining order-1 elements.
        __int128 total = 0;
        for (std::int64_t s = 1; s <= max_size; ++s) {
            __int128 c = 1;
            for (std::int64_t i = 0; i < s - 1; ++i)
                c = c * (order - 1 - i) / (i + 1);
            total += c;
            if (total > 10'000'000)
                throw std::invalid_argument("scan: exhaustive subset count exceeds 10^7");
        }
        for (std::int64_t s = 1; s <= max_size; ++s) {
            std::vector<std::int64_t> pick(static_cast<std::size_t>(s));
            pick[0] = 0;
            // combination walk over indices 1..order-1 in slots 1..s-1
            auto walk = [&](auto&& self, std::size_t slot, std::int64_t from) -> void {
                if (slot == pick.size()) {
                    examine(PointSet::from_indices(g, pick));
                    return;
                }
                for (std::int64_t v = from; v < order; ++v) {
                    pick[slot] = v;
                    self(self, slot + 1, v + 1);
                }
            };
            walk(walk, 1, 1);
        }
    } else {
        if (opts.sample_count < 1)
            throw std::invalid_argument("scan: sample mode needs a positive sample count");
        std::mt19937_64 rng(opts.seed);
        for (std::int64_t i = 0; i < opts.sample_count; ++i) {
            // size uniform in [1, max_size], then distinct non-zero indices;
            // plain modulo keeps the draw identical across platforms
            std::int64_t size = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_size));
            std::vector<std::int64_t> pick{0};
            while (static_cast<std::int64_t>(pick.size()) < size) {
                std::int64_t v = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(order - 1));
                if (std::find(pick.begin(), pick.end(), v) == pick.end())
                    pick.push_back(v);
            }
            std::sort(pick.begin(), pick.end());
            examine(PointSet::from_indices(g, pick));
        }
    }
    return rep;
}

} // namespace spectile
