#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "spectile/group.hpp"
#include "spectile/point_set.hpp"

namespace spectile {

/// Largest A contained in E with A - A contained in D (problem DIFF), or
/// the decision variant at a fixed target size (DIFF'). A - A includes 0,
/// so a D without 0 admits only the empty set.
struct DiffInstance {
    GroupSpec group;
    PointSet e; // candidate elements
    PointSet d; // allowed differences
    std::optional<std::int64_t> target; // DIFF' when set

    DiffInstance(GroupSpec g, PointSet e_, PointSet d_,
                 std::optional<std::int64_t> target_ = std::nullopt);
};

/// Compatibility graph on the elements of E: vertices are positions in E,
/// an edge joins x and y iff both x-y and y-x lie in D. A of the DIFF
/// problem = clique. zero_allowed records whether 0 is in D; when it is
/// not, only the empty set is feasible regardless of the edges.
struct ConflictGraph {
    std::size_t n = 0;
    bool zero_allowed = false;
    std::vector<std::vector<std::uint64_t>> adj; // n bitsets of n bits

    bool has_edge(std::size_t i, std::size_t j) const {
        return (adj[i][j >> 6] >> (j & 63)) & 1;
    }
};

ConflictGraph build_conflict_graph(const DiffInstance& inst);

enum class SearchStatus {
    Exact,           // search ran to completion; k is the true maximum
    TargetReached,   // DIFF' early stop; k equals the target
    BudgetExhausted, // wall clock ran out; k is a lower bound only
};

struct DiffSolution {
    std::int64_t k = 0;
    PointSet witness;
    SearchStatus status = SearchStatus::Exact;
    std::uint64_t nodes = 0; // branch steps explored
    double seconds = 0.0;

    bool exhausted() const { return status == SearchStatus::BudgetExhausted; }
};

struct SolveOptions {
    std::optional<double> budget_seconds; // empty = unlimited
    int workers = 1;
};

/// Branch-and-bound maximum clique with greedy-coloring bounds over the
/// conflict graph. Vertex order: descending degree, ties by element index.
/// With a target set, stops at the first clique of that size and reports
/// exactly k = target. The witness is verified against the instance before
/// returning. k is independent of the worker count for solves that
/// complete; the witness is deterministic in single-worker mode. A budget
/// overrun yields status BudgetExhausted and the best clique found so far.
/// Throws when |E| exceeds the vertex cap (4096).
DiffSolution solve_diff(const DiffInstance& inst, const SolveOptions& opts = {});

/// Reference oracle: exhaustive subset search straight from the A - A
/// definition, sharing nothing with the clique machinery. |E| <= 24.
DiffSolution brute_force_diff(const DiffInstance& inst);

} // namespace spectile
