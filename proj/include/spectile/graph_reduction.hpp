#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "spectile/diff.hpp"
#include "spectile/point_set.hpp"

namespace spectile {

/// Undirected simple graph on vertices 1..n. Edges are stored normalized
/// (a < b) and deduplicated; self-loops are rejected.
class SimpleGraph {
public:
    SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool adjacent(int a, int b) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
};

/// Injective map of vertices 1..n into Z_m whose pairwise differences are
/// all distinct (a Sidon embedding). phi[v-1] is the image of vertex v;
/// phi[0] = 0.
struct Embedding {
    std::int64_t m = 2;
    std::vector<std::int64_t> phi;
};

/// Greedy Sidon embedding: phi(1) = 0 and each next value is the smallest
/// nu in {1..m-1} avoiding every phi(i)+phi(j)-phi(l) over the values so
/// far. Starts at m = max(n^3, 2) and doubles m if the greedy runs out of
/// candidates (it never does: the forbidden set stays below n^3 - 1).
/// The Sidon property is re-verified before returning.
Embedding greedy_embedding(int n);

/// One greedy pass at a fixed modulus. Throws std::runtime_error when the
/// candidate range is exhausted.
Embedding greedy_embedding_with_modulus(int n, std::int64_t m);

/// Embed the graph and collect A_edges = { +-(phi(a)-phi(b)) : ab an edge }
/// in Z_m. By the Sidon property membership of phi(i)-phi(j) in A_edges is
/// equivalent to adjacency of i and j; that equivalence is checked over
/// every vertex pair before returning.
std::pair<Embedding, PointSet> encode_graph(const SimpleGraph& g);

struct IndependentSetResult {
    std::int64_t k = 0;
    std::vector<int> vertices; // witness, ascending labels
    SearchStatus status = SearchStatus::Exact;
    std::uint64_t nodes = 0;
};

/// Maximum independent set through the difference solver: E = phi(V),
/// D = Z_m minus A_edges (0 stays in D since the graph has no loops),
/// optional target size for the decision variant. The witness is mapped
/// back through phi and re-verified against the edge list.
IndependentSetResult independent_set_via_diff(const SimpleGraph& g,
                                              std::optional<std::int64_t> target = std::nullopt,
                                              const SolveOptions& opts = {});

/// Exhaustive oracle, n <= 24.
IndependentSetResult brute_force_independent_set(const SimpleGraph& g);

} // namespace spectile
