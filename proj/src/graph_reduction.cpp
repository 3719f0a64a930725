#include "spectile/graph_reduction.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spectile {

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 1)
        throw std::invalid_argument("SimpleGraph: vertex count must be >= 1");
    for (auto& [a, b] : edges) {
        if (a == b)
            throw std::invalid_argument("SimpleGraph: self-loop at vertex " + std::to_string(a));
        if (a > b)
            std::swap(a, b);
        if (a < 1 || b > n)
            throw std::invalid_argument("SimpleGraph: edge endpoint outside 1.." +
                                        std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("SimpleGraph: duplicate edge");
    edges_ = std::move(edges);
}

bool SimpleGraph::adjacent(int a, int b) const {
    if (a > b)
        std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

namespace {

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

void require_sidon(const Embedding& emb) {
    std::vector<std::int64_t> diffs;
    for (std::size_t i = 0; i < emb.phi.size(); ++i)
        for (std::size_t j = 0; j < emb.phi.size(); ++j)
            if (i != j)
                diffs.push_back(mod_reduce(emb.phi[i] - emb.phi[j], emb.m));
    std::sort(diffs.begin(), diffs.end());
    if (std::adjacent_find(diffs.begin(), diffs.end()) != diffs.end())
        throw std::logic_error("greedy_embedding: differences are not distinct");
}

} // namespace

Embedding greedy_embedding_with_modulus(int n, std::int64_t m) {
    if (n < 1)
        throw std::invalid_argument("greedy_embedding: n must be >= 1");
    if (m < 2)
        throw std::invalid_argument("greedy_embedding: modulus must be >= 2");
    Embedding emb;
    emb.m = m;

    // forbidden[x] marks x = phi(i)+phi(j)-phi(l) over the chosen values;
    // absorb(nu) adds the triples gained when nu joins, i.e. those with nu
    // in one, two, or all three slots, keeping the total work at O(n^3).
    std::vector<char> forbidden(static_cast<std::size_t>(m), 0);
    auto absorb = [&](std::int64_t nu) {
        for (std::int64_t x : emb.phi)
            for (std::int64_t y : emb.phi) {
                forbidden[static_cast<std::size_t>(mod_reduce(nu + x - y, m))] = 1;
                forbidden[static_cast<std::size_t>(mod_reduce(x + y - nu, m))] = 1;
            }
        forbidden[static_cast<std::size_t>(mod_reduce(nu, m))] = 1; // nu+nu-nu and nu+x-x
        for (std::int64_t x : emb.phi) {
            forbidden[static_cast<std::size_t>(mod_reduce(nu + nu - x, m))] = 1;
            forbidden[static_cast<std::size_t>(mod_reduce(x, m))] = 1; // x+nu-nu
        }
        emb.phi.push_back(nu);
    };
    absorb(0);

    while (static_cast<int>(emb.phi.size()) < n) {
        std::int64_t nu = -1;
        for (std::int64_t v = 1; v < m; ++v)
            if (!forbidden[static_cast<std::size_t>(v)]) {
                nu = v;
                break;
            }
        if (nu < 0)
            throw std::runtime_error("greedy_embedding: candidate range exhausted");
        absorb(nu);
    }
    require_sidon(emb);
    return emb;
}

Embedding greedy_embedding(int n) {
    if (n < 1)
        throw std::invalid_argument("greedy_embedding: n must be >= 1");
    std::int64_t m = std::max<std::int64_t>(static_cast<std::int64_t>(n) * n * n, 2);
    for (;;) {
        try {
            return greedy_embedding_with_modulus(n, m);
        } catch (const std::runtime_error&) {
            m *= 2; // never reached for m >= n^3 + 1; kept as a safety net
        }
    }
}

std::pair<Embedding, PointSet> encode_graph(const SimpleGraph& g) {
    Embedding emb = greedy_embedding(g.n());
    GroupSpec zm = make_group({emb.m});
    std::vector<std::int64_t> diffs;
    for (const auto& [a, b] : g.edges()) {
        std::int64_t d = mod_reduce(emb.phi[static_cast<std::size_t>(a - 1)] -
                                        emb.phi[static_cast<std::size_t>(b - 1)],
                                    emb.m);
        diffs.push_back(d);
        diffs.push_back(mod_reduce(-d, emb.m));
    }
    std::sort(diffs.begin(), diffs.end());
    diffs.erase(std::unique(diffs.begin(), diffs.end()), diffs.end());
    PointSet a_edges = PointSet::from_indices(zm, diffs);

    for (int i = 1; i <= g.n(); ++i)
        for (int j = 1; j <= g.n(); ++j) {
            if (i == j)
                continue;
            std::int64_t d = mod_reduce(emb.phi[static_cast<std::size_t>(i - 1)] -
                                            emb.phi[static_cast<std::size_t>(j - 1)],
                                        emb.m);
            if (g.adjacent(i, j) != a_edges.contains(GroupElement{d}))
                throw std::logic_error("encode_graph: adjacency equivalence failed");
        }
    return {std::move(emb), std::move(a_edges)};
}

IndependentSetResult independent_set_via_diff(const SimpleGraph& g,
                                              std::optional<std::int64_t> target,
                                              const SolveOptions& opts) {
    auto [emb, a_edges] = encode_graph(g);
    GroupSpec zm = a_edges.group();
    PointSet allowed = complement_set(a_edges);
    if (!allowed.contains(zero_element(zm)))
        throw std::logic_error("independent_set_via_diff: 0 ended up in A_edges");
    PointSet e = PointSet::from_indices(zm, [&] {
        std::vector<std::int64_t> v(emb.phi.begin(), emb.phi.end());
        std::sort(v.begin(), v.end());
        return v;
    }());

    DiffSolution sol = solve_diff(DiffInstance(zm, e, allowed, target), opts);

    IndependentSetResult res;
    res.k = sol.k;
    res.status = sol.status;
    res.nodes = sol.nodes;
    for (const auto& p : sol.witness.points()) {
        auto it = std::find(emb.phi.begin(), emb.phi.end(), p[0]);
        res.vertices.push_back(static_cast<int>(it - emb.phi.begin()) + 1);
    }
    std::sort(res.vertices.begin(), res.vertices.end());
    for (int a : res.vertices)
        for (int b : res.vertices)
            if (a != b && g.adjacent(a, b))
                throw std::logic_error("independent_set_via_diff: witness is not independent");
    return res;
}

IndependentSetResult brute_force_independent_set(const SimpleGraph& g) {
    if (g.n() > 24)
        throw std::invalid_argument("brute_force_independent_set: n must be <= 24");
    const int n = g.n();
    std::vector<std::uint32_t> nbr(static_cast<std::size_t>(n), 0);
    for (const auto& [a, b] : g.edges()) {
        nbr[static_cast<std::size_t>(a - 1)] |= std::uint32_t(1) << (b - 1);
        nbr[static_cast<std::size_t>(b - 1)] |= std::uint32_t(1) << (a - 1);
    }

    std::vector<int> cur, best;
    std::uint64_t nodes = 0;
    std::uint32_t blocked = 0;
    auto dfs = [&](auto&& self, int start, std::uint32_t blk) -> void {
        if (cur.size() > best.size())
            best = cur;
        for (int v = start; v < n; ++v) {
            if (cur.size() + static_cast<std::size_t>(n - v) <= best.size())
                break;
            if ((blk >> v) & 1)
                continue;
            ++nodes;
            cur.push_back(v + 1);
            self(self, v + 1, blk | nbr[static_cast<std::size_t>(v)]);
            cur.pop_back();
        }
    };
    dfs(dfs, 0, blocked);

    IndependentSetResult res;
    res.k = static_cast<std::int64_t>(best.size());
    res.vertices = best;
    res.status = SearchStatus::Exact;
    res.nodes = nodes;
    return res;
}

} // namespace spectile
