#include "spectile/diff.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace spectile {

namespace {

constexpr std::size_t kVertexCap = 4096;

using Words = std::vector<std::uint64_t>;

std::size_t words_for(std::size_t n) { return (n + 63) >> 6; }

bool test_bit(const Words& w, std::size_t i) { return (w[i >> 6] >> (i & 63)) & 1; }
void set_bit(Words& w, std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
void clear_bit(Words& w, std::size_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

bool intersects(const Words& a, const Words& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k] & b[k])
            return true;
    return false;
}

// Shared incumbent for the branch workers. `best` mirrors best_clique.size()
// so pruning can read it without the lock.
struct SharedState {
    std::atomic<std::int64_t> best{0};
    std::atomic<bool> stop{false};
    std::atomic<bool> budget_hit{false};
    std::atomic<bool> target_hit{false};
    std::atomic<std::uint64_t> nodes{0};
    std::mutex mu;
    std::vector<int> best_clique;
    std::optional<std::int64_t> target;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline = false;
};

// One branch-and-bound worker over the reordered adjacency bitsets.
// Classic coloring-bounded clique search: candidates are greedily colored,
// branched in decreasing color order, and a branch is cut when the current
// clique plus its color bound cannot beat the incumbent.
struct Searcher {
    const std::vector<Words>& adj;
    std::size_t n;
    SharedState& sh;
    std::vector<int> cur;
    std::uint64_t local_nodes = 0;

    Searcher(const std::vector<Words>& a, std::size_t n_, SharedState& s)
        : adj(a), n(n_), sh(s) {}

    void offer(const std::vector<int>& clique) {
        if (static_cast<std::int64_t>(clique.size()) <= sh.best.load(std::memory_order_relaxed))
            return;
        std::lock_guard<std::mutex> lk(sh.mu);
        if (clique.size() > sh.best_clique.size()) {
            sh.best_clique = clique;
            sh.best.store(static_cast<std::int64_t>(clique.size()), std::memory_order_relaxed);
            if (sh.target && static_cast<std::int64_t>(clique.size()) >= *sh.target) {
                sh.target_hit.store(true);
                sh.stop.store(true);
            }
        }
    }

    // Budget probe, amortized over branch steps.
    bool should_stop() {
        if (sh.stop.load(std::memory_order_relaxed))
            return true;
        if (sh.has_deadline && (local_nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > sh.deadline) {
            sh.budget_hit.store(true);
            sh.stop.store(true);
            return true;
        }
        return false;
    }

    // Greedy coloring of the candidate set; emits vertices class by class so
    // bound[i] = color index + 1 is non-decreasing along `order`.
    void color(const Words& p, std::vector<int>& order, std::vector<int>& bound) const {
        order.clear();
        bound.clear();
        std::vector<Words> classes;
        std::vector<std::vector<int>> members;
        for (std::size_t wi = 0; wi < p.size(); ++wi) {
            std::uint64_t w = p[wi];
            while (w) {
                std::size_t v = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
                w &= w - 1;
                std::size_t c = 0;
                while (c < classes.size() && intersects(classes[c], adj[v]))
                    ++c;
                if (c == classes.size()) {
                    classes.emplace_back(p.size(), 0);
                    members.emplace_back();
                }
                set_bit(classes[c], v);
                members[c].push_back(static_cast<int>(v));
            }
        }
        for (std::size_t c = 0; c < members.size(); ++c)
            for (int v : members[c]) {
                order.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            }
    }

    void expand(Words p) {
        std::vector<int> order, bound;
        color(p, order, bound);
        for (std::size_t i = order.size(); i-- > 0;) {
            ++local_nodes;
            if (should_stop())
                return;
            if (static_cast<std::int64_t>(cur.size()) + bound[i] <=
                sh.best.load(std::memory_order_relaxed))
                return; // bounds only shrink towards the front of `order`
            int v = order[i];
            Words p2(p.size());
            bool nonempty = false;
            for (std::size_t k = 0; k < p.size(); ++k) {
                p2[k] = p[k] & adj[static_cast<std::size_t>(v)][k];
                nonempty = nonempty || p2[k] != 0;
            }
            cur.push_back(v);
            if (nonempty)
                expand(std::move(p2));
            else
                offer(cur);
            cur.pop_back();
            clear_bit(p, static_cast<std::size_t>(v));
        }
    }
};

void require_valid_witness(const DiffInstance& inst, const PointSet& w, std::int64_t k) {
    if (static_cast<std::int64_t>(w.size()) != k)
        throw std::logic_error("diff solver: witness size does not match k");
    for (const auto& x : w.points()) {
        if (!inst.e.contains(x))
            throw std::logic_error("diff solver: witness point outside E");
        for (const auto& y : w.points())
            if (!inst.d.contains(elem_combine(inst.group, x, y, CombineOp::Sub)))
                throw std::logic_error("diff solver: witness difference outside D");
    }
}

PointSet witness_from_positions(const DiffInstance& inst, std::vector<int> positions,
                                const std::vector<int>& to_original) {
    std::vector<std::int64_t> idx;
    idx.reserve(positions.size());
    for (int v : positions)
        idx.push_back(index_of(inst.group, inst.e[static_cast<std::size_t>(to_original[v])]));
    std::sort(idx.begin(), idx.end());
    return PointSet::from_indices(inst.group, idx);
}

} // namespace

DiffInstance::DiffInstance(GroupSpec g, PointSet e_, PointSet d_,
                           std::optional<std::int64_t> target_)
    : group(std::move(g)), e(std::move(e_)), d(std::move(d_)), target(target_) {
    if (!(e.group() == group) || !(d.group() == group))
        throw std::invalid_argument("DiffInstance: E and D must live in the instance group");
    if (target && *target < 0)
        throw std::invalid_argument("DiffInstance: target must be >= 0");
}

ConflictGraph build_conflict_graph(const DiffInstance& inst) {
    ConflictGraph g;
    g.n = inst.e.size();
    g.zero_allowed = inst.d.contains(zero_element(inst.group));
    g.adj.assign(g.n, Words(words_for(g.n), 0));
    for (std::size_t i = 0; i < g.n; ++i)
        for (std::size_t j = i + 1; j < g.n; ++j) {
            GroupElement dij = elem_combine(inst.group, inst.e[i], inst.e[j], CombineOp::Sub);
            GroupElement dji = elem_combine(inst.group, inst.e[j], inst.e[i], CombineOp::Sub);
            if (inst.d.contains(dij) && inst.d.contains(dji)) {
                set_bit(g.adj[i], j);
                set_bit(g.adj[j], i);
            }
        }
    return g;
}

DiffSolution solve_diff(const DiffInstance& inst, const SolveOptions& opts) {
    if (inst.e.size() > kVertexCap)
        throw std::invalid_argument("solve_diff: |E| exceeds the vertex cap");
    if (opts.workers < 1)
        throw std::invalid_argument("solve_diff: worker count must be >= 1");
    if (opts.budget_seconds && *opts.budget_seconds <= 0.0)
        throw std::invalid_argument("solve_diff: budget must be positive");

    const auto t0 = std::chrono::steady_clock::now();
    DiffSolution sol;
    sol.witness = PointSet(inst.group, {});

    if (inst.target && *inst.target == 0) {
        sol.status = SearchStatus::TargetReached;
        return sol;
    }

    ConflictGraph graph = build_conflict_graph(inst);
    if (graph.n == 0 || !graph.zero_allowed) {
        sol.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return sol; // only the empty set is feasible
    }

    const std::size_t n = graph.n;
    // Search order: descending degree, ties by element index.
    std::vector<int> degree(n, 0), to_original(n);
    std::vector<std::int64_t> elem_idx(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (const std::uint64_t w : graph.adj[i])
            degree[i] += std::popcount(w);
        elem_idx[i] = index_of(inst.group, inst.e[i]);
        to_original[i] = static_cast<int>(i);
    }
    std::sort(to_original.begin(), to_original.end(), [&](int a, int b) {
        if (degree[a] != degree[b])
            return degree[a] > degree[b];
        return elem_idx[a] < elem_idx[b];
    });
    const std::size_t words = words_for(n);
    std::vector<Words> adj(n, Words(words, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (graph.has_edge(static_cast<std::size_t>(to_original[i]),
                               static_cast<std::size_t>(to_original[j])))
                set_bit(adj[i], j);

    SharedState sh;
    sh.target = inst.target;
    if (opts.budget_seconds) {
        sh.has_deadline = true;
        sh.deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                               std::chrono::duration<double>(*opts.budget_seconds));
    }

    // Greedy clique along the search order seeds the incumbent.
    {
        std::vector<int> seed;
        Words open(words, 0);
        for (std::size_t v = 0; v < n; ++v)
            set_bit(open, v);
        for (std::size_t v = 0; v < n; ++v) {
            if (!test_bit(open, v))
                continue;
            seed.push_back(static_cast<int>(v));
            for (std::size_t k = 0; k < words; ++k)
                open[k] &= adj[v][k];
        }
        Searcher(adj, n, sh).offer(seed);
    }

    if (!sh.stop.load()) {
        // Root coloring fixes the branch list; workers take interleaved
        // indices. The candidate set at root index i is order[0..i], exactly
        // what the sequential loop would see, so the split does not change
        // the set of explored subtrees.
        Words full(words, 0);
        for (std::size_t v = 0; v < n; ++v)
            set_bit(full, v);
        std::vector<int> rorder, rbound;
        Searcher(adj, n, sh).color(full, rorder, rbound);

        const int workers = std::min<int>(opts.workers, static_cast<int>(rorder.size()));
        auto run_worker = [&](int wid) {
            Searcher s(adj, n, sh);
            for (std::size_t i = rorder.size(); i-- > 0;) {
                if (static_cast<int>(i) % workers != wid)
                    continue;
                ++s.local_nodes;
                if (s.should_stop())
                    break;
                if (rbound[i] <= sh.best.load(std::memory_order_relaxed))
                    break; // bounds only shrink from here on
                int v = rorder[i];
                Words p(words, 0);
                for (std::size_t j = 0; j < i; ++j)
                    set_bit(p, static_cast<std::size_t>(rorder[j]));
                for (std::size_t k = 0; k < words; ++k)
                    p[k] &= adj[static_cast<std::size_t>(v)][k];
                s.cur.assign(1, v);
                bool nonempty = false;
                for (std::uint64_t w : p)
                    nonempty = nonempty || w != 0;
                if (nonempty)
                    s.expand(std::move(p));
                else
                    s.offer(s.cur);
            }
            sh.nodes.fetch_add(s.local_nodes);
        };

        if (workers <= 1) {
            run_worker(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(static_cast<std::size_t>(workers));
            for (int w = 0; w < workers; ++w)
                pool.emplace_back(run_worker, w);
            for (auto& t : pool)
                t.join();
        }
    }

    std::vector<int> clique = sh.best_clique;
    if (sh.target_hit.load()) {
        sol.status = SearchStatus::TargetReached;
        clique.resize(static_cast<std::size_t>(*inst.target)); // a clique's subset is a clique
    } else if (sh.budget_hit.load()) {
        sol.status = SearchStatus::BudgetExhausted;
    } else {
        sol.status = SearchStatus::Exact;
    }
    sol.k = static_cast<std::int64_t>(clique.size());
    sol.witness = witness_from_positions(inst, clique, to_original);
    sol.nodes = sh.nodes.load();
    sol.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require_valid_witness(inst, sol.witness, sol.k);
    return sol;
}

DiffSolution brute_force_diff(const DiffInstance& inst) {
    if (inst.e.size() > 24)
        throw std::invalid_argument("brute_force_diff: |E| must be <= 24");

    const auto t0 = std::chrono::steady_clock::now();
    const auto& pts = inst.e.points();
    const std::size_t n = pts.size();
    const bool zero_ok = inst.d.contains(zero_element(inst.group));

    std::vector<std::size_t> cur, best;
    std::uint64_t nodes = 0;

    // Depth-first subset growth straight from the definition: a position
    // joins only if every difference against the current set, in both
    // directions, lies in D. No clique machinery.
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() > best.size())
            best = cur;
        for (std::size_t i = start; i < n; ++i) {
            if (cur.size() + (n - i) <= best.size())
                break;
            if (!zero_ok)
                break;
            bool ok = true;
            for (std::size_t j : cur) {
                if (!inst.d.contains(elem_combine(inst.group, pts[i], pts[j], CombineOp::Sub)) ||
                    !inst.d.contains(elem_combine(inst.group, pts[j], pts[i], CombineOp::Sub))) {
                    ok = false;
                    break;
                }
            }
            if (!ok)
                continue;
            ++nodes;
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 0);

    DiffSolution sol;
    sol.k = static_cast<std::int64_t>(best.size());
    std::vector<std::int64_t> idx;
    for (std::size_t i : best)
        idx.push_back(index_of(inst.group, pts[i]));
    std::sort(idx.begin(), idx.end());
    sol.witness = PointSet::from_indices(inst.group, idx);
    sol.status = SearchStatus::Exact;
    sol.nodes = nodes;
    sol.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    require_valid_witness(inst, sol.witness, sol.k);
    return sol;
}

} // namespace spectile
