#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "spectile/graph_reduction.hpp"

using namespace spectile;

namespace {

bool is_sidon(const Embedding& emb) {
    // All ordered differences of distinct values must be distinct.
    std::set<std::int64_t> seen;
    for (std::size_t i = 0; i < emb.phi.size(); ++i)
        for (std::size_t j = 0; j < emb.phi.size(); ++j) {
            if (i == j)
                continue;
            std::int64_t d = ((emb.phi[i] - emb.phi[j]) % emb.m + emb.m) % emb.m;
            if (!seen.insert(d).second)
                return false;
        }
    return true;
}

bool is_independent(const SimpleGraph& g, const std::vector<int>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j]))
                return false;
    return true;
}

SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            if ((rng() >> 11) * 0x1.0p-53 < p)
                edges.emplace_back(a, b);
    return SimpleGraph(n, std::move(edges));
}

} // namespace

TEST_CASE("simple graph validates and normalizes its edge list") {
    SimpleGraph g(4, {{3, 1}, {2, 4}});
    CHECK(g.n() == 4);
    REQUIRE(g.edges().size() == 2);
    // normalized a < b
    for (auto [a, b] : g.edges())
        CHECK(a < b);
    CHECK(g.adjacent(1, 3));
    CHECK(g.adjacent(3, 1));
    CHECK(g.adjacent(2, 4));
    CHECK_FALSE(g.adjacent(1, 2));

    CHECK_THROWS_AS(SimpleGraph(3, {{2, 2}}), std::invalid_argument);          // self-loop
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 2}, {2, 1}}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}}), std::invalid_argument);          // bad endpoint
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 4}}), std::invalid_argument);          // out of range
    CHECK_THROWS_AS(SimpleGraph(0, {}), std::invalid_argument);                // empty vertex set
}

TEST_CASE("greedy embedding produces the expected small prefixes") {
    // The greedy rule (smallest value avoiding phi(i)+phi(j)-phi(l)) is
    // deterministic, so the images are stable: 0,1,3 then 0,1,3,7.
    Embedding e3 = greedy_embedding(3);
    CHECK(e3.phi == std::vector<std::int64_t>{0, 1, 3});
    CHECK(e3.m == 27);

    Embedding e4 = greedy_embedding(4);
    CHECK(e4.phi == std::vector<std::int64_t>{0, 1, 3, 7});
    CHECK(e4.m == 64);
}

TEST_CASE("greedy embeddings are Sidon for a ladder of sizes") {
    for (int n : {1, 2, 5, 10, 17, 25, 33, 40}) {
        CAPTURE(n);
        Embedding e = greedy_embedding(n);
        CHECK(e.phi.size() == static_cast<std::size_t>(n));
        CHECK(e.phi[0] == 0);
        CHECK(e.m >= std::max<std::int64_t>(std::int64_t(n) * n * n, 2));
        CHECK(is_sidon(e));
        // injectivity
        std::set<std::int64_t> vals(e.phi.begin(), e.phi.end());
        CHECK(vals.size() == e.phi.size());
    }
}

TEST_CASE("one greedy pass at the default modulus already succeeds") {
    for (int n = 1; n <= 40; ++n) {
        CAPTURE(n);
        std::int64_t m = std::max<std::int64_t>(std::int64_t(n) * n * n, 2);
        Embedding e = greedy_embedding_with_modulus(n, m);
        CHECK(e.m == m);
        CHECK(is_sidon(e));
    }
}

TEST_CASE("a hopeless modulus makes the greedy pass throw") {
    CHECK_THROWS_AS(greedy_embedding_with_modulus(5, 6), std::runtime_error);
}

TEST_CASE("graph encoding matches adjacency with membership") {
    SimpleGraph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    auto [emb, a_edges] = encode_graph(c5);
    CHECK(a_edges.group().moduli == std::vector<std::int64_t>{emb.m});
    CHECK(a_edges.size() == 2 * c5.edges().size());
    CHECK_FALSE(a_edges.contains(GroupElement{0}));
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) {
            if (a == b)
                continue;
            std::int64_t d = ((emb.phi[a - 1] - emb.phi[b - 1]) % emb.m + emb.m) % emb.m;
            CHECK(a_edges.contains(GroupElement{d}) == c5.adjacent(a, b));
        }
}

TEST_CASE("independent set values on named graphs") {
    SimpleGraph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});
    IndependentSetResult r = independent_set_via_diff(c5);
    CHECK(r.k == 2);
    CHECK(r.status == SearchStatus::Exact);
    CHECK(r.vertices.size() == 2);
    CHECK(std::is_sorted(r.vertices.begin(), r.vertices.end()));
    CHECK(is_independent(c5, r.vertices));

    SimpleGraph k4(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(independent_set_via_diff(k4).k == 1);

    SimpleGraph empty6(6, {});
    IndependentSetResult re = independent_set_via_diff(empty6);
    CHECK(re.k == 6);
    CHECK(re.vertices == std::vector<int>{1, 2, 3, 4, 5, 6});

    SimpleGraph p4(4, {{1, 2}, {2, 3}, {3, 4}});
    CHECK(independent_set_via_diff(p4).k == 2);

    SimpleGraph star(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    IndependentSetResult rs = independent_set_via_diff(star);
    CHECK(rs.k == 4);
    CHECK(rs.vertices == std::vector<int>{2, 3, 4, 5});
}

TEST_CASE("target mode answers the decision question") {
    SimpleGraph c5(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}});

    IndependentSetResult yes = independent_set_via_diff(c5, 2);
    CHECK(yes.status == SearchStatus::TargetReached);
    CHECK(yes.k == 2);
    CHECK(yes.vertices.size() == 2);
    CHECK(is_independent(c5, yes.vertices));

    IndependentSetResult no = independent_set_via_diff(c5, 3);
    CHECK(no.status == SearchStatus::Exact);
    CHECK(no.k == 2); // proved optimum below target

    IndependentSetResult zero = independent_set_via_diff(c5, 0);
    CHECK(zero.status == SearchStatus::TargetReached);
    CHECK(zero.k == 0);
    CHECK(zero.vertices.empty());
}

TEST_CASE("solver agrees with the exhaustive oracle on random graphs") {
    std::mt19937_64 rng(20250818);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9); // 2..10
        double p = 0.2 + 0.6 * ((rng() >> 11) * 0x1.0p-53);
        SimpleGraph g = random_graph(n, p, rng);
        CAPTURE(trial);
        CAPTURE(n);
        CAPTURE(g.edges().size());

        IndependentSetResult fast = independent_set_via_diff(g);
        IndependentSetResult brute = brute_force_independent_set(g);
        CHECK(fast.k == brute.k);
        CHECK(fast.status == SearchStatus::Exact);
        CHECK(static_cast<std::int64_t>(fast.vertices.size()) == fast.k);
        CHECK(is_independent(g, fast.vertices));
        CHECK(is_independent(g, brute.vertices));
    }
}

TEST_CASE("the exhaustive oracle refuses large graphs") {
    SimpleGraph big(25, {{1, 2}});
    CHECK_THROWS_AS(brute_force_independent_set(big), std::invalid_argument);
}
