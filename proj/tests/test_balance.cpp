#include <doctest.h>

#include <algorithm>
#include <random>

#include "cbal/balance.hpp"
#include "cbal/switching.hpp"
#include "testutil.hpp"

using namespace cbal;

namespace {

// Direct bitmask oracle for the three balance numbers at k = 2, n <= 14.
struct BruteBeta {
    int open, closed, local;
};

BruteBeta brute_beta2(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) adj[v] |= 1u << u;
    BruteBeta best{n + 1, n + 2, n + 1};
    for (std::uint32_t cmask = 0; cmask < (1u << n); ++cmask) {
        int worst_open = 0, worst_closed = 0, worst_local = 0;
        for (int v = 0; v < n; ++v) {
            int deg = g.degree(v);
            int red_open = __builtin_popcount(adj[v] & ~cmask);
            int open_gap = std::abs(2 * red_open - deg);
            int red_closed = red_open + ((cmask >> v & 1) == 0 ? 1 : 0);
            int closed_gap = std::abs(2 * red_closed - (deg + 1));
            worst_open = std::max(worst_open, open_gap);
            worst_closed = std::max(worst_closed, closed_gap);
            worst_local = std::max(worst_local, std::min(open_gap, closed_gap));
        }
        best.open = std::min(best.open, worst_open);
        best.closed = std::min(best.closed, worst_closed);
        best.local = std::min(best.local, worst_local);
    }
    return best;
}

}  // namespace

TEST_SUITE_BEGIN("balance");

TEST_CASE("imbalance on fixed colorings") {
    ImbalanceReport prism = imbalance(testutil::prism_c5());
    ImbalanceReport k4p = imbalance(testutil::k4_plus_prism3());
    for (int v = 0; v < 10; ++v) {
        CHECK(prism.open[v] == 1);
        CHECK(k4p.open[v] == 1);
    }
    ImbalanceReport ring = imbalance(testutil::chorded_ring_g());
    for (int v = 0; v < 12; ++v) CHECK(ring.open[v] == 0);

    // Monochromatic star: the center sees only its own color.
    ColoredGraph star(make_complete_bipartite(1, 3), Coloring(2, {1, 1, 1, 1}));
    ImbalanceReport rep = imbalance(star);
    CHECK(rep.open[0] == 3);
    CHECK(rep.closed[0] == 4);
}

TEST_CASE("open and closed imbalance differ by at most one") {
    std::mt19937 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        ColoredGraph cg(testutil::random_graph(9, 0.5, rng), testutil::random_coloring(9, 3, rng));
        ImbalanceReport rep = imbalance(cg);
        for (int v = 0; v < 9; ++v) CHECK(std::abs(rep.open[v] - rep.closed[v]) <= 1);
    }
}

TEST_CASE("is_balanced on the house colorings") {
    CHECK(is_balanced(testutil::house_g(), 1, BalanceKind::Closed));
    CHECK(!is_balanced(testutil::house_g(), 1, BalanceKind::Open));
    CHECK(is_balanced(testutil::house_gp(), 1, BalanceKind::Open));
    CHECK(!is_balanced(testutil::house_gp(), 1, BalanceKind::Closed));
    CHECK(is_balanced(testutil::house_g(), max_degree(testutil::house_g().graph) + 1,
                      BalanceKind::Closed));
    CHECK_THROWS_AS(is_balanced(testutil::chorded_ring_g(), 0, BalanceKind::Parity),
                    std::invalid_argument);
}

TEST_CASE("exists_coloring on small families") {
    CHECK(exists_coloring(make_cycle(4), 2, 0, BalanceKind::Open).has_value());
    CHECK(!exists_coloring(make_cycle(5), 2, 0, BalanceKind::Open).has_value());
    Graph k333 = make_complete_multipartite(MultipartiteSpec({3, 3, 3}));
    CHECK(!exists_coloring(k333, 2, 1, BalanceKind::Local).has_value());

    auto wit = exists_coloring(make_cycle(8), 2, 0, BalanceKind::Open);
    REQUIRE(wit.has_value());
    CHECK(is_balanced(ColoredGraph(make_cycle(8), *wit), 0, BalanceKind::Open));
}

TEST_CASE("witness determinism and thread independence") {
    Graph pet = make_petersen();
    auto seq = exists_coloring(pet, 3, 2, BalanceKind::Open);
    auto seq2 = exists_coloring(pet, 3, 2, BalanceKind::Open);
    REQUIRE(seq.has_value());
    CHECK(seq->colors == seq2->colors);
    SolverOptions two_threads;
    two_threads.threads = 2;
    auto par = exists_coloring(pet, 3, 2, BalanceKind::Open, two_threads);
    REQUIRE(par.has_value());
    CHECK(par->colors == seq->colors);
}

TEST_CASE("petersen balance numbers at three colors") {
    Graph pet = make_petersen();
    for (BalanceKind kind : {BalanceKind::Open, BalanceKind::Closed, BalanceKind::Local}) {
        BalanceCertificate cert = beta(pet, 3, kind);
        CHECK(cert.verdict == 2);
        CHECK(is_balanced(ColoredGraph(pet, cert.witness), 2, kind));
    }
}

TEST_CASE("octagon pair balance numbers") {
    CHECK(beta(testutil::octagon_g().graph, 2, BalanceKind::Open).verdict == 2);
    CHECK(beta(testutil::octagon_gp().graph, 2, BalanceKind::Open).verdict == 0);
}

TEST_CASE("single vertex") {
    Graph k1(1);
    CHECK(beta(k1, 2, BalanceKind::Open).verdict == 0);
    CHECK(beta(k1, 2, BalanceKind::Local).verdict == 0);
    // The closed neighborhood of an isolated vertex is just itself, so one
    // color is inevitably ahead by one.
    CHECK(beta(k1, 2, BalanceKind::Closed).verdict == 1);
    CHECK(beta(k1, 5, BalanceKind::Closed).verdict == 1);
}

TEST_CASE("tight families") {
    CHECK(beta(make_complete(4), 2, BalanceKind::Closed).verdict == 0);
    CHECK(beta(make_complete(4), 2, BalanceKind::Open).verdict == 1);
    CHECK(beta(make_cycle(5), 2, BalanceKind::Open).verdict == 2);
    CHECK(beta(make_cycle(5), 3, BalanceKind::Closed).verdict == 2);
    // K_{tk,k+1} with t=2, k=2: open 1, closed 2, local 1.
    Graph k43 = make_complete_bipartite(4, 3);
    CHECK(beta(k43, 2, BalanceKind::Open).verdict == 1);
    CHECK(beta(k43, 2, BalanceKind::Closed).verdict == 2);
    CHECK(beta(k43, 2, BalanceKind::Local).verdict == 1);
}

TEST_CASE("lower bounds") {
    CHECK(lower_bound(make_cycle(5), 2, BalanceKind::Closed) == 1);
    CHECK(lower_bound(make_complete(4), 2, BalanceKind::Open) == 1);
    CHECK(lower_bound(make_path(3), 2, BalanceKind::Open) == 0);  // mixed parity
    CHECK(lower_bound(make_cycle(5), 3, BalanceKind::Closed) == 0);
}

TEST_CASE("certificate exhaustion flag") {
    // Octagon: all degrees even, so open values are even; 0 fails, 2 wins.
    BalanceCertificate searched = beta(testutil::octagon_g().graph, 2, BalanceKind::Open);
    CHECK(searched.verdict == 2);
    CHECK(searched.exhausted);
    // Its switch-mate is balanced at the parity lower bound directly.
    BalanceCertificate direct = beta(testutil::octagon_gp().graph, 2, BalanceKind::Open);
    CHECK(direct.verdict == 0);
    CHECK(!direct.exhausted);
}

TEST_CASE("class membership reports") {
    ClassReport w6 = class_membership(make_wheel(6));
    CHECK(w6.member(GraphClass::CSB));
    CHECK(!w6.member(GraphClass::OSB));

    ClassReport p5 = class_membership(make_path(5));
    CHECK(p5.member(GraphClass::OSB));
    CHECK(p5.member(GraphClass::CSB));
    CHECK(!p5.member(GraphClass::PB));

    ClassReport k2 = class_membership(make_complete(2));
    CHECK(k2.member(GraphClass::CNBC));
    CHECK(k2.member(GraphClass::PB));
    CHECK(k2.member(GraphClass::CSB));
    CHECK(k2.member(GraphClass::SBV));
}

TEST_CASE("containment chain on random graphs") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = testutil::random_graph(7, 0.45, rng);
        ClassReport rep = class_membership(g);
        if (rep.member(GraphClass::NBC) || rep.member(GraphClass::CNBC))
            CHECK(rep.member(GraphClass::PB));
        if (rep.member(GraphClass::PB)) {
            CHECK(rep.member(GraphClass::CSB));
            CHECK(rep.member(GraphClass::OSB));
        }
        if (rep.member(GraphClass::CSB) || rep.member(GraphClass::OSB))
            CHECK(rep.member(GraphClass::SBV));
        for (GraphClass c : all_graph_classes) {
            if (!rep.member(c)) continue;
            auto [lambda, kind] = class_parameters(c);
            CHECK(is_balanced(ColoredGraph(g, *rep.witness(c)), lambda, kind));
        }
    }
}

TEST_CASE("solver agrees with a bitmask oracle at two colors") {
    std::mt19937 rng(47);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = testutil::random_graph(3 + trial % 6, 0.5, rng);
        BruteBeta want = brute_beta2(g);
        CHECK(beta(g, 2, BalanceKind::Open).verdict == want.open);
        CHECK(beta(g, 2, BalanceKind::Closed).verdict == want.closed);
        CHECK(beta(g, 2, BalanceKind::Local).verdict == want.local);
    }
}

TEST_CASE("balance numbers split over components") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 25; ++trial) {
        Graph a = testutil::random_graph(5, 0.5, rng);
        Graph b = testutil::random_graph(4, 0.5, rng);
        Graph both(9);
        for (auto [u, v] : a.edges()) both.add_edge(u, v);
        for (auto [u, v] : b.edges()) both.add_edge(5 + u, 5 + v);
        for (BalanceKind kind : {BalanceKind::Open, BalanceKind::Closed, BalanceKind::Local}) {
            int expect = std::max(beta(a, 2, kind).verdict, beta(b, 2, kind).verdict);
            CHECK(beta(both, 2, kind).verdict == expect);
        }
    }
}

TEST_CASE("number inequalities on sampled eight-vertex graphs") {
    std::mt19937 rng(83);
    std::uniform_real_distribution<double> density(0.1, 0.9);
    for (int trial = 0; trial < 100; ++trial) {
        Graph g = testutil::random_graph(8, density(rng), rng);
        int delta = max_degree(g);
        for (int k : {2, 3}) {
            int open = beta(g, k, BalanceKind::Open).verdict;
            int closed = beta(g, k, BalanceKind::Closed).verdict;
            int local = beta(g, k, BalanceKind::Local).verdict;
            CHECK(open <= delta);
            if (delta >= 1)
                CHECK(closed <= delta);
            else
                CHECK(closed == 1);
            CHECK(closed - local >= 0);
            CHECK(closed - local <= 1);
            CHECK(open - local >= 0);
            CHECK(open - local <= 1);
            CHECK(std::abs(closed - open) <= 1);
        }
    }
}

TEST_CASE("switches never raise the certified balance") {
    std::mt19937 rng(59);
    int exercised = 0;
    while (exercised < 30) {
        Graph g = testutil::random_graph(7, 0.5, rng);
        BalanceCertificate cert = beta(g, 2, BalanceKind::Open);
        auto switches = enumerate_applicable_switches(ColoredGraph(g, cert.witness));
        if (switches.empty()) continue;
        ++exercised;
        std::uniform_int_distribution<size_t> pick(0, switches.size() - 1);
        ColoredGraph switched = apply_switch(ColoredGraph(g, cert.witness), switches[pick(rng)]);
        CHECK(beta(switched.graph, 2, BalanceKind::Open).verdict <= cert.verdict);
    }
}

TEST_CASE("bipartite incidence graphs force imbalance") {
    CHECK(beta(make_larson(2, 1), 2, BalanceKind::Open).verdict >= 1);
    CHECK(beta(make_larson(2, 2), 2, BalanceKind::Open).verdict >= 2);
}

TEST_CASE("size guard") {
    Graph big(30);
    CHECK_THROWS_AS(beta(big, 2, BalanceKind::Open), std::domain_error);
    SolverOptions unlimited;
    unlimited.max_n = 0;
    CHECK(beta(big, 2, BalanceKind::Open, unlimited).verdict == 0);
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(beta(make_path(3), 1, BalanceKind::Open), std::invalid_argument);
    CHECK_THROWS_AS(beta(make_path(3), 2, BalanceKind::Parity), std::invalid_argument);
    CHECK_THROWS_AS(exists_coloring(make_path(3), 3, 0, BalanceKind::Parity),
                    std::invalid_argument);
    CHECK_THROWS_AS(exists_coloring(make_path(3), 2, -1, BalanceKind::Open),
                    std::invalid_argument);
}

TEST_SUITE_END();
