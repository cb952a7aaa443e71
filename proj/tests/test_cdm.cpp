#include <doctest.h>

#include <stdexcept>

#include <random>
#include <unordered_set>

#include "cbal/cdm.hpp"
#include "testutil.hpp"

using namespace cbal;

namespace {

ColorDegreeMatrix matrix_of(int k, const std::vector<std::vector<int>>& rows) {
    ColorDegreeMatrix m;
    m.n = static_cast<int>(rows.size());
    m.k = k;
    for (const auto& row : rows) {
        for (int c = 0; c < k; ++c) m.degrees.push_back(row[c]);
        m.color_ids.push_back(row[k]);
    }
    return m;
}

// Packs a small CDM (n <= 6, k = 2) into one 64-bit key.
std::uint64_t cdm_key(const ColorDegreeMatrix& m) {
    std::uint64_t key = 0;
    for (int i = 0; i < m.n; ++i) {
        key = key * 8 + m.deg(i, 1);
        key = key * 8 + m.deg(i, 2);
        key = key * 2 + (m.color_id(i) - 1);
    }
    return key;
}

}  // namespace

TEST_SUITE_BEGIN("cdm");

TEST_CASE("house graph matrices") {
    // Two-color version of the worked example.
    auto d_gp = compute_cdm(testutil::house_gp());
    CHECK(d_gp == matrix_of(2, {{1, 1, 2}, {1, 2, 1}, {1, 1, 1}, {1, 1, 2}, {1, 2, 2}}));

    // With a third unused color the extra column is all zero.
    auto d_g3 = compute_cdm(testutil::house_g(3));
    CHECK(d_g3 ==
          matrix_of(3, {{2, 0, 0, 2}, {1, 2, 0, 1}, {1, 1, 0, 2}, {1, 1, 0, 2}, {1, 2, 0, 1}}));

    CHECK(cdm_equal(compute_cdm(testutil::house_gp()), compute_cdm(testutil::house_hp())));
    CHECK(!cdm_equal(compute_cdm(testutil::house_g()), compute_cdm(testutil::house_h())));
}

TEST_CASE("prism pair differs entrywise and as multisets") {
    auto a = compute_cdm(testutil::prism_c5());
    auto b = compute_cdm(testutil::k4_plus_prism3());
    CHECK(!cdm_equal(a, b));
    CHECK(!cdm_equal_as_multiset(a, b));
    int a21b = 0, b21b = 0;
    for (int i = 0; i < 10; ++i) {
        if (a.deg(i, 1) == 2 && a.deg(i, 2) == 1 && a.color_id(i) == 2) ++a21b;
        if (b.deg(i, 1) == 2 && b.deg(i, 2) == 1 && b.color_id(i) == 2) ++b21b;
    }
    CHECK(a21b == 4);
    CHECK(b21b == 2);
}

TEST_CASE("row multiset comparison ignores vertex order") {
    ColoredGraph cg = testutil::house_gp();
    // Reverse the vertex order.
    int n = cg.vertex_count();
    Graph rev(n);
    for (auto [u, v] : cg.graph.edges()) rev.add_edge(n - 1 - u, n - 1 - v);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) colors[n - 1 - v] = cg.color_of(v);
    ColoredGraph cg_rev(std::move(rev), Coloring(2, std::move(colors)));
    CHECK(!cdm_equal(compute_cdm(cg), compute_cdm(cg_rev)));
    CHECK(cdm_equal_as_multiset(compute_cdm(cg), compute_cdm(cg_rev)));
}

TEST_CASE("petersen row under the three-coloring") {
    auto m = compute_cdm(testutil::petersen_three_colored());
    CHECK(m.deg(0, 1) == 1);
    CHECK(m.deg(0, 2) == 2);
    CHECK(m.deg(0, 3) == 0);
    CHECK(m.color_id(0) == 3);
}

TEST_CASE("edgeless matrix is zero") {
    ColoredGraph cg(Graph(4), Coloring(2, {1, 2, 1, 2}));
    auto m = compute_cdm(cg);
    for (int d : m.degrees) CHECK(d == 0);
}

TEST_CASE("graphic and bigraphic building blocks") {
    CHECK(is_graphic({1, 1}));
    CHECK(is_graphic({0, 1, 1}));
    CHECK(is_graphic({}));
    CHECK(!is_graphic({2, 0}));
    CHECK(!is_graphic({1}));
    CHECK(!is_graphic({3, 3, 1, 1}));
    CHECK(is_graphic({3, 3, 3, 3}));
    CHECK(is_bigraphic({2, 1, 1}, {2, 2}));
    CHECK(is_bigraphic({}, {}));
    CHECK(!is_bigraphic({2}, {1, 1, 1}));
    CHECK(!is_bigraphic({2, 2}, {1, 1, 1}));
    CHECK(is_bigraphic({2, 2, 2}, {3, 3}));
}

TEST_CASE("realizability verdicts") {
    auto d_g3 = compute_cdm(testutil::house_g(3));
    CHECK(is_realizable(d_g3));
    CHECK(is_realizable(matrix_of(2, {{0, 0, 1}})));
    CHECK(!is_realizable(matrix_of(2, {{2, 0, 1}, {0, 0, 1}})));
    CHECK(!is_realizable(matrix_of(2, {{0, 0, 3}})));  // identifier out of range
    ColorDegreeMatrix bad = matrix_of(2, {{0, 0, 1}});
    bad.degrees[0] = -1;
    CHECK_THROWS_AS(is_realizable(bad), std::invalid_argument);
}

TEST_CASE("realize round trips") {
    auto d_gp = compute_cdm(testutil::house_gp());
    ColoredGraph built = realize(d_gp);
    CHECK(cdm_equal(compute_cdm(built), d_gp));

    auto zeros = matrix_of(3, {{0, 0, 0, 1}, {0, 0, 0, 2}, {0, 0, 0, 3}, {0, 0, 0, 1}});
    CHECK(realize(zeros).graph.edge_count() == 0);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        ColoredGraph cg(testutil::random_graph(10, 0.45, rng), testutil::random_coloring(10, 3, rng));
        auto m = compute_cdm(cg);
        REQUIRE(is_realizable(m));
        CHECK(cdm_equal(compute_cdm(realize(m)), m));
    }
}

TEST_CASE("realize names the violated condition") {
    CHECK_THROWS_WITH_AS(realize(matrix_of(2, {{0, 0, 5}})),
                         doctest::Contains("condition 1"), std::domain_error);
    CHECK_THROWS_WITH_AS(realize(matrix_of(2, {{2, 0, 1}, {0, 0, 1}})),
                         doctest::Contains("condition 2"), std::domain_error);
    CHECK_THROWS_WITH_AS(realize(matrix_of(2, {{0, 1, 1}, {0, 0, 2}, {0, 0, 2}})),
                         doctest::Contains("condition 3"), std::domain_error);
}

TEST_CASE("row sums equal degrees") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        ColoredGraph cg(testutil::random_graph(9, 0.5, rng), testutil::random_coloring(9, 4, rng));
        auto m = compute_cdm(cg);
        for (int v = 0; v < 9; ++v) {
            int sum = 0;
            for (int c = 1; c <= 4; ++c) sum += m.deg(v, c);
            CHECK(sum == cg.graph.degree(v));
        }
    }
}

TEST_CASE("palette permutation covariance") {
    std::mt19937 rng(37);
    std::vector<int> perm = {3, 1, 2};  // color c -> perm[c-1]
    for (int trial = 0; trial < 50; ++trial) {
        ColoredGraph cg(testutil::random_graph(8, 0.5, rng), testutil::random_coloring(8, 3, rng));
        std::vector<int> mapped(8);
        for (int v = 0; v < 8; ++v) mapped[v] = perm[cg.color_of(v) - 1];
        ColoredGraph cg2(cg.graph, Coloring(3, mapped));
        auto a = compute_cdm(cg);
        auto b = compute_cdm(cg2);
        for (int v = 0; v < 8; ++v) {
            CHECK(b.color_id(v) == perm[a.color_id(v) - 1]);
            for (int c = 1; c <= 3; ++c) CHECK(b.deg(v, perm[c - 1]) == a.deg(v, c));
        }
    }
}

TEST_CASE("realizability agrees with exhaustive enumeration (n <= 6, k = 2)") {
    // Collect the matrices of every 2-colored graph on n labeled vertices,
    // then check is_realizable against set membership for arbitrary
    // candidate matrices.
    for (int n = 1; n <= 6; ++n) {
        std::unordered_set<std::uint64_t> seen;
        int bits = testutil::edge_bits(n);
        for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
            Graph g = testutil::graph_from_mask(n, mask);
            for (std::uint32_t cmask = 0; cmask < (1u << n); ++cmask) {
                std::vector<int> colors(n);
                for (int v = 0; v < n; ++v) colors[v] = (cmask >> v & 1) + 1;
                seen.insert(cdm_key(compute_cdm(ColoredGraph(g, Coloring(2, colors)))));
            }
        }
        // Every candidate with entries <= n-1: realizable iff seen.
        std::mt19937 rng(1000 + n);
        std::uniform_int_distribution<int> deg(0, n - 1), col(1, 2);
        for (int trial = 0; trial < 4000; ++trial) {
            ColorDegreeMatrix m;
            m.n = n;
            m.k = 2;
            for (int i = 0; i < n; ++i) {
                m.degrees.push_back(deg(rng));
                m.degrees.push_back(deg(rng));
                m.color_ids.push_back(col(rng));
            }
            CHECK(is_realizable(m) == (seen.count(cdm_key(m)) > 0));
        }
    }
}

TEST_SUITE_END();
