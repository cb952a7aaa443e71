#include "cbal/caterpillar.hpp"

#include <array>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cbal {

CaterpillarSpec::CaterpillarSpec(std::vector<int> weights_in) : weights(std::move(weights_in)) {
    if (weights.size() < 2)
        throw std::invalid_argument("caterpillar spine needs at least two vertices");
    if (weights.front() != 0 || weights.back() != 0)
        throw std::invalid_argument("spine endpoints carry no leaves (their weight must be 0)");
    for (int w : weights)
        if (w < 0) throw std::invalid_argument("weights must be nonnegative");
}

int CaterpillarSpec::total_vertices() const {
    return spine_length() + std::accumulate(weights.begin(), weights.end(), 0);
}

Graph caterpillar_graph(const CaterpillarSpec& spec) {
    int n = spec.spine_length();
    Graph g(spec.total_vertices());
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    int next = n;
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < spec.weights[i]; ++t) g.add_edge(i, next++);
    return g;
}

namespace {

constexpr int kRed = 1;
constexpr int kBlue = 2;

int opposite(int c) { return 3 - c; }

// Segment boundaries after removing the heavy vertices (those with weight in
// `heavy`): list of (start, length) runs plus the heavy positions.
struct SpineSplit {
    std::vector<std::pair<int, int>> segments;  // (first spine index, length)
    std::vector<int> heavy;                     // spine indices
};

SpineSplit split_spine(const std::vector<int>& weights, int heavy_lo, int heavy_hi) {
    SpineSplit out;
    int n = static_cast<int>(weights.size());
    int run_start = 0;
    for (int i = 0; i <= n; ++i) {
        bool heavy = i < n && weights[i] >= heavy_lo && weights[i] <= heavy_hi;
        if (i == n || heavy) {
            out.segments.emplace_back(run_start, i - run_start);
            if (i < n) out.heavy.push_back(i);
            run_start = i + 1;
        }
    }
    return out;
}

// Fills colors[start..start+len) double-alternating from the anchor color:
// position p (1-indexed) matches the anchor iff p = 0,1 mod 4.
void double_alternate(std::vector<int>& colors, int start, int len, int anchor) {
    for (int p = 1; p <= len; ++p)
        colors[start + p - 1] = (p % 4 == 1 || p % 4 == 0) ? anchor : opposite(anchor);
}

// Expands a spine coloring to the full caterpillar, leaves opposite hosts.
Coloring expand(const CaterpillarSpec& spec, const std::vector<int>& spine_colors) {
    std::vector<int> full = spine_colors;
    full.resize(spec.total_vertices());
    int next = spec.spine_length();
    for (int i = 0; i < spec.spine_length(); ++i)
        for (int t = 0; t < spec.weights[i]; ++t) full[next++] = opposite(spine_colors[i]);
    return Coloring(2, std::move(full));
}

}  // namespace

CaterpillarVerdict is_pb_caterpillar(const CaterpillarSpec& spec) {
    for (int w : spec.weights)
        if (w > 3) return {};
    SpineSplit split = split_spine(spec.weights, 2, 3);
    for (auto [start, len] : split.segments)
        if (len % 2 != 0) return {};

    // Double-alternate each segment; heavy vertices copy their predecessor.
    int n = spec.spine_length();
    std::vector<int> colors(n, 0);
    for (size_t s = 0; s < split.segments.size(); ++s) {
        auto [start, len] = split.segments[s];
        int anchor = start == 0 ? kBlue : colors[start - 1];
        double_alternate(colors, start, len, anchor);
        if (s < split.heavy.size()) {
            int w = split.heavy[s];
            colors[w] = w == 0 ? kBlue : colors[w - 1];
        }
    }
    return {true, expand(spec, colors)};
}

CaterpillarVerdict is_csb_caterpillar(const CaterpillarSpec& spec) {
    for (int w : spec.weights)
        if (w > 4) return {};
    SpineSplit split = split_spine(spec.weights, 3, 4);

    // Per segment: even length, or a weight-2 vertex at an odd position, or
    // a weight-0 vertex at an even position (1-indexed in the segment).
    struct Fix {
        int pos = 0;  // 1-indexed position inside the segment; 0 = none needed
        bool weight_two = false;
    };
    std::vector<Fix> fixes(split.segments.size());
    for (size_t s = 0; s < split.segments.size(); ++s) {
        auto [start, len] = split.segments[s];
        if (len % 2 == 0) continue;
        Fix& fix = fixes[s];
        for (int p = 1; p <= len && fix.pos == 0; p += 2)
            if (spec.weights[start + p - 1] == 2) {
                fix.pos = p;
                fix.weight_two = true;
            }
        for (int p = 2; p <= len && fix.pos == 0; p += 2)
            if (spec.weights[start + p - 1] == 0) fix.pos = p;
        if (fix.pos == 0) return {};
    }

    int n = spec.spine_length();
    std::vector<int> colors(n, 0);
    for (size_t s = 0; s < split.segments.size(); ++s) {
        auto [start, len] = split.segments[s];
        int anchor = start == 0 ? kBlue : colors[start - 1];
        if (len % 2 == 0 || fixes[s].pos == 0) {
            double_alternate(colors, start, len, anchor);
        } else if (fixes[s].weight_two) {
            // Weight-2 vertex at odd position l: color 1..l-1 double
            // alternating, give positions l and l+1 the predecessor's color,
            // then restart the alternation at l+1.
            int l = fixes[s].pos;
            double_alternate(colors, start, l - 1, anchor);
            int carried = l == 1 ? anchor : colors[start + l - 2];
            colors[start + l - 1] = carried;
            if (l < len) {
                colors[start + l] = carried;
                double_alternate(colors, start + l, len - l, carried);
            }
        } else {
            // Weight-0 vertex at even position l: flip there and restart.
            int l = fixes[s].pos;
            double_alternate(colors, start, l - 1, anchor);
            int flipped = opposite(colors[start + l - 2]);
            double_alternate(colors, start + l - 1, len - l + 1, flipped);
        }
        if (s < split.heavy.size()) {
            int w = split.heavy[s];
            colors[w] = w == 0 ? kBlue : colors[w - 1];
        }
    }
    return {true, expand(spec, colors)};
}

CountPair count_recurrence(int n) {
    if (n < 2) throw std::invalid_argument("counts are defined for n >= 2");
    BigNat a = 1, b = 0;
    if (n >= 3) b = 3;
    for (int i = 4; i <= n; ++i) {
        BigNat a_next = a + b.times_small(3);
        BigNat b_next = a.times_small(3) + b.times_small(3);
        a = std::move(a_next);
        b = std::move(b_next);
    }
    return {std::move(a), std::move(b)};
}

namespace {

using Mat2 = std::array<BigNat, 4>;  // row-major 2x2

Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
            x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

}  // namespace

CountPair count_matrix(int n) {
    if (n < 3) throw std::invalid_argument("matrix form is defined for n >= 3");
    Mat2 result = {1, 0, 0, 1};
    Mat2 base = {1, 3, 3, 3};
    int e = n - 3;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    // (A(n), B(n)) = M^(n-3) (1, 3)
    return {result[0] + result[1].times_small(3), result[2] + result[3].times_small(3)};
}

BigNat count_closed_form(int n) {
    if (n < 3 || n > 30)
        throw std::invalid_argument("closed form supported for 3 <= n <= 30 only");
#if defined(__SIZEOF_FLOAT128__)
    using F = __float128;
#else
    using F = long double;
#endif
    F root = std::sqrt(10.0L);
    for (int it = 0; it < 3; ++it) root = (root + F(10) / root) / 2;
    F alpha = F(2) - root, beta = F(2) + root;
    F c1 = -F(5) / 24 - root / 15;
    F c2 = -F(5) / 24 + root / 15;
    F pa = 1, pb = 1;
    for (int i = 0; i < n + 1; ++i) {
        pa *= alpha;
        pb *= beta;
    }
    F value = c1 * pa + c2 * pb;

    unsigned __int128 base = static_cast<unsigned __int128>(value);
    unsigned __int128 nearest = 0;
    F best = -1;
    for (int d = -1; d <= 2; ++d) {
        if (d < 0 && base == 0) continue;
        unsigned __int128 cand = base + d;
        F diff = value - static_cast<F>(cand);
        if (diff < 0) diff = -diff;
        if (best < 0 || diff < best) {
            best = diff;
            nearest = cand;
        }
    }
    if (best >= F(0.25))
        throw std::domain_error("closed form is not within 0.25 of an integer at n=" +
                                std::to_string(n));
    return BigNat::from_u128(nearest);
}

std::uint64_t enumerate_csb_count(int n, int max_weight) {
    if (n < 2) throw std::invalid_argument("counts are defined for n >= 2");
    if (max_weight < 0) throw std::invalid_argument("max_weight must be nonnegative");
    int internal = n - 2;
    std::vector<int> w(n, 0);
    std::vector<int> color(n, kRed);  // leftmost fixed red

    // Closed 1-balance at spine vertex i, with w[i] leaves forced opposite.
    auto spine_ok = [&](int i) {
        int own = 1, opp = w[i];
        if (i > 0) (color[i - 1] == color[i] ? own : opp) += 1;
        if (i + 1 < n) (color[i + 1] == color[i] ? own : opp) += 1;
        return std::abs(own - opp) <= 1;
    };

    std::uint64_t count = 0;
    while (true) {
        // All 2^(n-1) colorings of the remaining spine vertices.
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
            for (int i = 1; i < n; ++i) color[i] = (mask >> (i - 1)) & 1 ? kBlue : kRed;
            bool ok = true;
            for (int i = 0; i < n && ok; ++i) ok = spine_ok(i);
            if (ok) ++count;
        }
        // Next weight vector (odometer over the internal positions).
        int pos = 1;
        while (pos <= internal && w[pos] == max_weight) w[pos++] = 0;
        if (pos > internal) break;
        ++w[pos];
    }
    return count;
}

}  // namespace cbal
