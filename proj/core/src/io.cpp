#include "cbal/io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace cbal {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

struct Line {
    int number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.front() == '#') continue;
        std::istringstream ls(raw);
        Line line{number, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

int parse_int(const Line& line, const std::string& tok) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(line.number, "expected an integer, got '" + tok + "'");
    return value;
}

}  // namespace

std::string render_cgf(const ColoredGraph& cg) {
    std::ostringstream out;
    out << "cgf 1\n";
    out << "n " << cg.vertex_count() << "\n";
    out << "k " << cg.palette_size() << "\n";
    out << "colors";
    for (int v = 0; v < cg.vertex_count(); ++v) out << ' ' << cg.color_of(v);
    out << "\n";
    for (auto [u, v] : cg.graph.edges()) out << "edge " << u + 1 << ' ' << v + 1 << "\n";
    return out.str();
}

ColoredGraph parse_cgf(const std::string& text) {
    auto lines = tokenize(text);
    size_t at = 0;
    auto expect = [&](const std::string& head, size_t arity) -> const Line& {
        if (at >= lines.size())
            throw std::invalid_argument("unexpected end of input, expected '" + head + "'");
        const Line& line = lines[at++];
        if (line.tokens[0] != head)
            fail(line.number, "expected '" + head + "', got '" + line.tokens[0] + "'");
        if (arity != SIZE_MAX && line.tokens.size() != arity + 1)
            fail(line.number, "'" + head + "' takes " + std::to_string(arity) + " value(s)");
        return line;
    };

    {
        const Line& header = expect("cgf", 1);
        if (header.tokens[1] != "1") fail(header.number, "unsupported cgf version");
    }
    const Line& nline = expect("n", 1);
    int n = parse_int(nline, nline.tokens[1]);
    if (n < 0) fail(nline.number, "n must be nonnegative");
    const Line& kline = expect("k", 1);
    int k = parse_int(kline, kline.tokens[1]);
    if (k < 1) fail(kline.number, "k must be at least 1");

    const Line& cline = expect("colors", static_cast<size_t>(n));
    std::vector<int> colors;
    for (size_t i = 1; i < cline.tokens.size(); ++i) {
        int c = parse_int(cline, cline.tokens[i]);
        if (c < 1 || c > k) fail(cline.number, "color " + std::to_string(c) + " out of range");
        colors.push_back(c);
    }

    Graph g(n);
    while (at < lines.size()) {
        const Line& e = expect("edge", 2);
        int u = parse_int(e, e.tokens[1]);
        int v = parse_int(e, e.tokens[2]);
        if (u < 1 || u > n || v < 1 || v > n) fail(e.number, "edge endpoint out of range");
        if (u == v) fail(e.number, "self-loop");
        try {
            g.add_edge(u - 1, v - 1);
        } catch (const std::invalid_argument&) {
            fail(e.number, "duplicate edge");
        }
    }
    return ColoredGraph(std::move(g), Coloring(k, std::move(colors)));
}

std::string render_cdm(const ColorDegreeMatrix& m, bool letters) {
    if (letters && m.k > 3)
        throw std::invalid_argument("letter rendering is available for k <= 3 only");
    static const char* kLetter[] = {"R", "B", "G"};
    std::ostringstream out;
    for (int i = 0; i < m.n; ++i) {
        for (int c = 1; c <= m.k; ++c) out << m.deg(i, c) << ' ';
        if (letters)
            out << kLetter[m.color_id(i) - 1];
        else
            out << m.color_id(i);
        out << "\n";
    }
    return out.str();
}

ColorDegreeMatrix parse_cdm(const std::string& text) {
    auto lines = tokenize(text);
    ColorDegreeMatrix m;
    if (lines.empty()) throw std::invalid_argument("empty color degree matrix");
    m.n = static_cast<int>(lines.size());
    m.k = static_cast<int>(lines[0].tokens.size()) - 1;
    if (m.k < 1) fail(lines[0].number, "a row needs at least two entries");
    for (const Line& line : lines) {
        if (static_cast<int>(line.tokens.size()) != m.k + 1)
            fail(line.number, "rows must all have k+1 entries");
        for (int c = 0; c < m.k; ++c) {
            int d = parse_int(line, line.tokens[c]);
            if (d < 0) fail(line.number, "degree entries must be nonnegative");
            m.degrees.push_back(d);
        }
        m.color_ids.push_back(parse_int(line, line.tokens[m.k]));
    }
    return m;
}

std::string render_switches(const std::vector<TwoSwitch>& seq) {
    std::ostringstream out;
    for (const TwoSwitch& s : seq)
        out << s.u + 1 << ' ' << s.x + 1 << ' ' << s.w + 1 << ' ' << s.y + 1 << "\n";
    return out.str();
}

std::vector<TwoSwitch> parse_switches(const std::string& text) {
    std::vector<TwoSwitch> out;
    for (const Line& line : tokenize(text)) {
        if (line.tokens.size() != 4) fail(line.number, "a switch is four vertices: u x w y");
        out.push_back({parse_int(line, line.tokens[0]) - 1, parse_int(line, line.tokens[1]) - 1,
                       parse_int(line, line.tokens[2]) - 1, parse_int(line, line.tokens[3]) - 1});
    }
    return out;
}

std::string render_trace(const ReductionTrace& trace) {
    std::ostringstream out;
    for (auto [r, b] : trace.removed_pairs) out << "remove " << r + 1 << ' ' << b + 1 << "\n";
    out << render_cgf(trace.result);
    return out.str();
}

}  // namespace cbal
