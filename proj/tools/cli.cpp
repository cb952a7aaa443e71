#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cbal/balance.hpp"
#include "cbal/caterpillar.hpp"
#include "cbal/cdm.hpp"
#include "cbal/families.hpp"
#include "cbal/graph.hpp"
#include "cbal/io.hpp"
#include "cbal/reduction.hpp"
#include "cbal/switching.hpp"

namespace cbal::cli {

namespace {

std::string slurp_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string slurp(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return slurp_file(path);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::string item;
    std::istringstream ss(s);
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        out.push_back(std::stoi(item, &pos));
        if (pos != item.size()) throw std::invalid_argument("bad integer '" + item + "'");
    }
    return out;
}

// family specs: path:N cycle:N wheel:N complete:N complete-bipartite:A,B
// multipartite:P1,P2,... petersen larson:K,L
Graph family_graph(const std::string& spec) {
    std::string name = spec;
    std::string args;
    if (auto colon = spec.find(':'); colon != std::string::npos) {
        name = spec.substr(0, colon);
        args = spec.substr(colon + 1);
    }
    auto nums = args.empty() ? std::vector<int>{} : parse_int_list(args);
    auto want = [&](size_t count) {
        if (nums.size() != count)
            throw std::invalid_argument("family '" + name + "' takes " + std::to_string(count) +
                                        " parameter(s)");
    };
    if (name == "path") { want(1); return make_path(nums[0]); }
    if (name == "cycle") { want(1); return make_cycle(nums[0]); }
    if (name == "wheel") { want(1); return make_wheel(nums[0]); }
    if (name == "complete") { want(1); return make_complete(nums[0]); }
    if (name == "complete-bipartite") { want(2); return make_complete_bipartite(nums[0], nums[1]); }
    if (name == "multipartite") {
        if (nums.empty()) throw std::invalid_argument("multipartite needs part sizes");
        return make_complete_multipartite(MultipartiteSpec(nums));
    }
    if (name == "petersen") { want(0); return make_petersen(); }
    if (name == "larson") { want(2); return make_larson(nums[0], nums[1]); }
    throw std::invalid_argument("unknown family '" + name + "'");
}

Graph load_graph(const std::string& file, const std::string& family, std::istream& in) {
    if (!family.empty()) return family_graph(family);
    if (file.empty()) throw std::invalid_argument("need a graph file or --family");
    return parse_cgf(slurp(file, in)).graph;
}

BalanceKind parse_kind(const std::string& s) {
    if (s == "open") return BalanceKind::Open;
    if (s == "closed") return BalanceKind::Closed;
    if (s == "local") return BalanceKind::Local;
    if (s == "parity") return BalanceKind::Parity;
    throw std::invalid_argument("unknown kind '" + s + "' (open|closed|local|parity)");
}

void print_witness(std::ostream& out, const Coloring& c) {
    out << "witness";
    for (int v : c.colors) out << ' ' << v;
    out << "\n";
}

void print_class_report(std::ostream& out, const ClassReport& rep) {
    for (GraphClass c : all_graph_classes) {
        auto [lambda, kind] = class_parameters(c);
        if (rep.member(c)) {
            out << to_string(c) << " yes\n";
            print_witness(out, *rep.witness(c));
        } else {
            out << to_string(c) << " no (exhausted lambda " << lambda << " " << to_string(kind)
                << ")\n";
        }
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"color degree matrices, color 2-switches and neighborhood-balanced colorings"};
    app.require_subcommand(1);

    std::string file, file2, family, kind_name = "open", method = "recurrence", check;
    std::string seq_file, weights_arg;
    int k = 2, lambda = 0, to_n = -1, single_n = -1, max_weight = 5, threads = 1, max_n = 24;
    bool letters = false, multiset = false, theorems = false, emit = false;

    auto* cdm_cmd = app.add_subcommand("cdm", "print the color degree matrix of a colored graph");
    cdm_cmd->add_option("file", file)->required();
    cdm_cmd->add_flag("--letters", letters, "render identifiers as R/B/G (k <= 3)");

    auto* equal_cmd = app.add_subcommand("cdm-equal", "compare two color degree matrices");
    equal_cmd->add_option("file", file)->required();
    equal_cmd->add_option("file2", file2)->required();
    equal_cmd->add_flag("--multiset", multiset, "compare row multisets instead of entrywise");

    auto* realizable_cmd =
        app.add_subcommand("realizable", "decide whether a matrix is a color degree matrix");
    realizable_cmd->add_option("file", file, "CDM text file")->required();

    auto* realize_cmd = app.add_subcommand("realize", "build a colored graph from a matrix");
    realize_cmd->add_option("file", file, "CDM text file")->required();

    auto* apply_cmd = app.add_subcommand("switch-apply", "apply a switch sequence to a graph");
    apply_cmd->add_option("file", file)->required();
    apply_cmd->add_option("sequence", seq_file, "switch file, or - for stdin")->required();

    auto* seq_cmd =
        app.add_subcommand("switch-seq", "find a color 2-switch sequence between two graphs");
    seq_cmd->add_option("file", file)->required();
    seq_cmd->add_option("file2", file2)->required();

    auto* check_cmd = app.add_subcommand("balance-check", "test a coloring for lambda-balance");
    check_cmd->add_option("file", file)->required();
    check_cmd->add_option("--lambda", lambda);
    check_cmd->add_option("--kind", kind_name, "open|closed|local|parity");

    auto* beta_cmd = app.add_subcommand("beta", "exact balance number with witness");
    beta_cmd->add_option("file", file);
    beta_cmd->add_option("--family", family);
    beta_cmd->add_option("-k", k, "palette size")->check(CLI::PositiveNumber);
    beta_cmd->add_option("--kind", kind_name, "open|closed|local");
    beta_cmd->add_option("--threads", threads);
    beta_cmd->add_option("--max-n", max_n, "exact-search size guard (0 disables)");

    auto* classify_cmd = app.add_subcommand("classify", "six-class membership report");
    classify_cmd->add_option("file", file);
    classify_cmd->add_option("--family", family);
    classify_cmd->add_flag("--theorems", theorems,
                           "use the closed-form family classifier instead of the solver");
    classify_cmd->add_option("--threads", threads);
    classify_cmd->add_option("--max-n", max_n);

    auto* family_cmd = app.add_subcommand("family", "emit a named family graph as CGF");
    family_cmd->add_option("spec", family, "e.g. wheel:7, multipartite:3,3,3, petersen")
        ->required();
    family_cmd->add_option("-k", k, "palette size for the all-1 coloring");

    auto* cat_cmd = app.add_subcommand("caterpillar", "caterpillar membership and construction");
    cat_cmd->add_option("--weights", weights_arg, "comma-separated spine weights")->required();
    cat_cmd->add_option("--check", check, "pb|csb");
    cat_cmd->add_flag("--emit", emit, "print the caterpillar graph as CGF");
    cat_cmd->add_option("-k", k);

    auto* count_cmd = app.add_subcommand("count", "CSB-caterpillar counting sequences");
    count_cmd->add_option("--to", to_n, "print rows for n = 2..N");
    count_cmd->add_option("-n", single_n, "print one row");
    count_cmd->add_option("--method", method, "recurrence|matrix|closed|enumerate");
    count_cmd->add_option("--max-weight", max_weight, "weight cap for --method enumerate");

    auto* reduce_cmd = app.add_subcommand("reduce", "red-blue reduction trace");
    reduce_cmd->add_option("file", file)->required();

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cdm_cmd->parsed()) {
            auto cg = parse_cgf(slurp(file, in));
            out << render_cdm(compute_cdm(cg), letters);
            return 0;
        }
        if (equal_cmd->parsed()) {
            auto a = compute_cdm(parse_cgf(slurp(file, in)));
            auto b = compute_cdm(parse_cgf(slurp(file2, in)));
            bool eq = multiset ? cdm_equal_as_multiset(a, b) : cdm_equal(a, b);
            out << (eq ? "equal" : "not equal") << "\n";
            return eq ? 0 : 1;
        }
        if (realizable_cmd->parsed()) {
            auto m = parse_cdm(slurp(file, in));
            if (is_realizable(m)) {
                out << "realizable\n";
                return 0;
            }
            try {
                realize(m);
            } catch (const std::domain_error& e) {
                out << e.what() << "\n";
                return 1;
            }
            out << "not realizable\n";
            return 1;
        }
        if (realize_cmd->parsed()) {
            auto m = parse_cdm(slurp(file, in));
            try {
                out << render_cgf(realize(m));
            } catch (const std::domain_error& e) {
                err << e.what() << "\n";
                return 1;
            }
            return 0;
        }
        if (apply_cmd->parsed()) {
            auto cg = parse_cgf(slurp_file(file));
            auto seq = parse_switches(slurp(seq_file, in));
            for (const TwoSwitch& s : seq) cg = apply_switch(cg, s);
            out << render_cgf(cg);
            return 0;
        }
        if (seq_cmd->parsed()) {
            auto g = parse_cgf(slurp(file, in));
            auto h = parse_cgf(slurp(file2, in));
            out << render_switches(find_switch_sequence(g, h));
            return 0;
        }
        if (check_cmd->parsed()) {
            auto cg = parse_cgf(slurp(file, in));
            BalanceKind kind = parse_kind(kind_name);
            if (is_balanced(cg, lambda, kind)) {
                out << "balanced\n";
                return 0;
            }
            ImbalanceReport rep = imbalance(cg);
            for (int v = 0; v < cg.vertex_count(); ++v) {
                bool bad;
                switch (kind) {
                    case BalanceKind::Open: bad = rep.open[v] > lambda; break;
                    case BalanceKind::Closed: bad = rep.closed[v] > lambda; break;
                    case BalanceKind::Local:
                        bad = rep.open[v] > lambda && rep.closed[v] > lambda;
                        break;
                    case BalanceKind::Parity:
                        bad = cg.graph.degree(v) % 2 == 0 ? rep.open[v] != 0 : rep.closed[v] != 0;
                        break;
                }
                if (bad) {
                    out << "unbalanced at v" << v + 1 << " (open " << rep.open[v] << ", closed "
                        << rep.closed[v] << ")\n";
                    break;
                }
            }
            return 1;
        }
        if (beta_cmd->parsed()) {
            Graph g = load_graph(file, family, in);
            SolverOptions opts{max_n, threads};
            BalanceCertificate cert = beta(g, k, parse_kind(kind_name), opts);
            out << cert.verdict << "\n";
            out << "kind " << to_string(cert.kind) << "\n";
            print_witness(out, cert.witness);
            return 0;
        }
        if (classify_cmd->parsed()) {
            if (theorems) {
                if (family.empty())
                    throw std::invalid_argument("--theorems needs --family");
                std::string name = family.substr(0, family.find(':'));
                std::string args_part =
                    family.find(':') == std::string::npos ? "" : family.substr(family.find(':') + 1);
                ClassReport rep;
                if (name == "path") rep = classify_path(std::stoi(args_part));
                else if (name == "cycle") rep = classify_cycle(std::stoi(args_part));
                else if (name == "wheel") rep = classify_wheel(std::stoi(args_part));
                else if (name == "complete") rep = classify_complete(std::stoi(args_part));
                else if (name == "multipartite" || name == "complete-bipartite")
                    rep = classify_complete_multipartite(MultipartiteSpec(parse_int_list(args_part)));
                else
                    throw std::invalid_argument("no closed-form classifier for '" + name + "'");
                print_class_report(out, rep);
                return 0;
            }
            Graph g = load_graph(file, family, in);
            print_class_report(out, class_membership(g, SolverOptions{max_n, threads}));
            return 0;
        }
        if (family_cmd->parsed()) {
            Graph g = family_graph(family);
            Coloring c(k, std::vector<int>(g.vertex_count(), 1));
            out << render_cgf(ColoredGraph(std::move(g), std::move(c)));
            return 0;
        }
        if (cat_cmd->parsed()) {
            CaterpillarSpec spec(parse_int_list(weights_arg));
            if (emit) {
                Graph g = caterpillar_graph(spec);
                Coloring c(k, std::vector<int>(g.vertex_count(), 1));
                out << render_cgf(ColoredGraph(std::move(g), std::move(c)));
                return 0;
            }
            if (check.empty()) throw std::invalid_argument("need --check pb|csb or --emit");
            CaterpillarVerdict v;
            if (check == "pb") v = is_pb_caterpillar(spec);
            else if (check == "csb") v = is_csb_caterpillar(spec);
            else throw std::invalid_argument("--check takes pb or csb");
            out << (v.member ? "yes" : "no") << "\n";
            if (v.witness) print_witness(out, *v.witness);
            return v.member ? 0 : 1;
        }
        if (count_cmd->parsed()) {
            if (to_n < 0 && single_n < 0)
                throw std::invalid_argument("need --to N or -n N");
            int lo = single_n >= 0 ? single_n : 2;
            int hi = single_n >= 0 ? single_n : to_n;
            if (single_n < 0 && (method == "matrix" || method == "closed"))
                lo = std::max(lo, 3);
            for (int n = lo; n <= hi; ++n) {
                if (method == "recurrence") {
                    CountPair p = count_recurrence(n);
                    out << n << ' ' << p.a.to_string() << ' ' << p.b.to_string() << "\n";
                } else if (method == "matrix") {
                    CountPair p = count_matrix(n);
                    out << n << ' ' << p.a.to_string() << ' ' << p.b.to_string() << "\n";
                } else if (method == "closed") {
                    out << n << ' ' << count_closed_form(n).to_string() << "\n";
                } else if (method == "enumerate") {
                    out << n << ' ' << enumerate_csb_count(n, max_weight) << "\n";
                } else {
                    throw std::invalid_argument("unknown method '" + method + "'");
                }
            }
            return 0;
        }
        if (reduce_cmd->parsed()) {
            auto cg = parse_cgf(slurp(file, in));
            out << render_trace(red_blue_reduce(cg));
            return 0;
        }
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no command\n";
    return 2;
}

}  // namespace cbal::cli
