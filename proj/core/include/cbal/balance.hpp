#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cbal/graph.hpp"

namespace cbal {

/// Which neighborhoods the balance condition constrains.  Parity is the
/// two-color condition that is exactly balanced at N(v) for even-degree v
/// and at N[v] for odd-degree v; it is only defined for k = 2.
enum class BalanceKind { Open, Closed, Local, Parity };

std::string to_string(BalanceKind kind);

/// Per-vertex maximum pairwise gap between color class sizes, over the full
/// palette (absent colors count as zero).
struct ImbalanceReport {
    std::vector<int> open;
    std::vector<int> closed;
};

ImbalanceReport imbalance(const ColoredGraph& cg);

/// lambda is ignored for Parity, which is a fixed exact-balance condition.
bool is_balanced(const ColoredGraph& cg, int lambda, BalanceKind kind);

struct SolverOptions {
    /// Exact search refuses graphs above this size unless raised; 0 disables
    /// the guard.
    int max_n = 24;
    int threads = 1;
};

/// Exact decision procedure: a witness coloring passing is_balanced, or
/// std::nullopt after exhausting the search.  The witness is deterministic
/// (lexicographically least along the fixed search order, first vertex
/// pinned to color 1, new colors introduced in increasing order).
std::optional<Coloring> exists_coloring(const Graph& g, int k, int lambda, BalanceKind kind,
                                        const SolverOptions& opts = {});

struct BalanceCertificate {
    int verdict = 0;
    Coloring witness;
    BalanceKind kind = BalanceKind::Open;
    /// True when minimality was established by exhaustive search below the
    /// verdict; false when the parity lower bound alone already pinned it.
    bool exhausted = false;
};

/// Sound lower bound on the balance number: the parity constraints for k=2
/// when all degrees share a parity, otherwise 0.
int lower_bound(const Graph& g, int k, BalanceKind kind);

/// Least lambda admitting a balanced coloring, with witness.  kind must be
/// Open, Closed or Local; k >= 2.
BalanceCertificate beta(const Graph& g, int k, BalanceKind kind, const SolverOptions& opts = {});

enum class GraphClass { NBC, CNBC, OSB, CSB, SBV, PB };

constexpr std::array<GraphClass, 6> all_graph_classes = {
    GraphClass::NBC, GraphClass::CNBC, GraphClass::OSB,
    GraphClass::CSB, GraphClass::SBV,  GraphClass::PB};

std::string to_string(GraphClass c);

/// Membership verdicts for the six two-color classes; witness present iff
/// the graph is a member.
struct ClassReport {
    std::array<std::optional<Coloring>, 6> witnesses;

    bool member(GraphClass c) const { return witnesses[static_cast<size_t>(c)].has_value(); }
    const std::optional<Coloring>& witness(GraphClass c) const {
        return witnesses[static_cast<size_t>(c)];
    }
    std::optional<Coloring>& witness(GraphClass c) { return witnesses[static_cast<size_t>(c)]; }
};

/// (lambda, kind) pair defining a class membership test.
std::pair<int, BalanceKind> class_parameters(GraphClass c);

ClassReport class_membership(const Graph& g, const SolverOptions& opts = {});

}  // namespace cbal
