#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gridtds/grid_model.hpp"
#include "gridtds/vertex_set.hpp"

namespace gridtds {

/// Size caps for the exhaustive solvers and the profile DP.
struct SolverLimits {
    std::size_t brute_force_max_vertices = 24;
    std::size_t enumeration_max_vertices = 20;
    int dp_max_width = 12;
    /// Upper bound on the cost-to-go tables kept for witness reconstruction.
    std::size_t dp_table_budget_bytes = std::size_t{1} << 30;
};

/// gamma or gamma_t of a graph. An empty value means Undefined: the graph has
/// an isolated vertex (total domination) or no live vertices.
struct GammaResult {
    std::optional<int> value;
    std::optional<VertexSet> witness;

    bool defined() const { return value.has_value(); }
    static GammaResult undefined() { return {}; }
};

bool is_dominating(const GridGraph & g, const VertexSet & d);
bool is_total_dominating(const GridGraph & g, const VertexSet & d);

/// Exhaustive gamma(G), increasing cardinality. Throws TooLarge above the cap.
GammaResult gamma_bruteforce(const GridGraph & g, const SolverLimits & limits = {});

/// Exhaustive gamma_t(G) restricted to total dominating sets containing
/// `required`. Throws TooLarge above the cap, InvalidInput if `required`
/// holds a dead vertex.
GammaResult gamma_t_bruteforce(const GridGraph & g, const VertexSet & required, const SolverLimits & limits = {});
GammaResult gamma_t_bruteforce(const GridGraph & g, const SolverLimits & limits = {});

/// gamma_t(G) by a cell-by-cell profile DP over columns. The witness is the
/// lexicographically least minimum total dominating set in (i, j) order.
/// The DP runs on the transposed grid when m exceeds the width cap and n
/// does not; TooLarge if neither side fits.
GammaResult gamma_t_dp(const GridGraph & g, const SolverLimits & limits = {});

/// Constrained variant: minimum over total dominating sets containing `required`.
GammaResult gamma_t_dp(const GridGraph & g, const VertexSet & required, const SolverLimits & limits = {});

/// Value only, no witness; the cheap path used by the bondage search.
std::optional<int> gamma_t_dp_value(const GridGraph & g, const SolverLimits & limits = {});

struct TdsEnumeration {
    std::optional<int> gamma_t;
    /// Sets in lexicographic order.
    std::vector<VertexSet> sets;
    bool truncated = false;
};

/// All minimum total dominating sets, stopping after `limit` sets.
TdsEnumeration enumerate_min_tds(const GridGraph & g, std::size_t limit, const SolverLimits & limits = {});

/// The column rewrite D -> D'' that turns a total dominating set of G_{n,m}
/// into one of G_{i,m}: keep D restricted to columns 1..i+1, drop column
/// i+1, and for each vertex of column i dominated only from column i+1 add
/// its left neighbour in column i-1. |D''| <= |D restricted to columns 1..i+1|.
/// The result lives on the universe of G_{i,m}. Requires a clean grid, a
/// total dominating set, and 2 <= i <= n-1; otherwise InvalidInput.
VertexSet push_down(const GridGraph & g, const VertexSet & d, int i);

} // namespace gridtds
