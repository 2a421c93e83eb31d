#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "gridtds/grid_model.hpp"
#include "gridtds/vertex_set.hpp"

namespace gridtds {

enum class FormulaKind { Exact, UpperBound, Unknown };

/// A closed-form prediction. Unknown carries no value.
struct FormulaValue {
    FormulaKind kind = FormulaKind::Unknown;
    std::optional<int> value;
    bool infinite = false;

    static FormulaValue exact(int v) { return {FormulaKind::Exact, v, false}; }
    static FormulaValue upper_bound(int v) { return {FormulaKind::UpperBound, v, false}; }
    static FormulaValue unknown() { return {}; }

    friend bool operator==(const FormulaValue &, const FormulaValue &) = default;
};

std::string_view to_string(FormulaKind kind);

/// Known gamma_t(G_{n,m}) for m <= 4 (n >= 4 on the m = 4 line), reached
/// through transposition when only n is small. Unknown elsewhere.
FormulaValue gamma_t_formula(int n, int m);

/// b_t(G_{n,m}) after transposing so m <= n: paths with n >= 4, and the
/// m = 2, 3, 4 results (m = 4 partly as upper bounds). Unknown elsewhere.
FormulaValue bondage_formula(int n, int m);

enum class ConstructionId {
    TwoRowVerticalCut,
    TwoRowHorizontalCut,
    TwoRowHorizontalCutSplit,
    TwoRowDoubleVerticalCut,
    FourRowPairs,
    FourRowPairsAlt,
    FourRowBlocks,
    FourRowBlocksAlt,
};

std::string_view to_string(ConstructionId id);

/// Edge positions selecting a member of the two-row cut families.
/// TwoRowVerticalCut: the removed edge is V:i,1. TwoRowHorizontalCut*: H:i,1.
/// TwoRowDoubleVerticalCut: the removed edges are V:i,1 and V:j,1 with i < j.
struct ConstructionParams {
    int i = 0;
    int j = 0;
};

/// Row count of the grid a construction lives on (2 or 4).
int construction_rows(ConstructionId id);

/// Whether (n, params) satisfies the construction's congruence and range conditions.
bool construction_admissible(ConstructionId id, int n, const ConstructionParams & params = {});

/// The vertex set defined by the construction on G_{n,2} or G_{n,4}.
/// Throws InvalidInput when the conditions are violated.
VertexSet construct(ConstructionId id, int n, const ConstructionParams & params = {});

/// Edges removed from G_{n,2} for a two-row construction.
std::vector<Edge> construction_removed_edges(ConstructionId id, int n, const ConstructionParams & params);

/// Explicit edge set whose removal raises gamma_t(G_{n,m}), sized to the
/// proven value or bound. nullopt when no construction covers (n, m).
std::optional<std::vector<Edge>> witness_edges(int n, int m);

} // namespace gridtds
