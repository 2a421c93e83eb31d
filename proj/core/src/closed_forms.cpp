#include "gridtds/closed_forms.hpp"

#include <algorithm>
#include <string>

#include "gridtds/errors.hpp"

namespace gridtds {

namespace {

int mod(int a, int b)
{
    return ((a % b) + b) % b;
}

std::optional<int> small_width_formula(int n, int m)
{
    switch (m) {
    case 2:
        return n >= 1 ? std::optional<int>(2 * ((n + 2) / 3)) : std::nullopt;
    case 3:
        if (n == 1)
            return 2;
        return n >= 2 ? std::optional<int>(n) : std::nullopt;
    case 4:
        if (n < 4)
            return std::nullopt;
        return (6 * n + 8) / 5 + (mod(n, 5) == 0 || mod(n, 5) == 3 ? 1 : 0);
    default:
        return std::nullopt;
    }
}

// Minimum total dominating set of the 2-row block on columns first..first+len-1.
void add_two_row_block(std::vector<Vertex> & out, int first, int len)
{
    for (int k = 1; k <= len; ++k)
        if (mod(k, 3) == 2 || (k == len && mod(len, 3) == 1))
            for (int j = 1; j <= 2; ++j)
                out.push_back({first + k - 1, j});
}

void add_residue_columns(std::vector<Vertex> & out, int n, int residue)
{
    for (int k = 1; k <= n; ++k)
        if (mod(k, 3) == residue)
            for (int j = 1; j <= 2; ++j)
                out.push_back({k, j});
}

[[noreturn]] void reject(ConstructionId id, int n)
{
    throw InvalidInput("construction " + std::string(to_string(id)) + " is not defined for n=" + std::to_string(n) + " with these parameters");
}

std::vector<Edge> transposed(std::vector<Edge> edges)
{
    for (auto & e : edges)
        e = transpose(e);
    std::sort(edges.begin(), edges.end());
    return edges;
}

// Four-edge sets for G_{5,4} and G_{8,4}, where the column cut has no room.
// Lexicographically least 4-subsets found by exhaustive search; re-verified in tests.
std::optional<std::vector<Edge>> searched_witness(int n)
{
    switch (n) {
    case 5:
        return std::vector<Edge>{Edge::horizontal(1, 1), Edge::horizontal(1, 2), Edge::horizontal(1, 3), Edge::vertical(1, 2)};
    case 8:
        return std::vector<Edge>{Edge::horizontal(1, 1), Edge::horizontal(1, 2), Edge::horizontal(1, 4), Edge::vertical(1, 2)};
    default:
        return std::nullopt;
    }
}

} // namespace

std::string_view to_string(FormulaKind kind)
{
    switch (kind) {
    case FormulaKind::Exact: return "exact";
    case FormulaKind::UpperBound: return "upper_bound";
    case FormulaKind::Unknown: return "unknown";
    }
    return "unknown";
}

std::string_view to_string(ConstructionId id)
{
    switch (id) {
    case ConstructionId::TwoRowVerticalCut: return "TwoRowVerticalCut";
    case ConstructionId::TwoRowHorizontalCut: return "TwoRowHorizontalCut";
    case ConstructionId::TwoRowHorizontalCutSplit: return "TwoRowHorizontalCutSplit";
    case ConstructionId::TwoRowDoubleVerticalCut: return "TwoRowDoubleVerticalCut";
    case ConstructionId::FourRowPairs: return "FourRowPairs";
    case ConstructionId::FourRowPairsAlt: return "FourRowPairsAlt";
    case ConstructionId::FourRowBlocks: return "FourRowBlocks";
    case ConstructionId::FourRowBlocksAlt: return "FourRowBlocksAlt";
    }
    return "?";
}

FormulaValue gamma_t_formula(int n, int m)
{
    if (n < 1 || m < 1)
        return FormulaValue::unknown();
    if (auto v = small_width_formula(n, m))
        return FormulaValue::exact(*v);
    if (auto v = small_width_formula(m, n))
        return FormulaValue::exact(*v);
    return FormulaValue::unknown();
}

FormulaValue bondage_formula(int n, int m)
{
    if (n < 1 || m < 1)
        return FormulaValue::unknown();
    const int big = std::max(n, m);
    const int small = std::min(n, m);
    switch (small) {
    case 1:
        if (big < 4)
            return FormulaValue::unknown();
        return FormulaValue::exact(mod(big, 4) == 2 ? 2 : 1);
    case 2:
        switch (mod(big, 3)) {
        case 0: return FormulaValue::exact(1);
        case 2: return FormulaValue::exact(2);
        default: return FormulaValue::exact(3);
        }
    case 3:
        return FormulaValue::exact(1);
    case 4:
        if (big == 6)
            return FormulaValue::exact(2);
        switch (mod(big, 5)) {
        case 1: return FormulaValue::exact(1);
        case 4: return FormulaValue::exact(2);
        case 2: return FormulaValue::upper_bound(3);
        default: return FormulaValue::upper_bound(4);
        }
    default:
        return FormulaValue::unknown();
    }
}

int construction_rows(ConstructionId id)
{
    switch (id) {
    case ConstructionId::TwoRowVerticalCut:
    case ConstructionId::TwoRowHorizontalCut:
    case ConstructionId::TwoRowHorizontalCutSplit:
    case ConstructionId::TwoRowDoubleVerticalCut:
        return 2;
    default:
        return 4;
    }
}

bool construction_admissible(ConstructionId id, int n, const ConstructionParams & params)
{
    const int i = params.i;
    switch (id) {
    case ConstructionId::TwoRowVerticalCut:
        return n >= 2 && mod(n, 3) == 2 && i >= 1 && i <= n;
    case ConstructionId::TwoRowHorizontalCut:
        return n >= 2 && mod(n, 3) == 2 && i >= 1 && i <= n - 1 && mod(i, 3) != 1;
    case ConstructionId::TwoRowHorizontalCutSplit:
        return n >= 2 && mod(n, 3) == 2 && i >= 1 && i <= n - 1 && mod(i, 3) == 1;
    case ConstructionId::TwoRowDoubleVerticalCut:
        return n >= 4 && mod(n, 3) == 1 && i >= 1 && i < params.j && params.j <= n;
    default:
        return n >= 4 && mod(n, 5) == 4;
    }
}

VertexSet construct(ConstructionId id, int n, const ConstructionParams & params)
{
    if (!construction_admissible(id, n, params))
        reject(id, n);
    const GridSpec spec{n, construction_rows(id)};
    const int i = params.i;
    const int j = params.j;
    std::vector<Vertex> out;

    switch (id) {
    case ConstructionId::TwoRowVerticalCut:
        add_residue_columns(out, n, mod(i, 3) == 2 ? 1 : 2);
        break;
    case ConstructionId::TwoRowHorizontalCut:
        add_residue_columns(out, n, mod(i, 3) == 0 ? 2 : 1);
        break;
    case ConstructionId::TwoRowHorizontalCutSplit:
        add_two_row_block(out, 1, i - 1);
        add_two_row_block(out, i + 2, n - i - 1);
        out.push_back({i, 2});
        out.push_back({i + 1, 2});
        break;
    case ConstructionId::TwoRowDoubleVerticalCut:
        if (mod(i, 3) != 1 && mod(j, 3) != 1) {
            add_residue_columns(out, n, 1);
        }
        else if (mod(i, 3) != 2 && mod(j, 3) != 2) {
            add_residue_columns(out, n, 2);
            out.push_back({n - 1, 1});
            out.push_back({n - 1, 2});
        }
        else {
            add_residue_columns(out, n, 0);
            out.push_back({2, 1});
            out.push_back({2, 2});
        }
        break;
    case ConstructionId::FourRowPairs:
        for (int c = 1; c <= n - 3; ++c)
            if (mod(c, 5) == 1)
                out.insert(out.end(), {{c, 2}, {c, 3}, {c + 2, 1}, {c + 3, 1}, {c + 2, 4}, {c + 3, 4}});
        break;
    case ConstructionId::FourRowPairsAlt:
        for (int c = 4; c <= n; ++c)
            if (mod(c, 5) == 4)
                out.insert(out.end(), {{c, 2}, {c, 3}, {c - 3, 1}, {c - 2, 1}, {c - 3, 4}, {c - 2, 4}});
        break;
    case ConstructionId::FourRowBlocks:
    case ConstructionId::FourRowBlocksAlt: {
        // D uses the "rows 1,2 first" block at c = 1 (mod 10) and the mirrored
        // block at c = 6 (mod 10); D' swaps the two.
        const bool primed = id == ConstructionId::FourRowBlocksAlt;
        for (int c = 1; c <= n - 3; ++c) {
            const bool at_one = mod(c, 10) == 1;
            const bool at_six = mod(c, 10) == 6;
            if (!at_one && !at_six)
                continue;
            if (primed ? at_six : at_one)
                out.insert(out.end(), {{c, 1}, {c, 2}, {c + 3, 1}, {c + 3, 2}, {c + 1, 4}, {c + 2, 4}});
            else
                out.insert(out.end(), {{c, 3}, {c, 4}, {c + 3, 3}, {c + 3, 4}, {c + 1, 1}, {c + 2, 1}});
        }
        break;
    }
    }
    return make_vertex_set(spec, out);
}

std::vector<Edge> construction_removed_edges(ConstructionId id, int n, const ConstructionParams & params)
{
    if (!construction_admissible(id, n, params))
        reject(id, n);
    switch (id) {
    case ConstructionId::TwoRowVerticalCut:
        return {Edge::vertical(params.i, 1)};
    case ConstructionId::TwoRowHorizontalCut:
    case ConstructionId::TwoRowHorizontalCutSplit:
        return {Edge::horizontal(params.i, 1)};
    case ConstructionId::TwoRowDoubleVerticalCut:
        return {Edge::vertical(params.i, 1), Edge::vertical(params.j, 1)};
    default:
        return {};
    }
}

std::optional<std::vector<Edge>> witness_edges(int n, int m)
{
    if (n < 1 || m < 1)
        return std::nullopt;
    if (n < m) {
        auto edges = witness_edges(m, n);
        if (!edges)
            return std::nullopt;
        return transposed(*edges);
    }
    std::vector<Edge> out;
    switch (m) {
    case 2:
        if (n < 2)
            return std::nullopt;
        if (mod(n, 3) == 0)
            out = {Edge::horizontal(n - 1, 1)};
        else if (mod(n, 3) == 2)
            out = {Edge::horizontal(n - 1, 1), Edge::horizontal(n - 1, 2)};
        else
            out = {Edge::horizontal(n - 2, 1), Edge::horizontal(n - 1, 1), Edge::horizontal(n - 1, 2)};
        break;
    case 3:
        out = {Edge::horizontal(n - 1, 2)};
        break;
    case 4:
        switch (mod(n, 5)) {
        case 1:
            if (n < 7)
                return std::nullopt;
            out = {Edge::vertical(n, 2)};
            break;
        case 4:
            if (n < 9)
                return std::nullopt;
            out = {Edge::horizontal(n - 1, 1), Edge::horizontal(n - 1, 2)};
            break;
        case 2:
            if (n < 7)
                return std::nullopt;
            out = {Edge::horizontal(n - 1, 1), Edge::horizontal(n - 1, 2), Edge::vertical(n, 2)};
            break;
        default:
            if (n < 10)
                return searched_witness(n);
            for (int j = 1; j <= 4; ++j)
                out.push_back(Edge::horizontal(n - 5, j));
            break;
        }
        break;
    default:
        return std::nullopt;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gridtds
