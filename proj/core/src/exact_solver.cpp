#include "gridtds/exact_solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "gridtds/errors.hpp"

namespace gridtds {

namespace {

// Calls f(u) for every live neighbour u of the live vertex v.
template <typename F>
void for_each_neighbor(const GridGraph & g, Vertex v, F && f)
{
    const std::pair<Edge, Vertex> candidates[] = {
        {Edge::horizontal(v.i - 1, v.j), {v.i - 1, v.j}},
        {Edge::vertical(v.i, v.j - 1), {v.i, v.j - 1}},
        {Edge::vertical(v.i, v.j), {v.i, v.j + 1}},
        {Edge::horizontal(v.i, v.j), {v.i + 1, v.j}},
    };
    for (auto & [e, u] : candidates)
        if (g.has_edge(e))
            f(u);
}

// Live vertices relabelled 0..L-1 with 32-bit neighbourhood masks.
struct CompactGraph {
    std::vector<std::size_t> cells;
    std::vector<std::uint32_t> neighbors;
};

CompactGraph compact(const GridGraph & g, std::size_t cap)
{
    if (g.live_count() > cap)
        throw TooLarge("exhaustive search capped at " + std::to_string(cap) + " vertices, graph has " + std::to_string(g.live_count()));
    const auto & spec = g.spec();
    CompactGraph out;
    std::vector<int> label(spec.vertex_count(), -1);
    for (std::size_t c = 0; c < spec.vertex_count(); ++c)
        if (g.is_live_cell(c)) {
            label[c] = static_cast<int>(out.cells.size());
            out.cells.push_back(c);
        }
    out.neighbors.assign(out.cells.size(), 0);
    for (std::size_t k = 0; k < out.cells.size(); ++k)
        for_each_neighbor(g, vertex_at(spec, out.cells[k]), [&](Vertex u) {
            out.neighbors[k] |= std::uint32_t{1} << label[cell_index(spec, u)];
        });
    return out;
}

VertexSet expand(const GridGraph & g, const CompactGraph & cg, std::uint32_t mask)
{
    VertexSet out(g.spec().vertex_count());
    for (std::size_t k = 0; k < cg.cells.size(); ++k)
        if ((mask >> k) & 1u)
            out.insert(cg.cells[k]);
    return out;
}

std::uint32_t compress(const CompactGraph & cg, const VertexSet & set)
{
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < cg.cells.size(); ++k)
        if (set.contains(cg.cells[k]))
            mask |= std::uint32_t{1} << k;
    return mask;
}

bool total_on(const CompactGraph & cg, std::uint32_t s)
{
    for (auto nb : cg.neighbors)
        if ((nb & s) == 0)
            return false;
    return true;
}

bool dominating_on(const CompactGraph & cg, std::uint32_t s)
{
    for (std::size_t k = 0; k < cg.neighbors.size(); ++k)
        if (((s >> k) & 1u) == 0 && (cg.neighbors[k] & s) == 0)
            return false;
    return true;
}

// Visits every L-bit mask with exactly k bits set, in increasing numeric order,
// until f returns true.
template <typename F>
bool for_each_combination(std::size_t bits, std::size_t k, F && f)
{
    if (k > bits)
        return false;
    if (k == 0)
        return f(std::uint32_t{0});
    const std::uint64_t limit = std::uint64_t{1} << bits;
    std::uint64_t s = (std::uint64_t{1} << k) - 1;
    while (s < limit) {
        if (f(static_cast<std::uint32_t>(s)))
            return true;
        std::uint64_t c = s & (~s + 1);
        std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    return false;
}

void check_live(const GridGraph & g, const VertexSet & set, const char * what)
{
    for (auto c : set.cells())
        if (c >= g.spec().vertex_count() || !g.is_live_cell(c))
            throw InvalidInput(std::string(what) + " contains a vertex that is not live");
}

// ---------------------------------------------------------------------------
// Profile DP. Cells are processed column-major; the frontier holds one cell
// per row. Slot r carries (chosen, dominated) for the most recent cell of row
// r. A cell leaves the frontier when the cell to its right is decided, at
// which point all of its neighbours are known and it must be dominated.
// State layout: low `width` bits = chosen, high `width` bits = dominated.

using Cost = std::uint16_t;
constexpr Cost kInf = std::numeric_limits<Cost>::max();
constexpr std::int64_t kDead = -1;

struct DpCell {
    int row = 0;
    bool left_edge = false;
    bool up_edge = false;
    bool deleted = false;
    bool force_in = false;
    bool force_out = false;
};

class ProfileDp {
public:
    ProfileDp(const GridGraph & g, const VertexSet * forced_in, const VertexSet * forced_out) :
        width_(g.spec().m),
        columns_(g.spec().n)
    {
        const auto & spec = g.spec();
        full_ = (std::uint32_t{1} << width_) - 1;
        states_ = std::size_t{1} << (2 * width_);
        cells_.reserve(spec.vertex_count());
        for (int i = 1; i <= spec.n; ++i)
            for (int j = 1; j <= spec.m; ++j) {
                DpCell cell;
                cell.row = j - 1;
                cell.left_edge = i > 1 && g.has_edge(Edge::horizontal(i - 1, j));
                cell.up_edge = j > 1 && g.has_edge(Edge::vertical(i, j - 1));
                auto idx = cell_index(spec, {i, j});
                cell.deleted = !g.is_live_cell(idx);
                cell.force_in = forced_in != nullptr && forced_in->contains(idx);
                cell.force_out = forced_out != nullptr && forced_out->contains(idx);
                cells_.push_back(cell);
            }
        if (cells_.size() >= kInf)
            throw TooLarge("profile DP supports fewer than 65535 cells");
    }

    std::uint32_t initial_state() const { return full_ << width_; }
    bool accepting(std::uint32_t s) const { return (s >> width_) == full_; }

    std::int64_t step(std::uint32_t s, const DpCell & cell, int c) const
    {
        if (c == 1 && (cell.deleted || cell.force_out))
            return kDead;
        if (c == 0 && cell.force_in)
            return kDead;
        const std::uint32_t bit = std::uint32_t{1} << cell.row;
        std::uint32_t chosen = s & full_;
        std::uint32_t dom = s >> width_;
        const bool left_chosen = (chosen & bit) != 0;
        bool left_dom = (dom & bit) != 0;
        if (c == 1 && cell.left_edge)
            left_dom = true;
        if (!left_dom)
            return kDead;
        bool dominated = true;
        if (!cell.deleted) {
            dominated = cell.left_edge && left_chosen;
            if (cell.up_edge && (chosen & (bit >> 1)) != 0)
                dominated = true;
        }
        if (c == 1 && cell.up_edge)
            dom |= bit >> 1;
        chosen = c == 1 ? (chosen | bit) : (chosen & ~bit);
        dom = dominated ? (dom | bit) : (dom & ~bit);
        return static_cast<std::int64_t>(chosen | (dom << width_));
    }

    std::optional<int> min_cost() const
    {
        std::vector<Cost> cur(states_, kInf), next(states_, kInf);
        std::vector<std::uint32_t> active{initial_state()}, touched;
        cur[initial_state()] = 0;
        for (const auto & cell : cells_) {
            touched.clear();
            for (auto s : active) {
                for (int c = 0; c <= 1; ++c) {
                    auto t = step(s, cell, c);
                    if (t == kDead)
                        continue;
                    auto v = static_cast<Cost>(cur[s] + c);
                    auto & slot = next[static_cast<std::size_t>(t)];
                    if (slot == kInf)
                        touched.push_back(static_cast<std::uint32_t>(t));
                    slot = std::min(slot, v);
                }
                cur[s] = kInf;
            }
            std::swap(cur, next);
            std::swap(active, touched);
        }
        Cost best = kInf;
        for (auto s : active)
            if (accepting(s))
                best = std::min(best, cur[s]);
        if (best == kInf)
            return std::nullopt;
        return best;
    }

    /// Minimum cost and the lexicographically least optimal selection.
    std::optional<std::pair<int, std::vector<bool>>> solve_with_witness(std::size_t budget_bytes) const
    {
        const auto w = static_cast<std::size_t>(width_);
        const auto n = static_cast<std::size_t>(columns_);
        if ((n + 1 + w) * states_ * sizeof(Cost) > budget_bytes)
            throw TooLarge("cost-to-go tables exceed the configured memory budget");

        // checkpoints[k] = cost-to-go before cell position k*w (column boundary).
        std::vector<std::vector<Cost>> checkpoints(n + 1, std::vector<Cost>(states_, kInf));
        for (std::uint32_t s = 0; s < states_; ++s)
            if (accepting(s))
                checkpoints[n][s] = 0;
        std::vector<Cost> scratch(states_);
        for (std::size_t col = n; col-- > 0;) {
            std::vector<Cost> after = checkpoints[col + 1];
            for (std::size_t pos = (col + 1) * w; pos-- > col * w;) {
                backward(cells_[pos], after, scratch);
                std::swap(after, scratch);
            }
            checkpoints[col] = std::move(after);
        }

        const auto s0 = initial_state();
        if (checkpoints[0][s0] == kInf)
            return std::nullopt;
        int remaining = checkpoints[0][s0];
        const int total = remaining;
        std::vector<bool> chosen(cells_.size(), false);
        std::uint32_t s = s0;
        std::vector<std::vector<Cost>> within(w + 1);
        for (std::size_t col = 0; col < n; ++col) {
            // within[k] = cost-to-go before position col*w + k.
            within[w] = checkpoints[col + 1];
            for (std::size_t k = w; k-- > 1;) {
                within[k].assign(states_, kInf);
                backward(cells_[col * w + k], within[k + 1], within[k]);
            }
            for (std::size_t k = 0; k < w; ++k) {
                const auto & cell = cells_[col * w + k];
                const auto & after = within[k + 1];
                auto t1 = step(s, cell, 1);
                if (t1 != kDead && after[static_cast<std::size_t>(t1)] != kInf && 1 + after[static_cast<std::size_t>(t1)] == remaining) {
                    chosen[col * w + k] = true;
                    --remaining;
                    s = static_cast<std::uint32_t>(t1);
                    continue;
                }
                auto t0 = step(s, cell, 0);
                s = static_cast<std::uint32_t>(t0);
            }
        }
        return std::make_pair(total, std::move(chosen));
    }

private:
    void backward(const DpCell & cell, const std::vector<Cost> & after, std::vector<Cost> & before) const
    {
        for (std::uint32_t s = 0; s < states_; ++s) {
            Cost best = kInf;
            for (int c = 0; c <= 1; ++c) {
                auto t = step(s, cell, c);
                if (t == kDead)
                    continue;
                auto v = after[static_cast<std::size_t>(t)];
                if (v != kInf)
                    best = std::min<Cost>(best, static_cast<Cost>(v + c));
            }
            before[s] = best;
        }
    }

    int width_;
    int columns_;
    std::uint32_t full_ = 0;
    std::size_t states_ = 0;
    std::vector<DpCell> cells_;
};

VertexSet transpose_set(const GridSpec & spec, const VertexSet & set)
{
    auto t = spec.transposed();
    VertexSet out(t.vertex_count());
    for (auto c : set.cells())
        out.insert(cell_index(t, transpose(vertex_at(spec, c))));
    return out;
}

// Picks the orientation the DP runs on: the graph itself, or its transpose
// when only n fits under the width cap.
bool needs_transpose(const GridGraph & g, const SolverLimits & limits)
{
    const auto & spec = g.spec();
    if (spec.m <= limits.dp_max_width)
        return false;
    if (spec.n <= limits.dp_max_width)
        return true;
    throw TooLarge("profile DP width capped at " + std::to_string(limits.dp_max_width) + ", grid is " + std::to_string(spec.n) + "x" + std::to_string(spec.m));
}

std::optional<int> constrained_value(const GridGraph & g, const VertexSet * in, const VertexSet * out, const SolverLimits & limits)
{
    if (needs_transpose(g, limits)) {
        auto tg = transpose(g);
        std::optional<VertexSet> tin, tout;
        if (in != nullptr)
            tin = transpose_set(g.spec(), *in);
        if (out != nullptr)
            tout = transpose_set(g.spec(), *out);
        return ProfileDp(tg, tin ? &*tin : nullptr, tout ? &*tout : nullptr).min_cost();
    }
    return ProfileDp(g, in, out).min_cost();
}

GammaResult dp_solve(const GridGraph & g, const VertexSet * required, const SolverLimits & limits)
{
    if (g.live_count() == 0 || has_isolated_vertex(g))
        return GammaResult::undefined();
    if (required != nullptr)
        check_live(g, *required, "required set");
    const auto & spec = g.spec();

    if (!needs_transpose(g, limits)) {
        auto solved = ProfileDp(g, required, nullptr).solve_with_witness(limits.dp_table_budget_bytes);
        if (!solved)
            return GammaResult::undefined();
        VertexSet witness(spec.vertex_count());
        for (std::size_t c = 0; c < solved->second.size(); ++c)
            if (solved->second[c])
                witness.insert(c);
        return {solved->first, std::move(witness)};
    }

    // Transposed orientation scans cells in the wrong order for the witness
    // tie-break, so fix vertices greedily in (i, j) order instead.
    VertexSet in = required != nullptr ? *required : VertexSet(spec.vertex_count());
    VertexSet out(spec.vertex_count());
    auto best = constrained_value(g, &in, &out, limits);
    if (!best)
        return GammaResult::undefined();
    for (std::size_t c = 0; c < spec.vertex_count(); ++c) {
        if (!g.is_live_cell(c) || in.contains(c))
            continue;
        in.insert(c);
        auto v = constrained_value(g, &in, &out, limits);
        if (v && *v == *best)
            continue;
        in.erase(c);
        out.insert(c);
    }
    return {*best, std::move(in)};
}

} // namespace

bool is_dominating(const GridGraph & g, const VertexSet & d)
{
    const auto & spec = g.spec();
    for (std::size_t c = 0; c < spec.vertex_count(); ++c) {
        if (!g.is_live_cell(c) || d.contains(c))
            continue;
        bool hit = false;
        for_each_neighbor(g, vertex_at(spec, c), [&](Vertex u) { hit = hit || d.contains(cell_index(spec, u)); });
        if (!hit)
            return false;
    }
    return true;
}

bool is_total_dominating(const GridGraph & g, const VertexSet & d)
{
    const auto & spec = g.spec();
    for (std::size_t c = 0; c < spec.vertex_count(); ++c) {
        if (!g.is_live_cell(c))
            continue;
        bool hit = false;
        for_each_neighbor(g, vertex_at(spec, c), [&](Vertex u) { hit = hit || d.contains(cell_index(spec, u)); });
        if (!hit)
            return false;
    }
    return true;
}

GammaResult gamma_bruteforce(const GridGraph & g, const SolverLimits & limits)
{
    auto cg = compact(g, limits.brute_force_max_vertices);
    if (cg.cells.empty())
        return GammaResult::undefined();
    for (std::size_t k = 1; k <= cg.cells.size(); ++k) {
        std::uint32_t found = 0;
        if (for_each_combination(cg.cells.size(), k, [&](std::uint32_t s) {
                if (!dominating_on(cg, s))
                    return false;
                found = s;
                return true;
            }))
            return {static_cast<int>(k), expand(g, cg, found)};
    }
    return GammaResult::undefined();
}

GammaResult gamma_t_bruteforce(const GridGraph & g, const VertexSet & required, const SolverLimits & limits)
{
    auto cg = compact(g, limits.brute_force_max_vertices);
    check_live(g, required, "required set");
    if (cg.cells.empty() || has_isolated_vertex(g))
        return GammaResult::undefined();
    const auto req = compress(cg, required);
    const auto start = static_cast<std::size_t>(std::popcount(req));
    for (std::size_t k = std::max<std::size_t>(start, 1); k <= cg.cells.size(); ++k) {
        std::uint32_t found = 0;
        if (for_each_combination(cg.cells.size(), k, [&](std::uint32_t s) {
                if ((s & req) != req || !total_on(cg, s))
                    return false;
                found = s;
                return true;
            }))
            return {static_cast<int>(k), expand(g, cg, found)};
    }
    return GammaResult::undefined();
}

GammaResult gamma_t_bruteforce(const GridGraph & g, const SolverLimits & limits)
{
    return gamma_t_bruteforce(g, VertexSet(g.spec().vertex_count()), limits);
}

GammaResult gamma_t_dp(const GridGraph & g, const SolverLimits & limits)
{
    return dp_solve(g, nullptr, limits);
}

GammaResult gamma_t_dp(const GridGraph & g, const VertexSet & required, const SolverLimits & limits)
{
    return dp_solve(g, &required, limits);
}

std::optional<int> gamma_t_dp_value(const GridGraph & g, const SolverLimits & limits)
{
    if (g.live_count() == 0 || has_isolated_vertex(g))
        return std::nullopt;
    return constrained_value(g, nullptr, nullptr, limits);
}

TdsEnumeration enumerate_min_tds(const GridGraph & g, std::size_t limit, const SolverLimits & limits)
{
    auto cg = compact(g, limits.enumeration_max_vertices);
    TdsEnumeration out;
    auto gamma = gamma_t_bruteforce(g, limits);
    if (!gamma.defined())
        return out;
    out.gamma_t = gamma.value;
    std::vector<std::uint32_t> masks;
    for_each_combination(cg.cells.size(), static_cast<std::size_t>(*gamma.value), [&](std::uint32_t s) {
        if (total_on(cg, s))
            masks.push_back(s);
        return false;
    });
    for (auto s : masks)
        out.sets.push_back(expand(g, cg, s));
    std::sort(out.sets.begin(), out.sets.end(), [](const VertexSet & a, const VertexSet & b) { return lex_less(a, b); });
    if (out.sets.size() > limit) {
        out.sets.resize(limit);
        out.truncated = true;
    }
    return out;
}

VertexSet push_down(const GridGraph & g, const VertexSet & d, int i)
{
    const auto & spec = g.spec();
    if (!g.is_clean())
        throw InvalidInput("push_down requires a clean grid");
    if (i < 2 || i > spec.n - 1)
        throw InvalidInput("push_down column must satisfy 2 <= i <= n-1");
    if (d.universe() != spec.vertex_count() || !is_total_dominating(g, d))
        throw InvalidInput("push_down requires a total dominating set of the grid");

    auto in_d = [&](int ci, int cj) { return ci >= 1 && ci <= spec.n && cj >= 1 && cj <= spec.m && d.contains(cell_index(spec, {ci, cj})); };

    const GridSpec target{i, spec.m};
    VertexSet out(target.vertex_count());
    bool touches_next = false;
    for (int j = 1; j <= spec.m; ++j)
        touches_next = touches_next || in_d(i + 1, j);
    for (int col = 1; col <= i; ++col)
        for (int j = 1; j <= spec.m; ++j)
            if (in_d(col, j))
                out.insert(cell_index(target, {col, j}));
    if (!touches_next)
        return out;

    // Any vertex of column i whose only dominator sits in column i+1 (its right
    // neighbour) gets its left neighbour instead; at most one per dropped vertex.
    for (int j = 1; j <= spec.m; ++j) {
        if (!in_d(i + 1, j))
            continue;
        const bool other = in_d(i - 1, j) || in_d(i, j - 1) || in_d(i, j + 1);
        if (!other)
            out.insert(cell_index(target, {i - 1, j}));
    }
    return out;
}

} // namespace gridtds
