#include "gridtds/grid_model.hpp"

#include <algorithm>
#include <charconv>

#include "gridtds/errors.hpp"

namespace gridtds {

namespace {

int parse_int(std::string_view text, std::string_view whole)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw ParseError("malformed name '" + std::string(whole) + "'");
    return value;
}

std::pair<int, int> parse_pair(std::string_view text, std::string_view whole)
{
    auto comma = text.find(',');
    if (comma == std::string_view::npos)
        throw ParseError("expected 'i,j' in '" + std::string(whole) + "'");
    return {parse_int(text.substr(0, comma), whole), parse_int(text.substr(comma + 1), whole)};
}

} // namespace

bool in_grid(const GridSpec & spec, Vertex v)
{
    return v.i >= 1 && v.i <= spec.n && v.j >= 1 && v.j <= spec.m;
}

bool in_grid(const GridSpec & spec, const Edge & e)
{
    if (e.kind == EdgeKind::Horizontal)
        return e.i >= 1 && e.i <= spec.n - 1 && e.j >= 1 && e.j <= spec.m;
    return e.i >= 1 && e.i <= spec.n && e.j >= 1 && e.j <= spec.m - 1;
}

std::size_t edge_index(const GridSpec & spec, const Edge & e)
{
    auto i = static_cast<std::size_t>(e.i - 1);
    auto j = static_cast<std::size_t>(e.j - 1);
    if (e.kind == EdgeKind::Horizontal)
        return i * static_cast<std::size_t>(spec.m) + j;
    return spec.horizontal_edge_count() + i * static_cast<std::size_t>(spec.m - 1) + j;
}

Edge edge_at(const GridSpec & spec, std::size_t index)
{
    auto h = spec.horizontal_edge_count();
    if (index < h) {
        auto m = static_cast<std::size_t>(spec.m);
        return Edge::horizontal(static_cast<int>(index / m) + 1, static_cast<int>(index % m) + 1);
    }
    index -= h;
    auto w = static_cast<std::size_t>(spec.m - 1);
    return Edge::vertical(static_cast<int>(index / w) + 1, static_cast<int>(index % w) + 1);
}

std::string to_string(Vertex v)
{
    return std::to_string(v.i) + "," + std::to_string(v.j);
}

std::string to_string(const Edge & e)
{
    return std::string(e.kind == EdgeKind::Horizontal ? "H:" : "V:") + std::to_string(e.i) + "," + std::to_string(e.j);
}

Vertex parse_vertex(std::string_view text)
{
    auto [i, j] = parse_pair(text, text);
    return {i, j};
}

Edge parse_edge(std::string_view text)
{
    if (text.size() < 2 || text[1] != ':' || (text[0] != 'H' && text[0] != 'V'))
        throw ParseError("edge name must look like 'H:i,j' or 'V:i,j', got '" + std::string(text) + "'");
    auto [i, j] = parse_pair(text.substr(2), text);
    return {text[0] == 'H' ? EdgeKind::Horizontal : EdgeKind::Vertical, i, j};
}

Vertex transpose(Vertex v)
{
    return {v.j, v.i};
}

Edge transpose(const Edge & e)
{
    return {e.kind == EdgeKind::Horizontal ? EdgeKind::Vertical : EdgeKind::Horizontal, e.j, e.i};
}

VertexSet make_vertex_set(const GridSpec & spec, std::span<const Vertex> vertices)
{
    VertexSet set(spec.vertex_count());
    for (auto v : vertices) {
        if (!in_grid(spec, v))
            throw InvalidVertex("vertex " + to_string(v) + " outside the grid");
        set.insert(cell_index(spec, v));
    }
    return set;
}

std::vector<Vertex> to_vertices(const GridSpec & spec, const VertexSet & set)
{
    std::vector<Vertex> out;
    for (auto c : set.cells())
        out.push_back(vertex_at(spec, c));
    return out;
}

GridGraph::GridGraph(GridSpec spec) :
    spec_(spec),
    removed_(spec.edge_count(), 0),
    deleted_(spec.vertex_count())
{
}

bool GridGraph::has_edge(const Edge & e) const
{
    return in_grid(spec_, e) && edge_present(edge_index(spec_, e));
}

bool GridGraph::edge_present(std::size_t index) const
{
    if (removed_[index] != 0)
        return false;
    auto e = edge_at(spec_, index);
    return !deleted_.contains(cell_index(spec_, e.first())) && !deleted_.contains(cell_index(spec_, e.second()));
}

std::vector<Vertex> GridGraph::neighbors(Vertex v) const
{
    if (!is_live(v))
        throw InvalidVertex("vertex " + to_string(v) + " is not a live vertex");
    // Candidate edges listed in (i, j) order of the far endpoint.
    const std::pair<Edge, Vertex> candidates[] = {
        {Edge::horizontal(v.i - 1, v.j), {v.i - 1, v.j}},
        {Edge::vertical(v.i, v.j - 1), {v.i, v.j - 1}},
        {Edge::vertical(v.i, v.j), {v.i, v.j + 1}},
        {Edge::horizontal(v.i, v.j), {v.i + 1, v.j}},
    };
    std::vector<Vertex> out;
    for (auto & [e, u] : candidates)
        if (has_edge(e))
            out.push_back(u);
    return out;
}

int GridGraph::degree(Vertex v) const
{
    return static_cast<int>(neighbors(v).size());
}

VertexSet GridGraph::live_set() const
{
    VertexSet live(spec_.vertex_count());
    for (std::size_t c = 0; c < spec_.vertex_count(); ++c)
        if (!deleted_.contains(c))
            live.insert(c);
    return live;
}

std::vector<Edge> GridGraph::removed_edges() const
{
    std::vector<Edge> out;
    for (std::size_t k = 0; k < removed_.size(); ++k)
        if (removed_[k] != 0)
            out.push_back(edge_at(spec_, k));
    return out;
}

std::vector<Vertex> GridGraph::deleted_vertices() const
{
    return to_vertices(spec_, deleted_);
}

std::vector<Edge> GridGraph::present_edges() const
{
    std::vector<Edge> out;
    for (std::size_t k = 0; k < removed_.size(); ++k)
        if (edge_present(k))
            out.push_back(edge_at(spec_, k));
    return out;
}

GridGraph build_grid(GridSpec spec)
{
    if (!spec.valid())
        throw InvalidInput("grid dimensions must be positive, got " + std::to_string(spec.n) + "x" + std::to_string(spec.m));
    return GridGraph(spec);
}

GridGraph remove_edges(const GridGraph & g, std::span<const Edge> edges)
{
    GridGraph out = g;
    for (const auto & e : edges) {
        if (!out.has_edge(e))
            throw EdgeNotPresent("edge " + to_string(e) + " is not present");
        out.removed_[edge_index(out.spec_, e)] = 1;
        ++out.removed_count_;
    }
    return out;
}

GridGraph delete_vertices(const GridGraph & g, std::span<const Vertex> vertices)
{
    GridGraph out = g;
    for (auto v : vertices) {
        if (!out.is_live(v))
            throw InvalidVertex("vertex " + to_string(v) + " is not a live vertex");
        out.deleted_.insert(cell_index(out.spec_, v));
    }
    for (std::size_t k = 0; k < out.removed_.size(); ++k) {
        if (out.removed_[k] == 0)
            continue;
        auto e = edge_at(out.spec_, k);
        if (!out.is_live(e.first()) || !out.is_live(e.second())) {
            out.removed_[k] = 0;
            --out.removed_count_;
        }
    }
    return out;
}

std::vector<Vertex> column(const GridGraph & g, int i)
{
    if (i < 1 || i > g.spec().n)
        throw InvalidColumn("column " + std::to_string(i) + " outside [1, " + std::to_string(g.spec().n) + "]");
    std::vector<Vertex> out;
    for (int j = 1; j <= g.spec().m; ++j)
        if (g.is_live({i, j}))
            out.push_back({i, j});
    return out;
}

bool has_isolated_vertex(const GridGraph & g)
{
    const auto & spec = g.spec();
    for (int i = 1; i <= spec.n; ++i)
        for (int j = 1; j <= spec.m; ++j)
            if (g.is_live({i, j}) && g.degree({i, j}) == 0)
                return true;
    return false;
}

GridGraph transpose(const GridGraph & g)
{
    auto out = build_grid(g.spec().transposed());
    std::vector<Vertex> deleted;
    for (auto v : g.deleted_vertices())
        deleted.push_back(transpose(v));
    std::vector<Edge> removed;
    for (const auto & e : g.removed_edges())
        removed.push_back(transpose(e));
    return remove_edges(delete_vertices(out, deleted), removed);
}

std::vector<SymmetryMap> symmetries(const GridSpec & spec)
{
    std::vector<SymmetryMap> out;
    for (int t = 0; t < (spec.n == spec.m ? 2 : 1); ++t)
        for (int fi = 0; fi < 2; ++fi)
            for (int fj = 0; fj < 2; ++fj)
                out.push_back({fi == 1, fj == 1, t == 1});
    return out;
}

Vertex apply(const GridSpec & spec, const SymmetryMap & map, Vertex v)
{
    if (map.transpose && spec.n != spec.m)
        throw InvalidSymmetry("transpose is only an automorphism of square grids");
    if (map.flip_i)
        v.i = spec.n + 1 - v.i;
    if (map.flip_j)
        v.j = spec.m + 1 - v.j;
    if (map.transpose)
        v = transpose(v);
    return v;
}

Edge apply(const GridSpec & spec, const SymmetryMap & map, const Edge & e)
{
    auto a = apply(spec, map, e.first());
    auto b = apply(spec, map, e.second());
    if (b < a)
        std::swap(a, b);
    return {a.i == b.i ? EdgeKind::Vertical : EdgeKind::Horizontal, a.i, a.j};
}

} // namespace gridtds
