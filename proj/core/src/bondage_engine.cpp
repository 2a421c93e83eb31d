#include "gridtds/bondage_engine.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <thread>

#include "gridtds/errors.hpp"

namespace gridtds {

namespace {

constexpr std::size_t kBatchSize = 256;
constexpr std::size_t kPoolCapacity = 32;

struct Outcome {
    bool prefiltered = false;
    bool raised = false;
    std::optional<VertexSet> survivor;
};

// True iff `d` still totally dominates after `removed` is taken out of g. Only
// endpoints of removed edges can lose their dominator.
bool survives(const GridGraph & g, const VertexSet & d, std::span<const Edge> removed)
{
    const auto & spec = g.spec();
    auto cut = [&](Vertex a, Vertex b) {
        for (const auto & e : removed)
            if ((e.first() == a && e.second() == b) || (e.first() == b && e.second() == a))
                return true;
        return false;
    };
    auto ok = [&](Vertex v) {
        const Vertex around[] = {{v.i - 1, v.j}, {v.i + 1, v.j}, {v.i, v.j - 1}, {v.i, v.j + 1}};
        for (auto u : around)
            if (in_grid(spec, u) && g.is_live(u) && d.contains(cell_index(spec, u)) && !cut(v, u))
                return true;
        return false;
    };
    for (const auto & e : removed)
        if (!ok(e.first()) || !ok(e.second()))
            return false;
    return true;
}

} // namespace

bool verify_witness(const GridGraph & g, std::span<const Edge> edges, const SolverLimits & limits)
{
    auto h = remove_edges(g, edges);
    if (has_isolated_vertex(h))
        return false;
    auto before = gamma_t_dp_value(g, limits);
    auto after = gamma_t_dp_value(h, limits);
    return before && after && *after > *before;
}

CanonicalSubsetStream::CanonicalSubsetStream(GridSpec spec, int k, bool use_symmetry) :
    spec_(spec),
    k_(static_cast<std::size_t>(std::max(k, 0))),
    edge_count_(spec.edge_count())
{
    if (!spec.valid())
        throw InvalidInput("invalid grid spec");
    if (k < 1)
        throw InvalidInput("subset size must be at least 1");
    base_degree_.assign(spec.vertex_count(), 0);
    for (std::size_t e = 0; e < edge_count_; ++e) {
        auto edge = edge_at(spec, e);
        auto a = cell_index(spec, edge.first());
        auto b = cell_index(spec, edge.second());
        endpoints_.emplace_back(a, b);
        ++base_degree_[a];
        ++base_degree_[b];
    }
    degree_scratch_ = base_degree_;
    if (use_symmetry)
        for (const auto & map : symmetries(spec)) {
            if (map.is_identity())
                continue;
            std::vector<std::size_t> perm(edge_count_);
            for (std::size_t e = 0; e < edge_count_; ++e)
                perm[e] = edge_index(spec, apply(spec, map, edge_at(spec, e)));
            permutations_.push_back(std::move(perm));
        }
    done_ = k_ > edge_count_;
}

bool CanonicalSubsetStream::advance()
{
    if (!started_) {
        started_ = true;
        combo_.resize(k_);
        for (std::size_t t = 0; t < k_; ++t)
            combo_[t] = t;
        return true;
    }
    std::size_t t = k_;
    while (t > 0) {
        --t;
        if (combo_[t] < edge_count_ - k_ + t) {
            ++combo_[t];
            for (std::size_t u = t + 1; u < k_; ++u)
                combo_[u] = combo_[u - 1] + 1;
            return true;
        }
    }
    return false;
}

bool CanonicalSubsetStream::keeps_degrees() const
{
    bool ok = true;
    for (auto e : combo_) {
        auto [a, b] = endpoints_[e];
        const bool a_left = --degree_scratch_[a] > 0;
        const bool b_left = --degree_scratch_[b] > 0;
        ok = ok && a_left && b_left;
    }
    for (auto e : combo_) {
        auto [a, b] = endpoints_[e];
        ++degree_scratch_[a];
        ++degree_scratch_[b];
    }
    return ok;
}

bool CanonicalSubsetStream::is_orbit_min() const
{
    for (const auto & perm : permutations_) {
        image_scratch_.clear();
        for (auto e : combo_)
            image_scratch_.push_back(perm[e]);
        std::sort(image_scratch_.begin(), image_scratch_.end());
        if (std::lexicographical_compare(image_scratch_.begin(), image_scratch_.end(), combo_.begin(), combo_.end()))
            return false;
    }
    return true;
}

bool CanonicalSubsetStream::next(std::vector<std::size_t> & indices)
{
    while (!done_) {
        if (!advance()) {
            done_ = true;
            break;
        }
        if (keeps_degrees() && is_orbit_min()) {
            indices = combo_;
            return true;
        }
    }
    return false;
}

bool CanonicalSubsetStream::next_edges(std::vector<Edge> & edges)
{
    std::vector<std::size_t> indices;
    if (!next(indices))
        return false;
    edges.clear();
    for (auto e : indices)
        edges.push_back(edge_at(spec_, e));
    return true;
}

std::vector<std::vector<Edge>> canonical_subsets(GridSpec spec, int k, bool use_symmetry)
{
    CanonicalSubsetStream stream(spec, k, use_symmetry);
    std::vector<std::vector<Edge>> out;
    std::vector<Edge> edges;
    while (stream.next_edges(edges))
        out.push_back(edges);
    return out;
}

BondageResult total_bondage(const GridGraph & g, const BondageOptions & options)
{
    if (!g.is_clean())
        throw InvalidInput("total_bondage expects a clean grid");
    if (options.k_max < 1)
        throw InvalidInput("k_max must be at least 1");
    const auto started = std::chrono::steady_clock::now();
    const auto & spec = g.spec();
    BondageResult result;

    auto finish = [&](BondageResult r) {
        r.stats.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        return r;
    };

    auto base = gamma_t_dp(g, options.limits);
    if (!base.defined()) {
        result.status = BondageStatus::Infinity;
        return finish(result);
    }
    const int base_value = *base.value;
    std::vector<VertexSet> pool{*base.witness};

    const unsigned threads = std::max(1u, options.threads);
    std::vector<std::vector<Edge>> batch;
    std::vector<Outcome> outcomes;

    for (int k = 1; k <= options.k_max; ++k) {
        CanonicalSubsetStream stream(spec, k, options.use_symmetry);
        result.stats.examined_per_k.push_back(0);
        bool any_valid = false;
        std::optional<std::vector<Edge>> found;

        while (!found) {
            batch.clear();
            std::vector<Edge> edges;
            while (batch.size() < kBatchSize && stream.next_edges(edges))
                batch.push_back(edges);
            if (batch.empty())
                break;
            any_valid = true;

            const bool collect = pool.size() < kPoolCapacity;
            outcomes.assign(batch.size(), Outcome{});
            auto evaluate = [&](std::size_t idx) {
                auto & out = outcomes[idx];
                for (const auto & d : pool)
                    if (survives(g, d, batch[idx])) {
                        out.prefiltered = true;
                        return;
                    }
                auto h = remove_edges(g, batch[idx]);
                if (collect) {
                    auto r = gamma_t_dp(h, options.limits);
                    out.raised = r.defined() && *r.value > base_value;
                    if (!out.raised && r.defined())
                        out.survivor = std::move(r.witness);
                }
                else {
                    auto v = gamma_t_dp_value(h, options.limits);
                    out.raised = v && *v > base_value;
                }
            };
            if (threads == 1 || batch.size() < 2) {
                for (std::size_t idx = 0; idx < batch.size(); ++idx)
                    evaluate(idx);
            }
            else {
                std::vector<std::jthread> workers;
                for (unsigned t = 0; t < threads; ++t)
                    workers.emplace_back([&, t] {
                        for (std::size_t idx = t; idx < batch.size(); idx += threads)
                            evaluate(idx);
                    });
            }

            for (std::size_t idx = 0; idx < batch.size(); ++idx) {
                const auto & out = outcomes[idx];
                ++result.stats.subsets_examined;
                ++result.stats.examined_per_k.back();
                if (out.prefiltered) {
                    ++result.stats.prefiltered;
                    continue;
                }
                ++result.stats.dp_calls;
                if (out.raised) {
                    found = batch[idx];
                    break;
                }
                if (out.survivor && pool.size() < kPoolCapacity)
                    pool.push_back(*out.survivor);
            }
        }

        if (found) {
            result.status = BondageStatus::Exact;
            result.value = k;
            result.witness = *found;
            return finish(result);
        }
        if (!any_valid) {
            // Every k-subset isolates a vertex, hence so does every larger one.
            result.status = BondageStatus::Infinity;
            return finish(result);
        }
        result.value = k;
    }
    result.status = BondageStatus::LowerBoundOnly;
    return finish(result);
}

BondageResult total_bondage(const GridGraph & g, int k_max, bool use_symmetry)
{
    BondageOptions options;
    options.k_max = k_max;
    options.use_symmetry = use_symmetry;
    return total_bondage(g, options);
}

} // namespace gridtds
