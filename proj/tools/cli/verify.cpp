#include "cli/verify.hpp"

#include <algorithm>

#include <gridtds/bondage_engine.hpp>
#include <gridtds/closed_forms.hpp>
#include <gridtds/errors.hpp>
#include <gridtds/exact_solver.hpp>

#include "cli/campaign.hpp"

namespace gridtds::cli {

namespace {

std::string grid_name(int n, int m)
{
    return "G_{" + std::to_string(n) + "," + std::to_string(m) + "}";
}

std::string opt(const std::optional<int> & v)
{
    return v ? std::to_string(*v) : "undefined";
}

Check check(std::string name, bool ok, std::string detail = {})
{
    return {std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)};
}

std::vector<Check> formulas_suite(const VerifyOptions & options)
{
    std::vector<Check> out;
    for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= options.max_n; ++n) {
            auto f = gamma_t_formula(n, m);
            if (f.kind != FormulaKind::Exact)
                continue;
            auto v = gamma_t_dp_value(build_grid({n, m}));
            out.push_back(check("gamma_t " + grid_name(n, m), v == f.value, "formula " + opt(f.value) + ", dp " + opt(v)));
        }

    std::vector<std::pair<int, int>> cells;
    for (int m = 1; m <= 4; ++m)
        for (int n = std::max(m, m == 1 ? 4 : 2); n <= options.max_n; ++n)
            cells.emplace_back(n, m);
    CampaignOptions campaign;
    campaign.threads = options.threads;
    for (const auto & row : run_campaign(cells, campaign)) {
        std::string detail = "formula " + formula_text(row.bondage_formula) + ", solver " + bondage_text(*row.bondage_solver);
        if (row.bondage_agreement == Agreement::BoundNotTight)
            detail += " (bound-not-tight)";
        out.push_back(check("b_t " + grid_name(row.n, row.m), row.agreement_flag(), detail));
    }
    return out;
}

std::vector<Check> constructions_suite(const VerifyOptions & options)
{
    const ConstructionId ids[] = {
        ConstructionId::TwoRowVerticalCut, ConstructionId::TwoRowHorizontalCut, ConstructionId::TwoRowHorizontalCutSplit, ConstructionId::TwoRowDoubleVerticalCut,
        ConstructionId::FourRowPairs, ConstructionId::FourRowPairsAlt, ConstructionId::FourRowBlocks, ConstructionId::FourRowBlocksAlt,
    };
    std::vector<Check> out;
    for (auto id : ids)
        for (int n = 1; n <= options.max_n; ++n) {
            const int rows = construction_rows(id);
            std::vector<ConstructionParams> params;
            if (rows == 4) {
                params.push_back({});
            }
            else {
                for (int i = 1; i <= n; ++i)
                    for (int j = id == ConstructionId::TwoRowDoubleVerticalCut ? i + 1 : 0; j <= (id == ConstructionId::TwoRowDoubleVerticalCut ? n : 0); ++j)
                        params.push_back({i, j});
            }
            int tried = 0;
            int failed = 0;
            const auto expected = gamma_t_formula(n, rows).value;
            for (const auto & p : params) {
                if (!construction_admissible(id, n, p))
                    continue;
                ++tried;
                auto d = construct(id, n, p);
                auto removed = construction_removed_edges(id, n, p);
                auto g = remove_edges(build_grid({n, rows}), removed);
                if (!is_total_dominating(g, d) || static_cast<int>(d.size()) != expected)
                    ++failed;
            }
            if (tried == 0)
                continue;
            out.push_back(check(std::string(to_string(id)) + " n=" + std::to_string(n), failed == 0,
                std::to_string(tried - failed) + "/" + std::to_string(tried) + " parameter choices valid, size " + opt(expected)));
        }
    return out;
}

std::vector<Check> witnesses_suite(const VerifyOptions & options)
{
    std::vector<Check> out;
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= options.max_n; ++n) {
            auto w = witness_edges(n, m);
            if (!w)
                continue;
            auto f = bondage_formula(n, m);
            const bool raises = verify_witness(build_grid({n, m}), *w);
            const bool sized = f.value && static_cast<int>(w->size()) == *f.value;
            std::string names;
            for (const auto & e : *w)
                names += (names.empty() ? "" : " ") + to_string(e);
            out.push_back(check("witness " + grid_name(n, m), raises && sized, "{" + names + "} raises gamma_t: " + (raises ? "yes" : "no") + ", size vs " + formula_text(f)));
        }
    return out;
}

std::vector<Check> lemmas_suite(const VerifyOptions & options)
{
    std::vector<Check> out;

    // Prefix bound on DP witnesses.
    for (int m = 2; m <= 4; ++m)
        for (int n = 2; n <= std::min(options.max_n, 10); ++n) {
            auto g = build_grid({n, m});
            auto d = *gamma_t_dp(g).witness;
            bool ok = true;
            for (int i = 1; i <= n - 1 && ok; ++i) {
                int prefix = 0;
                for (auto v : to_vertices(g.spec(), d))
                    prefix += v.i <= i + 1 ? 1 : 0;
                ok = *gamma_t_dp_value(build_grid({i, m})) <= prefix;
            }
            out.push_back(check("prefix bound " + grid_name(n, m), ok, "gamma_t(G_{i,m}) <= |D cap V(G_{i+1,m})| for all i"));
        }

    // Column rewrite on every minimum set of small 3-row grids.
    for (int n = 3; n <= std::min(options.max_n, 6); ++n) {
        auto g = build_grid({n, 3});
        auto all = enumerate_min_tds(g, 100000);
        bool ok = true;
        for (const auto & d : all.sets)
            for (int i = 2; i <= n - 1; ++i) {
                auto r = push_down(g, d, i);
                ok = ok && is_total_dominating(build_grid({i, 3}), r) && r.size() <= d.size();
            }
        out.push_back(check("push_down " + grid_name(n, 3), ok, std::to_string(all.sets.size()) + " minimum sets"));
    }

    // Deleting a last-column vertex of G_{n,2}, n = 1 (mod 3).
    for (int n = 4; n <= options.max_n; n += 3) {
        auto g = build_grid({n, 2});
        auto base = *gamma_t_dp_value(g);
        for (int j = 1; j <= 2; ++j) {
            const Vertex v{n, j};
            auto h = delete_vertices(g, std::span<const Vertex>(&v, 1));
            auto value = gamma_t_dp_value(h);
            out.push_back(check("corner deletion " + grid_name(n, 2) + " - x_" + std::to_string(n) + std::to_string(j), value && *value == base - 1,
                "gamma_t " + std::to_string(base) + " -> " + opt(value)));
        }
    }

    // End columns of minimum sets of G_{n,3}.
    SolverLimits wide;
    wide.enumeration_max_vertices = 21;
    for (int n = 3; n <= std::min(options.max_n, 7); ++n) {
        auto g = build_grid({n, 3});
        auto all = enumerate_min_tds(g, 1000000, wide);
        bool ok = !all.truncated;
        for (const auto & d : all.sets) {
            int first = 0, last = 0;
            for (auto v : to_vertices(g.spec(), d)) {
                first += v.i == 1 ? 1 : 0;
                last += v.i == n ? 1 : 0;
            }
            ok = ok && first <= 2 && last <= 2;
        }
        out.push_back(check("end columns " + grid_name(n, 3), ok, std::to_string(all.sets.size()) + " minimum sets, |D cap Y_1|, |D cap Y_n| <= 2"));
    }

    // A corner of the last column forced into D costs one extra vertex.
    for (int n = 3; n <= std::min(options.max_n, 6); ++n) {
        auto g = build_grid({n, 3});
        for (int j : {1, 3}) {
            const Vertex v{n, j};
            auto req = make_vertex_set(g.spec(), std::span<const Vertex>(&v, 1));
            auto bf = gamma_t_bruteforce(g, req);
            auto dp = gamma_t_dp(g, req);
            out.push_back(check("forced corner " + grid_name(n, 3) + " x_" + std::to_string(n) + std::to_string(j),
                bf.value && *bf.value >= n + 1 && bf.value == dp.value, "constrained gamma_t " + opt(bf.value) + " (dp " + opt(dp.value) + ") >= " + std::to_string(n + 1)));
        }
    }

    // Sandwich and single-edge monotonicity over small grids.
    {
        int graphs = 0, edges = 0;
        bool sandwich = true, monotone = true;
        for (int n = 1; n <= 16; ++n)
            for (int m = 1; n * m <= 16; ++m) {
                auto g = build_grid({n, m});
                auto gt = gamma_t_bruteforce(g);
                if (!gt.defined())
                    continue;
                ++graphs;
                auto gd = *gamma_bruteforce(g).value;
                sandwich = sandwich && gd <= *gt.value && *gt.value <= 2 * gd;
                for (const auto & e : g.present_edges()) {
                    auto h = remove_edges(g, std::span<const Edge>(&e, 1));
                    auto v = gamma_t_bruteforce(h);
                    ++edges;
                    monotone = monotone && (!v.defined() || *v.value >= *gt.value);
                }
            }
        out.push_back(check("sandwich gamma <= gamma_t <= 2 gamma", sandwich, std::to_string(graphs) + " grids with n*m <= 16"));
        out.push_back(check("edge removal never lowers gamma_t", monotone, std::to_string(edges) + " single-edge removals"));
    }

    // DP against brute force on seeded random instances.
    {
        std::mt19937_64 rng(options.seed);
        int mismatches = 0;
        for (int k = 0; k < 200; ++k) {
            auto g = random_instance(rng, 20, 3, 1);
            if (gamma_t_dp(g).value != gamma_t_bruteforce(g).value)
                ++mismatches;
        }
        out.push_back(check("dp equals brute force", mismatches == 0, "200 random instances, seed " + std::to_string(options.seed) + ", " + std::to_string(mismatches) + " mismatches"));
    }
    return out;
}

std::vector<Check> conjecture_suite(const VerifyOptions & options)
{
    std::vector<Check> out;
    std::vector<std::pair<int, int>> cells;
    for (int n = 7; n <= options.max_n; ++n)
        if (n % 5 == 0 || n % 5 == 2 || n % 5 == 3)
            cells.emplace_back(n, 4);
    CampaignOptions campaign;
    campaign.threads = options.threads;
    for (const auto & row : run_campaign(cells, campaign)) {
        const auto & r = *row.bondage_solver;
        std::string detail = "computed b_t = " + bondage_text(r) + ", bound " + formula_text(row.bondage_formula);
        if (r.status == BondageStatus::Exact)
            detail += r.value == row.bondage_formula.value ? " (tight)" : " (not tight)";
        out.push_back({"b_t " + grid_name(row.n, 4), CheckStatus::Info, detail});
    }
    if (cells.empty())
        out.push_back({"conjecture", CheckStatus::Info, "no n in [7, max-n] with n = 0,2,3 (mod 5)"});
    return out;
}

} // namespace

std::string_view to_string(CheckStatus s)
{
    switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Info: return "INFO";
    }
    return "INFO";
}

std::vector<std::string_view> suite_names()
{
    return {"formulas", "constructions", "witnesses", "lemmas", "conjecture"};
}

std::vector<Check> run_suite(std::string_view suite, const VerifyOptions & options)
{
    if (suite == "formulas")
        return formulas_suite(options);
    if (suite == "constructions")
        return constructions_suite(options);
    if (suite == "witnesses")
        return witnesses_suite(options);
    if (suite == "lemmas")
        return lemmas_suite(options);
    if (suite == "conjecture")
        return conjecture_suite(options);
    throw InvalidInput("unknown suite '" + std::string(suite) + "'");
}

GridGraph random_instance(std::mt19937_64 & rng, int max_cells, int max_removed, int max_deleted)
{
    std::uniform_int_distribution<int> pick_n(1, max_cells);
    const int n = pick_n(rng);
    std::uniform_int_distribution<int> pick_m(1, max_cells / n);
    const int m = pick_m(rng);
    auto g = build_grid({n, m});

    std::uniform_int_distribution<int> pick_deleted(0, max_deleted);
    const int deleted = std::min(pick_deleted(rng), n * m - 1);
    for (int k = 0; k < deleted; ++k) {
        auto live = to_vertices(g.spec(), g.live_set());
        std::uniform_int_distribution<std::size_t> pick(0, live.size() - 1);
        const auto v = live[pick(rng)];
        g = delete_vertices(g, std::span<const Vertex>(&v, 1));
    }
    std::uniform_int_distribution<int> pick_removed(0, max_removed);
    const int removed = pick_removed(rng);
    for (int k = 0; k < removed; ++k) {
        auto present = g.present_edges();
        if (present.empty())
            break;
        std::uniform_int_distribution<std::size_t> pick(0, present.size() - 1);
        const auto e = present[pick(rng)];
        g = remove_edges(g, std::span<const Edge>(&e, 1));
    }
    return g;
}

} // namespace gridtds::cli
