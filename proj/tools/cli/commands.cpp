#include "cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include <gridtds/bondage_engine.hpp>
#include <gridtds/closed_forms.hpp>
#include <gridtds/errors.hpp>
#include <gridtds/exact_solver.hpp>

#include "cli/cache.hpp"
#include "cli/campaign.hpp"
#include "cli/verify.hpp"

namespace gridtds::cli {

namespace {

using json = nlohmann::ordered_json;

struct CacheFlags {
    bool enabled = false;
    std::string directory;

    std::optional<ResultCache> open() const
    {
        if (!enabled)
            return std::nullopt;
        return ResultCache(directory.empty() ? ResultCache::default_directory() : std::filesystem::path(directory), GRIDTDS_VERSION);
    }
};

// Edge lists look like "H:5,1 V:2,3" or "H:5,1,V:2,3"; the comma inside a
// name makes a plain split ambiguous, so names are matched as tokens.
std::vector<Edge> parse_edge_list(const std::vector<std::string> & texts)
{
    static const std::regex token(R"([HV]:\d+,\d+)");
    static const std::regex separator(R"([\s,;]*)");
    std::vector<Edge> edges;
    for (const auto & text : texts) {
        auto pos = text.cbegin();
        for (std::sregex_iterator it(text.begin(), text.end(), token), end; it != end; ++it) {
            if (!std::regex_match(pos, (*it)[0].first, separator))
                throw ParseError("malformed edge list '" + text + "'");
            edges.push_back(parse_edge(it->str()));
            pos = (*it)[0].second;
        }
        if (!std::regex_match(pos, text.cend(), separator) || pos == text.cbegin())
            throw ParseError("malformed edge list '" + text + "'");
    }
    return edges;
}

// Vertex lists are "i,j" pairs separated by ';' or whitespace, or a flat
// comma-separated sequence of an even number of integers.
std::vector<Vertex> parse_vertex_list(const std::vector<std::string> & texts)
{
    static const std::regex shape(R"(\s*\d+\s*,\s*\d+(\s*[,;\s]\s*\d+\s*,\s*\d+)*\s*)");
    std::vector<Vertex> vertices;
    for (const auto & text : texts) {
        if (!std::regex_match(text, shape))
            throw ParseError("malformed vertex list '" + text + "'");
        static const std::regex number(R"(\d+)");
        std::vector<int> values;
        for (std::sregex_iterator it(text.begin(), text.end(), number), end; it != end; ++it)
            values.push_back(std::stoi(it->str()));
        for (std::size_t k = 0; k + 1 < values.size(); k += 2)
            vertices.push_back({values[k], values[k + 1]});
    }
    return vertices;
}

json names(const std::vector<Vertex> & vs)
{
    auto a = json::array();
    for (auto v : vs)
        a.push_back(to_string(v));
    return a;
}

json names(const std::vector<Edge> & es)
{
    auto a = json::array();
    for (const auto & e : es)
        a.push_back(to_string(e));
    return a;
}

std::string joined(const json & array)
{
    std::string out;
    for (const auto & s : array) {
        if (!out.empty())
            out += ' ';
        out += s.get<std::string>();
    }
    return out;
}

// Cached results are the JSON documents themselves, so a hit prints exactly
// what a recomputation would.
template <typename Compute>
json cached(const CacheFlags & flags, const GridGraph & g, const std::string & operation, Compute compute)
{
    auto cache = flags.open();
    const auto key = CacheKey::make(g, operation);
    if (cache) {
        if (auto hit = cache->lookup(key))
            return json::parse(*hit);
    }
    json result = compute();
    if (cache)
        cache->store(key, result.dump());
    return result;
}

// --- gamma -------------------------------------------------------------------

struct GammaArgs {
    int n = 0;
    int m = 0;
    std::vector<std::string> remove;
    std::vector<std::string> del;
    std::string engine = "dp";
    bool as_json = false;
    CacheFlags cache;
};

GridGraph build_instance(int n, int m, const std::vector<std::string> & remove, const std::vector<std::string> & del)
{
    auto g = build_grid({n, m});
    const auto vertices = parse_vertex_list(del);
    const auto edges = parse_edge_list(remove);
    g = remove_edges(g, edges);
    g = delete_vertices(g, vertices);
    return g;
}

void cmd_gamma(const GammaArgs & a, std::ostream & out)
{
    const auto g = build_instance(a.n, a.m, a.remove, a.del);
    const auto result = cached(a.cache, g, "gamma_t:" + a.engine, [&] {
        const auto r = a.engine == "brute" ? gamma_t_bruteforce(g) : gamma_t_dp(g);
        json j;
        j["n"] = a.n;
        j["m"] = a.m;
        if (r.value)
            j["gamma_t"] = *r.value;
        else
            j["gamma_t"] = "undefined";
        j["witness"] = r.witness ? names(to_vertices(g.spec(), *r.witness)) : json::array();
        return j;
    });

    if (a.as_json) {
        out << result.dump() << '\n';
        return;
    }
    if (result["gamma_t"].is_number())
        out << result["gamma_t"].get<int>() << '\n' << "witness " << joined(result["witness"]) << '\n';
    else
        out << "undefined\n";
}

// --- bondage -----------------------------------------------------------------

struct BondageArgs {
    int n = 0;
    int m = 0;
    int k_max = 3;
    bool no_symmetry = false;
    unsigned threads = 1;
    bool as_json = false;
    CacheFlags cache;
};

void cmd_bondage(const BondageArgs & a, std::ostream & out, std::ostream & err)
{
    if (a.k_max < 1)
        throw InvalidInput("--kmax must be at least 1");
    const auto g = build_grid({a.n, a.m});
    std::optional<double> elapsed;
    const auto result = cached(a.cache, g, "bondage:kmax=" + std::to_string(a.k_max) + (a.no_symmetry ? ":nosym" : ""), [&] {
        BondageOptions options;
        options.k_max = a.k_max;
        options.use_symmetry = !a.no_symmetry;
        options.threads = a.threads;
        const auto r = total_bondage(g, options);
        elapsed = r.stats.elapsed_seconds;
        json j;
        j["n"] = a.n;
        j["m"] = a.m;
        j["status"] = std::string(to_string(r.status));
        if (r.status == BondageStatus::Infinity)
            j["value"] = "infinity";
        else
            j["value"] = r.value;
        j["witness"] = names(r.witness);
        j["stats"] = {
            {"subsets_examined", r.stats.subsets_examined},
            {"dp_calls", r.stats.dp_calls},
            {"prefiltered", r.stats.prefiltered},
            {"examined_per_k", r.stats.examined_per_k},
        };
        const auto closed = witness_edges(a.n, a.m);
        j["closed_form_witness"] = closed ? names(*closed) : json(nullptr);
        return j;
    });

    if (a.as_json) {
        out << result.dump() << '\n';
    }
    else {
        const auto status = result["status"].get<std::string>();
        if (status == "infinity")
            out << "infinity\n";
        else if (status == "exact")
            out << "exact " << result["value"].get<int>() << '\n' << "witness " << joined(result["witness"]) << '\n';
        else
            out << "lower_bound " << result["value"].get<int>() + 1 << " (no witness with at most " << result["value"].get<int>() << " edges)\n";
        const auto & s = result["stats"];
        out << "subsets_examined " << s["subsets_examined"].get<std::uint64_t>() << '\n'
            << "dp_calls " << s["dp_calls"].get<std::uint64_t>() << '\n'
            << "prefiltered " << s["prefiltered"].get<std::uint64_t>() << '\n';
        if (!result["closed_form_witness"].is_null())
            out << "closed_form_witness " << joined(result["closed_form_witness"]) << '\n';
    }
    if (elapsed)
        err << "elapsed " << *elapsed << " s\n";
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
    std::string suite;
    VerifyOptions options;
    bool as_json = false;
};

int cmd_verify(const VerifyArgs & a, std::ostream & out)
{
    const auto checks = run_suite(a.suite, a.options);
    const bool failed = std::any_of(checks.begin(), checks.end(), [](const Check & c) { return c.status == CheckStatus::Fail; });
    if (a.as_json) {
        json j;
        j["suite"] = a.suite;
        j["max_n"] = a.options.max_n;
        j["seed"] = a.options.seed;
        auto rows = json::array();
        for (const auto & c : checks)
            rows.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
        j["checks"] = rows;
        j["passed"] = !failed;
        out << j.dump() << '\n';
    }
    else {
        for (const auto & c : checks)
            out << to_string(c.status) << "  " << c.name << "  " << c.detail << '\n';
        out << (failed ? "FAILED" : "OK") << ' ' << checks.size() << " checks\n";
    }
    return failed ? kExitCheckFailed : kExitOk;
}

// --- render ------------------------------------------------------------------

struct RenderArgs {
    int n = 0;
    int m = 0;
    std::string set = "solver";
    std::string variant = "d";
};

void cmd_render(const RenderArgs & a, std::ostream & out)
{
    const GridSpec spec{a.n, a.m};
    if (!spec.valid())
        throw InvalidInput("grid dimensions must be positive");
    VertexSet d(spec.vertex_count());
    if (a.set == "solver") {
        auto r = gamma_t_dp(build_grid(spec));
        if (!r.witness)
            throw InvalidInput("G has no total dominating set");
        d = *r.witness;
    }
    else {
        if (a.m != 4)
            throw InvalidInput("--set " + a.set + " is defined on four rows only");
        const bool prime = a.variant == "dprime";
        ConstructionId id = a.set == "prop51" ? (prime ? ConstructionId::FourRowPairsAlt : ConstructionId::FourRowPairs)
                                              : (prime ? ConstructionId::FourRowBlocksAlt : ConstructionId::FourRowBlocks);
        d = construct(id, a.n);
    }
    for (int j = a.m; j >= 1; --j) {
        std::string line;
        for (int i = 1; i <= a.n; ++i)
            line += d.contains(cell_index(spec, {i, j})) ? '*' : 'o';
        out << line << '\n';
    }
}

// --- table -------------------------------------------------------------------

struct TableArgs {
    int m = 2;
    int n_from = 1;
    int n_to = 10;
    std::string format = "text";
    unsigned threads = 1;
    int unknown_k_max = 3;
};

void cmd_table(const TableArgs & a, std::ostream & out)
{
    if (a.m < 1 || a.n_from < 1 || a.n_to < a.n_from)
        throw InvalidInput("need m >= 1 and 1 <= n-from <= n-to");
    std::vector<std::pair<int, int>> cells;
    for (int n = a.n_from; n <= a.n_to; ++n)
        cells.emplace_back(n, a.m);
    CampaignOptions options;
    options.threads = a.threads;
    options.unknown_k_max = a.unknown_k_max;
    const auto rows = run_campaign(cells, options);

    if (a.format == "csv") {
        out << csv_header() << '\n';
        for (const auto & r : rows)
            out << to_csv(r) << '\n';
    }
    else if (a.format == "json") {
        auto j = json::array();
        for (const auto & r : rows)
            j.push_back(to_json(r));
        out << j.dump() << '\n';
    }
    else {
        auto gamma_text = [](const CampaignRow & r) {
            return formula_text(r.gamma_formula) + " / " + (r.gamma_solver ? std::to_string(*r.gamma_solver) : "undefined");
        };
        char buf[256];
        std::snprintf(buf, sizeof buf, "%4s %3s  %-16s  %-9s  %-8s  %-36s %s\n", "n", "m", "gamma_t f/dp", "b_t f", "b_t", "witness", "agreement");
        out << buf;
        for (const auto & r : rows) {
            std::string witness;
            for (const auto & e : r.bondage_solver->witness)
                witness += (witness.empty() ? "" : " ") + to_string(e);
            std::snprintf(buf, sizeof buf, "%4d %3d  %-16s  %-9s  %-8s  %-36s %s\n", r.n, r.m, gamma_text(r).c_str(), formula_text(r.bondage_formula).c_str(),
                bondage_text(*r.bondage_solver).c_str(), witness.c_str(), std::string(to_string(r.bondage_agreement)).c_str());
            out << buf;
        }
    }
}

void add_cache_flags(CLI::App * cmd, CacheFlags & flags)
{
    cmd->add_flag("--cache", flags.enabled, "Reuse and record results in the on-disk cache");
    cmd->add_option("--cache-dir", flags.directory, "Cache directory (default $GRIDTDS_CACHE_DIR or ~/.cache/gridtds)");
}

} // namespace

int run_cli(std::span<const std::string> args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Exact total domination and total bondage numbers of grid graphs", "gridtds"};
    app.set_version_flag("--version", GRIDTDS_VERSION);
    app.require_subcommand(1);

    GammaArgs gamma;
    auto * g = app.add_subcommand("gamma", "Total domination number of G_{N,M}, optionally with edges removed or vertices deleted");
    g->add_option("N", gamma.n, "Columns")->required();
    g->add_option("M", gamma.m, "Rows")->required();
    g->add_option("--remove", gamma.remove, "Edges to remove, e.g. H:5,1,V:2,3");
    g->add_option("--delete", gamma.del, "Vertices to delete, e.g. '1,1;2,3'");
    g->add_option("--engine", gamma.engine, "dp or brute")->check(CLI::IsMember({"dp", "brute"}));
    g->add_flag("--json", gamma.as_json);
    add_cache_flags(g, gamma.cache);

    BondageArgs bondage;
    auto * b = app.add_subcommand("bondage", "Total bondage number of G_{N,M}");
    b->add_option("N", bondage.n)->required();
    b->add_option("M", bondage.m)->required();
    b->add_option("--kmax", bondage.k_max, "Largest removal size searched (default 3)");
    b->add_flag("--no-symmetry", bondage.no_symmetry, "Search every subset instead of one per symmetry orbit");
    b->add_option("--threads", bondage.threads)->check(CLI::PositiveNumber);
    b->add_flag("--json", bondage.as_json);
    add_cache_flags(b, bondage.cache);

    VerifyArgs verify;
    auto * v = app.add_subcommand("verify", "Run a verification suite");
    v->add_option("--suite", verify.suite)->required()->check(CLI::IsMember(suite_names()));
    v->add_option("--max-n", verify.options.max_n, "Largest n checked (default 10)");
    v->add_option("--seed", verify.options.seed, "Seed for randomized checks");
    v->add_option("--threads", verify.options.threads)->check(CLI::PositiveNumber);
    v->add_flag("--json", verify.as_json);

    RenderArgs render;
    auto * r = app.add_subcommand("render", "Draw a total dominating set; row M on top, column 1 on the left");
    r->add_option("N", render.n)->required();
    r->add_option("M", render.m)->required();
    r->add_option("--set", render.set, "prop51, prop52 or solver")->check(CLI::IsMember({"prop51", "prop52", "solver"}));
    r->add_option("--variant", render.variant, "d or dprime")->check(CLI::IsMember({"d", "dprime"}));

    TableArgs table;
    auto * t = app.add_subcommand("table", "Closed forms next to computed values for one row count");
    t->add_option("--m", table.m)->required();
    t->add_option("--n-from", table.n_from)->required();
    t->add_option("--n-to", table.n_to)->required();
    t->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json", "text"}));
    t->add_option("--threads", table.threads)->check(CLI::PositiveNumber);
    t->add_option("--kmax-unknown", table.unknown_k_max, "Search depth where no formula applies (default 3)");

    std::ostringstream buffer;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));

        int code = kExitOk;
        if (g->parsed())
            cmd_gamma(gamma, buffer);
        else if (b->parsed())
            cmd_bondage(bondage, buffer, err);
        else if (v->parsed())
            code = cmd_verify(verify, buffer);
        else if (r->parsed())
            cmd_render(render, buffer);
        else if (t->parsed())
            cmd_table(table, buffer);
        out << buffer.str();
        return code;
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    }
    catch (const CLI::CallForVersion &) {
        out << GRIDTDS_VERSION << '\n';
        return kExitOk;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (const TooLarge & e) {
        err << "too large: " << e.what() << '\n';
        return kExitTooLarge;
    }
    catch (const GridError & e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace gridtds::cli
