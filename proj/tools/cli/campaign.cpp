#include "cli/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

namespace gridtds::cli {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string edge_list(const std::vector<Edge> & edges, char sep)
{
    std::string out;
    for (const auto & e : edges) {
        if (!out.empty())
            out += sep;
        out += gridtds::to_string(e);
    }
    return out;
}

nlohmann::ordered_json formula_json(const FormulaValue & f)
{
    nlohmann::ordered_json j;
    j["kind"] = std::string(to_string(f.kind));
    if (f.infinite)
        j["value"] = "infinity";
    else if (f.value)
        j["value"] = *f.value;
    else
        j["value"] = nullptr;
    return j;
}

} // namespace

std::string_view to_string(Agreement a)
{
    switch (a) {
    case Agreement::Agree: return "agree";
    case Agreement::BoundNotTight: return "bound-not-tight";
    case Agreement::Disagree: return "disagree";
    case Agreement::Unchecked: return "unchecked";
    }
    return "unchecked";
}

std::string_view to_string(BondageStatus s)
{
    switch (s) {
    case BondageStatus::Exact: return "exact";
    case BondageStatus::Infinity: return "infinity";
    case BondageStatus::LowerBoundOnly: return "lower_bound";
    }
    return "lower_bound";
}

std::string formula_text(const FormulaValue & f)
{
    if (f.kind == FormulaKind::Unknown)
        return "?";
    std::string v = f.infinite ? "inf" : std::to_string(f.value.value_or(0));
    return f.kind == FormulaKind::UpperBound ? "<=" + v : "=" + v;
}

std::string bondage_text(const BondageResult & r)
{
    switch (r.status) {
    case BondageStatus::Exact: return std::to_string(r.value);
    case BondageStatus::Infinity: return "inf";
    case BondageStatus::LowerBoundOnly: return ">" + std::to_string(r.value);
    }
    return "";
}

CampaignRow compute_row(int n, int m, const CampaignOptions & options)
{
    CampaignRow row;
    row.n = n;
    row.m = m;
    row.gamma_formula = gamma_t_formula(n, m);
    row.bondage_formula = bondage_formula(n, m);

    const auto grid = build_grid({n, m});
    auto t0 = std::chrono::steady_clock::now();
    row.gamma_solver = gamma_t_dp_value(grid);
    row.gamma_seconds = seconds_since(t0);
    if (row.gamma_formula.kind == FormulaKind::Exact)
        row.gamma_mismatch = row.gamma_formula.value != row.gamma_solver;

    if (!options.with_bondage)
        return row;

    const auto & f = row.bondage_formula;
    const int k_max = f.kind == FormulaKind::Unknown || f.infinite ? options.unknown_k_max : *f.value;
    t0 = std::chrono::steady_clock::now();
    row.bondage_solver = total_bondage(grid, std::max(k_max, 1), true);
    row.bondage_seconds = seconds_since(t0);

    const auto & r = *row.bondage_solver;
    switch (f.kind) {
    case FormulaKind::Exact:
        row.bondage_agreement = r.status == BondageStatus::Exact && r.value == *f.value ? Agreement::Agree : Agreement::Disagree;
        break;
    case FormulaKind::UpperBound:
        if (r.status != BondageStatus::Exact)
            row.bondage_agreement = Agreement::Disagree;
        else
            row.bondage_agreement = r.value == *f.value ? Agreement::Agree : Agreement::BoundNotTight;
        break;
    case FormulaKind::Unknown:
        row.bondage_agreement = Agreement::Unchecked;
        break;
    }
    return row;
}

std::vector<CampaignRow> run_campaign(const std::vector<std::pair<int, int>> & cells, const CampaignOptions & options)
{
    std::vector<CampaignRow> rows(cells.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t idx = next++; idx < cells.size(); idx = next++)
            rows[idx] = compute_row(cells[idx].first, cells[idx].second, options);
    };
    const unsigned threads = std::max(1u, options.threads);
    if (threads == 1) {
        work();
    }
    else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work);
    }
    return rows;
}

nlohmann::ordered_json to_json(const CampaignRow & row)
{
    nlohmann::ordered_json j;
    j["n"] = row.n;
    j["m"] = row.m;
    j["gamma_formula"] = formula_json(row.gamma_formula);
    if (row.gamma_solver)
        j["gamma_solver"] = *row.gamma_solver;
    else
        j["gamma_solver"] = "undefined";
    j["bondage_formula"] = formula_json(row.bondage_formula);
    if (row.bondage_solver) {
        const auto & r = *row.bondage_solver;
        nlohmann::ordered_json b;
        b["status"] = std::string(to_string(r.status));
        if (r.status == BondageStatus::Infinity)
            b["value"] = "infinity";
        else
            b["value"] = r.value;
        j["bondage_solver"] = b;
        auto w = nlohmann::ordered_json::array();
        for (const auto & e : r.witness)
            w.push_back(gridtds::to_string(e));
        j["witness"] = w;
    }
    else {
        j["bondage_solver"] = nullptr;
        j["witness"] = nlohmann::ordered_json::array();
    }
    j["agreement"] = std::string(to_string(row.bondage_agreement));
    j["agreement_flag"] = row.agreement_flag();
    return j;
}

std::string csv_header()
{
    return "n,m,gamma_formula,gamma_solver,bondage_kind,bondage_formula,bondage_status,bondage_solver,witness,agreement,agreement_flag";
}

std::string to_csv(const CampaignRow & row)
{
    std::string out = std::to_string(row.n) + "," + std::to_string(row.m) + ",";
    out += row.gamma_formula.value ? std::to_string(*row.gamma_formula.value) : "";
    out += ",";
    out += row.gamma_solver ? std::to_string(*row.gamma_solver) : "undefined";
    out += ",";
    out += std::string(to_string(row.bondage_formula.kind)) + ",";
    out += row.bondage_formula.value ? std::to_string(*row.bondage_formula.value) : "";
    out += ",";
    if (row.bondage_solver) {
        out += std::string(to_string(row.bondage_solver->status)) + ",";
        out += row.bondage_solver->status == BondageStatus::Infinity ? "infinity" : std::to_string(row.bondage_solver->value);
        out += "," + edge_list(row.bondage_solver->witness, ' ');
    }
    else {
        out += ",,";
    }
    out += "," + std::string(to_string(row.bondage_agreement));
    out += row.agreement_flag() ? ",true" : ",false";
    return out;
}

} // namespace gridtds::cli
