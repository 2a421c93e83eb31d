#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <gridtds/bondage_engine.hpp>
#include <gridtds/closed_forms.hpp>

namespace gridtds::cli {

enum class Agreement { Agree, BoundNotTight, Disagree, Unchecked };

std::string_view to_string(Agreement a);
std::string_view to_string(BondageStatus s);

/// One (n, m) cell of a verification campaign: closed forms next to solver values.
struct CampaignRow {
    int n = 0;
    int m = 0;
    FormulaValue gamma_formula;
    std::optional<int> gamma_solver;
    FormulaValue bondage_formula;
    std::optional<BondageResult> bondage_solver;
    /// Set when the gamma_t formula is Exact and the DP disagrees.
    bool gamma_mismatch = false;
    Agreement bondage_agreement = Agreement::Unchecked;
    double gamma_seconds = 0.0;
    double bondage_seconds = 0.0;

    /// False only when an Exact formula disagrees with a solver value, or an
    /// UpperBound is contradicted by an exhausted search.
    bool agreement_flag() const { return !gamma_mismatch && bondage_agreement != Agreement::Disagree; }
};

struct CampaignOptions {
    bool with_bondage = true;
    /// Search depth used when no formula bounds b_t.
    int unknown_k_max = 3;
    unsigned threads = 1;
};

CampaignRow compute_row(int n, int m, const CampaignOptions & options);

/// Rows in the order of `cells`, computed on a worker pool.
std::vector<CampaignRow> run_campaign(const std::vector<std::pair<int, int>> & cells, const CampaignOptions & options);

nlohmann::ordered_json to_json(const CampaignRow & row);
std::string csv_header();
std::string to_csv(const CampaignRow & row);
std::string formula_text(const FormulaValue & f);
std::string bondage_text(const BondageResult & r);

} // namespace gridtds::cli
