#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <gridtds/grid_model.hpp>

namespace gridtds::cli {

enum class CheckStatus { Pass, Fail, Info };

std::string_view to_string(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20110523;

struct VerifyOptions {
    int max_n = 10;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
};

/// Suites: formulas, constructions, witnesses, lemmas, conjecture.
std::vector<std::string_view> suite_names();

/// Throws InvalidInput for an unknown suite name.
std::vector<Check> run_suite(std::string_view suite, const VerifyOptions & options);

/// A random grid with n*m <= max_cells, up to `max_removed` removed edges
/// and up to `max_deleted` deleted vertices.
GridGraph random_instance(std::mt19937_64 & rng, int max_cells, int max_removed, int max_deleted);

} // namespace gridtds::cli
