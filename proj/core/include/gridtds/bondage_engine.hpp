#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gridtds/exact_solver.hpp"
#include "gridtds/grid_model.hpp"

namespace gridtds {

enum class BondageStatus { Exact, Infinity, LowerBoundOnly };

struct SearchStats {
    std::uint64_t subsets_examined = 0;
    std::uint64_t dp_calls = 0;
    /// Candidates discarded because a known minimum set survived the removal.
    std::uint64_t prefiltered = 0;
    /// examined_per_k[k-1] = subsets examined at size k.
    std::vector<std::uint64_t> examined_per_k;
    double elapsed_seconds = 0.0;
};

/// b_t(G). For Exact, `value` is b_t and `witness` the lexicographically least
/// minimum edge set. For LowerBoundOnly, `value` is the largest k exhausted.
struct BondageResult {
    BondageStatus status = BondageStatus::LowerBoundOnly;
    int value = 0;
    std::vector<Edge> witness;
    SearchStats stats;
};

struct BondageOptions {
    int k_max = 3;
    bool use_symmetry = true;
    /// Worker threads for candidate evaluation; results do not depend on it.
    unsigned threads = 1;
    SolverLimits limits{};
};

/// True iff removing `edges` leaves no isolated vertex and strictly raises gamma_t.
/// Throws EdgeNotPresent for absent edges.
bool verify_witness(const GridGraph & g, std::span<const Edge> edges, const SolverLimits & limits = {});

BondageResult total_bondage(const GridGraph & g, const BondageOptions & options);
BondageResult total_bondage(const GridGraph & g, int k_max, bool use_symmetry);

/// k-edge subsets of the clean grid whose removal keeps every degree >= 1,
/// in lexicographic order of canonical edge indices. With symmetry on, only
/// the lexicographically least member of each orbit is yielded.
class CanonicalSubsetStream {
public:
    CanonicalSubsetStream(GridSpec spec, int k, bool use_symmetry);

    /// Writes the next subset (sorted edge indices) and returns true, or
    /// returns false when exhausted.
    bool next(std::vector<std::size_t> & indices);
    bool next_edges(std::vector<Edge> & edges);

    const GridSpec & spec() const { return spec_; }

private:
    bool advance();
    bool keeps_degrees() const;
    bool is_orbit_min() const;

    GridSpec spec_;
    std::size_t k_;
    std::size_t edge_count_;
    std::vector<std::size_t> combo_;
    bool started_ = false;
    bool done_ = false;
    std::vector<std::vector<std::size_t>> permutations_;
    std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
    std::vector<int> base_degree_;
    mutable std::vector<int> degree_scratch_;
    mutable std::vector<std::size_t> image_scratch_;
};

/// Materialised stream, convenient for tests and orbit counting.
std::vector<std::vector<Edge>> canonical_subsets(GridSpec spec, int k, bool use_symmetry = true);

} // namespace gridtds
