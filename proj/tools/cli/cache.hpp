#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gridtds/grid_model.hpp>

namespace gridtds::cli {

/// Identity of a cached computation. Edge and vertex names are kept sorted
/// so equivalent requests share a key.
struct CacheKey {
    int n = 0;
    int m = 0;
    std::vector<std::string> removed;
    std::vector<std::string> deleted;
    std::string operation;

    static CacheKey make(const GridGraph & g, std::string operation);
    std::string to_string() const;
};

/// Append-only line-delimited cache of serialized results. Each line holds
/// {"key", "version", "value"}; lines written by another version are ignored,
/// and a later line for the same key wins.
class ResultCache {
public:
    ResultCache(std::filesystem::path directory, std::string version);

    std::optional<std::string> lookup(const CacheKey & key) const;
    void store(const CacheKey & key, const std::string & serialized_value);

    const std::filesystem::path & file() const { return file_; }

    /// --cache-dir if given, else $GRIDTDS_CACHE_DIR, else ~/.cache/gridtds.
    static std::filesystem::path default_directory();

private:
    std::filesystem::path file_;
    std::string version_;
    std::map<std::string, std::string> entries_;
};

} // namespace gridtds::cli
