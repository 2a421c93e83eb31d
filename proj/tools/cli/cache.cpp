#include "cli/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include <json.hpp>

namespace gridtds::cli {

CacheKey CacheKey::make(const GridGraph & g, std::string operation)
{
    CacheKey key;
    key.n = g.spec().n;
    key.m = g.spec().m;
    for (const auto & e : g.removed_edges())
        key.removed.push_back(gridtds::to_string(e));
    for (auto v : g.deleted_vertices())
        key.deleted.push_back(gridtds::to_string(v));
    std::sort(key.removed.begin(), key.removed.end());
    std::sort(key.deleted.begin(), key.deleted.end());
    key.operation = std::move(operation);
    return key;
}

std::string CacheKey::to_string() const
{
    auto join = [](const std::vector<std::string> & parts) {
        std::string out;
        for (const auto & p : parts) {
            if (!out.empty())
                out += ' ';
            out += p;
        }
        return out;
    };
    return std::to_string(n) + "x" + std::to_string(m) + "|" + join(removed) + "|" + join(deleted) + "|" + operation;
}

ResultCache::ResultCache(std::filesystem::path directory, std::string version) :
    file_(std::move(directory) / "gridtds-cache.jsonl"),
    version_(std::move(version))
{
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
        auto record = nlohmann::ordered_json::parse(line, nullptr, false);
        if (record.is_discarded() || !record.is_object())
            continue;
        if (record.value("version", "") != version_ || !record.contains("key") || !record.contains("value"))
            continue;
        entries_[record["key"].get<std::string>()] = record["value"].dump();
    }
}

std::optional<std::string> ResultCache::lookup(const CacheKey & key) const
{
    auto it = entries_.find(key.to_string());
    if (it == entries_.end())
        return std::nullopt;
    return it->second;
}

void ResultCache::store(const CacheKey & key, const std::string & serialized_value)
{
    auto k = key.to_string();
    entries_[k] = serialized_value;
    std::filesystem::create_directories(file_.parent_path());
    nlohmann::ordered_json record;
    record["key"] = k;
    record["version"] = version_;
    record["value"] = nlohmann::ordered_json::parse(serialized_value);
    std::ofstream out(file_, std::ios::app);
    out << record.dump() << '\n';
}

std::filesystem::path ResultCache::default_directory()
{
    if (const char * env = std::getenv("GRIDTDS_CACHE_DIR"); env != nullptr && *env != '\0')
        return env;
    if (const char * home = std::getenv("HOME"); home != nullptr && *home != '\0')
        return std::filesystem::path(home) / ".cache" / "gridtds";
    return std::filesystem::temp_directory_path() / "gridtds-cache";
}

} // namespace gridtds::cli
