#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "permpoly/classify.hpp"

namespace permpoly {

// JSON file cache of classification results, one file per (field, degree,
// mode) named class_p{p}r{r}_d{n}_{mode}.json.  Hits are revalidated by
// re-testing ten members sampled with the given seed before a result is
// returned.
class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir, bool enabled = true);

    // Directory from PERMPOLY_CACHE_DIR, default ".permpoly-cache".
    static ResultCache from_env(bool enabled = true);

    const std::filesystem::path& dir() const { return dir_; }
    bool enabled() const { return enabled_; }

    std::optional<ClassificationResult> load(const FieldPtr& field, std::uint32_t degree,
                                             const std::string& mode,
                                             std::uint64_t seed = 0) const;
    void store(const ClassificationResult& result) const;
    void clear() const;

    std::filesystem::path path_for(const Field& field, std::uint32_t degree,
                                   const std::string& mode) const;

    // Serialization used for the cache files and the --out option.
    static std::string to_json(const ClassificationResult& result);

private:
    std::filesystem::path dir_;
    bool enabled_;
};

}  // namespace permpoly
