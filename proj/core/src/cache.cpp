#include "permpoly/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <random>

#include "json.hpp"
#include "permpoly/criteria.hpp"
#include "permpoly/orthomorphism.hpp"

namespace permpoly {

namespace {
constexpr int kSchemaVersion = 1;
}

ResultCache::ResultCache(std::filesystem::path dir, bool enabled)
    : dir_(std::move(dir)), enabled_(enabled) {}

ResultCache ResultCache::from_env(bool enabled) {
    const char* env = std::getenv("PERMPOLY_CACHE_DIR");
    return ResultCache(env ? std::filesystem::path(env)
                           : std::filesystem::path(".permpoly-cache"),
                       enabled);
}

std::filesystem::path ResultCache::path_for(const Field& field, std::uint32_t degree,
                                            const std::string& mode) const {
    std::string name = "class_p" + std::to_string(field.p()) + "r" +
                       std::to_string(field.r()) + "_d" + std::to_string(degree) + "_" +
                       mode + ".json";
    return dir_ / name;
}

std::string ResultCache::to_json(const ClassificationResult& result) {
    nlohmann::json j;
    j["schema"] = kSchemaVersion;
    j["field"] = {{"p", result.field->p()},
                  {"r", result.field->r()},
                  {"modulus", result.field->modulus()}};
    j["degree"] = result.degree;
    j["mode"] = result.mode;
    j["count"] = result.polynomials.size();
    j["search_space"] = result.search_space;
    j["wall_seconds"] = result.wall_seconds;
    j["polynomials"] = result.polynomials;
    return j.dump(2) + "\n";
}

void ResultCache::store(const ClassificationResult& result) const {
    if (!enabled_) return;
    std::filesystem::create_directories(dir_);
    std::ofstream out(path_for(*result.field, result.degree, result.mode));
    out << to_json(result);
}

void ResultCache::clear() const {
    if (!std::filesystem::exists(dir_)) return;
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind("class_", 0) == 0 && entry.path().extension() == ".json")
            std::filesystem::remove(entry.path());
    }
}

std::optional<ClassificationResult> ResultCache::load(const FieldPtr& field,
                                                      std::uint32_t degree,
                                                      const std::string& mode,
                                                      std::uint64_t seed) const {
    if (!enabled_) return std::nullopt;
    std::filesystem::path path = path_for(*field, degree, mode);
    std::ifstream in(path);
    if (!in) return std::nullopt;

    nlohmann::json j;
    try {
        in >> j;
        if (j.at("schema").get<int>() != kSchemaVersion) return std::nullopt;
        if (j.at("field").at("p").get<std::uint32_t>() != field->p() ||
            j.at("field").at("r").get<std::uint32_t>() != field->r() ||
            j.at("field").at("modulus").get<std::vector<Elem>>() != field->modulus())
            return std::nullopt;
        if (j.at("degree").get<std::uint32_t>() != degree ||
            j.at("mode").get<std::string>() != mode)
            return std::nullopt;

        ClassificationResult res;
        res.field = field;
        res.degree = degree;
        res.mode = mode;
        res.search_space = j.at("search_space").get<std::uint64_t>();
        res.wall_seconds = j.value("wall_seconds", 0.0);
        res.polynomials = j.at("polynomials").get<std::vector<std::vector<Elem>>>();

        // Revalidate ten sampled members before trusting the file.
        if (!res.polynomials.empty()) {
            std::mt19937_64 rng(seed);
            std::uniform_int_distribution<std::size_t> pick(0, res.polynomials.size() - 1);
            const bool ortho = mode.rfind("orthomorphism", 0) == 0;
            for (int i = 0; i < 10; ++i) {
                const auto& coeffs = res.polynomials[pick(rng)];
                Poly f(field, coeffs);
                bool ok = ortho ? orthomorphism_report(f).is_orthomorphism
                                : is_pp_bruteforce(f).is_pp;
                if (!ok) return std::nullopt;
            }
        }
        return res;
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;
    }
}

}  // namespace permpoly
