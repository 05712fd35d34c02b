/**
 * @file wk_cache.hpp
 * @brief Persistent JSON cache of psi-class intersection numbers.
 *
 * File layout:
 * @code
 * {"schema_version": 1, "library_version": "...", "sha256": "<hex>",
 *  "entries": [{"g": 2, "exponents": [4], "value": "1/1152"}, ...]}
 * @endcode
 * The checksum is the SHA-256 of the compact dump of the "entries" array. A
 * file whose checksum does not match is rejected as corrupted.
 */
#pragma once

#include "version.hpp"
#include "wk.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace hilbgw {

/** @brief Raised when a cache file fails its checksum or schema check. */
class CacheCorrupted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/** @brief Lowercase hex SHA-256 of a byte string. */
inline std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256: digest failed");
    std::string out;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        out += buf;
    }
    return out;
}

/** @brief "p/q" with an explicit denominator, also for integers. */
inline std::string fraction_string(const Rational& r) {
    return r.num().get_str() + "/" + r.den().get_str();
}

/** @brief Directory for cache files: $HILBGW_CACHE_DIR, else ".hilbgw-cache" in the working directory. */
inline std::filesystem::path cache_directory() {
    if (const char* env = std::getenv("HILBGW_CACHE_DIR"); env != nullptr && *env != '\0') return env;
    return ".hilbgw-cache";
}

inline std::filesystem::path wk_cache_path() { return cache_directory() / "wk_cache.json"; }

/** @brief JSON document for the admissible entries of a table. */
inline nlohmann::json psi_table_to_json(const PsiIntegralTable& table) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [key, value] : table.entries()) {
        if (!PsiIntegralTable::admissible(key.first, key.second)) continue;
        entries.push_back({{"g", key.first}, {"exponents", key.second}, {"value", fraction_string(value)}});
    }
    return {{"schema_version", kSchemaVersion},
            {"library_version", kLibraryVersion},
            {"sha256", sha256_hex(entries.dump())},
            {"entries", entries}};
}

/** @brief Load entries into the table after verifying schema and checksum; returns the number of entries. */
inline std::size_t psi_table_from_json(const nlohmann::json& doc, PsiIntegralTable& table) {
    if (!doc.is_object() || !doc.contains("entries") || !doc.contains("sha256") || !doc.contains("schema_version"))
        throw CacheCorrupted("wk cache: missing fields");
    if (doc.at("schema_version").get<int>() != kSchemaVersion) throw CacheCorrupted("wk cache: schema version mismatch");
    const auto& entries = doc.at("entries");
    if (sha256_hex(entries.dump()) != doc.at("sha256").get<std::string>()) throw CacheCorrupted("wk cache: checksum mismatch");
    std::size_t count = 0;
    for (const auto& e : entries) {
        int g = e.at("g").get<int>();
        auto a = e.at("exponents").get<std::vector<int>>();
        if (!PsiIntegralTable::admissible(g, a)) throw CacheCorrupted("wk cache: inadmissible entry");
        table.insert(g, a, Rational::parse(e.at("value").get<std::string>()));
        ++count;
    }
    return count;
}

inline void save_psi_cache(const PsiIntegralTable& table, const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("wk cache: cannot write " + path.string());
    out << psi_table_to_json(table).dump(1) << "\n";
}

/** @brief Load a cache file if it exists; returns the number of entries loaded (0 if absent). */
inline std::size_t load_psi_cache(PsiIntegralTable& table, const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) return 0;
    std::ifstream in(path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw CacheCorrupted(std::string("wk cache: ") + e.what());
    }
    return psi_table_from_json(doc, table);
}

}  // namespace hilbgw
