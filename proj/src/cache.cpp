#include "frieze/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "frieze/config.hpp"

namespace frieze {

std::string content_hash(const std::string& bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string EnumerationCache::make_key(const std::string& subcommand, const std::string& family, int rank)
{
    return subcommand + "-" + family + "-" + std::to_string(rank) + "-v" + kToolVersion;
}

std::filesystem::path EnumerationCache::file_for(const std::string& key) const { return *directory_ / (key + ".json"); }

void EnumerationCache::warn(const std::string& message) const
{
    if (warnings_) *warnings_ << "warning: " << message << '\n';
}

std::optional<EnumerationCache::Rows> EnumerationCache::lookup(const std::string& key) const
{
    if (!directory_) return std::nullopt;
    const auto path = file_for(key);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;

    std::ifstream in(path, std::ios::binary);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        const auto doc = nlohmann::json::parse(buffer.str());
        const auto& payload = doc.at("payload");
        if (doc.at("key").get<std::string>() != key || doc.at("hash").get<std::string>() != content_hash(payload.dump())) {
            warn("cache entry " + path.string() + " failed verification; recomputing");
            return std::nullopt;
        }
        return payload.get<Rows>();
    } catch (const nlohmann::json::exception&) {
        warn("cache entry " + path.string() + " is corrupt; recomputing");
        return std::nullopt;
    }
}

void EnumerationCache::store(const std::string& key, const Rows& rows) const
{
    if (!directory_) return;
    std::error_code ec;
    std::filesystem::create_directories(*directory_, ec);
    const nlohmann::json payload = rows;
    nlohmann::json doc;
    doc["key"] = key;
    doc["hash"] = content_hash(payload.dump());
    doc["payload"] = payload;

    const auto path = file_for(key);
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << doc.dump();
        if (!out) {
            warn("could not write cache entry " + tmp.string());
            return;
        }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) warn("could not install cache entry " + path.string() + ": " + ec.message());
}

} // namespace frieze
