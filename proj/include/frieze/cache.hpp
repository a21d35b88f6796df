#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "frieze/checked.hpp"

namespace frieze {

/// Enumeration results stored as rows of integers, one file per key, with
/// a content hash. An unset directory disables the cache.
class EnumerationCache {
public:
    using Rows = std::vector<std::vector<Value>>;

    explicit EnumerationCache(std::optional<std::filesystem::path> directory, std::ostream* warnings = nullptr)
        : directory_(std::move(directory)), warnings_(warnings) {}

    /// Key from (subcommand, family, rank) plus the tool version.
    static std::string make_key(const std::string& subcommand, const std::string& family, int rank);

    /// Stored rows when the entry exists and its hash verifies; a corrupt
    /// entry is reported on the warning stream and treated as a miss.
    [[nodiscard]] std::optional<Rows> lookup(const std::string& key) const;
    /// Best effort; failures are reported as warnings.
    void store(const std::string& key, const Rows& rows) const;

    [[nodiscard]] bool enabled() const noexcept { return directory_.has_value(); }

private:
    [[nodiscard]] std::filesystem::path file_for(const std::string& key) const;
    void warn(const std::string& message) const;

    std::optional<std::filesystem::path> directory_;
    std::ostream* warnings_;
};

/// 64-bit FNV-1a, hex encoded.
std::string content_hash(const std::string& bytes);

} // namespace frieze
