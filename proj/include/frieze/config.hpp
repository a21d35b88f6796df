#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace frieze {

inline constexpr const char* kToolVersion = "1.0.0";

enum class OutputFormat { Text, Json };

struct Config {
    int max_rank_a = 12;
    int max_rank_c = 6;
    int max_polygon = 14;
    int cap_multiplier = 4;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::filesystem::path> cache_dir;
    int jobs = 1;
};

/// Flat `key = value` file; `#` starts a comment. Keys: max_rank_a,
/// max_rank_c, max_polygon, cap_multiplier, format (text|json), cache_dir,
/// jobs. Throws InvalidInput on unknown keys or broken invariants.
Config load_config(const std::filesystem::path& file, Config base = {});
Config parse_config(const std::string& text, Config base = {});

/// Default cache location: $FRIEZE_CACHE_DIR, else $XDG_CACHE_HOME/frieze,
/// else $HOME/.cache/frieze, else none.
std::optional<std::filesystem::path> default_cache_dir();

} // namespace frieze
