#include "frieze/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "frieze/error.hpp"

namespace frieze {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int positive_int(const std::string& key, const std::string& value)
{
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used == value.size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw FriezeError(ErrorKind::InvalidInput, "config key '" + key + "' needs a positive integer, got '" + value + "'");
}

} // namespace

Config parse_config(const std::string& text, Config base)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw FriezeError(ErrorKind::InvalidInput, "config line " + std::to_string(line_no) + " is not key = value");
        }
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "max_rank_a") {
            base.max_rank_a = positive_int(key, value);
        } else if (key == "max_rank_c") {
            base.max_rank_c = positive_int(key, value);
        } else if (key == "max_polygon") {
            base.max_polygon = positive_int(key, value);
        } else if (key == "cap_multiplier") {
            base.cap_multiplier = positive_int(key, value);
        } else if (key == "jobs") {
            base.jobs = positive_int(key, value);
        } else if (key == "format") {
            if (value == "text") {
                base.format = OutputFormat::Text;
            } else if (value == "json") {
                base.format = OutputFormat::Json;
            } else {
                throw FriezeError(ErrorKind::InvalidInput, "config format must be text or json");
            }
        } else if (key == "cache_dir") {
            base.cache_dir = value.empty() ? std::nullopt : std::optional<std::filesystem::path>(value);
        } else {
            throw FriezeError(ErrorKind::InvalidInput, "unknown config key '" + key + "'");
        }
    }
    return base;
}

Config load_config(const std::filesystem::path& file, Config base)
{
    std::ifstream in(file);
    if (!in) throw FriezeError(ErrorKind::InvalidInput, "cannot read config file " + file.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str(), std::move(base));
}

std::optional<std::filesystem::path> default_cache_dir()
{
    if (const char* dir = std::getenv("FRIEZE_CACHE_DIR"); dir && *dir) return std::filesystem::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "frieze";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "frieze";
    return std::nullopt;
}

} // namespace frieze
