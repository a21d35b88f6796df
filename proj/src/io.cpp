#include "frieze/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace frieze {

namespace {

[[noreturn]] void bad_input(const std::string& what) { throw FriezeError(ErrorKind::InvalidInput, what); }

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

Value parse_value(std::string_view token)
{
    token = trim(token);
    Value v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        bad_input("not an integer: '" + std::string(token) + "'");
    }
    return v;
}

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

Value json_integer(const Json& j, const char* what)
{
    if (!j.is_number_integer()) bad_input(std::string(what) + " must be an integer");
    return j.get<Value>();
}

} // namespace

Json to_json(const CartanMatrix& m)
{
    Json j;
    j["rank"] = m.rank();
    j["entries"] = m.entries();
    if (m.family() == Family::Other) {
        j["label"] = nullptr;
    } else {
        j["label"] = to_string(m.family());
    }
    return j;
}

CartanMatrix cartan_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("entries")) bad_input("Cartan JSON needs an 'entries' field");
    IntMatrix entries;
    for (const auto& row : j.at("entries")) {
        if (!row.is_array()) bad_input("Cartan 'entries' must be an array of arrays");
        std::vector<Value> r;
        for (const auto& x : row) r.push_back(json_integer(x, "matrix entry"));
        entries.push_back(std::move(r));
    }
    if (j.contains("rank") && json_integer(j.at("rank"), "rank") != static_cast<Value>(entries.size())) {
        bad_input("Cartan 'rank' disagrees with 'entries'");
    }
    Family family = Family::Other;
    if (j.contains("label") && !j.at("label").is_null()) family = parse_family(j.at("label").get<std::string>());
    CartanMatrix m(std::move(entries), family);
    if (family != Family::Other && !(CartanMatrix::standard(family, m.rank()) == m)) {
        bad_input("entries do not match the standard matrix of the label");
    }
    return m;
}

Json to_json(const Diagonal& d) { return Json(std::vector<Value>(d.entries().begin(), d.entries().end())); }

Json to_json(const FriezePattern& f)
{
    Json j;
    j["rank"] = f.rank();
    j["period"] = f.period();
    Json columns = Json::array();
    for (const auto& c : f.columns()) columns.push_back(to_json(c));
    j["columns"] = std::move(columns);
    j["cartan"] = to_json(f.cartan());
    return j;
}

FriezePattern frieze_from_json(const Json& j)
{
    if (!j.is_object()) bad_input("frieze JSON must be an object");
    for (const char* key : {"rank", "period", "columns", "cartan"}) {
        if (!j.contains(key)) bad_input(std::string("frieze JSON is missing '") + key + "'");
    }
    auto cartan = cartan_from_json(j.at("cartan"));
    std::vector<Diagonal> columns;
    for (const auto& c : j.at("columns")) {
        if (!c.is_array()) bad_input("frieze 'columns' must be an array of arrays");
        std::vector<Value> entries;
        for (const auto& x : c) entries.push_back(json_integer(x, "frieze entry"));
        columns.emplace_back(std::move(entries));
    }
    const Value rank = json_integer(j.at("rank"), "rank");
    const Value period = json_integer(j.at("period"), "period");
    if (period != static_cast<Value>(columns.size())) bad_input("frieze 'period' disagrees with 'columns'");
    if (columns.empty() || rank != columns.front().rank()) bad_input("frieze 'rank' disagrees with 'columns'");
    return FriezePattern(std::move(cartan), std::move(columns));
}

Json to_json(const Triangulation& t)
{
    Json j;
    j["polygon"] = t.polygon_size();
    Json diagonals = Json::array();
    for (const auto& d : t.diagonals()) diagonals.push_back({d.i, d.j});
    j["diagonals"] = std::move(diagonals);
    return j;
}

Json to_json(const TheoremReport& r, bool with_timing)
{
    Json j;
    j["family"] = to_string(r.family);
    j["rank"] = r.rank;
    j["frieze_count"] = r.frieze_count;
    j["max_entry"] = r.max_entry;
    if (r.expected_count) {
        j["expected_count"] = *r.expected_count;
    } else {
        j["expected_count"] = nullptr;
    }
    j["expected_max"] = r.expected_max;
    j["pass"] = r.pass;
    if (with_timing) j["elapsed_ms"] = r.elapsed.count();
    return j;
}

std::vector<Value> parse_integer_list(std::string_view text)
{
    if (trim(text).empty()) bad_input("empty integer list");
    std::vector<Value> values;
    for (auto token : split(text, ',')) values.push_back(parse_value(token));
    return values;
}

std::vector<PolygonDiagonal> parse_diagonal_list(std::string_view text)
{
    if (trim(text).empty()) bad_input("empty diagonal list");
    std::vector<PolygonDiagonal> diagonals;
    for (auto token : split(text, ',')) {
        const auto ends = split(token, '-');
        if (ends.size() != 2) bad_input("diagonal must look like i-j, got '" + std::string(token) + "'");
        diagonals.push_back({static_cast<int>(parse_value(ends[0])), static_cast<int>(parse_value(ends[1]))});
    }
    return diagonals;
}

IntMatrix parse_matrix(std::string_view text)
{
    IntMatrix m;
    for (auto row : split(text, ';')) m.push_back(parse_integer_list(row));
    return m;
}

std::string render_ascii(const FriezePattern& f, const RenderOptions& options)
{
    const int n = f.rank();
    const int count = options.columns > 0 ? options.columns : f.period() + 2;
    const bool bottom_border = f.cartan().family() != Family::Other;
    const int width = static_cast<int>(std::to_string(max_value(f)).size()) + 1;

    const auto entry_row = [&](int row) {
        std::string line(static_cast<std::size_t>(row * width), ' ');
        for (int m = 0; m < count; ++m) {
            const Value v = (row == 0 || row == n + 1) ? 1 : f(row, m);
            const std::string text = std::to_string(v);
            if (m > 0) line.append(static_cast<std::size_t>(width), ' ');
            line.append(static_cast<std::size_t>(width) - text.size(), ' ');
            line += text;
        }
        return line;
    };

    std::ostringstream out;
    out << entry_row(0) << '\n';
    for (int i = 1; i <= n; ++i) out << entry_row(i) << '\n';
    if (bottom_border) out << entry_row(n + 1) << '\n';
    return out.str();
}

} // namespace frieze
