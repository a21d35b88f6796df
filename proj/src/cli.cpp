#include "frieze/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "frieze/cache.hpp"
#include "frieze/cartan.hpp"
#include "frieze/config.hpp"
#include "frieze/diagonals.hpp"
#include "frieze/folding.hpp"
#include "frieze/io.hpp"
#include "frieze/numbers.hpp"
#include "frieze/pattern.hpp"
#include "frieze/theorems.hpp"
#include "frieze/triangulations.hpp"

namespace frieze::cli {

namespace {

struct Globals {
    std::string config_file;
    int jobs = 0;
    std::string cache_dir;
    bool no_cache = false;
};

struct MatrixChoice {
    std::string family;
    int rank = 0;
    std::string matrix;
};

void add_matrix_options(CLI::App* cmd, MatrixChoice& choice)
{
    cmd->add_option("--family", choice.family, "Cartan family (A or C)");
    auto* rank = cmd->add_option("--rank", choice.rank, "rank n");
    cmd->add_option("--matrix", choice.matrix, "explicit GCM, rows ';'-separated, e.g. 2,-1;-1,2")
        ->excludes(rank);
}

CartanMatrix resolve_matrix(const MatrixChoice& choice)
{
    if (!choice.matrix.empty()) {
        if (!choice.family.empty()) {
            throw FriezeError(ErrorKind::InvalidInput, "--matrix and --family are mutually exclusive");
        }
        return CartanMatrix(parse_matrix(choice.matrix));
    }
    if (choice.family.empty() || choice.rank == 0) {
        throw CLI::ValidationError("either --family with --rank, or --matrix, is required");
    }
    return CartanMatrix::standard(parse_family(choice.family), choice.rank);
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string join(std::span<const Value> values)
{
    std::ostringstream s;
    for (std::size_t k = 0; k < values.size(); ++k) s << (k ? "," : "") << values[k];
    return s.str();
}

std::string type_name(const CartanMatrix& m)
{
    if (m.family() == Family::Other) return "GCM of rank " + std::to_string(m.rank());
    return to_string(m.family()) + std::to_string(m.rank());
}

enum class FriezeStyle { Text, Json, Render };

void write_frieze(std::ostream& out, const FriezePattern& f, FriezeStyle style, int render_columns)
{
    switch (style) {
    case FriezeStyle::Json: write_json(out, to_json(f)); return;
    case FriezeStyle::Render: out << render_ascii(f, {render_columns}); return;
    case FriezeStyle::Text:
        out << "# type " << type_name(f.cartan()) << ", period " << f.period() << ", max " << max_value(f) << '\n';
        for (const auto& c : f.columns()) out << to_string(c) << '\n';
        return;
    }
}

std::string read_all(std::istream& in)
{
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Json read_json_input(std::istream& in, const std::string& file)
{
    std::string text;
    if (file.empty()) {
        text = read_all(in);
    } else {
        std::ifstream f(file);
        if (!f) throw FriezeError(ErrorKind::InvalidInput, "cannot read " + file);
        text = read_all(f);
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FriezeError(ErrorKind::InvalidInput, std::string("malformed JSON input: ") + e.what());
    }
}

} // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coxeter frieze patterns of types A and C: build, check, enumerate, fold, verify", "frieze"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--config", g.config_file, "flat key = value configuration file");
    app.add_option("--jobs", g.jobs, "worker threads for enumerations")->check(CLI::PositiveNumber);
    app.add_option("--cache-dir", g.cache_dir, "enumeration cache directory (overrides FRIEZE_CACHE_DIR)");
    app.add_flag("--no-cache", g.no_cache, "disable the enumeration cache");

    // cartan
    MatrixChoice cartan_choice;
    bool cartan_json = false;
    auto* cartan_cmd = app.add_subcommand("cartan", "print a Cartan matrix and its properties");
    add_matrix_options(cartan_cmd, cartan_choice);
    cartan_cmd->add_flag("--json", cartan_json);

    // build
    MatrixChoice build_choice;
    std::string build_seed;
    int build_cap = 0;
    bool build_json = false;
    bool build_render = false;
    int render_columns = 0;
    auto* build_cmd = app.add_subcommand("build", "build the frieze generated by a seed diagonal");
    add_matrix_options(build_cmd, build_choice);
    build_cmd->add_option("--seed", build_seed, "comma-separated seed diagonal")->required();
    build_cmd->add_option("--cap", build_cap, "propagation step budget (default multiplier*(n+3))")
        ->check(CLI::PositiveNumber);
    auto* build_json_flag = build_cmd->add_flag("--json", build_json);
    build_cmd->add_flag("--render", build_render)->excludes(build_json_flag);
    build_cmd->add_option("--columns", render_columns, "entries per rendered row")->check(CLI::PositiveNumber);

    // check
    MatrixChoice check_choice;
    bool check_stdin = false;
    std::string check_file;
    bool check_json = false;
    auto* check_cmd = app.add_subcommand("check", "validate a frieze given as JSON");
    add_matrix_options(check_cmd, check_choice);
    auto* stdin_flag = check_cmd->add_flag("--stdin", check_stdin, "read the frieze JSON from stdin");
    check_cmd->add_option("--file", check_file, "read the frieze JSON from a file")->excludes(stdin_flag);
    check_cmd->add_flag("--json", check_json);

    // check-diagonal
    std::string tuple_text;
    bool tuple_json = false;
    auto* check_diag_cmd = app.add_subcommand("check-diagonal", "test the divisibility criterion on a tuple");
    check_diag_cmd->add_option("tuple", tuple_text, "comma-separated tuple")->required();
    check_diag_cmd->add_flag("--json", tuple_json);

    // enumerate
    std::string enum_family;
    int enum_rank = 0;
    bool enum_json = false;
    bool enum_count = false;
    auto* enum_cmd = app.add_subcommand("enumerate", "list every frieze seed of type A_n or C_n");
    enum_cmd->add_option("--family", enum_family)->required();
    enum_cmd->add_option("--rank", enum_rank)->required();
    auto* enum_json_flag = enum_cmd->add_flag("--json", enum_json);
    enum_cmd->add_flag("--count-only", enum_count)->excludes(enum_json_flag);

    // zigzag
    int zigzag_rank = 0;
    bool zigzag_json = false;
    auto* zigzag_cmd = app.add_subcommand("zigzag", "the extremal zig-zag diagonal of rank n");
    zigzag_cmd->add_option("--rank", zigzag_rank)->required();
    zigzag_cmd->add_flag("--json", zigzag_json);

    // zigzag-tri
    int zigzag_polygon = 0;
    bool zigzag_tri_json = false;
    auto* zigzag_tri_cmd = app.add_subcommand("zigzag-tri", "the zig-zag triangulation of an N-gon");
    zigzag_tri_cmd->add_option("--polygon", zigzag_polygon)->required();
    zigzag_tri_cmd->add_flag("--json", zigzag_tri_json);

    // triangulations
    int tri_polygon = 0;
    bool tri_json = false;
    bool tri_count = false;
    bool tri_symmetric = false;
    auto* tri_cmd = app.add_subcommand("triangulations", "list every triangulation of an N-gon");
    tri_cmd->add_option("--polygon", tri_polygon)->required();
    auto* tri_json_flag = tri_cmd->add_flag("--json", tri_json);
    tri_cmd->add_flag("--count-only", tri_count)->excludes(tri_json_flag);
    tri_cmd->add_flag("--symmetric-only", tri_symmetric, "keep centrally symmetric triangulations");

    // quiddity
    int quid_polygon = 0;
    std::string quid_diagonals;
    bool quid_json = false;
    bool quid_frieze = false;
    auto* quid_cmd = app.add_subcommand("quiddity", "triangle counts of a triangulation and its frieze");
    quid_cmd->add_option("--polygon", quid_polygon)->required();
    quid_cmd->add_option("--diagonals", quid_diagonals, "e.g. 1-3,3-8,4-8,4-7,5-7")->required();
    quid_cmd->add_flag("--json", quid_json);
    quid_cmd->add_flag("--frieze", quid_frieze, "print the associated type-A frieze instead");

    // fold / unfold
    int fold_rank = 0;
    std::string fold_seed;
    bool fold_json = false;
    bool fold_render = false;
    auto* fold_cmd = app.add_subcommand("fold", "fold the A_{2n-1} frieze of a seed to type C_n");
    fold_cmd->add_option("--rank", fold_rank, "n of C_n")->required();
    fold_cmd->add_option("--seed", fold_seed, "seed diagonal of rank 2n-1")->required();
    auto* fold_json_flag = fold_cmd->add_flag("--json", fold_json);
    fold_cmd->add_flag("--render", fold_render)->excludes(fold_json_flag);
    fold_cmd->add_option("--columns", render_columns)->check(CLI::PositiveNumber);

    int unfold_rank = 0;
    std::string unfold_seed;
    bool unfold_json = false;
    bool unfold_render = false;
    auto* unfold_cmd = app.add_subcommand("unfold", "unfold the C_n frieze of a seed to type A_{2n-1}");
    unfold_cmd->add_option("--rank", unfold_rank, "n of C_n")->required();
    unfold_cmd->add_option("--seed", unfold_seed, "seed diagonal of rank n")->required();
    auto* unfold_json_flag = unfold_cmd->add_flag("--json", unfold_json);
    unfold_cmd->add_flag("--render", unfold_render)->excludes(unfold_json_flag);
    unfold_cmd->add_option("--columns", render_columns)->check(CLI::PositiveNumber);

    // verify
    std::string verify_family;
    int verify_max_rank = 0;
    int verify_min_rank = 0;
    bool verify_json = false;
    bool verify_timing = false;
    auto* verify_cmd = app.add_subcommand("verify", "check maximum entries and counts by exhaustive enumeration");
    verify_cmd->add_option("--family", verify_family, "A or C (default: both)");
    verify_cmd->add_option("--max-rank", verify_max_rank)->check(CLI::PositiveNumber);
    verify_cmd->add_option("--min-rank", verify_min_rank)->check(CLI::PositiveNumber);
    verify_cmd->add_flag("--json", verify_json);
    verify_cmd->add_flag("--timing", verify_timing, "include elapsed time (output no longer reproducible)");

    // render
    std::string render_file;
    auto* render_cmd = app.add_subcommand("render", "draw a frieze JSON document as a staggered array");
    render_cmd->add_option("--file", render_file, "frieze JSON (default: stdin)");
    render_cmd->add_flag("--stdin", check_stdin, "read from stdin (the default)");
    render_cmd->add_option("--columns", render_columns)->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        Config config;
        if (!g.config_file.empty()) config = load_config(g.config_file, config);
        if (g.jobs > 0) config.jobs = g.jobs;
        if (!g.cache_dir.empty()) {
            config.cache_dir = g.cache_dir;
        } else if (const char* env = std::getenv("FRIEZE_CACHE_DIR"); env && *env) {
            config.cache_dir = env;
        } else if (!config.cache_dir) {
            config.cache_dir = default_cache_dir();
        }
        if (g.no_cache) config.cache_dir.reset();
        const EnumerationCache cache(config.cache_dir, &err);
        const bool json_default = config.format == OutputFormat::Json;

        const auto cap_for = [&](int rank, int explicit_cap) {
            return explicit_cap > 0 ? explicit_cap : default_period_cap(rank, config.cap_multiplier);
        };
        const auto style = [&](bool json, bool render) {
            if (render) return FriezeStyle::Render;
            return (json || json_default) ? FriezeStyle::Json : FriezeStyle::Text;
        };

        if (*cartan_cmd) {
            const auto m = resolve_matrix(cartan_choice);
            if (cartan_json || json_default) {
                write_json(out, to_json(m));
                return 0;
            }
            std::size_t width = 0;
            for (const auto& row : m.entries()) {
                for (Value v : row) width = std::max(width, std::to_string(v).size());
            }
            for (const auto& row : m.entries()) {
                for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << std::setw(int(width)) << row[k];
                out << '\n';
            }
            const auto d = symmetriser(m);
            out << "symmetriser: " << (d ? join(*d) : "none") << '\n';
            out << "finite type: " << (d ? (is_finite_type(m) ? "true" : "false") : "n/a") << '\n';
            out << "indecomposable: " << (is_indecomposable(m) ? "true" : "false") << '\n';
            return 0;
        }

        if (*build_cmd) {
            const auto m = resolve_matrix(build_choice);
            const Diagonal seed(parse_integer_list(build_seed));
            const auto f = build_frieze(m, seed, cap_for(m.rank(), build_cap));
            write_frieze(out, f, style(build_json, build_render), render_columns);
            return 0;
        }

        if (*check_cmd) {
            const auto f = frieze_from_json(read_json_input(in, check_file));
            const bool override_matrix = !check_choice.matrix.empty() || !check_choice.family.empty();
            const auto m = override_matrix ? resolve_matrix(check_choice) : f.cartan();
            const auto report = check_frieze(m, f);
            if (check_json || json_default) {
                Json j;
                j["valid"] = report.ok;
                if (report.first_violation) {
                    j["violation"] = {{"row", report.first_violation->row},
                                      {"column", report.first_violation->column},
                                      {"message", report.first_violation->message}};
                } else {
                    j["violation"] = nullptr;
                }
                write_json(out, j);
            } else {
                out << (report.ok ? "true" : "false") << '\n';
                if (report.first_violation) {
                    out << "violation: row " << report.first_violation->row << ", column "
                        << report.first_violation->column << ": " << report.first_violation->message << '\n';
                }
            }
            return 0;
        }

        if (*check_diag_cmd) {
            const Diagonal t(parse_integer_list(tuple_text));
            const bool valid = satisfies_flute(t);
            if (tuple_json || json_default) {
                Json j;
                j["diagonal"] = to_json(t);
                j["valid"] = valid;
                const auto w = valid ? reduction_witness(t) : std::nullopt;
                if (w) {
                    j["witness"] = *w;
                } else {
                    j["witness"] = nullptr;
                }
                write_json(out, j);
            } else {
                out << (valid ? "true" : "false") << '\n';
            }
            return 0;
        }

        if (*enum_cmd) {
            const Family family = parse_family(enum_family);
            const std::string key = EnumerationCache::make_key("enumerate", to_string(family), enum_rank);
            auto rows = cache.lookup(key);
            if (!rows) {
                rows.emplace();
                if (family == Family::A) {
                    for (const auto& t : enumerate_valid_tuples(enum_rank, {config.max_rank_a, config.jobs})) {
                        rows->emplace_back(t.entries().begin(), t.entries().end());
                    }
                } else {
                    for (const auto& c :
                         enumerate_cn_friezes(enum_rank, {config.max_rank_c, config.jobs, true})) {
                        const auto& first = c.columns().front();
                        rows->emplace_back(first.entries().begin(), first.entries().end());
                    }
                }
                cache.store(key, *rows);
            }
            if (enum_count) {
                out << rows->size() << '\n';
            } else if (enum_json || json_default) {
                write_json(out, Json(*rows));
            } else {
                for (const auto& r : *rows) out << join(r) << '\n';
            }
            return 0;
        }

        if (*zigzag_cmd) {
            const auto d = zigzag_diagonal(zigzag_rank);
            if (zigzag_json || json_default) {
                write_json(out, to_json(d));
            } else {
                out << to_string(d) << '\n';
            }
            return 0;
        }

        if (*zigzag_tri_cmd) {
            const auto t = zigzag_triangulation(zigzag_polygon);
            if (zigzag_tri_json || json_default) {
                write_json(out, to_json(t));
            } else {
                out << to_string(t) << '\n';
            }
            return 0;
        }

        if (*tri_cmd) {
            const std::string key = EnumerationCache::make_key(
                tri_symmetric ? "triangulations-symmetric" : "triangulations", "A", tri_polygon);
            auto rows = cache.lookup(key);
            std::vector<Triangulation> list;
            if (rows) {
                for (const auto& r : *rows) {
                    std::vector<PolygonDiagonal> d;
                    for (std::size_t k = 0; k + 1 < r.size(); k += 2) d.push_back({int(r[k]), int(r[k + 1])});
                    list.emplace_back(tri_polygon, std::move(d));
                }
            } else {
                for (auto& t : enumerate_triangulations(tri_polygon, config.max_polygon)) {
                    if (!tri_symmetric || is_centrally_symmetric(t)) list.push_back(std::move(t));
                }
                EnumerationCache::Rows fresh;
                for (const auto& t : list) {
                    std::vector<Value> flat;
                    for (const auto& d : t.diagonals()) {
                        flat.push_back(d.i);
                        flat.push_back(d.j);
                    }
                    fresh.push_back(std::move(flat));
                }
                cache.store(key, fresh);
            }
            if (tri_count) {
                out << list.size() << '\n';
            } else if (tri_json || json_default) {
                Json j = Json::array();
                for (const auto& t : list) j.push_back(to_json(t));
                write_json(out, j);
            } else {
                for (const auto& t : list) out << to_string(t) << '\n';
            }
            return 0;
        }

        if (*quid_cmd) {
            const Triangulation t(quid_polygon, parse_diagonal_list(quid_diagonals));
            if (quid_frieze) {
                write_frieze(out, frieze_from_triangulation(t), style(quid_json, false), render_columns);
                return 0;
            }
            const auto q = quiddity(t);
            if (quid_json || json_default) {
                Json j = to_json(t);
                j["quiddity"] = q;
                write_json(out, j);
            } else {
                out << join(q) << '\n';
            }
            return 0;
        }

        if (*fold_cmd) {
            const auto an = CartanMatrix::standard(Family::A, 2 * fold_rank - 1);
            const auto a = build_frieze(an, Diagonal(parse_integer_list(fold_seed)), cap_for(an.rank(), 0));
            write_frieze(out, fold(a), style(fold_json, fold_render), render_columns);
            return 0;
        }

        if (*unfold_cmd) {
            const auto cn = CartanMatrix::standard(Family::C, unfold_rank);
            const auto c = build_frieze(cn, Diagonal(parse_integer_list(unfold_seed)), cap_for(cn.rank(), 0));
            write_frieze(out, unfold(c), style(unfold_json, unfold_render), render_columns);
            return 0;
        }

        if (*verify_cmd) {
            std::vector<Family> families;
            if (verify_family.empty()) {
                families = {Family::A, Family::C};
            } else {
                families = {parse_family(verify_family)};
            }
            VerifyOptions options{config.max_rank_a, config.max_rank_c, config.jobs};
            std::vector<TheoremReport> reports;
            for (Family family : families) {
                const int lowest = std::max(verify_min_rank, family == Family::A ? 1 : 2);
                const int highest = verify_max_rank > 0 ? verify_max_rank : (family == Family::A ? 8 : 4);
                if (family == Family::A) options.max_rank_a = std::max(options.max_rank_a, highest);
                if (family == Family::C) options.max_rank_c = std::max(options.max_rank_c, highest);
                for (int n = lowest; n <= highest; ++n) reports.push_back(verify_theorem(family, n, options));
            }
            const bool all_pass =
                std::all_of(reports.begin(), reports.end(), [](const TheoremReport& r) { return r.pass; });
            if (verify_json || json_default) {
                Json j = Json::array();
                for (const auto& r : reports) j.push_back(to_json(r, verify_timing));
                write_json(out, j);
            } else {
                for (const auto& r : reports) {
                    out << to_string(r.family) << r.rank << ": count " << r.frieze_count << " (expected "
                        << (r.expected_count ? std::to_string(*r.expected_count) : std::string("unknown"))
                        << "), max " << r.max_entry << " (expected " << r.expected_max << ") "
                        << (r.pass ? "PASS" : "FAIL");
                    if (verify_timing) out << " [" << r.elapsed.count() << " ms]";
                    out << '\n';
                }
            }
            return all_pass ? 0 : 1;
        }

        if (*render_cmd) {
            const auto f = frieze_from_json(read_json_input(in, render_file));
            out << render_ascii(f, {render_columns});
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const FriezeError& e) {
        err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace frieze::cli
