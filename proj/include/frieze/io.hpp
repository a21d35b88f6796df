#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "frieze/cartan.hpp"
#include "frieze/pattern.hpp"
#include "frieze/theorems.hpp"
#include "frieze/triangulations.hpp"

namespace frieze {

using Json = nlohmann::ordered_json;

// {"rank": n, "entries": [[...]], "label": "A" | "C" | null}
Json to_json(const CartanMatrix& m);
CartanMatrix cartan_from_json(const Json& j);

// {"rank": n, "period": p, "columns": [[...]], "cartan": {...}}
Json to_json(const FriezePattern& f);
FriezePattern frieze_from_json(const Json& j);

// {"polygon": N, "diagonals": [[i, j], ...]}
Json to_json(const Triangulation& t);

Json to_json(const Diagonal& d);
Json to_json(const TheoremReport& r, bool with_timing = false);

/// "2,5,13" -> {2, 5, 13}. Throws InvalidInput.
std::vector<Value> parse_integer_list(std::string_view text);
/// "1-3,3-8" -> {(1,3), (3,8)} (unvalidated against a polygon).
std::vector<PolygonDiagonal> parse_diagonal_list(std::string_view text);
/// "2,-1;-1,2" -> [[2,-1],[-1,2]].
IntMatrix parse_matrix(std::string_view text);

struct RenderOptions {
    int columns = 0; // entries per row; 0 means period + 2
};

/// Staggered array: entry f(i, m) sits in cell 2m + i (row i indented by i
/// cells), cells are one wider than the widest entry. Border rows of 1s are
/// printed above and below for types A and C, above only otherwise.
std::string render_ascii(const FriezePattern& f, const RenderOptions& options = {});

} // namespace frieze
