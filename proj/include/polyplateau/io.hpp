#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "counting.hpp"
#include "genfun.hpp"
#include "polyhypercube.hpp"
#include "polyomino.hpp"

namespace polyplateau {

// Insertion-ordered so emitted objects read in schema order.
using Json = nlohmann::ordered_json;

// Counts can exceed 2^53, so every count travels as a decimal string.
// Geometry (coordinates, extents, offsets, dimensions) stays numeric.

inline Json cells_json(const CellSet2D& cells) {
    Json arr = Json::array();
    for (const Cell2& c : cells) arr.push_back(Json::array({c.col, c.row}));
    return arr;
}

inline Json cells_json(const CellSetD& c) {
    Json j;
    j["d"] = c.dimension;
    Json arr = Json::array();
    for (const std::vector<int>& cell : c.cells) arr.push_back(cell);
    j["cells"] = std::move(arr);
    return j;
}

inline Json strata_json(const DirectedPlateauPolyhypercube& p) {
    Json j;
    j["d"] = p.dimension;
    Json arr = Json::array();
    for (const Plateau& s : p.strata) {
        Json stratum;
        stratum["extents"] = s.extents;
        stratum["offsets"] = s.offsets;
        arr.push_back(std::move(stratum));
    }
    j["strata"] = std::move(arr);
    return j;
}

inline Json table_json(const CountTable& t) {
    Json j;
    j["d"] = t.dimension;
    Json rows = Json::array();
    for (long long k = 1; k <= t.k_max(); ++k) {
        Json row;
        row["k"] = k;
        Json counts = Json::array();
        for (const Integer& v : t.rows[static_cast<std::size_t>(k - 1)])
            counts.push_back(v.str());
        row["counts"] = std::move(counts);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

// Header row labels the lateral-area columns; each data row starts with its
// width. Example for k_max=2, n_max=3:
//   k,0,1,2,3
//   1,0,0,1,2
//   2,0,0,0,0
inline std::string table_csv(const CountTable& t) {
    std::string s = "k";
    for (long long n = 0; n <= t.n_max(); ++n) s += "," + std::to_string(n);
    s += "\n";
    for (long long k = 1; k <= t.k_max(); ++k) {
        s += std::to_string(k);
        for (const Integer& v : t.rows[static_cast<std::size_t>(k - 1)]) s += "," + v.str();
        s += "\n";
    }
    return s;
}

inline Json series_json(const SeriesPrefix& s, long long d, std::optional<long long> k) {
    Json j;
    j["d"] = d;
    if (k) j["k"] = *k;
    j["order"] = s.order;
    Json coeffs = Json::array();
    for (const Integer& v : s.coeffs) coeffs.push_back(v.str());
    j["coeffs"] = std::move(coeffs);
    return j;
}

// One line of whitespace-separated coefficients, no trailing newline.
inline std::string series_plain(const SeriesPrefix& s) {
    std::string out;
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) {
        if (i) out += ' ';
        out += s.coeffs[i].str();
    }
    return out;
}

}  // namespace polyplateau
