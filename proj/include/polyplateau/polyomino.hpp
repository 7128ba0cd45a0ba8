#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "binomial.hpp"
#include "integer.hpp"

namespace polyplateau {

// One contiguous run of cells within a column: rows bottom .. bottom+height-1.
struct ColumnSegment {
    int bottom = 0;
    int height = 1;

    int top() const { return bottom + height - 1; }
    friend auto operator<=>(const ColumnSegment&, const ColumnSegment&) = default;
};

// A column-convex polyomino stored as its column sequence, leftmost column
// first, translated so the first column's bottom row is 0. Directedness is a
// property of the cell set, not of this representation; see is_directed.
struct ColumnConvexPolyomino {
    std::vector<ColumnSegment> columns;

    int width() const { return static_cast<int>(columns.size()); }
    int area() const {
        int a = 0;
        for (const auto& c : columns) a += c.height;
        return a;
    }
    bool operator==(const ColumnConvexPolyomino&) const = default;
};

// Representation invariant: nonempty, positive heights, first bottom at 0,
// and consecutive columns sharing at least one row.
inline bool is_valid(const ColumnConvexPolyomino& p) {
    if (p.columns.empty()) return false;
    if (p.columns.front().bottom != 0) return false;
    for (const auto& c : p.columns)
        if (c.height < 1) return false;
    for (std::size_t i = 0; i + 1 < p.columns.size(); ++i) {
        const ColumnSegment& a = p.columns[i];
        const ColumnSegment& b = p.columns[i + 1];
        if (b.bottom > a.top() || a.bottom > b.top()) return false;
    }
    return true;
}

// Deterministic emission order used by all enumerators: compare the height
// sequences lexicographically, then the bottom sequences.
inline bool enumeration_less(const ColumnConvexPolyomino& a, const ColumnConvexPolyomino& b) {
    const std::size_t na = a.columns.size();
    const std::size_t nb = b.columns.size();
    for (std::size_t i = 0; i < na && i < nb; ++i)
        if (a.columns[i].height != b.columns[i].height)
            return a.columns[i].height < b.columns[i].height;
    if (na != nb) return na < nb;
    for (std::size_t i = 0; i < na; ++i)
        if (a.columns[i].bottom != b.columns[i].bottom)
            return a.columns[i].bottom < b.columns[i].bottom;
    return false;
}

struct Cell2 {
    int col = 0;
    int row = 0;
    friend auto operator<=>(const Cell2&, const Cell2&) = default;
};

using CellSet2D = std::set<Cell2>;

// Number of directed column-convex polyominoes with `width` columns and
// `area` cells: C(area + width - 2, area - width).
inline Integer count_dccp(long long width, long long area) {
    if (width < 1) throw std::domain_error("count_dccp: width must be >= 1");
    if (area < 1) throw std::domain_error("count_dccp: area must be >= 1");
    return binomial(area + width - 2, area - width);
}

// All directed column-convex polyominoes with exactly `width` columns and
// `area` cells, in enumeration_less order. Directed means each column's
// bottom lies within the previous column's occupied rows, which over all
// columns is b_1 = 0 <= b_2 <= ... with b_{i+1} <= b_i + h_i - 1.
inline std::vector<ColumnConvexPolyomino> enumerate_dccp(int width, int area) {
    if (width < 1) throw std::domain_error("enumerate_dccp: width must be >= 1");
    std::vector<ColumnConvexPolyomino> out;
    if (area < width) return out;

    std::vector<int> heights(width);
    std::vector<int> bottoms(width);

    auto emit = [&]() {
        ColumnConvexPolyomino p;
        p.columns.reserve(width);
        for (int i = 0; i < width; ++i) p.columns.push_back({bottoms[i], heights[i]});
        out.push_back(std::move(p));
    };

    auto place_bottoms = [&](auto&& self, int i) -> void {
        if (i == width) {
            emit();
            return;
        }
        for (int b = bottoms[i - 1]; b <= bottoms[i - 1] + heights[i - 1] - 1; ++b) {
            bottoms[i] = b;
            self(self, i + 1);
        }
    };

    auto place_heights = [&](auto&& self, int i, int remaining) -> void {
        if (i == width - 1) {
            heights[i] = remaining;
            bottoms[0] = 0;
            place_bottoms(place_bottoms, 1);
            return;
        }
        for (int h = 1; h <= remaining - (width - 1 - i); ++h) {
            heights[i] = h;
            self(self, i + 1, remaining - h);
        }
    };

    place_heights(place_heights, 0, area);
    return out;
}

// Cell set of p with columns numbered from 1 and rows taken verbatim.
inline CellSet2D rasterize(const ColumnConvexPolyomino& p) {
    CellSet2D cells;
    for (int i = 0; i < p.width(); ++i) {
        const ColumnSegment& c = p.columns[i];
        for (int y = c.bottom; y <= c.top(); ++y) cells.insert({i + 1, y});
    }
    return cells;
}

// Translate so the smallest occupied column and row are both 0.
inline CellSet2D canonical_translate(const CellSet2D& cells) {
    if (cells.empty()) return cells;
    int min_col = cells.begin()->col;
    int min_row = cells.begin()->row;
    for (const Cell2& c : cells) {
        if (c.col < min_col) min_col = c.col;
        if (c.row < min_row) min_row = c.row;
    }
    CellSet2D out;
    for (const Cell2& c : cells) out.insert({c.col - min_col, c.row - min_row});
    return out;
}

// Every occupied column is one contiguous run of rows.
inline bool is_column_convex(const CellSet2D& cells) {
    std::map<int, std::pair<int, int>> span;  // col -> (min row, max row)
    std::map<int, int> population;
    for (const Cell2& c : cells) {
        auto [it, fresh] = span.emplace(c.col, std::pair{c.row, c.row});
        if (!fresh) {
            if (c.row < it->second.first) it->second.first = c.row;
            if (c.row > it->second.second) it->second.second = c.row;
        }
        ++population[c.col];
    }
    for (const auto& [col, mm] : span)
        if (mm.second - mm.first + 1 != population[col]) return false;
    return true;
}

// A cell set is directed when some cell (the root) reaches every other cell
// by steps that only increase a coordinate. Equivalently: the set has exactly
// one cell with neither a West nor a South neighbour inside the set, and
// breadth-first search from it along East/North steps covers everything.
inline bool is_directed(const CellSet2D& cells) {
    if (cells.empty()) return false;
    const Cell2* root = nullptr;
    for (const Cell2& c : cells) {
        const bool has_west = cells.count({c.col - 1, c.row}) != 0;
        const bool has_south = cells.count({c.col, c.row - 1}) != 0;
        if (!has_west && !has_south) {
            if (root != nullptr) return false;
            root = &c;
        }
    }
    if (root == nullptr) return false;

    std::set<Cell2> seen{*root};
    std::vector<Cell2> frontier{*root};
    while (!frontier.empty()) {
        Cell2 c = frontier.back();
        frontier.pop_back();
        for (Cell2 nb : {Cell2{c.col + 1, c.row}, Cell2{c.col, c.row + 1}}) {
            if (cells.count(nb) && seen.insert(nb).second) frontier.push_back(nb);
        }
    }
    return seen.size() == cells.size();
}

}  // namespace polyplateau
