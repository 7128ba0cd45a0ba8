#pragma once

// Test-only ground truth for the 2D layer: grow every edge-connected cell
// set of a given size, independent of any counting formula in the library.

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

#include <polyplateau/polyomino.hpp>

namespace testsupport {

// All fixed polyominoes (edge-connected cell sets up to translation) with
// exactly n cells. Grown one cell at a time from the monomino; every
// connected set of size m+1 contains a connected subset of size m, so the
// growth reaches everything.
inline std::vector<polyplateau::CellSet2D> all_fixed_polyominoes(int n) {
    using polyplateau::Cell2;
    using polyplateau::CellSet2D;
    if (n < 1) return {};
    std::set<CellSet2D> level;
    level.insert(CellSet2D{Cell2{0, 0}});
    for (int size = 1; size < n; ++size) {
        std::set<CellSet2D> grown;
        for (const CellSet2D& s : level) {
            for (const Cell2& c : s) {
                for (Cell2 nb : {Cell2{c.col + 1, c.row}, Cell2{c.col - 1, c.row},
                                 Cell2{c.col, c.row + 1}, Cell2{c.col, c.row - 1}}) {
                    if (s.count(nb)) continue;
                    CellSet2D bigger = s;
                    bigger.insert(nb);
                    grown.insert(polyplateau::canonical_translate(bigger));
                }
            }
        }
        level = std::move(grown);
    }
    return {level.begin(), level.end()};
}

inline int cellset_width(const polyplateau::CellSet2D& s) {
    int lo = s.begin()->col;
    int hi = lo;
    for (const polyplateau::Cell2& c : s) {
        lo = std::min(lo, c.col);
        hi = std::max(hi, c.col);
    }
    return hi - lo + 1;
}

}  // namespace testsupport
