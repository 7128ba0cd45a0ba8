#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "integer.hpp"
#include "polyomino.hpp"

namespace polyplateau {

inline constexpr long long kDefaultNodeBudget = 10'000'000;

// Thrown when an exhaustive search would explore more nodes than allowed.
// Refusal is deterministic: the same input and limit always stop at the
// same node.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(long long limit)
        : std::runtime_error("search node budget exceeded (limit " + std::to_string(limit) +
                             " nodes)"),
          limit_(limit) {}
    long long limit() const { return limit_; }

private:
    long long limit_;
};

struct SearchBudget {
    long long limit = kDefaultNodeBudget;
    long long used = 0;

    void charge(long long cost = 1) {
        used += cost;
        if (used > limit) throw budget_error(limit);
    }
};

// One stratum of a plateau polyhypercube in dimension d: a full box spanning
// axes 2..d. extents[i] and offsets[i] describe axis i+2.
struct Plateau {
    std::vector<int> extents;
    std::vector<int> offsets;
    bool operator==(const Plateau&) const = default;
};

// A directed plateau polyhypercube of width k in dimension d: strata[s] sits
// at axis-1 position s+1, each a full (d-1)-dimensional box. Canonical
// translation: the first stratum's offsets are all 0.
struct DirectedPlateauPolyhypercube {
    int dimension = 3;
    std::vector<Plateau> strata;

    int width() const { return static_cast<int>(strata.size()); }
    bool operator==(const DirectedPlateauPolyhypercube&) const = default;
};

// Structural validity: positive extents, canonical first stratum, and per
// lateral axis a directed overlap between consecutive strata (offsets never
// decrease and each stays within the previous stratum's span).
inline bool is_valid(const DirectedPlateauPolyhypercube& p) {
    const int lat = p.dimension - 1;
    if (p.dimension < 3 || p.strata.empty()) return false;
    for (const Plateau& s : p.strata) {
        if (static_cast<int>(s.extents.size()) != lat) return false;
        if (static_cast<int>(s.offsets.size()) != lat) return false;
        for (int e : s.extents)
            if (e < 1) return false;
    }
    for (int o : p.strata.front().offsets)
        if (o != 0) return false;
    for (std::size_t s = 0; s + 1 < p.strata.size(); ++s) {
        const Plateau& a = p.strata[s];
        const Plateau& b = p.strata[s + 1];
        for (int i = 0; i < lat; ++i) {
            if (b.offsets[i] < a.offsets[i]) return false;
            if (b.offsets[i] > a.offsets[i] + a.extents[i] - 1) return false;
        }
    }
    return true;
}

// Shadow of p on the plane spanned by axis 1 and lateral axis `axis`
// (2 <= axis <= d), renormalized so the first column's bottom is 0.
inline ColumnConvexPolyomino project(const DirectedPlateauPolyhypercube& p, int axis) {
    if (axis < 2 || axis > p.dimension)
        throw std::domain_error("project: axis must be between 2 and the dimension");
    const int idx = axis - 2;
    const int base = p.strata.front().offsets[idx];
    ColumnConvexPolyomino poly;
    poly.columns.reserve(p.strata.size());
    for (const Plateau& s : p.strata) poly.columns.push_back({s.offsets[idx] - base, s.extents[idx]});
    return poly;
}

// Sum over lateral axes of the projection areas; equals the total of all
// extents across all strata.
inline long long lateral_area(const DirectedPlateauPolyhypercube& p) {
    long long a = 0;
    for (const Plateau& s : p.strata)
        for (int e : s.extents) a += e;
    return a;
}

struct CellSetD {
    int dimension = 0;
    std::set<std::vector<int>> cells;
    bool operator==(const CellSetD&) const = default;
};

// Cell set of p: stratum s (numbered from 1) contributes every lattice point
// of its box at axis-1 coordinate s.
inline CellSetD rasterize_dpp(const DirectedPlateauPolyhypercube& p) {
    const int lat = p.dimension - 1;
    CellSetD out;
    out.dimension = p.dimension;
    std::vector<int> cell(p.dimension);
    for (int s = 0; s < p.width(); ++s) {
        const Plateau& st = p.strata[s];
        cell[0] = s + 1;
        for (int i = 0; i < lat; ++i) cell[i + 1] = st.offsets[i];
        for (;;) {
            out.cells.insert(cell);
            int i = 0;
            while (i < lat) {
                if (cell[i + 1] + 1 <= st.offsets[i] + st.extents[i] - 1) {
                    ++cell[i + 1];
                    break;
                }
                cell[i + 1] = st.offsets[i];
                ++i;
            }
            if (i == lat) break;
        }
    }
    return out;
}

// Shadow of a raw cell set on the (axis 1, axis) plane, untranslated.
inline CellSet2D project_cells(const CellSetD& c, int axis) {
    if (axis < 2 || axis > c.dimension)
        throw std::domain_error("project_cells: axis must be between 2 and the dimension");
    CellSet2D out;
    for (const std::vector<int>& cell : c.cells) out.insert({cell[0], cell[axis - 1]});
    return out;
}

// Translate so every coordinate's minimum is 0.
inline CellSetD canonical_translate(const CellSetD& c) {
    if (c.cells.empty()) return c;
    std::vector<int> mins(*c.cells.begin());
    for (const std::vector<int>& cell : c.cells)
        for (std::size_t i = 0; i < mins.size(); ++i)
            if (cell[i] < mins[i]) mins[i] = cell[i];
    CellSetD out;
    out.dimension = c.dimension;
    for (const std::vector<int>& cell : c.cells) {
        std::vector<int> t(cell);
        for (std::size_t i = 0; i < t.size(); ++i) t[i] -= mins[i];
        out.cells.insert(std::move(t));
    }
    return out;
}

namespace detail {

// Definition-level validity check on a sorted, deduplicated cell list.
// Deliberately ignorant of the Plateau representation: it tests the four
// defining properties of a directed plateau polyhypercube directly.
inline bool generic_is_valid_cells(const std::vector<std::vector<int>>& cells, int d) {
    if (d < 2 || cells.empty()) return false;
    for (const std::vector<int>& c : cells)
        if (static_cast<int>(c.size()) != d) return false;

    auto contains = [&](const std::vector<int>& v) {
        return std::binary_search(cells.begin(), cells.end(), v);
    };

    // Slabs at fixed axis-1 coordinate form a contiguous range and each one
    // fills its lateral bounding box.
    std::map<int, std::vector<const std::vector<int>*>> slabs;
    for (const std::vector<int>& c : cells) slabs[c[0]].push_back(&c);
    int expected = slabs.begin()->first;
    for (const auto& [x1, members] : slabs) {
        if (x1 != expected++) return false;
        std::vector<int> lo(members.front()->begin() + 1, members.front()->end());
        std::vector<int> hi(lo);
        for (const std::vector<int>* m : members)
            for (int i = 1; i < d; ++i) {
                if ((*m)[i] < lo[i - 1]) lo[i - 1] = (*m)[i];
                if ((*m)[i] > hi[i - 1]) hi[i - 1] = (*m)[i];
            }
        long long volume = 1;
        for (int i = 0; i < d - 1; ++i) volume *= hi[i] - lo[i] + 1;
        if (volume != static_cast<long long>(members.size())) return false;
    }

    // Connectivity under shared-facet adjacency.
    std::vector<char> seen(cells.size(), 0);
    std::vector<std::size_t> frontier{0};
    seen[0] = 1;
    std::size_t reached = 1;
    std::vector<int> nb;
    while (!frontier.empty()) {
        const std::vector<int> here = cells[frontier.back()];
        frontier.pop_back();
        for (int i = 0; i < d; ++i) {
            for (int step : {-1, 1}) {
                nb = here;
                nb[i] += step;
                auto it = std::lower_bound(cells.begin(), cells.end(), nb);
                if (it != cells.end() && *it == nb) {
                    std::size_t j = static_cast<std::size_t>(it - cells.begin());
                    if (!seen[j]) {
                        seen[j] = 1;
                        ++reached;
                        frontier.push_back(j);
                    }
                }
            }
        }
    }
    if (reached != cells.size()) return false;

    // Directedness: exactly one cell has no neighbour in a negative
    // direction, and walking only positive steps from it covers the set.
    std::size_t root = cells.size();
    for (std::size_t j = 0; j < cells.size(); ++j) {
        bool has_lower = false;
        for (int i = 0; i < d && !has_lower; ++i) {
            nb = cells[j];
            --nb[i];
            has_lower = contains(nb);
        }
        if (!has_lower) {
            if (root != cells.size()) return false;
            root = j;
        }
    }
    if (root == cells.size()) return false;
    std::fill(seen.begin(), seen.end(), 0);
    seen[root] = 1;
    reached = 1;
    frontier.assign(1, root);
    while (!frontier.empty()) {
        const std::vector<int> here = cells[frontier.back()];
        frontier.pop_back();
        for (int i = 0; i < d; ++i) {
            nb = here;
            ++nb[i];
            auto it = std::lower_bound(cells.begin(), cells.end(), nb);
            if (it != cells.end() && *it == nb) {
                std::size_t j = static_cast<std::size_t>(it - cells.begin());
                if (!seen[j]) {
                    seen[j] = 1;
                    ++reached;
                    frontier.push_back(j);
                }
            }
        }
    }
    return reached == cells.size();
}

}  // namespace detail

// True when the raw cell set is a directed plateau polyhypercube: connected,
// every axis-1 slab a full lateral box, slabs contiguous along axis 1, and
// directed from a unique root.
inline bool generic_is_valid_dpp(const CellSetD& c) {
    std::vector<std::vector<int>> cells(c.cells.begin(), c.cells.end());
    return detail::generic_is_valid_cells(cells, c.dimension);
}

// All directed plateau polyhypercubes of the given dimension, width and
// lateral area, emitted as the lexicographic product of the per-axis
// projection enumerations (axis 2 outermost). Work is metered against
// node_budget.
inline std::vector<DirectedPlateauPolyhypercube> enumerate_dpp(
    int dimension, int width, int area, long long node_budget = kDefaultNodeBudget) {
    if (dimension < 3) throw std::domain_error("enumerate_dpp: dimension must be >= 3");
    if (width < 1) throw std::domain_error("enumerate_dpp: width must be >= 1");
    std::vector<DirectedPlateauPolyhypercube> out;
    const int lat = dimension - 1;
    if (area < lat * width) return out;

    SearchBudget budget{node_budget};
    const int max_axis_area = area - (lat - 1) * width;
    std::vector<ColumnConvexPolyomino> pool;
    for (int j = width; j <= max_axis_area; ++j) {
        std::vector<ColumnConvexPolyomino> batch = enumerate_dccp(width, j);
        budget.charge(static_cast<long long>(batch.size()));
        for (ColumnConvexPolyomino& p : batch) pool.push_back(std::move(p));
    }
    std::sort(pool.begin(), pool.end(), enumeration_less);

    std::vector<const ColumnConvexPolyomino*> picked(lat);
    auto assemble = [&]() {
        DirectedPlateauPolyhypercube p;
        p.dimension = dimension;
        p.strata.resize(width);
        for (int s = 0; s < width; ++s) {
            Plateau& st = p.strata[s];
            st.extents.resize(lat);
            st.offsets.resize(lat);
            for (int l = 0; l < lat; ++l) {
                st.extents[l] = picked[l]->columns[s].height;
                st.offsets[l] = picked[l]->columns[s].bottom;
            }
        }
        out.push_back(std::move(p));
    };

    auto choose = [&](auto&& self, int axis, int remaining) -> void {
        const int axes_left = lat - axis - 1;
        for (const ColumnConvexPolyomino& p : pool) {
            const int a = p.area();
            if (axis == lat - 1) {
                if (a != remaining) continue;
            } else if (remaining - a < axes_left * width) {
                continue;
            }
            budget.charge();
            picked[axis] = &p;
            if (axis == lat - 1)
                assemble();
            else
                self(self, axis + 1, remaining - a);
        }
    };
    choose(choose, 0, area);
    return out;
}

// Brute-force enumeration straight from the definition, for cross-checking
// the structured enumerator and the counting formulas. Strata extents and
// offsets range over a window wide enough to contain every candidate
// (offsets in [-area, area] per lateral axis, first stratum pinned at the
// origin); each complete candidate is rasterized and kept only if
// generic_is_valid_cells accepts it. Results are canonical cell sets in
// lexicographic order.
inline std::vector<CellSetD> oracle_enumerate_dpp(int dimension, int width, int area,
                                                  long long node_budget = kDefaultNodeBudget) {
    if (dimension < 3) throw std::domain_error("oracle_enumerate_dpp: dimension must be >= 3");
    if (width < 1) throw std::domain_error("oracle_enumerate_dpp: width must be >= 1");
    std::vector<CellSetD> out;
    const int lat = dimension - 1;
    if (area < lat * width) return out;

    SearchBudget budget{node_budget};
    std::vector<Plateau> strata(width, Plateau{std::vector<int>(lat, 1), std::vector<int>(lat, 0)});
    std::set<std::vector<std::vector<int>>> seen;

    auto consider = [&]() {
        std::vector<std::vector<int>> cells;
        std::vector<int> cell(dimension);
        for (int s = 0; s < width; ++s) {
            const Plateau& st = strata[s];
            cell[0] = s + 1;
            for (int i = 0; i < lat; ++i) cell[i + 1] = st.offsets[i];
            for (;;) {
                cells.push_back(cell);
                int i = 0;
                while (i < lat) {
                    if (cell[i + 1] + 1 <= st.offsets[i] + st.extents[i] - 1) {
                        ++cell[i + 1];
                        break;
                    }
                    cell[i + 1] = st.offsets[i];
                    ++i;
                }
                if (i == lat) break;
            }
        }
        std::sort(cells.begin(), cells.end());
        if (!detail::generic_is_valid_cells(cells, dimension)) return;
        std::vector<int> mins(cells.front());
        for (const std::vector<int>& c : cells)
            for (int i = 0; i < dimension; ++i)
                if (c[i] < mins[i]) mins[i] = c[i];
        for (std::vector<int>& c : cells)
            for (int i = 0; i < dimension; ++i) c[i] -= mins[i];
        std::sort(cells.begin(), cells.end());
        seen.insert(std::move(cells));
    };

    // Per stratum: pick an extent vector whose sum leaves room for the
    // remaining strata (exact remainder on the last one), then sweep offsets
    // over the full window. No validity knowledge is applied while searching.
    auto place_stratum = [&](auto&& self, int s, int used) -> void {
        if (s == width) {
            consider();
            return;
        }
        const int strata_after = width - s - 1;
        const int hi = area - used - strata_after * lat;
        if (hi < lat) return;
        const int lo = (s == width - 1) ? hi : lat;

        Plateau& st = strata[s];
        auto place_offsets = [&](auto&& oself, int i) -> void {
            if (i == lat) {
                int sum = 0;
                for (int e : st.extents) sum += e;
                budget.charge();
                self(self, s + 1, used + sum);
                return;
            }
            for (int o = -area; o <= area; ++o) {
                st.offsets[i] = o;
                oself(oself, i + 1);
            }
        };
        auto place_extents = [&](auto&& eself, int i, int partial) -> void {
            if (i == lat - 1) {
                for (int e = std::max(1, lo - partial); e <= hi - partial; ++e) {
                    st.extents[i] = e;
                    if (s == 0) {
                        std::fill(st.offsets.begin(), st.offsets.end(), 0);
                        budget.charge();
                        self(self, 1, used + partial + e);
                    } else {
                        place_offsets(place_offsets, 0);
                    }
                }
                return;
            }
            for (int e = 1; e <= hi - partial - (lat - 1 - i); ++e) {
                st.extents[i] = e;
                eself(eself, i + 1, partial + e);
            }
        };
        place_extents(place_extents, 0, 0);
    };
    place_stratum(place_stratum, 0, 0);

    out.reserve(seen.size());
    for (const std::vector<std::vector<int>>& cells : seen) {
        CellSetD c;
        c.dimension = dimension;
        c.cells.insert(cells.begin(), cells.end());
        out.push_back(std::move(c));
    }
    return out;
}

inline Integer oracle_count_dpp(int dimension, int width, int area,
                                long long node_budget = kDefaultNodeBudget) {
    return Integer(oracle_enumerate_dpp(dimension, width, area, node_budget).size());
}

}  // namespace polyplateau
