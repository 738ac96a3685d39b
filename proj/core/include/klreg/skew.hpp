#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "klreg/perm.hpp"

namespace klreg {

// Row intervals [start_i, end_i] of a skew board; row i is rows[i-1]. Empty rows have start > end.
class SkewRegion {
public:
    SkewRegion() = default;
    explicit SkewRegion(std::vector<std::pair<int, int>> rows) : rows_(std::move(rows)) {}

    const std::vector<std::pair<int, int>>& rows() const { return rows_; }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    int num_cols() const;
    bool contains(const Cell& c) const;
    std::size_t size() const;
    CellSet cells() const;
    // Starts and ends weakly increase and every row is nonempty.
    bool is_reflected_skew() const;

    friend bool operator==(const SkewRegion&, const SkewRegion&) = default;

private:
    std::vector<std::pair<int, int>> rows_;
};

// The lambda/mu presentation obtained by reflecting a region across a vertical axis.
struct Partitions {
    std::vector<int> lambda;
    std::vector<int> mu;
};
Partitions reflect_to_partitions(const SkewRegion& r);
SkewRegion region_from_partitions(const std::vector<int>& lambda, const std::vector<int>& mu);

struct CellMaps {
    std::map<Cell, Cell> forward;   // D(v) -> R_v
    std::map<Cell, Cell> backward;  // R_v -> D(v)
};

struct Compression {
    SkewRegion region;
    CellMaps maps;
};

Compression compress(const Permutation& v);

struct PlusDiagram {
    SkewRegion region;
    CellSet pluses;

    PlusDiagram() = default;
    PlusDiagram(SkewRegion r, CellSet p);
    friend bool operator==(const PlusDiagram&, const PlusDiagram&) = default;
};

PlusDiagram d_top(const Permutation& v, const Permutation& w);

inline constexpr Cell kSouthWest{1, -1};

// The three cells west, south and southwest of b lie in the region and carry no plus.
bool can_excite(const PlusDiagram& D, const Cell& b);
std::vector<Cell> excited_targets(const PlusDiagram& D);
PlusDiagram apply_excited(const PlusDiagram& D, const Cell& b);
PlusDiagram apply_k_excited(const PlusDiagram& D, const Cell& b);

// '.' empty region cell, '+' plus, 'K' cell of `k_cells`, ' ' outside the region.
std::string render_diagram(const SkewRegion& region, const CellSet& pluses, const CellSet& k_cells = {});

}  // namespace klreg
