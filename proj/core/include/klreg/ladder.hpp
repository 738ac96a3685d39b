#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "klreg/skew.hpp"
#include "klreg/zip.hpp"

namespace klreg {

// Lattice point in drawn coordinates; (0,0) is the northwest corner of the ladder.
struct LatticePoint {
    int row = 0;
    int col = 0;
    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
    friend constexpr bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

inline int norm(const LatticePoint& p) { return p.row + p.col; }

struct Mark {
    LatticePoint point;
    int r = 1;
    friend bool operator==(const Mark&, const Mark&) = default;
};

// A two-sided ladder lambda/mu, drawn with the cutout mu in the northeast.
class Ladder {
public:
    Ladder(std::vector<int> lambda, std::vector<int> mu, std::vector<Mark> marked);

    const std::vector<int>& lambda() const { return lambda_; }
    const std::vector<int>& mu() const { return mu_; }
    const std::vector<Mark>& marked() const { return marked_; }
    const SkewRegion& region() const { return region_; }
    int rows() const { return static_cast<int>(lambda_.size()); }
    int width() const { return lambda_.front(); }
    // Half perimeter.
    int n() const { return width() + rows(); }

    // Cells of the full lambda shape (region plus cutout).
    bool in_lambda(const Cell& c) const;
    bool in_cutout(const Cell& c) const { return in_lambda(c) && !region_.contains(c); }

    std::vector<LatticePoint> sw_corners() const;  // alpha_1..alpha_s
    std::vector<LatticePoint> ne_corners() const;  // beta_1..beta_t
    std::vector<LatticePoint> sw_border() const;   // lattice points of the southwest boundary path

private:
    std::vector<int> lambda_;
    std::vector<int> mu_;
    std::vector<Mark> marked_;
    SkewRegion region_;
};

struct MinimalityReport {
    bool ok = true;
    std::vector<Cell> uncovered_cells;    // condition (1)
    std::vector<int> row_offset_breaks;   // condition (2): i with p_i(1)-r_i >= p_{i+1}(1)-r_{i+1}
    std::vector<int> col_offset_breaks;   // condition (3)
    std::vector<int> off_border_marks;
    std::vector<int> oversized_marks;  // r exceeds the rows or columns available to the minor
    bool has_marks = false;

    // Everything except strict growth of the offsets, which the pipelines do not need.
    bool structural() const {
        return has_marks && uncovered_cells.empty() && off_border_marks.empty() &&
               oversized_marks.empty();
    }
};

MinimalityReport validate_minimal(const Ladder& L);

struct RankConstraint {
    int a = 0;
    int b = 0;
    int value = 0;
    friend bool operator==(const RankConstraint&, const RankConstraint&) = default;
};

std::vector<int> ladder_code(const Ladder& L);
std::vector<RankConstraint> ladder_constraints(const Ladder& L, const Permutation& v);
// Minimal-length w with the prescribed rank values, via the rank envelope.
Permutation envelope_permutation(int n, const std::vector<RankConstraint>& cons);

struct PermPair {
    Permutation v, w;
};
PermPair perm_of(const Ladder& L);

// Half-integer point stored doubled.
struct HalfPoint {
    int row2 = 0;
    int col2 = 0;
    double row() const { return row2 / 2.0; }
    double col() const { return col2 / 2.0; }
    friend constexpr auto operator<=>(const HalfPoint&, const HalfPoint&) = default;
    friend constexpr bool operator==(const HalfPoint&, const HalfPoint&) = default;
};
std::string to_string(const HalfPoint& p);

struct BoundaryPoints {
    std::vector<HalfPoint> V;  // V[i-1] = V_i
    std::vector<HalfPoint> H;  // H[i-1] = H_i
    std::vector<Mark> extended_marks;
    std::vector<Mark> fill_ins;  // corner points appended to M
};

BoundaryPoints boundary_points(const Ladder& L);

// First cell of the path leaving H, and last cell of the path entering V.
Cell start_cell(const HalfPoint& H);
Cell end_cell(const HalfPoint& V);

enum class Tile { Blank, ElbowNE, ElbowSW, Vert, Horiz };
const char* tile_name(Tile t);

struct PathFamily {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<Cell>> paths;  // paths[i-1] runs from H_i to V_i
    std::vector<HalfPoint> H, V;

    Tile tile(const Cell& c) const;
    friend bool operator==(const PathFamily& a, const PathFamily& b) { return a.paths == b.paths; }

    std::map<Cell, Tile> tiles;
};

PathFamily make_family(const Ladder& L, const BoundaryPoints& bp, std::vector<std::vector<Cell>> paths);

PathFamily p_bot(const Ladder& L);
CellSet blanks(const Ladder& L, const PathFamily& P);
int weight(const Ladder& L);
CellSet elbows(const Ladder& L, const PathFamily& P);
bool nilp_is_valid(const Ladder& L, const PathFamily& P);

// Reroute the path through the elbow southwest of b so the blank moves from b to b+(1,-1).
PathFamily droop(const Ladder& L, const PathFamily& P, const Cell& b);
PlusDiagram diagram_of_paths(const Ladder& L, const PathFamily& P);
PathFamily paths_of_diagram(const Ladder& L, const PlusDiagram& D, std::size_t budget = 1000000);
PathFamily p_zip(const Ladder& L);

struct LadderResult {
    PermPair pair;
    ZipResult zip;
    BoundaryPoints boundary;
    PathFamily bottom;
    PathFamily zipped;
    CellSet elbow_cells;
    int cells = 0;
    int weight = 0;
    int blanks = 0;
    int regularity = 0;
    int a_invariant = 0;
};

LadderResult analyze_ladder(const Ladder& L);
int regularity_ladder(const Ladder& L);
int a_invariant_ladder(const Ladder& L);

std::string render_paths(const Ladder& L, const PathFamily& P);

}  // namespace klreg
