#include "klreg/ladder.hpp"

#include <deque>
#include <map>
#include <set>

namespace klreg {

namespace {

constexpr Cell kNorth{-1, 0};
constexpr Cell kWest{0, -1};

}  // namespace

Cell start_cell(const HalfPoint& H) { return {H.row2 / 2, (H.col2 + 1) / 2}; }
Cell end_cell(const HalfPoint& V) { return {(V.row2 + 1) / 2, V.col2 / 2 + 1}; }

const char* tile_name(Tile t) {
    switch (t) {
        case Tile::Blank: return "blank";
        case Tile::ElbowNE: return "elbow_ne";
        case Tile::ElbowSW: return "elbow_sw";
        case Tile::Vert: return "vert";
        case Tile::Horiz: return "horiz";
    }
    return "?";
}

Tile PathFamily::tile(const Cell& c) const {
    auto it = tiles.find(c);
    return it == tiles.end() ? Tile::Blank : it->second;
}

PathFamily make_family(const Ladder& L, const BoundaryPoints& bp, std::vector<std::vector<Cell>> paths) {
    PathFamily P;
    P.rows = L.rows();
    P.cols = L.width();
    P.H = bp.H;
    P.V = bp.V;
    P.paths = std::move(paths);
    for (const auto& path : P.paths) {
        for (std::size_t k = 0; k < path.size(); ++k) {
            const bool from_south = k == 0 || path[k] == path[k - 1] + kNorth;
            const bool to_north = k + 1 < path.size() && path[k + 1] == path[k] + kNorth;
            const Tile t = from_south ? (to_north ? Tile::Vert : Tile::ElbowSW) : (to_north ? Tile::ElbowNE : Tile::Horiz);
            P.tiles.emplace(path[k], t);
        }
    }
    return P;
}

bool nilp_is_valid(const Ladder& L, const PathFamily& P) {
    if (P.paths.size() != P.H.size() || P.V.size() != P.H.size()) return false;
    std::set<Cell> seen;
    for (std::size_t i = 0; i < P.paths.size(); ++i) {
        const auto& path = P.paths[i];
        if (path.empty() || path.front() != start_cell(P.H[i]) || path.back() != end_cell(P.V[i])) return false;
        for (std::size_t k = 0; k < path.size(); ++k) {
            if (!L.in_lambda(path[k]) || !seen.insert(path[k]).second) return false;
            if (k > 0 && path[k] != path[k - 1] + kNorth && path[k] != path[k - 1] + kWest) return false;
        }
        // The path must leave the shape through its west edge.
        if (L.in_lambda(path.back() + kWest)) return false;
        if (L.in_lambda(path.front() + Cell{1, 0})) return false;
    }
    for (const auto& c : seen) {
        if (!L.in_cutout(c)) continue;
        if (P.tile(c) == Tile::ElbowNE) return false;
        for (int k = 1;; ++k) {
            const Cell d{c.row + k, c.col - k};
            if (d.row > L.rows() || d.col < 1) break;
            if (L.in_lambda(d) && P.tile(d) == Tile::Blank) return false;
        }
    }
    return true;
}

CellSet blanks(const Ladder& L, const PathFamily& P) {
    std::vector<Cell> out;
    for (const auto& c : L.region().cells())
        if (P.tile(c) == Tile::Blank) out.push_back(c);
    return CellSet(std::move(out));
}

CellSet elbows(const Ladder& L, const PathFamily& P) {
    const auto B = blanks(L, P);
    std::vector<Cell> out;
    for (const auto& c : L.region().cells()) {
        if (P.tile(c) != Tile::ElbowNE) continue;
        for (int k = 1; c.row - k >= 1; ++k)
            if (B.contains({c.row - k, c.col + k})) {
                out.push_back(c);
                break;
            }
    }
    return CellSet(std::move(out));
}

PathFamily p_bot(const Ladder& L) {
    const auto bp = boundary_points(L);
    const std::size_t l = bp.H.size();
    std::set<Cell> used;
    std::vector<std::vector<Cell>> paths(l);
    for (std::size_t i = l; i-- > 0;) {
        const Cell s = start_cell(bp.H[i]);
        const Cell e = end_cell(bp.V[i]);
        auto free = [&](const Cell& c) { return L.region().contains(c) && !used.count(c); };
        // reach[c]: e is reachable from c by north and west steps through free cells.
        std::set<Cell> reach;
        if (free(e)) reach.insert(e);
        for (int r = e.row; r <= s.row; ++r)
            for (int c = e.col; c <= s.col; ++c) {
                const Cell x{r, c};
                if (x == e || !free(x)) continue;
                if (reach.count(x + kNorth) || reach.count(x + kWest)) reach.insert(x);
            }
        if (!reach.count(s))
            throw InfeasibleError("no lattice path from H_" + std::to_string(i + 1) + " to V_" + std::to_string(i + 1));
        std::vector<Cell> path{s};
        Cell c = s;
        while (c != e) {
            c = reach.count(c + kWest) ? c + kWest : c + kNorth;
            path.push_back(c);
        }
        for (const auto& x : path) used.insert(x);
        paths[i] = std::move(path);
    }
    return make_family(L, bp, std::move(paths));
}

int weight(const Ladder& L) { return static_cast<int>(L.region().size() - blanks(L, p_bot(L)).size()); }

PathFamily droop(const Ladder& L, const PathFamily& P, const Cell& b) {
    const Cell c = b + kSouthWest;
    const auto& R = L.region();
    if (!R.contains(b) || P.tile(b) != Tile::Blank || !R.contains(c) || !R.contains(b + Cell{1, 0}) || !R.contains(b + kWest) ||
        P.tile(c) != Tile::ElbowNE)
        throw MoveError("no droop available at " + to_string(b));
    auto paths = P.paths;
    for (auto& path : paths)
        for (auto& x : path)
            if (x == c) x = b;
    BoundaryPoints bp;
    bp.H = P.H;
    bp.V = P.V;
    return make_family(L, bp, std::move(paths));
}

PlusDiagram diagram_of_paths(const Ladder& L, const PathFamily& P) { return PlusDiagram(L.region(), blanks(L, P)); }

PathFamily paths_of_diagram(const Ladder& L, const PlusDiagram& D, std::size_t budget) {
    const auto pair = perm_of(L);
    const auto top = d_top(pair.v, pair.w);
    PathFamily P = p_bot(L);
    if (blanks(L, P) != top.pluses) throw StructureError("blanks of the bottom family differ from D_top");
    if (!(D.region == top.region)) throw MembershipError("diagram region differs from the ladder");

    // Breadth-first search over excited moves, remembering the move that reached each diagram.
    std::map<CellSet, std::pair<CellSet, Cell>> parent;
    std::deque<CellSet> queue{top.pluses};
    parent.emplace(top.pluses, std::make_pair(CellSet{}, Cell{}));
    bool found = top.pluses == D.pluses;
    while (!queue.empty() && !found) {
        const CellSet cur = queue.front();
        queue.pop_front();
        const PlusDiagram cd(top.region, cur);
        for (const auto& b : excited_targets(cd)) {
            auto next = apply_excited(cd, b).pluses;
            if (parent.count(next)) continue;
            parent.emplace(next, std::make_pair(cur, b));
            if (parent.size() > budget) throw ResourceError("diagram search exceeded budget", parent.size());
            if (next == D.pluses) {
                found = true;
                break;
            }
            queue.push_back(std::move(next));
        }
    }
    if (!found) throw MembershipError("diagram is not reachable from D_top by excited moves");
    std::vector<Cell> moves;
    for (CellSet cur = D.pluses; cur != top.pluses;) {
        const auto& [prev, b] = parent.at(cur);
        moves.push_back(b);
        cur = prev;
    }
    for (auto it = moves.rbegin(); it != moves.rend(); ++it) P = droop(L, P, *it);
    return P;
}

PathFamily p_zip(const Ladder& L) { return analyze_ladder(L).zipped; }

LadderResult analyze_ladder(const Ladder& L) {
    LadderResult res;
    res.pair = perm_of(L);
    res.zip = zip(res.pair.v, res.pair.w);
    res.boundary = boundary_points(L);
    res.bottom = p_bot(L);
    if (blanks(L, res.bottom) != res.zip.top.pluses) throw StructureError("blanks of the bottom family differ from D_top");
    res.zipped = res.bottom;
    for (const auto& b : res.zip.slide_moves) res.zipped = droop(L, res.zipped, b);
    res.elbow_cells = elbows(L, res.zipped);
    res.cells = static_cast<int>(L.region().size());
    res.blanks = static_cast<int>(blanks(L, res.bottom).size());
    res.weight = res.cells - res.blanks;
    res.regularity = static_cast<int>(res.elbow_cells.size());
    res.a_invariant = res.regularity - res.weight;
    return res;
}

int regularity_ladder(const Ladder& L) { return analyze_ladder(L).regularity; }
int a_invariant_ladder(const Ladder& L) { return analyze_ladder(L).a_invariant; }

std::string render_paths(const Ladder& L, const PathFamily& P) {
    std::string s;
    for (int i = 1; i <= L.rows(); ++i) {
        std::string line;
        for (int j = 1; j <= L.width(); ++j) {
            const Cell c{i, j};
            if (!L.in_lambda(c)) {
                line += ' ';
                continue;
            }
            switch (P.tile(c)) {
                case Tile::Vert: line += "│"; break;
                case Tile::Horiz: line += "─"; break;
                case Tile::ElbowNE: line += "└"; break;
                case Tile::ElbowSW: line += "┐"; break;
                case Tile::Blank: line += L.region().contains(c) ? "·" : " "; break;
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        s += line + '\n';
    }
    for (std::size_t i = 0; i < P.H.size(); ++i)
        s += "H" + std::to_string(i + 1) + "=" + to_string(P.H[i]) + " -> V" + std::to_string(i + 1) + "=" + to_string(P.V[i]) + "\n";
    return s;
}

}  // namespace klreg
