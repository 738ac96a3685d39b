#include "klreg/skew.hpp"

#include "klreg/pipes.hpp"

namespace klreg {

int SkewRegion::num_cols() const {
    int m = 0;
    for (const auto& [s, e] : rows_)
        if (s <= e) m = std::max(m, e);
    return m;
}

bool SkewRegion::contains(const Cell& c) const {
    if (c.row < 1 || c.row > num_rows()) return false;
    const auto& [s, e] = rows_[static_cast<std::size_t>(c.row - 1)];
    return c.col >= s && c.col <= e;
}

std::size_t SkewRegion::size() const {
    std::size_t k = 0;
    for (const auto& [s, e] : rows_)
        if (s <= e) k += static_cast<std::size_t>(e - s + 1);
    return k;
}

CellSet SkewRegion::cells() const {
    std::vector<Cell> out;
    for (int i = 1; i <= num_rows(); ++i) {
        const auto& [s, e] = rows_[static_cast<std::size_t>(i - 1)];
        for (int j = s; j <= e; ++j) out.push_back({i, j});
    }
    return CellSet(std::move(out));
}

bool SkewRegion::is_reflected_skew() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].first > rows_[i].second || rows_[i].first < 1) return false;
        if (i > 0 && (rows_[i].first < rows_[i - 1].first || rows_[i].second < rows_[i - 1].second)) return false;
    }
    return true;
}

Partitions reflect_to_partitions(const SkewRegion& r) {
    Partitions p;
    const int m = r.num_cols();
    for (const auto& [s, e] : r.rows()) {
        p.lambda.push_back(m - s + 1);
        p.mu.push_back(m - e);
    }
    return p;
}

SkewRegion region_from_partitions(const std::vector<int>& lambda, const std::vector<int>& mu) {
    if (lambda.empty()) return SkewRegion{};
    if (mu.size() > lambda.size()) throw ValidationError("mu has more parts than lambda");
    const int l1 = lambda.front();
    std::vector<std::pair<int, int>> rows;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        const int li = lambda[i];
        const int mi = i < mu.size() ? mu[i] : 0;
        if (i > 0 && (li > lambda[i - 1])) throw ValidationError("lambda is not weakly decreasing");
        if (i > 0 && i < mu.size() && mi > mu[i - 1]) throw ValidationError("mu is not weakly decreasing");
        if (mi >= li) throw ValidationError("row " + std::to_string(i + 1) + " of lambda/mu is empty");
        rows.emplace_back(l1 - li + 1, l1 - mi);
    }
    return SkewRegion(std::move(rows));
}

Compression compress(const Permutation& v) {
    const auto D = rothe_diagram(v);
    std::map<int, int> rmap, cmap;
    for (const auto& c : D) {
        rmap[c.row] = 0;
        cmap[c.col] = 0;
    }
    int k = 0;
    for (auto& [r, idx] : rmap) idx = ++k;
    k = 0;
    for (auto& [c, idx] : cmap) idx = ++k;

    Compression out;
    std::vector<std::pair<int, int>> rows(rmap.size(), {0, -1});
    for (const auto& c : D) {
        const Cell img{rmap[c.row], cmap[c.col]};
        out.maps.forward[c] = img;
        out.maps.backward[img] = c;
        auto& iv = rows[static_cast<std::size_t>(img.row - 1)];
        if (iv.first > iv.second) iv = {img.col, img.col};
        else {
            iv.first = std::min(iv.first, img.col);
            iv.second = std::max(iv.second, img.col);
        }
    }
    out.region = SkewRegion(std::move(rows));
    if (out.region.size() != D.size() || !out.region.is_reflected_skew())
        throw PatternError("compressed diagram of v = " + to_string(v) + " is not a skew region");
    return out;
}

PlusDiagram::PlusDiagram(SkewRegion r, CellSet p) : region(std::move(r)), pluses(std::move(p)) {
    for (const auto& c : pluses)
        if (!region.contains(c)) throw ContainmentError("plus " + to_string(c) + " lies outside the region");
}

PlusDiagram d_top(const Permutation& v, const Permutation& w) {
    const auto P = d_ne(v, w);
    const auto comp = compress(v);
    std::vector<Cell> img;
    for (const auto& c : P) img.push_back(comp.maps.forward.at(c));
    return PlusDiagram(comp.region, CellSet(std::move(img)));
}

bool can_excite(const PlusDiagram& D, const Cell& b) {
    if (!D.pluses.contains(b)) return false;
    for (const Cell& c : {b + Cell{0, -1}, b + Cell{1, 0}, b + kSouthWest})
        if (!D.region.contains(c) || D.pluses.contains(c)) return false;
    return true;
}

std::vector<Cell> excited_targets(const PlusDiagram& D) {
    std::vector<Cell> out;
    for (const auto& b : D.pluses)
        if (can_excite(D, b)) out.push_back(b);
    return out;
}

PlusDiagram apply_excited(const PlusDiagram& D, const Cell& b) {
    if (!can_excite(D, b)) throw MoveError("excited move not applicable at " + to_string(b));
    PlusDiagram E = D;
    E.pluses.erase(b);
    E.pluses.insert(b + kSouthWest);
    return E;
}

PlusDiagram apply_k_excited(const PlusDiagram& D, const Cell& b) {
    if (!can_excite(D, b)) throw MoveError("K-theoretic excited move not applicable at " + to_string(b));
    PlusDiagram E = D;
    E.pluses.insert(b + kSouthWest);
    return E;
}

std::string render_diagram(const SkewRegion& region, const CellSet& pluses, const CellSet& k_cells) {
    std::string s;
    const int m = region.num_cols();
    for (int i = 1; i <= region.num_rows(); ++i) {
        std::string line;
        for (int j = 1; j <= m; ++j) {
            const Cell c{i, j};
            if (!region.contains(c)) line += ' ';
            else if (k_cells.contains(c)) line += 'K';
            else if (pluses.contains(c)) line += '+';
            else line += '.';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        s += line;
        s += '\n';
    }
    return s;
}

}  // namespace klreg
