#include "klreg/oracle.hpp"

#include <deque>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_set>

#include "klreg/pipes.hpp"

namespace klreg {

namespace {

struct CellSetHash {
    std::size_t operator()(const CellSet& s) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (const auto& c : s) h = (h ^ CellHash{}(c)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

std::vector<CellSet> ClosureSet::slice(std::size_t size) const {
    std::vector<CellSet> out;
    for (const auto& d : diagrams)
        if (d.size() == size) out.push_back(d);
    return out;
}

ClosureSet closure(const Permutation& v, const Permutation& w, std::size_t budget, bool k_moves) {
    const auto top = d_top(v, w);
    ClosureSet cs;
    cs.region = top.region;
    std::unordered_set<CellSet, CellSetHash> seen{top.pluses};
    cs.diagrams.push_back(top.pluses);
    std::size_t head = 0, level_end = 1;
    while (head < cs.diagrams.size()) {
        if (head == level_end) {
            ++cs.levels;
            level_end = cs.diagrams.size();
        }
        const PlusDiagram D(cs.region, cs.diagrams[head++]);
        for (const auto& b : excited_targets(D)) {
            for (int kind = 0; kind < (k_moves ? 2 : 1); ++kind) {
                auto next = kind == 0 ? apply_excited(D, b).pluses : apply_k_excited(D, b).pluses;
                if (!seen.insert(next).second) continue;
                if (seen.size() > budget) throw ResourceError("closure exceeded budget of " + std::to_string(budget) + " diagrams", seen.size());
                cs.diagrams.push_back(std::move(next));
            }
        }
    }
    cs.min_size = cs.max_size = top.pluses.size();
    for (const auto& d : cs.diagrams) {
        cs.max_size = std::max(cs.max_size, d.size());
        cs.min_size = std::min(cs.min_size, d.size());
    }
    return cs;
}

std::vector<std::pair<CellSet, int>> groth_support(const Permutation& v, const Permutation& w, std::size_t budget) {
    const auto cs = closure(v, w, budget, true);
    const auto comp = compress(v);
    const int lw = w.length();
    std::vector<std::pair<CellSet, int>> out;
    for (const auto& d : cs.diagrams) {
        std::vector<Cell> up;
        for (const auto& c : d) up.push_back(comp.maps.backward.at(c));
        const int sign = ((static_cast<int>(d.size()) - lw) % 2 == 0) ? 1 : -1;
        out.emplace_back(CellSet(std::move(up)), sign);
    }
    return out;
}

std::vector<CellSet> enumerate_pipes(const Permutation& v, const Permutation& w, bool reduced_only, std::size_t budget) {
    if (v.n() != w.n()) throw ValidationError("v and w have different sizes");
    const auto lr = label_rothe(v);
    const auto& order = lr.reading_order;
    std::vector<int> letters;
    for (const auto& c : order) letters.push_back(lr.labels.at(c));
    const int lw = w.length();
    std::vector<CellSet> out;
    std::vector<Cell> chosen;
    std::size_t nodes = 0;

    std::function<void(std::size_t, const Permutation&, int)> dfs = [&](std::size_t p, const Permutation& u, int lu) {
        if (++nodes > budget) throw ResourceError("pipe enumeration exceeded budget", nodes);
        if (!bruhat_leq(u, w)) return;
        // The Demazure product of u with every remaining letter bounds what is still reachable.
        auto top = u.word();
        for (std::size_t q = p; q < letters.size(); ++q) {
            auto& x = top[static_cast<std::size_t>(letters[q] - 1)];
            auto& y = top[static_cast<std::size_t>(letters[q])];
            if (x < y) std::swap(x, y);
        }
        if (!bruhat_leq(w, Permutation(top))) return;
        if (p == letters.size()) {
            if (u == w) out.emplace_back(std::vector<Cell>(chosen));
            return;
        }
        const int a = letters[p];
        const bool grows = u(a) < u(a + 1);
        if (!reduced_only || (grows && lu < lw)) {
            chosen.push_back(order[p]);
            dfs(p + 1, grows ? u.right_mul(a) : u, lu + (grows ? 1 : 0));
            chosen.pop_back();
        }
        dfs(p + 1, u, lu);
    };
    dfs(0, Permutation::identity(v.n()), 0);
    std::sort(out.begin(), out.end());
    return out;
}

CellSet brute_earliest_subword(const Permutation& v, const Permutation& w, std::size_t budget) {
    const auto lr = label_rothe(v);
    const auto& order = lr.reading_order;
    const int lw = w.length();
    std::size_t nodes = 0;
    std::vector<Cell> chosen;

    std::function<bool(std::size_t, const Permutation&)> dfs = [&](std::size_t from, const Permutation& u) -> bool {
        if (++nodes > budget) throw ResourceError("subword search exceeded budget", nodes);
        if (static_cast<int>(chosen.size()) == lw) return u == w;
        const std::size_t need = static_cast<std::size_t>(lw) - chosen.size();
        for (std::size_t p = from; p + need <= order.size(); ++p) {
            const int a = lr.labels.at(order[p]);
            if (u(a) > u(a + 1)) continue;
            const auto us = u.right_mul(a);
            if (static_cast<int>(chosen.size()) + 1 + us.inverse().compose(w).length() != lw) continue;
            chosen.push_back(order[p]);
            if (dfs(p + 1, us)) return true;
            chosen.pop_back();
        }
        return false;
    };
    if (!dfs(0, Permutation::identity(v.n()))) throw StructureError("w has no reduced subword in the reading word of D(v)");
    return CellSet(chosen);
}

Permutation brute_minimal_w(int n, const std::vector<RankConstraint>& constraints) {
    std::vector<int> word(static_cast<std::size_t>(n));
    std::iota(word.begin(), word.end(), 1);
    std::optional<Permutation> best;
    int best_len = 0;
    do {
        const Permutation p(word);
        const RankMatrix r(p);
        bool ok = true;
        for (const auto& c : constraints)
            if (c.a > n || c.b > n || r(c.a, c.b) != c.value) {
                ok = false;
                break;
            }
        if (ok && (!best || p.length() < best_len)) {
            best = p;
            best_len = p.length();
        }
    } while (std::next_permutation(word.begin(), word.end()));
    if (!best) throw ConstraintError("no permutation satisfies the rank constraints");
    return *best;
}

std::vector<PathFamily> enumerate_nilp(const Ladder& L, std::size_t budget) {
    const auto bp = boundary_points(L);
    const std::size_t l = bp.H.size();
    std::vector<PathFamily> out;
    std::vector<std::vector<Cell>> paths(l);
    std::set<Cell> used;
    std::size_t nodes = 0;

    std::function<void(std::size_t)> place;
    std::function<void(std::size_t, std::vector<Cell>&)> walk = [&](std::size_t i, std::vector<Cell>& path) {
        if (++nodes > budget) throw ResourceError("path enumeration exceeded budget", nodes);
        const Cell c = path.back();
        const Cell e = end_cell(bp.V[i]);
        if (c == e) {
            paths[i] = path;
            place(i + 1);
            return;
        }
        for (const Cell& step : {Cell{-1, 0}, Cell{0, -1}}) {
            const Cell d = c + step;
            if (d.row < e.row || d.col < e.col || !L.in_lambda(d) || used.count(d)) continue;
            used.insert(d);
            path.push_back(d);
            walk(i, path);
            path.pop_back();
            used.erase(d);
        }
    };
    place = [&](std::size_t i) {
        if (i == l) {
            auto P = make_family(L, bp, paths);
            if (nilp_is_valid(L, P)) out.push_back(std::move(P));
            return;
        }
        const Cell s = start_cell(bp.H[i]);
        if (!L.in_lambda(s) || used.count(s)) return;
        used.insert(s);
        std::vector<Cell> path{s};
        walk(i, path);
        used.erase(s);
    };
    place(0);
    return out;
}

}  // namespace klreg
