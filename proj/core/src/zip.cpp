#include "klreg/zip.hpp"

#include <climits>
#include <set>
#include <unordered_map>

#include "klreg/pipes.hpp"

namespace klreg {

namespace {

bool strictly_se(const Cell& a, const Cell& b) { return b.row > a.row && b.col > a.col; }

int norm(const Cell& c) { return c.row + c.col; }

// Longest chain length ending at each cell.
std::vector<int> depths(const std::vector<Cell>& cells) {
    std::vector<int> d(cells.size(), 1);
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (strictly_se(cells[j], cells[i])) d[i] = std::max(d[i], d[j] + 1);
    return d;
}

// Westmost-then-southmost chain of length L among chains ending in `allowed`:
// minimal column tuple, then maximal row tuple.
DiagonalChain westsouth_chain(const std::vector<Cell>& cells, const std::vector<char>& allowed, int L) {
    const std::size_t m = cells.size();
    std::vector<int> height(m, INT_MIN / 2);
    for (std::size_t i = m; i-- > 0;) {
        if (allowed[i]) height[i] = 1;
        for (std::size_t j = i + 1; j < m; ++j)
            if (strictly_se(cells[i], cells[j])) height[i] = std::max(height[i], height[j] + 1);
    }
    std::vector<std::vector<std::size_t>> layers(static_cast<std::size_t>(L));
    for (int k = 0; k < L; ++k) {
        std::vector<std::size_t> cand;
        for (std::size_t i = 0; i < m; ++i) {
            if (height[i] != L - k) continue;
            bool reach = k == 0;
            for (std::size_t p : (k ? layers[static_cast<std::size_t>(k - 1)] : std::vector<std::size_t>{}))
                if (strictly_se(cells[p], cells[i])) reach = true;
            if (reach) cand.push_back(i);
        }
        if (cand.empty()) throw StructureError("no chain of the requested length");
        int best = INT_MAX;
        for (auto i : cand) best = std::min(best, cells[i].col);
        for (auto i : cand)
            if (cells[i].col == best) layers[static_cast<std::size_t>(k)].push_back(i);
    }
    for (int k = L - 2; k >= 0; --k) {
        auto& cur = layers[static_cast<std::size_t>(k)];
        const auto& nxt = layers[static_cast<std::size_t>(k + 1)];
        std::vector<std::size_t> keep;
        for (auto i : cur)
            for (auto j : nxt)
                if (strictly_se(cells[i], cells[j])) {
                    keep.push_back(i);
                    break;
                }
        cur = keep;
    }
    DiagonalChain ch;
    for (int k = 0; k < L; ++k) {
        const Cell* pick = nullptr;
        for (auto i : layers[static_cast<std::size_t>(k)]) {
            if (!ch.boxes.empty() && !strictly_se(ch.boxes.back(), cells[i])) continue;
            if (!pick || cells[i].row > pick->row) pick = &cells[i];
        }
        ch.boxes.push_back(*pick);
    }
    return ch;
}

bool room_step_free(const PlusDiagram& D, const Cell& b, int k) {
    for (const Cell& c : {b + Cell{k, -k}, b + Cell{k, 1 - k}, b + Cell{k - 1, -k}})
        if (!D.region.contains(c) || D.pluses.contains(c)) return false;
    return true;
}

int room_in(const PlusDiagram& zipped, const Cell& b) {
    int k = 0;
    while (room_step_free(zipped, b, k + 1)) ++k;
    return k;
}

}  // namespace

std::vector<Component> components(const PlusDiagram& D) {
    std::set<Cell> left(D.pluses.begin(), D.pluses.end());
    std::vector<CellSet> comps;
    while (!left.empty()) {
        const Cell s = *left.begin();
        left.erase(left.begin());
        std::vector<Cell> stack{s}, comp{s};
        while (!stack.empty()) {
            const Cell c = stack.back();
            stack.pop_back();
            for (const Cell& d : {Cell{1, 0}, Cell{-1, 0}, Cell{0, 1}, Cell{0, -1}}) {
                auto it = left.find(c + d);
                if (it != left.end()) {
                    comp.push_back(*it);
                    stack.push_back(*it);
                    left.erase(it);
                }
            }
        }
        comps.emplace_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(), [](const CellSet& a, const CellSet& b) { return *a.begin() < *b.begin(); });
    std::vector<Component> out;
    for (std::size_t q = 0; q < comps.size(); ++q) {
        const Cell anchor = *comps[q].begin();
        for (std::size_t r = q + 1; r < comps.size(); ++r)
            for (const auto& c : comps[r])
                if (c.row <= anchor.row && c.col <= anchor.col)
                    throw StructureError("components " + std::to_string(q + 1) + " and " + std::to_string(r + 1) +
                                         " are not ordered northwest to southeast");
        out.push_back({static_cast<int>(q) + 1, comps[q]});
    }
    return out;
}

Cell psi_east(const Component& C, const Cell& b) {
    if (!C.cells.contains(b)) throw ContainmentError("cell " + to_string(b) + " is not in component " + std::to_string(C.index));
    int c = b.col;
    for (const auto& x : C.cells)
        if (x.row == b.row) c = std::max(c, x.col);
    return {b.row, c};
}

DiagonalChain max_diag(const Component& C) {
    if (C.cells.empty()) return {};
    const auto& cells = C.cells.cells();
    const auto d = depths(cells);
    const int L = *std::max_element(d.begin(), d.end());
    std::vector<char> allowed(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) allowed[i] = d[i] == L;
    return westsouth_chain(cells, allowed, L);
}

std::vector<DiagonalChain> minimizing_diag(const PlusDiagram& D) {
    const auto comps = components(D);
    std::vector<DiagonalChain> chosen(comps.size());
    std::set<int> norms;
    for (std::size_t q = comps.size(); q-- > 0;) {
        const auto& C = comps[q];
        const auto& cells = C.cells.cells();
        const auto d = depths(cells);
        const int L = *std::max_element(d.begin(), d.end());
        std::vector<int> cost(cells.size(), INT_MAX);
        int best = INT_MAX;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (d[i] != L) continue;
            const int N = norm(psi_east(C, cells[i])) + 1;
            cost[i] = static_cast<int>(std::distance(norms.lower_bound(1), norms.upper_bound(N)));
            best = std::min(best, cost[i]);
        }
        std::vector<char> allowed(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) allowed[i] = cost[i] == best;
        chosen[q] = westsouth_chain(cells, allowed, L);
        for (const auto& b : chosen[q].boxes) norms.insert(norm(b));
    }
    return chosen;
}

ZipResult zip(const Permutation& v, const Permutation& w) {
    ZipResult z;
    z.v = v;
    z.w = w;
    z.top = d_top(v, w);
    z.ell_v = v.length();
    z.ell_w = w.length();
    z.components = components(z.top);
    for (const auto& C : z.components) z.max_chains.push_back(max_diag(C));
    z.chains = minimizing_diag(z.top);

    PlusDiagram D = z.top;
    for (std::size_t q = 0; q < z.components.size(); ++q) {
        const auto& chain = z.chains[q].boxes;
        std::vector<Cell> S;
        for (const auto& b : z.components[q].cells) {
            if (std::find(chain.begin(), chain.end(), b) != chain.end()) continue;
            for (const auto& d : chain)
                if (b.row >= d.row && b.col <= d.col) {
                    S.push_back(b);
                    break;
                }
        }
        std::sort(S.begin(), S.end(), [](const Cell& a, const Cell& b) {
            return a.col != b.col ? a.col < b.col : a.row > b.row;
        });
        for (Cell b : S) {
            while (can_excite(D, b)) {
                z.slide_moves.push_back(b);
                D = apply_excited(D, b);
                b = b + kSouthWest;
            }
        }
    }
    z.zip = D;
    z.zip_k = D;
    for (const auto& ch : z.chains) {
        int sum = 0;
        for (const auto& b : ch.boxes) {
            const int k = room_in(z.zip, b);
            z.rooms[b] = k;
            sum += k;
            for (int kk = 1; kk <= k; ++kk) z.zip_k.pluses.insert(b + Cell{kk, -kk});
        }
        z.room_sums.push_back(sum);
    }
    z.degree = static_cast<int>(z.zip_k.pluses.size());
    z.regularity = z.degree - z.ell_w;
    z.a_invariant = z.degree - z.ell_v;
    return z;
}

PlusDiagram d_zip(const Permutation& v, const Permutation& w) { return zip(v, w).zip; }
PlusDiagram d_zip_k(const Permutation& v, const Permutation& w) { return zip(v, w).zip_k; }

int room(const Permutation& v, const Permutation& w, const Cell& b) {
    const auto z = zip(v, w);
    auto it = z.rooms.find(b);
    if (it == z.rooms.end()) throw ContainmentError("cell " + to_string(b) + " is not on a chosen diagonal");
    return it->second;
}

int groth_degree(const Permutation& v, const Permutation& w) { return zip(v, w).degree; }
int regularity(const Permutation& v, const Permutation& w) { return zip(v, w).regularity; }
int a_invariant(const Permutation& v, const Permutation& w) { return zip(v, w).a_invariant; }

PlusDiagram simulate_k_moves(const ZipResult& z) {
    PlusDiagram D = z.zip;
    for (const auto& ch : z.chains)
        for (const auto& b : ch.boxes) {
            Cell c = b;
            while (can_excite(D, c)) {
                D = apply_k_excited(D, c);
                c = c + kSouthWest;
            }
        }
    return D;
}

namespace {

constexpr int kNeg = INT_MIN / 4;

struct PairKey {
    Permutation v, w;
    friend bool operator==(const PairKey&, const PairKey&) = default;
};
struct PairKeyHash {
    std::size_t operator()(const PairKey& k) const noexcept {
        return PermutationHash{}(k.v) * 31u + PermutationHash{}(k.w);
    }
};

int recurse(const Permutation& v, const Permutation& w, std::unordered_map<PairKey, int, PairKeyHash>& memo) {
    if (w.is_identity()) return 0;
    if (!bruhat_leq(w, v)) return kNeg;
    const PairKey key{v, w};
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const auto top = d_top(v, w);
    const auto comp = compress(v);
    const auto lr = label_rothe(v);
    auto ne_most = [](const CellSet& s) {
        return *std::min_element(s.begin(), s.end(), [](const Cell& a, const Cell& b) {
            return a.row != b.row ? a.row < b.row : a.col > b.col;
        });
    };
    const Cell z = ne_most(top.pluses);
    const Cell zp = ne_most(comp.region.cells());
    const int ip = lr.label(comp.maps.backward.at(zp));
    const auto vP = v.left_mul(ip);
    int result;
    if (z != zp) {
        result = recurse(vP, w, memo);
    } else {
        const auto wP = w.left_mul(lr.label(comp.maps.backward.at(z)));
        const int a = wP.length() == w.length() - 1 ? recurse(vP, wP, memo) : kNeg;
        const int b = recurse(vP, w, memo);
        const int best = std::max(a, b);
        result = best <= kNeg / 2 ? kNeg : 1 + best;
    }
    memo.emplace(key, result);
    return result;
}

}  // namespace

int groth_degree_recursive(const Permutation& v, const Permutation& w) {
    require_pair(v, w);
    std::unordered_map<PairKey, int, PairKeyHash> memo;
    const int d = recurse(v, w, memo);
    if (d < 0) throw StructureError("recurrence found no diagram for the pair");
    return d;
}

}  // namespace klreg
