#include "klreg/pipes.hpp"

namespace klreg {

int LabeledRothe::label(const Cell& c) const {
    auto it = labels.find(c);
    if (it == labels.end()) throw ContainmentError("cell " + to_string(c) + " is not in D(v)");
    return it->second;
}

LabeledRothe label_rothe(const Permutation& v) {
    LabeledRothe lr{v, {}, {}};
    const auto D = rothe_diagram(v);
    int row = 0, k = 0;
    for (const auto& c : D) {
        if (c.row != row) {
            row = c.row;
            k = 0;
        }
        lr.labels[c] = c.row + k++;
    }
    const auto& cells = D.cells();
    std::size_t s = 0;
    while (s < cells.size()) {
        std::size_t e = s;
        while (e < cells.size() && cells[e].row == cells[s].row) ++e;
        for (std::size_t t = e; t > s; --t) lr.reading_order.push_back(cells[t - 1]);
        s = e;
    }
    return lr;
}

std::vector<int> reading_word(const Permutation& v, const CellSet& P) {
    const auto lr = label_rothe(v);
    for (const auto& c : P)
        if (!lr.labels.count(c)) throw ContainmentError("cell " + to_string(c) + " is not in D(v)");
    std::vector<int> word;
    for (const auto& c : lr.reading_order)
        if (P.contains(c)) word.push_back(lr.labels.at(c));
    return word;
}

Permutation delta(const Permutation& v, const CellSet& P) { return demazure_product(v.n(), reading_word(v, P)); }

void require_pair(const Permutation& v, const Permutation& w) {
    if (v.n() != w.n()) throw ValidationError("v and w have different sizes");
    if (!is_321_avoiding(v)) throw PatternError("v = " + to_string(v) + " contains a 321 pattern");
    if (!is_321_avoiding(w)) throw PatternError("w = " + to_string(w) + " contains a 321 pattern");
    if (!bruhat_leq(w, v)) throw IncomparableError("incomparable pair: w = " + to_string(w) + " is not below v = " + to_string(v));
}

CellSet d_ne(const Permutation& v, const Permutation& w) {
    require_pair(v, w);
    const int n = v.n();
    const auto lr = label_rothe(v);
    const auto& order = lr.reading_order;
    const std::size_t m = order.size();

    // suffix[p] = Demazure product of the letters at positions p..m-1, built by left steps.
    std::vector<Permutation> suffix(m + 1, Permutation::identity(n));
    for (std::size_t p = m; p > 0; --p) {
        const int a = lr.labels.at(order[p - 1]);
        const auto& u = suffix[p];
        const auto ui = u.inverse();
        suffix[p - 1] = ui(a) < ui(a + 1) ? u.left_mul(a) : u;
    }

    const int lw = w.length();
    auto u = Permutation::identity(n);
    int lu = 0;
    CellSet out;
    for (std::size_t p = 0; p < m && u != w; ++p) {
        const int a = lr.labels.at(order[p]);
        if (u(a) > u(a + 1)) continue;
        const auto us = u.right_mul(a);
        const auto rest = us.inverse().compose(w);
        if (lu + 1 + rest.length() != lw) continue;
        if (!bruhat_leq(rest, suffix[p + 1])) continue;
        u = us;
        ++lu;
        out.insert(order[p]);
    }
    if (u != w) throw StructureError("no reduced subword for w found in the reading word of D(v)");
    return out;
}

}  // namespace klreg
