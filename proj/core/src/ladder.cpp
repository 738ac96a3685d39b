#include "klreg/ladder.hpp"

#include <climits>
#include <cstdio>
#include <set>

#include "klreg/pipes.hpp"

namespace klreg {

Ladder::Ladder(std::vector<int> lambda, std::vector<int> mu, std::vector<Mark> marked)
    : lambda_(std::move(lambda)), mu_(std::move(mu)), marked_(std::move(marked)) {
    if (lambda_.empty() || lambda_.front() <= 0) throw ValidationError("ladder lambda must be a nonempty partition");
    if (mu_.size() > lambda_.size()) throw ValidationError("mu has more parts than lambda");
    mu_.resize(lambda_.size(), 0);
    if (mu_.back() != 0) throw ValidationError("mu must leave the last ladder row reaching the east edge");
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        if (mu_[i] < 0) throw ValidationError("mu has a negative part");
        if (mu_[i] >= lambda_[i]) throw ValidationError("ladder row " + std::to_string(i + 1) + " is empty");
        if (i + 1 < lambda_.size() && lambda_[i + 1] <= mu_[i])
            throw ValidationError("ladder rows " + std::to_string(i + 1) + " and " + std::to_string(i + 2) + " share no column");
    }
    region_ = region_from_partitions(lambda_, mu_);
    for (const auto& m : marked_)
        if (m.r < 1) throw ValidationError("marked point rank must be positive");
}

bool Ladder::in_lambda(const Cell& c) const {
    if (c.row < 1 || c.row > rows()) return false;
    return c.col >= width() - lambda_[static_cast<std::size_t>(c.row - 1)] + 1 && c.col <= width();
}

std::vector<LatticePoint> Ladder::sw_corners() const {
    std::vector<LatticePoint> out;
    const int l = rows();
    for (int i = 1; i <= l; ++i) {
        const int li = lambda_[static_cast<std::size_t>(i - 1)];
        if (i == l || li > lambda_[static_cast<std::size_t>(i)]) out.push_back({i, width() - li});
    }
    return out;
}

std::vector<LatticePoint> Ladder::ne_corners() const {
    std::vector<LatticePoint> out{{0, width() - mu_.front()}};
    for (int i = 1; i < rows(); ++i)
        if (mu_[static_cast<std::size_t>(i - 1)] > mu_[static_cast<std::size_t>(i)])
            out.push_back({i, width() - mu_[static_cast<std::size_t>(i)]});
    return out;
}

std::vector<LatticePoint> Ladder::sw_border() const {
    std::set<LatticePoint> pts;
    const int l = rows();
    for (int i = 1; i <= l; ++i) {
        const int c = width() - lambda_[static_cast<std::size_t>(i - 1)];
        const int next = i < l ? width() - lambda_[static_cast<std::size_t>(i)] : width();
        pts.insert({i - 1, c});
        for (int y = c; y <= next; ++y) pts.insert({i, y});
    }
    return {pts.begin(), pts.end()};
}

MinimalityReport validate_minimal(const Ladder& L) {
    MinimalityReport rep;
    const auto border = L.sw_border();
    const auto& marks = L.marked();
    for (std::size_t i = 0; i < marks.size(); ++i) {
        if (!std::binary_search(border.begin(), border.end(), marks[i].point)) rep.off_border_marks.push_back(static_cast<int>(i) + 1);
        if (marks[i].r > marks[i].point.row || marks[i].r > L.width() - marks[i].point.col)
            rep.oversized_marks.push_back(static_cast<int>(i) + 1);
    }

    const auto& rows = L.region().rows();
    auto start = [&](int r) { return rows[static_cast<std::size_t>(r - 1)].first; };
    auto end = [&](int r) { return rows[static_cast<std::size_t>(r - 1)].second; };
    for (const auto& c : L.region().cells()) {
        bool covered = false;
        for (const auto& m : marks) {
            if (covered) break;
            const int pr = std::min(m.point.row, L.rows());
            if (c.row > pr || c.col < m.point.col + 1) continue;
            for (int lo = 1; lo <= c.row && !covered; ++lo)
                for (int hi = c.row; hi <= pr && !covered; ++hi) {
                    const int distinct = 1 + (lo != c.row) + (hi != c.row);
                    if (distinct > m.r || hi - lo + 1 < m.r) continue;
                    const int clo = std::max(start(hi), m.point.col + 1);
                    const int chi = std::min(end(lo), L.width());
                    if (clo <= c.col && c.col <= chi && chi - clo + 1 >= m.r) covered = true;
                }
        }
        if (!covered) rep.uncovered_cells.push_back(c);
    }
    for (std::size_t i = 0; i + 1 < marks.size(); ++i) {
        if (marks[i].point.row - marks[i].r >= marks[i + 1].point.row - marks[i + 1].r) rep.row_offset_breaks.push_back(static_cast<int>(i) + 1);
        if (marks[i].point.col - marks[i].r >= marks[i + 1].point.col - marks[i + 1].r) rep.col_offset_breaks.push_back(static_cast<int>(i) + 1);
    }
    rep.has_marks = !marks.empty();
    rep.ok = rep.structural() && rep.row_offset_breaks.empty() && rep.col_offset_breaks.empty();
    return rep;
}

std::vector<int> ladder_code(const Ladder& L) {
    std::vector<int> s;
    const auto& lam = L.lambda();
    const auto& mu = L.mu();
    for (std::size_t i = 0; i < lam.size(); ++i) {
        s.push_back(lam[i] - mu[i]);
        const int next = i + 1 < lam.size() ? lam[i + 1] : 0;
        s.insert(s.end(), static_cast<std::size_t>(lam[i] - next), 0);
    }
    return s;
}

std::vector<RankConstraint> ladder_constraints(const Ladder& L, const Permutation& v) {
    const RankMatrix rv(v);
    std::vector<RankConstraint> out;
    for (const auto& m : L.marked()) {
        const int a = norm(m.point);
        for (const auto& beta : L.ne_corners()) {
            const int b = norm(beta);
            if (a > v.n() || b > v.n()) throw ValidationError("marked point outside the ladder");
            out.push_back({a, b, std::min({a, b, rv(a, b) + m.r - 1})});
        }
    }
    return out;
}

Permutation envelope_permutation(int n, const std::vector<RankConstraint>& cons) {
    auto R = [&](int a, int b) {
        int x = std::min(a, b);
        for (const auto& c : cons) x = std::min(x, c.value + std::max(0, a - c.a) + std::max(0, b - c.b));
        return x;
    };
    std::vector<int> grid(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) grid[static_cast<std::size_t>(a * (n + 1) + b)] = R(a, b);
    auto g = [&](int a, int b) { return grid[static_cast<std::size_t>(a * (n + 1) + b)]; };
    std::vector<int> w(static_cast<std::size_t>(n), 0);
    std::vector<int> colhits(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const int d = g(i, j) - g(i - 1, j) - g(i, j - 1) + g(i - 1, j - 1);
            if (d == 0) continue;
            if (d != 1 || w[static_cast<std::size_t>(i - 1)] != 0)
                throw ConstraintError("rank envelope is not the rank matrix of a permutation");
            w[static_cast<std::size_t>(i - 1)] = j;
            ++colhits[static_cast<std::size_t>(j)];
        }
    for (int i = 1; i <= n; ++i)
        if (w[static_cast<std::size_t>(i - 1)] == 0 || colhits[static_cast<std::size_t>(i)] != 1)
            throw ConstraintError("rank envelope is not the rank matrix of a permutation");
    Permutation p(std::move(w));
    const RankMatrix rp(p);
    for (const auto& c : cons)
        if (rp(c.a, c.b) != c.value)
            throw ConstructionError("rank envelope misses constraint rank(" + std::to_string(c.a) + "," + std::to_string(c.b) +
                                    ") = " + std::to_string(c.value));
    return p;
}

PermPair perm_of(const Ladder& L) {
    const auto rep = validate_minimal(L);
    if (!rep.structural()) throw ValidationError("ladder is not minimal");
    const auto v = from_lehmer_code(ladder_code(L));
    const auto w = envelope_permutation(v.n(), ladder_constraints(L, v));
    if (!is_321_avoiding(v) || !is_321_avoiding(w) || !bruhat_leq(w, v))
        throw ConstructionError("perm_of produced a pair outside the 321-avoiding interval");
    return {v, w};
}

std::string to_string(const HalfPoint& p) {
    auto f = [](int x2) {
        std::string s = std::to_string(x2 / 2);
        if (x2 % 2) s += ".5";
        return s;
    };
    return "(" + f(p.row2) + "," + f(p.col2) + ")";
}

BoundaryPoints boundary_points(const Ladder& L) {
    constexpr int kInf = INT_MAX;
    BoundaryPoints bp;
    auto alpha = L.sw_corners();
    const int s = static_cast<int>(alpha.size());
    alpha.insert(alpha.begin(), LatticePoint{0, 0});
    alpha.push_back({L.rows(), L.width()});
    auto A = [&](int i) { return alpha[static_cast<std::size_t>(i)]; };

    auto rH = [&](int i) {
        int r = kInf;
        for (const auto& m : L.marked())
            if (m.point.row == A(i).row) r = std::min(r, m.r);
        return r;
    };
    auto rV = [&](int i) {
        int r = kInf;
        for (const auto& m : L.marked())
            if (m.point.col == A(i).col) r = std::min(r, m.r);
        return r;
    };

    bp.extended_marks = L.marked();
    auto has_point = [&](const LatticePoint& p) {
        for (const auto& m : bp.extended_marks)
            if (m.point == p) return true;
        return false;
    };
    for (int i = 1; i <= s - 1; ++i) {
        const LatticePoint corner{A(i).row, A(i + 1).col};
        if (has_point(corner)) continue;
        const int r = std::min(rH(i), rV(i + 1));
        if (r == kInf) continue;
        bp.extended_marks.push_back({corner, r});
        bp.fill_ins.push_back({corner, r});
    }
    bp.extended_marks.push_back({A(0), 1});
    bp.extended_marks.push_back({A(s + 1), 1});

    std::vector<HalfPoint> V, H;
    for (int i = 1; i <= s; ++i) {
        std::vector<Mark> mv, mh;
        for (const auto& m : bp.extended_marks) {
            if (m.point.col == A(i).col && m.point.row >= A(i - 1).row && m.point.row <= A(i).row) mv.push_back(m);
            if (m.point.row == A(i).row && m.point.col >= A(i).col && m.point.col <= A(i + 1).col) mh.push_back(m);
        }
        std::sort(mv.begin(), mv.end(), [](const Mark& a, const Mark& b) { return a.point.row < b.point.row; });
        std::sort(mh.begin(), mh.end(), [](const Mark& a, const Mark& b) { return a.point.col > b.point.col; });
        for (std::size_t j = 0; j + 1 < mv.size(); ++j) {
            const int k = mv[j + 1].r - mv[j].r;
            for (int kk = 1; kk <= k; ++kk) V.push_back({2 * mv[j].point.row + 2 * kk - 1, 2 * mv[j].point.col});
        }
        for (std::size_t j = 0; j + 1 < mh.size(); ++j) {
            const int k = mh[j + 1].r - mh[j].r;
            for (int kk = 1; kk <= k; ++kk) H.push_back({2 * mh[j].point.row, 2 * mh[j].point.col - 2 * kk + 1});
        }
    }
    if (V.size() != H.size())
        throw PairingError("boundary construction produced " + std::to_string(V.size()) + " V points and " +
                           std::to_string(H.size()) + " H points");
    std::sort(H.begin(), H.end(), [](const HalfPoint& a, const HalfPoint& b) {
        return a.col2 != b.col2 ? a.col2 > b.col2 : a.row2 > b.row2;
    });
    const std::size_t l = H.size();
    std::vector<HalfPoint> Vlab(l);
    std::vector<char> used(V.size(), 0);
    for (std::size_t i = l; i-- > 0;) {
        std::size_t pick = V.size();
        for (std::size_t t = 0; t < V.size(); ++t) {
            if (used[t] || V[t].row2 > H[i].row2 || V[t].col2 > H[i].col2) continue;
            if (pick == V.size() || V[t].row2 > V[pick].row2 || (V[t].row2 == V[pick].row2 && V[t].col2 > V[pick].col2)) pick = t;
        }
        if (pick == V.size()) throw PairingError("no V point lies northwest of H_" + std::to_string(i + 1) + " = " + to_string(H[i]));
        used[pick] = 1;
        Vlab[i] = V[pick];
    }
    bp.H = std::move(H);
    bp.V = std::move(Vlab);
    return bp;
}

}  // namespace klreg
