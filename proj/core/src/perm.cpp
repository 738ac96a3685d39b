#include "klreg/perm.hpp"

#include <numeric>

namespace klreg {

const char* error_kind_name(ErrorKind k) noexcept {
    switch (k) {
        case ErrorKind::Parse: return "parse";
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Range: return "range";
        case ErrorKind::Pattern: return "pattern";
        case ErrorKind::Incomparable: return "incomparable";
        case ErrorKind::Containment: return "containment";
        case ErrorKind::MoveNotApplicable: return "move-not-applicable";
        case ErrorKind::Structure: return "structure";
        case ErrorKind::InconsistentConstraints: return "inconsistent-constraints";
        case ErrorKind::Construction: return "construction";
        case ErrorKind::Pairing: return "pairing";
        case ErrorKind::Infeasible: return "infeasible";
        case ErrorKind::Membership: return "membership";
        case ErrorKind::Resource: return "resource";
    }
    return "unknown";
}

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

CellSet set_union(const CellSet& a, const CellSet& b) {
    std::vector<Cell> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return CellSet(std::move(out));
}

CellSet set_difference(const CellSet& a, const CellSet& b) {
    std::vector<Cell> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return CellSet(std::move(out));
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    const int n = static_cast<int>(word_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int x : word_) {
        if (x < 1 || x > n) throw ValidationError("permutation entry " + std::to_string(x) + " outside [1," + std::to_string(n) + "]");
        if (seen[static_cast<std::size_t>(x)]) throw ValidationError("permutation repeats entry " + std::to_string(x));
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> r(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i) r[static_cast<std::size_t>(word_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(r));
}

int Permutation::length() const {
    int inv = 0;
    for (std::size_t i = 0; i < word_.size(); ++i)
        for (std::size_t j = i + 1; j < word_.size(); ++j)
            if (word_[i] > word_[j]) ++inv;
    return inv;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < word_.size(); ++i)
        if (word_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

Permutation Permutation::right_mul(int i) const {
    if (i < 1 || i >= n()) throw RangeError("generator s_" + std::to_string(i) + " out of range for n=" + std::to_string(n()));
    auto w = word_;
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
    return Permutation(std::move(w));
}

Permutation Permutation::left_mul(int i) const {
    if (i < 1 || i >= n()) throw RangeError("generator s_" + std::to_string(i) + " out of range for n=" + std::to_string(n()));
    auto w = word_;
    for (int& x : w) {
        if (x == i) x = i + 1;
        else if (x == i + 1) x = i;
    }
    return Permutation(std::move(w));
}

Permutation Permutation::compose(const Permutation& o) const {
    if (o.n() != n()) throw ValidationError("size mismatch in composition");
    std::vector<int> w(word_.size());
    for (int k = 1; k <= n(); ++k) w[static_cast<std::size_t>(k - 1)] = (*this)(o(k));
    return Permutation(std::move(w));
}

std::string to_string(const Permutation& u) {
    std::string s;
    for (int i = 1; i <= u.n(); ++i) {
        if (i > 1) s += ' ';
        s += std::to_string(u(i));
    }
    return s;
}

std::size_t PermutationHash::operator()(const Permutation& u) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : u.word()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
}

RankMatrix::RankMatrix(const Permutation& u) : n_(u.n()), r_(static_cast<std::size_t>((u.n() + 1) * (u.n() + 1)), 0) {
    const int m = n_ + 1;
    for (int i = 1; i <= n_; ++i)
        for (int j = 1; j <= n_; ++j)
            r_[static_cast<std::size_t>(i * m + j)] =
                r_[static_cast<std::size_t>((i - 1) * m + j)] + r_[static_cast<std::size_t>(i * m + j - 1)] -
                r_[static_cast<std::size_t>((i - 1) * m + j - 1)] + (u(i) == j ? 1 : 0);
}

int rank(const Permutation& u, int i, int j) {
    if (i < 1 || j < 1 || i > u.n() || j > u.n())
        throw RangeError("rank index " + to_string(Cell{i, j}) + " outside [1," + std::to_string(u.n()) + "]^2");
    int c = 0;
    for (int k = 1; k <= i; ++k)
        if (u(k) <= j) ++c;
    return c;
}

CellSet rothe_diagram(const Permutation& u) {
    const auto ui = u.inverse();
    std::vector<Cell> cells;
    for (int i = 1; i <= u.n(); ++i)
        for (int j = 1; j < u(i); ++j)
            if (ui(j) > i) cells.push_back({i, j});
    return CellSet(std::move(cells));
}

int coxeter_length(const Permutation& u) { return u.length(); }

std::vector<int> lehmer_code(const Permutation& u) {
    std::vector<int> c(static_cast<std::size_t>(u.n()), 0);
    for (int i = 1; i <= u.n(); ++i)
        for (int j = i + 1; j <= u.n(); ++j)
            if (u(j) < u(i)) ++c[static_cast<std::size_t>(i - 1)];
    return c;
}

Permutation from_lehmer_code(const std::vector<int>& code) {
    const int n = static_cast<int>(code.size());
    std::vector<int> avail(static_cast<std::size_t>(n));
    std::iota(avail.begin(), avail.end(), 1);
    std::vector<int> w;
    w.reserve(code.size());
    for (int i = 0; i < n; ++i) {
        const int c = code[static_cast<std::size_t>(i)];
        if (c < 0 || c > n - 1 - i)
            throw ValidationError("invalid Lehmer code: entry " + std::to_string(i + 1) + " is " + std::to_string(c) +
                                  ", must lie in [0," + std::to_string(n - 1 - i) + "]");
        w.push_back(avail[static_cast<std::size_t>(c)]);
        avail.erase(avail.begin() + c);
    }
    return Permutation(std::move(w));
}

bool is_321_avoiding(const Permutation& u) {
    // A 321 pattern exists iff some middle entry has a larger entry before and a smaller one after.
    const int n = u.n();
    std::vector<int> sufmin(static_cast<std::size_t>(n) + 2, n + 1);
    for (int k = n; k >= 1; --k) sufmin[static_cast<std::size_t>(k)] = std::min(sufmin[static_cast<std::size_t>(k + 1)], u(k));
    int premax = 0;
    for (int j = 1; j <= n; ++j) {
        if (premax > u(j) && sufmin[static_cast<std::size_t>(j + 1)] < u(j)) return false;
        premax = std::max(premax, u(j));
    }
    return true;
}

std::vector<Permutation> all_321_avoiding(int n) {
    if (n < 0) throw RangeError("negative permutation size");
    std::vector<Permutation> out;
    std::vector<int> word;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    // An entry closes a 321 iff it is below some earlier entry that already has a larger one before it.
    auto extend = [&](auto&& self, int premax, int inv_max) -> void {
        if (static_cast<int>(word.size()) == n) {
            out.emplace_back(word);
            return;
        }
        for (int x = 1; x <= n; ++x) {
            if (used[static_cast<std::size_t>(x)] || x < inv_max) continue;
            used[static_cast<std::size_t>(x)] = 1;
            word.push_back(x);
            self(self, std::max(premax, x), premax > x ? std::max(inv_max, x) : inv_max);
            word.pop_back();
            used[static_cast<std::size_t>(x)] = 0;
        }
    };
    extend(extend, 0, 0);
    return out;
}

bool is_grassmannian(const Permutation& u) {
    int descents = 0;
    for (int i = 1; i < u.n(); ++i)
        if (u(i) > u(i + 1)) ++descents;
    return descents <= 1;
}

Permutation demazure_step(const Permutation& u, int i) {
    if (i < 1 || i >= u.n()) throw RangeError("generator s_" + std::to_string(i) + " out of range for n=" + std::to_string(u.n()));
    return u(i) < u(i + 1) ? u.right_mul(i) : u;
}

Permutation demazure_product(int n, const std::vector<int>& word) {
    auto w = Permutation::identity(n).word();
    for (int a : word) {
        if (a < 1 || a >= n) throw RangeError("generator s_" + std::to_string(a) + " out of range for n=" + std::to_string(n));
        auto& x = w[static_cast<std::size_t>(a - 1)];
        auto& y = w[static_cast<std::size_t>(a)];
        if (x < y) std::swap(x, y);
    }
    return Permutation(std::move(w));
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
    if (u.n() != w.n()) throw ValidationError("Bruhat comparison of permutations of different sizes");
    const RankMatrix ru(u), rw(w);
    for (int i = 1; i <= u.n(); ++i)
        for (int j = 1; j <= u.n(); ++j)
            if (ru(i, j) < rw(i, j)) return false;
    return true;
}

}  // namespace klreg
