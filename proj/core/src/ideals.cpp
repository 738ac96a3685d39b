#include "klreg/ideals.hpp"

#include <cstdint>
#include <functional>
#include <unordered_map>

#include "klreg/oracle.hpp"
#include "klreg/pipes.hpp"

namespace klreg {

namespace {

// Graded order: higher degree first, then lexicographically smaller variable lists.
bool mono_greater(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

template <typename F>
void for_each_subset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::string var_name(const Cell& c) { return "z_" + std::to_string(c.row) + "_" + std::to_string(c.col); }

}  // namespace

SparsePolynomial SparsePolynomial::constant(long long c) {
    SparsePolynomial p;
    p.add_term({}, c);
    return p;
}

SparsePolynomial SparsePolynomial::variable(const Cell& v) {
    SparsePolynomial p;
    p.add_term({v}, 1);
    return p;
}

void SparsePolynomial::add_term(const Monomial& m, long long c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

int SparsePolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
    return d;
}

bool SparsePolynomial::is_homogeneous() const {
    const int d = degree();
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.size()) != d) return false;
    return true;
}

bool SparsePolynomial::is_multilinear() const {
    for (const auto& [m, c] : terms_)
        if (std::adjacent_find(m.begin(), m.end()) != m.end()) return false;
    return true;
}

std::set<Cell> SparsePolynomial::variables() const {
    std::set<Cell> out;
    for (const auto& [m, c] : terms_) out.insert(m.begin(), m.end());
    return out;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& o) const {
    SparsePolynomial r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& o) const { return *this + (-o); }

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& o) const {
    SparsePolynomial r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            r.add_term(m, ca * cb);
        }
    return r;
}

SparsePolynomial SparsePolynomial::sign_normalized() const {
    if (terms_.empty()) return *this;
    auto lead = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end(); ++it)
        if (mono_greater(it->first, lead->first)) lead = it;
    return lead->second < 0 ? -*this : *this;
}

std::string to_string(const SparsePolynomial& p) {
    if (p.is_zero()) return "0";
    std::vector<std::pair<Monomial, long long>> terms(p.terms().begin(), p.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return mono_greater(a.first, b.first); });
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms) {
        long long mag = c < 0 ? -c : c;
        if (first) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        first = false;
        std::string body;
        for (const auto& v : m) body += (body.empty() ? "" : "*") + var_name(v);
        if (body.empty()) s += std::to_string(mag);
        else if (mag == 1) s += body;
        else s += std::to_string(mag) + "*" + body;
    }
    return s;
}

SparsePolynomial determinant(const SymbolicMatrix& m) {
    const int k = static_cast<int>(m.size());
    if (k == 0) return SparsePolynomial::constant(1);
    if (k > 20) throw RangeError("minor too large for exact expansion");
    std::unordered_map<std::uint32_t, SparsePolynomial> memo;
    // Expand along row r using the columns still available in `mask`.
    std::function<SparsePolynomial(int, std::uint32_t)> rec = [&](int r, std::uint32_t mask) -> SparsePolynomial {
        if (r == k) return SparsePolynomial::constant(1);
        if (auto it = memo.find(mask); it != memo.end()) return it->second;
        SparsePolynomial acc;
        int sign = 1;
        for (int c = 0; c < k; ++c) {
            if (!(mask & (1u << c))) continue;
            const auto& e = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (e.kind != Entry::Kind::Zero) {
                auto sub = rec(r + 1, mask & ~(1u << c));
                if (!sub.is_zero()) {
                    if (e.kind == Entry::Kind::Var) sub = SparsePolynomial::variable(e.var) * sub;
                    acc = sign > 0 ? acc + sub : acc - sub;
                }
            }
            sign = -sign;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(0, (k == 32 ? 0u : (1u << k)) - 1u);
}

SymbolicMatrix kl_matrix(const Permutation& v, const std::map<Cell, Cell>& names) {
    const int n = v.n();
    const auto D = rothe_diagram(v);
    SymbolicMatrix M(static_cast<std::size_t>(n), std::vector<Entry>(static_cast<std::size_t>(n)));
    for (int i = 1; i <= n; ++i) M[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(v(i) - 1)].kind = Entry::Kind::One;
    for (const auto& c : D) {
        auto& e = M[static_cast<std::size_t>(c.row - 1)][static_cast<std::size_t>(c.col - 1)];
        e.kind = Entry::Kind::Var;
        auto it = names.find(c);
        e.var = it == names.end() ? c : it->second;
    }
    return M;
}

GeneratorSet kl_generators_raw(const Permutation& v, const Permutation& w, const std::map<Cell, Cell>& names, std::size_t budget) {
    if (v.n() != w.n()) throw ValidationError("v and w have different sizes");
    if (!bruhat_leq(w, v)) throw IncomparableError("incomparable pair: w is not below v");
    const auto M = kl_matrix(v, names);
    const RankMatrix rw(w);
    GeneratorSet out;
    std::size_t minors = 0;
    for (const auto& c : rothe_diagram(w)) {
        const int k = rw(c.row, c.col) + 1;
        for_each_subset(c.row, k, [&](const std::vector<int>& rs) {
            for_each_subset(c.col, k, [&](const std::vector<int>& cs) {
                if (++minors > budget) throw ResourceError("minor expansion exceeded budget", minors);
                SymbolicMatrix sub(static_cast<std::size_t>(k), std::vector<Entry>(static_cast<std::size_t>(k)));
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b)
                        sub[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                            M[static_cast<std::size_t>(rs[static_cast<std::size_t>(a)])][static_cast<std::size_t>(cs[static_cast<std::size_t>(b)])];
                auto d = determinant(sub);
                if (!d.is_zero()) out.insert(d.sign_normalized());
            });
        });
    }
    return out;
}

GeneratorSet kl_generators(const Permutation& v, const Permutation& w, const std::map<Cell, Cell>& names) {
    if (v.n() != w.n()) throw ValidationError("v and w have different sizes");
    if (!bruhat_leq(w, v)) throw IncomparableError("incomparable pair: w is not below v");
    // Pivot elimination is exact only when v avoids 321.
    if (!is_321_avoiding(v)) return kl_generators_raw(v, w, names);
    const auto vi = v.inverse();
    const RankMatrix rv(v), rw(w);
    auto name = [&](const Cell& c) {
        auto it = names.find(c);
        return it == names.end() ? c : it->second;
    };
    GeneratorSet out;
    for (const auto& c : rothe_diagram(w)) {
        std::vector<int> rows, cols;
        for (int a = 1; a <= c.row; ++a)
            if (v(a) > c.col) rows.push_back(a);
        for (int b = 1; b <= c.col; ++b)
            if (vi(b) > c.row) cols.push_back(b);
        const int k = rw(c.row, c.col) - rv(c.row, c.col) + 1;
        for_each_subset(static_cast<int>(rows.size()), k, [&](const std::vector<int>& rs) {
            for_each_subset(static_cast<int>(cols.size()), k, [&](const std::vector<int>& cs) {
                SymbolicMatrix sub(static_cast<std::size_t>(k), std::vector<Entry>(static_cast<std::size_t>(k)));
                for (int a = 0; a < k; ++a)
                    for (int b = 0; b < k; ++b) {
                        auto& e = sub[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                        e.kind = Entry::Kind::Var;
                        e.var = name({rows[static_cast<std::size_t>(rs[static_cast<std::size_t>(a)])],
                                      cols[static_cast<std::size_t>(cs[static_cast<std::size_t>(b)])]});
                    }
                auto d = determinant(sub);
                if (!d.is_zero()) out.insert(d.sign_normalized());
            });
        });
    }
    return out;
}

GeneratorSet kl_generators_compressed(const Permutation& v, const Permutation& w) {
    return kl_generators(v, w, compress(v).maps.forward);
}

GeneratorSet ladder_generators(const Ladder& L, MinorConvention conv) {
    if (!validate_minimal(L).structural()) throw ValidationError("ladder is not minimal");
    GeneratorSet out;
    for (const auto& m : L.marked()) {
        const int nr = std::min(m.point.row, L.rows());
        const int c0 = m.point.col + 1;
        const int nc = L.width() - m.point.col;
        for_each_subset(nr, m.r, [&](const std::vector<int>& rs) {
            for_each_subset(nc, m.r, [&](const std::vector<int>& cs) {
                SymbolicMatrix sub(static_cast<std::size_t>(m.r), std::vector<Entry>(static_cast<std::size_t>(m.r)));
                for (int a = 0; a < m.r; ++a)
                    for (int b = 0; b < m.r; ++b) {
                        const Cell c{rs[static_cast<std::size_t>(a)] + 1, c0 + cs[static_cast<std::size_t>(b)]};
                        auto& e = sub[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                        if (L.region().contains(c)) {
                            e.kind = Entry::Kind::Var;
                            e.var = c;
                        } else if (conv == MinorConvention::InsideLadder) {
                            return;
                        }
                    }
                auto d = determinant(sub);
                if (!d.is_zero()) out.insert(d.sign_normalized());
            });
        });
    }
    return out;
}

namespace {

constexpr std::uint64_t kPrime = 2147483647ull;

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= kPrime;
    while (e) {
        if (e & 1) r = r * b % kPrime;
        b = b * b % kPrime;
        e >>= 1;
    }
    return r;
}

using ModVec = std::map<Monomial, std::uint64_t>;

ModVec to_mod(const SparsePolynomial& p, const Monomial& shift) {
    ModVec v;
    for (const auto& [m, c] : p.terms()) {
        Monomial mm;
        std::merge(m.begin(), m.end(), shift.begin(), shift.end(), std::back_inserter(mm));
        const long long r = c % static_cast<long long>(kPrime);
        v[mm] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<long long>(kPrime) : r);
    }
    return v;
}

class Echelon {
public:
    // Reduces v against the stored pivots; returns the remainder.
    ModVec reduce(ModVec v) const {
        while (!v.empty()) {
            auto lead = std::prev(v.end());
            auto it = pivots_.find(lead->first);
            if (it == pivots_.end()) return v;
            const std::uint64_t f = lead->second;
            for (const auto& [m, c] : it->second) {
                auto& slot = v[m];
                slot = (slot + kPrime - f * c % kPrime) % kPrime;
                if (slot == 0) v.erase(m);
            }
        }
        return v;
    }
    void add(ModVec v) {
        v = reduce(std::move(v));
        if (v.empty()) return;
        const auto lead = std::prev(v.end())->first;
        const std::uint64_t inv = mod_pow(std::prev(v.end())->second, kPrime - 2);
        for (auto& [m, c] : v) c = c * inv % kPrime;
        pivots_.emplace(lead, std::move(v));
    }

private:
    std::map<Monomial, ModVec> pivots_;
};

void monomials_of_degree(const std::vector<Cell>& vars, int d, std::size_t from, Monomial& cur, std::vector<Monomial>& out) {
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < vars.size(); ++i) {
        cur.push_back(vars[i]);
        monomials_of_degree(vars, d - 1, i, cur, out);
        cur.pop_back();
    }
}

}  // namespace

bool homogeneous_ideal_contains(const GeneratorSet& gens, const SparsePolynomial& f) {
    if (f.is_zero()) return true;
    if (!f.is_homogeneous()) throw ValidationError("membership test needs a homogeneous polynomial");
    const int d = f.degree();
    std::set<Cell> vs = f.variables();
    for (const auto& g : gens) {
        if (!g.is_homogeneous()) throw ValidationError("membership test needs homogeneous generators");
        const auto gv = g.variables();
        vs.insert(gv.begin(), gv.end());
    }
    const std::vector<Cell> vars(vs.begin(), vs.end());
    Echelon ech;
    for (const auto& g : gens) {
        if (g.is_zero() || g.degree() > d) continue;
        std::vector<Monomial> shifts;
        Monomial cur;
        monomials_of_degree(vars, d - g.degree(), 0, cur, shifts);
        for (const auto& s : shifts) ech.add(to_mod(g, s));
    }
    return ech.reduce(to_mod(f, {})).empty();
}

bool homogeneous_ideals_equal(const GeneratorSet& a, const GeneratorSet& b) {
    for (const auto& f : a)
        if (!homogeneous_ideal_contains(b, f)) return false;
    for (const auto& f : b)
        if (!homogeneous_ideal_contains(a, f)) return false;
    return true;
}

int KPolynomial::degree() const {
    for (std::size_t d = coeffs.size(); d-- > 0;)
        if (coeffs[d] != 0) return static_cast<int>(d);
    return -1;
}

std::string to_string(const KPolynomial& k) {
    std::string s;
    for (std::size_t d = 0; d < k.coeffs.size(); ++d) {
        const long long c = k.coeffs[d];
        if (c == 0) continue;
        const long long mag = c < 0 ? -c : c;
        if (s.empty()) s += c < 0 ? "-" : "";
        else s += c < 0 ? " - " : " + ";
        if (d == 0 || mag != 1) s += std::to_string(mag);
        if (d >= 1) s += (d == 0 || mag != 1 ? "*" : "") + std::string("t");
        if (d >= 2) s += "^" + std::to_string(d);
    }
    return s.empty() ? "0" : s;
}

KPolynomial k_polynomial(const Permutation& v, const Permutation& w, std::size_t budget) {
    require_pair(v, w);
    const auto pipes = enumerate_pipes(v, w, false, budget);
    const int lw = w.length();
    std::size_t maxp = 0;
    for (const auto& P : pipes) maxp = std::max(maxp, P.size());
    std::vector<long long> by_size(maxp + 1, 0);
    for (const auto& P : pipes) by_size[P.size()] += ((static_cast<int>(P.size()) - lw) % 2 == 0) ? 1 : -1;
    KPolynomial K;
    K.coeffs.assign(maxp + 1, 0);
    for (std::size_t m = 0; m <= maxp; ++m) {
        if (by_size[m] == 0) continue;
        long long binom = 1;
        for (std::size_t k = 0; k <= m; ++k) {
            K.coeffs[k] += by_size[m] * binom * ((k % 2) ? -1 : 1);
            binom = binom * static_cast<long long>(m - k) / static_cast<long long>(k + 1);
        }
    }
    while (!K.coeffs.empty() && K.coeffs.back() == 0) K.coeffs.pop_back();
    return K;
}

std::string export_plain(const GeneratorSet& gens) {
    std::string s;
    for (const auto& g : gens) s += to_string(g) + "\n";
    return s;
}

std::string export_macaulay2(const GeneratorSet& gens, const std::string& ideal_name) {
    std::set<Cell> vs;
    for (const auto& g : gens) {
        const auto gv = g.variables();
        vs.insert(gv.begin(), gv.end());
    }
    std::string s = "R = QQ[";
    bool first = true;
    for (const auto& v : vs) {
        s += (first ? "" : ", ") + var_name(v);
        first = false;
    }
    s += "];\n" + ideal_name + " = ideal(";
    first = true;
    for (const auto& g : gens) {
        s += (first ? "\n  " : ",\n  ") + to_string(g);
        first = false;
    }
    s += "\n);\n";
    return s;
}

}  // namespace klreg
