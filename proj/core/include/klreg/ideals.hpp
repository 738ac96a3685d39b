#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "klreg/ladder.hpp"

namespace klreg {

// A monomial is a sorted multiset of variables; variable (i,j) prints as z_i_j.
using Monomial = std::vector<Cell>;

class SparsePolynomial {
public:
    SparsePolynomial() = default;
    static SparsePolynomial constant(long long c);
    static SparsePolynomial variable(const Cell& v);

    const std::map<Monomial, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    bool is_homogeneous() const;
    bool is_multilinear() const;
    std::set<Cell> variables() const;

    SparsePolynomial operator+(const SparsePolynomial& o) const;
    SparsePolynomial operator-(const SparsePolynomial& o) const;
    SparsePolynomial operator*(const SparsePolynomial& o) const;
    SparsePolynomial operator-() const;

    // Global sign flipped so the leading term (graded lex) has positive coefficient.
    SparsePolynomial sign_normalized() const;

    friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;
    friend bool operator<(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ < b.terms_; }

private:
    void add_term(const Monomial& m, long long c);
    std::map<Monomial, long long> terms_;
};

std::string to_string(const SparsePolynomial& p);

struct Entry {
    enum class Kind { Zero, One, Var } kind = Kind::Zero;
    Cell var{};
};

// Dense square matrix of symbolic entries.
using SymbolicMatrix = std::vector<std::vector<Entry>>;

SparsePolynomial determinant(const SymbolicMatrix& m);

// M^(v): ones at (i, v_i), variables on D(v), zeros elsewhere. Variables named by `names`,
// or by their own Rothe coordinates when the map is empty.
SymbolicMatrix kl_matrix(const Permutation& v, const std::map<Cell, Cell>& names = {});

using GeneratorSet = std::set<SparsePolynomial>;

// Generators after eliminating the unit pivots of M^(v): for (i,j) in D(w), the
// (rank_w - rank_v + 1)-minors of the all-variable block of M^(v)_{[i],[j]}.
GeneratorSet kl_generators(const Permutation& v, const Permutation& w, const std::map<Cell, Cell>& names = {});
// Every (rank_w(i,j)+1)-minor of M^(v)_{[i],[j]} over D(w), expanded literally.
GeneratorSet kl_generators_raw(const Permutation& v, const Permutation& w, const std::map<Cell, Cell>& names = {},
                               std::size_t budget = 200000);
// kl_generators with variables renamed into compressed (ladder) coordinates.
GeneratorSet kl_generators_compressed(const Permutation& v, const Permutation& w);

enum class MinorConvention { InsideLadder, ZeroFill };
GeneratorSet ladder_generators(const Ladder& L, MinorConvention conv = MinorConvention::InsideLadder);

// Membership of a homogeneous f in the ideal of homogeneous generators, by linear algebra
// in the degree of f over a large prime field.
bool homogeneous_ideal_contains(const GeneratorSet& gens, const SparsePolynomial& f);
bool homogeneous_ideals_equal(const GeneratorSet& a, const GeneratorSet& b);

struct KPolynomial {
    std::vector<long long> coeffs;  // coeffs[d] multiplies t^d
    int degree() const;
    long long at_zero() const { return coeffs.empty() ? 0 : coeffs.front(); }
};
std::string to_string(const KPolynomial& k);

KPolynomial k_polynomial(const Permutation& v, const Permutation& w, std::size_t budget = 1000000);

std::string export_plain(const GeneratorSet& gens);
std::string export_macaulay2(const GeneratorSet& gens, const std::string& ideal_name = "I");

}  // namespace klreg
