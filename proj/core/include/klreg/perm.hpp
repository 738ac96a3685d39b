#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "klreg/errors.hpp"

namespace klreg {

// Matrix position, (1,1) is northwest.
struct Cell {
    int row = 0;
    int col = 0;
    friend constexpr auto operator<=>(const Cell&, const Cell&) = default;
    friend constexpr bool operator==(const Cell&, const Cell&) = default;
    constexpr Cell operator+(const Cell& o) const { return {row + o.row, col + o.col}; }
};

std::string to_string(const Cell& c);

struct CellHash {
    std::size_t operator()(const Cell& c) const noexcept {
        return std::hash<long long>{}((static_cast<long long>(c.row) << 32) ^ static_cast<unsigned>(c.col));
    }
};

// Sorted, duplicate-free set of cells. Iteration is row-major.
class CellSet {
public:
    using const_iterator = std::vector<Cell>::const_iterator;

    CellSet() = default;
    CellSet(std::initializer_list<Cell> cells) : cells_(cells) { normalize(); }
    explicit CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) { normalize(); }

    bool contains(const Cell& c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }
    bool insert(const Cell& c) {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
        if (it != cells_.end() && *it == c) return false;
        cells_.insert(it, c);
        return true;
    }
    bool erase(const Cell& c) {
        auto it = std::lower_bound(cells_.begin(), cells_.end(), c);
        if (it == cells_.end() || *it != c) return false;
        cells_.erase(it);
        return true;
    }
    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const_iterator begin() const { return cells_.begin(); }
    const_iterator end() const { return cells_.end(); }
    const std::vector<Cell>& cells() const { return cells_; }
    bool subset_of(const CellSet& o) const {
        return std::includes(o.cells_.begin(), o.cells_.end(), cells_.begin(), cells_.end());
    }

    friend bool operator==(const CellSet&, const CellSet&) = default;
    friend auto operator<=>(const CellSet& a, const CellSet& b) { return a.cells_ <=> b.cells_; }

private:
    void normalize() {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }
    std::vector<Cell> cells_;
};

CellSet set_union(const CellSet& a, const CellSet& b);
CellSet set_difference(const CellSet& a, const CellSet& b);

// Permutation of [n] in one-line notation, 1-indexed.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);
    Permutation(std::initializer_list<int> word) : Permutation(std::vector<int>(word)) {}
    static Permutation identity(int n);

    int n() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    int length() const;
    bool is_identity() const;
    // u * s_i swaps positions i and i+1; s_i * u swaps values i and i+1.
    Permutation right_mul(int i) const;
    Permutation left_mul(int i) const;
    // Product (this * o)(k) = this(o(k)).
    Permutation compose(const Permutation& o) const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.word_ <=> b.word_; }

private:
    std::vector<int> word_;
};

// Compact rendering: space separated values.
std::string to_string(const Permutation& u);

struct PermutationHash {
    std::size_t operator()(const Permutation& u) const noexcept;
};

// Prefix counts rank_u(i,j) for 0 <= i,j <= n.
class RankMatrix {
public:
    explicit RankMatrix(const Permutation& u);
    int n() const { return n_; }
    int operator()(int i, int j) const { return r_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }

private:
    int n_ = 0;
    std::vector<int> r_;
};

int rank(const Permutation& u, int i, int j);
CellSet rothe_diagram(const Permutation& u);
int coxeter_length(const Permutation& u);
std::vector<int> lehmer_code(const Permutation& u);
Permutation from_lehmer_code(const std::vector<int>& code);
bool is_321_avoiding(const Permutation& u);
// Every 321-avoiding permutation of [n], in lexicographic order.
std::vector<Permutation> all_321_avoiding(int n);
bool is_grassmannian(const Permutation& u);
Permutation demazure_step(const Permutation& u, int i);
Permutation demazure_product(int n, const std::vector<int>& word);
// True iff u <= w in Bruhat order, i.e. rank_u dominates rank_w entrywise.
bool bruhat_leq(const Permutation& u, const Permutation& w);

}  // namespace klreg
