#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "klreg/ladder.hpp"
#include "klreg/skew.hpp"

namespace klreg {

inline constexpr std::size_t kDefaultBudget = 1000000;

struct ClosureSet {
    SkewRegion region;
    std::vector<CellSet> diagrams;  // breadth-first discovery order, starting at D_top
    std::size_t max_size = 0;
    std::size_t min_size = 0;
    std::size_t levels = 0;

    std::vector<CellSet> slice(std::size_t size) const;
};

// All diagrams reachable from D_top by excited moves, and K-moves when `k_moves` is set.
ClosureSet closure(const Permutation& v, const Permutation& w, std::size_t budget = kDefaultBudget, bool k_moves = true);

// Closure elements pulled back to D(v), each with sign (-1)^{#P - l(w)}.
std::vector<std::pair<CellSet, int>> groth_support(const Permutation& v, const Permutation& w,
                                                   std::size_t budget = kDefaultBudget);

// Subsets P of D(v) with Demazure product w; only the l(w)-element ones when `reduced_only`.
std::vector<CellSet> enumerate_pipes(const Permutation& v, const Permutation& w, bool reduced_only,
                                     std::size_t budget = kDefaultBudget);

CellSet brute_earliest_subword(const Permutation& v, const Permutation& w, std::size_t budget = kDefaultBudget);

Permutation brute_minimal_w(int n, const std::vector<RankConstraint>& constraints);

std::vector<PathFamily> enumerate_nilp(const Ladder& L, std::size_t budget = kDefaultBudget);

}  // namespace klreg
