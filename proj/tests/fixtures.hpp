#pragma once

#include <vector>

#include "klreg/klreg.hpp"

namespace fx {

using klreg::Cell;
using klreg::CellSet;
using klreg::Ladder;
using klreg::Mark;
using klreg::Permutation;

// Rothe-diagram running example (pipe sets and D_top).
inline Permutation running_v() { return Permutation{4, 6, 1, 2, 8, 9, 3, 5, 10, 7}; }
inline Permutation running_w() { return Permutation{4, 1, 2, 3, 6, 8, 5, 9, 7, 10}; }

// Introduction example in S_11.
inline Permutation intro_v() { return Permutation{5, 8, 9, 10, 1, 2, 11, 3, 4, 6, 7}; }
inline Permutation intro_w() { return Permutation{1, 4, 5, 8, 2, 3, 9, 6, 10, 11, 7}; }

// Two-component S_16 example.
inline Permutation s16_v() { return Permutation{6, 11, 12, 13, 14, 15, 1, 16, 2, 3, 4, 5, 7, 8, 9, 10}; }
inline Permutation s16_w() { return Permutation{1, 6, 2, 3, 7, 8, 11, 12, 4, 5, 9, 10, 13, 14, 15, 16}; }

inline Ladder two_sided() { return Ladder({5, 5, 5, 5, 2, 2}, {2, 1}, {{{4, 0}, 3}, {{4, 2}, 2}, {{6, 3}, 2}}); }

inline Ladder large_ladder() {
    return Ladder({10, 10, 10, 10, 8, 4, 4, 4, 2, 2}, {2, 2},
                  {{{4, 0}, 3}, {{5, 2}, 4}, {{5, 6}, 3}, {{8, 6}, 4}, {{10, 8}, 2}});
}

// Small minimal two-sided ladders for brute-force checks.
inline Ladder small_a() { return Ladder({4, 4, 4}, {2, 1}, {{{3, 0}, 2}, {{3, 3}, 1}}); }
inline Ladder small_b() { return Ladder({3, 3, 3, 2}, {1}, {{{3, 0}, 2}, {{4, 1}, 2}}); }
inline Ladder small_c() { return Ladder({4, 4, 4, 4, 2}, {1}, {{{4, 0}, 3}, {{5, 2}, 2}}); }

inline std::vector<Ladder> all_ladders() { return {two_sided(), large_ladder(), small_a(), small_b(), small_c()}; }

inline std::vector<Permutation> avoiding(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        Permutation p(w);
        if (klreg::is_321_avoiding(p)) out.push_back(p);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline std::vector<Permutation> all_perms(int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do out.emplace_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

}  // namespace fx
