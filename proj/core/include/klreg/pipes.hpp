#pragma once

#include <map>
#include <vector>

#include "klreg/perm.hpp"

namespace klreg {

// Box labels of D(owner): the kth leftmost box of row i carries label i+k-1.
struct LabeledRothe {
    Permutation owner;
    std::map<Cell, int> labels;
    // Right to left within a row, rows top to bottom.
    std::vector<Cell> reading_order;

    int label(const Cell& c) const;
};

LabeledRothe label_rothe(const Permutation& v);

std::vector<int> reading_word(const Permutation& v, const CellSet& P);
Permutation delta(const Permutation& v, const CellSet& P);

// Northeast-most pipe set: the earliest reduced subword for w inside the reading word of D(v).
CellSet d_ne(const Permutation& v, const Permutation& w);

// Shared precondition check for the 321-avoiding pair pipelines.
void require_pair(const Permutation& v, const Permutation& w);

}  // namespace klreg
