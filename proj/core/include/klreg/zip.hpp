#pragma once

#include <map>
#include <vector>

#include "klreg/skew.hpp"

namespace klreg {

struct Component {
    int index = 0;  // 1-based, northwest to southeast
    CellSet cells;
};

// Boxes strictly increasing in both row and column.
struct DiagonalChain {
    std::vector<Cell> boxes;
    friend bool operator==(const DiagonalChain&, const DiagonalChain&) = default;
};

struct ZipResult {
    Permutation v, w;
    PlusDiagram top;
    std::vector<Component> components;
    std::vector<DiagonalChain> max_chains;  // Diag per component
    std::vector<DiagonalChain> chains;      // minimizing diagonal per component
    // Excited moves performed while zipping, as the source cell of each move, in order.
    std::vector<Cell> slide_moves;
    PlusDiagram zip;
    PlusDiagram zip_k;
    std::map<Cell, int> rooms;
    std::vector<int> room_sums;
    int ell_v = 0;
    int ell_w = 0;
    int degree = 0;
    int regularity = 0;
    int a_invariant = 0;
};

std::vector<Component> components(const PlusDiagram& D);
Cell psi_east(const Component& C, const Cell& b);
DiagonalChain max_diag(const Component& C);
std::vector<DiagonalChain> minimizing_diag(const PlusDiagram& D);

ZipResult zip(const Permutation& v, const Permutation& w);
PlusDiagram d_zip(const Permutation& v, const Permutation& w);
PlusDiagram d_zip_k(const Permutation& v, const Permutation& w);
int room(const Permutation& v, const Permutation& w, const Cell& b);

int groth_degree(const Permutation& v, const Permutation& w);
int regularity(const Permutation& v, const Permutation& w);
int a_invariant(const Permutation& v, const Permutation& w);

// Replays maximal K-move sequences from each chain box on D_zip, one move at a time.
PlusDiagram simulate_k_moves(const ZipResult& z);

// Degree by the v_P / v_C recurrence; independent of the zip construction.
int groth_degree_recursive(const Permutation& v, const Permutation& w);

}  // namespace klreg
