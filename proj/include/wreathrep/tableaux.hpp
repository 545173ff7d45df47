#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wreathrep/group_core.hpp"
#include "wreathrep/rational.hpp"

namespace wreathrep {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

std::vector<Partition> enumerate_partitions(int n);

// A t-tuple of partitions, one per irreducible of the base group; component
// sigma holds shapes[sigma] (0-based sigma index internally).
struct GYoungDiagram {
    std::vector<Partition> shapes;

    int components() const { return int(shapes.size()); }
    int total() const;
    friend auto operator<=>(const GYoungDiagram&, const GYoungDiagram&) = default;
};

// 1-based row/col; sigma is 0-based.
struct Box {
    int sigma = 0;
    int row = 1;
    int col = 1;
    friend auto operator<=>(const Box&, const Box&) = default;
};

inline int content(int row, int col) { return col - row; }
inline int content(const Box& b) { return b.col - b.row; }

// Standard filling of a GYoungDiagram with 1..n: entry[i-1] is the box
// holding i; rows and columns strictly increase within each component.
struct GTableau {
    GYoungDiagram shape;
    std::vector<Box> entry;

    int n() const { return int(entry.size()); }
    const Box& box(int i) const { return entry[i - 1]; }  // 1-based number
    int r(int i) const { return entry[i - 1].sigma; }
    bool is_standard() const;
    friend auto operator<=>(const GTableau&, const GTableau&) = default;
};

struct ContentVector {
    std::vector<int> labels;       // sigma index per position (0-based)
    std::vector<Rational> values;  // a_i = (|G|/dim V^sigma) * content
    friend auto operator<=>(const ContentVector&, const ContentVector&) = default;
};

// All t-tuples of partitions with n total boxes, deterministic lex order.
std::vector<GYoungDiagram> enumerate_gdiagrams(int n, int t);

// All standard fillings of mu, deterministic order.
std::vector<GTableau> enumerate_gtableaux(const GYoungDiagram& mu);

ContentVector phi(const GTableau& T, const GroupTable& G);

// Inverse of phi by greedy placement; throws std::invalid_argument with a
// diagnostic when the input is not a content vector for G.
GTableau phi_inverse(const ContentVector& cv, const GroupTable& G);

bool is_content_vector_G(const std::vector<int>& labels, const std::vector<Rational>& values,
                         const GroupTable& G);

// Canonical tableau: fills component 0's diagram in row-major order, then
// component 1's, and so on.
GTableau row_major_tableau(const GYoungDiagram& mu);

// True iff swapping i and i+1 keeps the filling standard: they lie in
// different components, or in the same component but in distinct rows and
// distinct columns.
bool is_admissible(const GTableau& T, int i);

// Swap the numbers i and i+1; requires the swap to be admissible.
GTableau apply_transposition(const GTableau& T, int i);

// Sequence i_1,...,i_m of admissible swaps with
// T = swap(i_m) ... swap(i_1) applied to row_major_tableau(shape),
// of minimal length (the Coxeter length of the permutation R -> T).
std::vector<int> path_from_R(const GTableau& T);

}  // namespace wreathrep
