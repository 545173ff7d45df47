#pragma once

#include <map>
#include <vector>

#include "wreathrep/gz_rep.hpp"
#include "wreathrep/qext.hpp"
#include "wreathrep/rational.hpp"
#include "wreathrep/tableaux.hpp"
#include "wreathrep/wreath.hpp"

namespace wreathrep {

// Element of V(B(n)): rational combination of subsets of {1..n} (sorted).
using SubsetVector = std::map<std::vector<int>, Rational>;

SubsetVector subset_unit(const std::vector<int>& s);
SubsetVector svadd(const SubsetVector& a, const SubsetVector& b);
SubsetVector svscale(const SubsetVector& a, const Rational& c);

// U(X) = sum of the subsets covering X inside B(n).
SubsetVector up_operator(const SubsetVector& v, int n);

// Y_j = sum_{k<j} (k j) acting on subsets.
SubsetVector yjm_sn_apply(int j, const SubsetVector& v);

// Symmetric Jordan chain: vectors at ranks start_rank .. n-start_rank,
// labeled by a standard two-row tableau (single-component GTableau).
struct SJChain {
    int start_rank = 0;
    GTableau label;
    std::vector<SubsetVector> vectors;
};

std::vector<SJChain> build_sjb(int n);

CheckReport verify_ev(const std::vector<SJChain>& sjb, int n);

// constituents (n-k, k) of V(B(n)_i) with their dimensions
std::vector<std::pair<int, Int>> johnson_decomposition(int n, int i);
bool identity_bi(int n);

// Permutation action of G on a finite set X (indices 0..xsize-1).
struct GAction {
    const GroupTable* G = nullptr;
    int xsize = 0;
    std::vector<std::vector<int>> act;  // act[g][x]
};
GAction regular_action(const GroupTable& G);
GAction point_action(const GroupTable& G);

// Multiplicity of each irrep of G in V(X).
std::vector<int> action_multiplicities(const GAction& A);

// Element of V(B_X(n)): tuples over the alphabet {L0} + X, letter 0 = L0,
// letters 1..|X| index X.
using TupleVector = std::map<std::vector<int>, QExt>;

// Action of a wreath element: permute coordinates, then act on nonzero
// letters.
TupleVector tuple_apply(const GAction& A, const WreathElement& w, const TupleVector& v);
TupleVector tuple_algebra_apply(const GAction& A, const AlgebraElement& a, const TupleVector& v);

// Diagrams with mu(trivial) of at most two rows, single rows on the other
// irreps occurring in V(X), empty elsewhere; a/b are the two parts on the
// trivial component, s the total size of the single rows.
struct TwoRowShape {
    GYoungDiagram mu;
    int a = 0, b = 0, s = 0;
};
std::vector<TwoRowShape> enumerate_two_row(const GAction& A, int n);

CheckReport generalized_scheme(const GAction& A, int n);

// Builds the highest GZ-subspace W of V(B_X(n)_i) attached to mu (per the
// two-row family) and checks the X_j eigenvalues on it.
CheckReport gz_highest_subspace_check(const GAction& A, const TwoRowShape& shape, int i, int n);

}  // namespace wreathrep
