#pragma once

#include <compare>
#include <map>
#include <vector>

#include "wreathrep/check_report.hpp"
#include "wreathrep/group_core.hpp"
#include "wreathrep/rational.hpp"

namespace wreathrep {

// Element of G wr S_n: g[i] acts in slot i, then perm permutes slots
// (perm[i] = image of position i, 0-based).
struct WreathElement {
    std::vector<int> g;
    std::vector<int> perm;

    int n() const { return int(g.size()); }
    friend auto operator<=>(const WreathElement&, const WreathElement&) = default;
};

WreathElement widentity(int n);
WreathElement wfrom_perm(const std::vector<int>& perm);
WreathElement wslot(int n, int l, int g);        // g in slot l (1-based), id perm
WreathElement wcoxeter(int n, int i);            // transposition (i, i+1), 1-based
WreathElement wmul(const GroupTable& G, const WreathElement& x, const WreathElement& y);
WreathElement winv(const GroupTable& G, const WreathElement& x);

// Multiset of (cycle length, class of the cycle product); a complete
// conjugacy invariant.
using WreathType = std::vector<std::pair<int, int>>;  // sorted

WreathType type_of(const GroupTable& G, const WreathElement& x);

// |G|^n * n! with a materialization guard used by the verifiers below
// (default cap 1e4; override via the WREATHREP_MAX_ORDER variable).
Int wreath_order(const GroupTable& G, int n);
void check_materialization_guard(const GroupTable& G, int n);
std::vector<WreathElement> enumerate_wreath(const GroupTable& G, int n);

// Sparse rational group-algebra element; zero coefficients never stored.
using AlgebraElement = std::map<WreathElement, Rational>;

AlgebraElement aelem(const WreathElement& w, const Rational& c = 1);
AlgebraElement aadd(const AlgebraElement& x, const AlgebraElement& y);
AlgebraElement ascale(const AlgebraElement& x, const Rational& c);
AlgebraElement amul(const GroupTable& G, const AlgebraElement& x, const AlgebraElement& y);

// X_i = sum_{k<i} sum_g (g^-1)^(k) g^(i) (k i); X_1 = 0.
AlgebraElement yjm(const GroupTable& G, int i, int n);

// b_i = sum_g g^(i) (g^-1)^(i+1).
AlgebraElement b_element(const GroupTable& G, int i, int n);

// Triples (rho, lambda, j): rho a type, lambda the length of the cycle
// through n, j its class; lambda must occur in rho paired with j.
struct ClassTriple {
    WreathType rho;
    int lambda = 1;
    int j = 0;
    friend auto operator<=>(const ClassTriple&, const ClassTriple&) = default;
};

std::vector<WreathType> enumerate_types(const GroupTable& G, int n);
std::vector<ClassTriple> enumerate_class_triples(const GroupTable& G, int n);

// Sum of all elements of type rho whose cycle through n has length lambda
// and cycle-product class j.
AlgebraElement class_sum(const GroupTable& G, int n, const ClassTriple& tr);

// Sum of nontrivial i-cycles of class j avoiding slot n (Y) / through slot
// n (Yprime).
AlgebraElement y_element(const GroupTable& G, int n, int i, int j);
AlgebraElement yprime_element(const GroupTable& G, int n, int i, int j);

CheckReport verify_relations(const GroupTable& G, int n);
CheckReport verify_commutant(const GroupTable& G, int n);

// Dimension of the subalgebra generated by the center of C[G^n] together
// with X_1..X_n (product closure over exact rationals).
int gz_dimension(const GroupTable& G, int n);

}  // namespace wreathrep
