#pragma once

#include <optional>

#include "wreathrep/matrix.hpp"
#include "wreathrep/tableaux.hpp"
#include "wreathrep/wreath.hpp"

namespace wreathrep {

enum class RepForm { seminormal, orthogonal };
enum class ScalarKind { exact, complexd };

// Irreducible representation of G wr S_n in the Gelfand-Tsetlin basis.
// The basis is grouped into one block per standard tableau T; inside a
// block it is the lex-ordered multi-index basis of the tensor product
// V^{r_T(1)} x ... x V^{r_T(n)}. Matrices act on column vectors (column m
// holds the image of basis vector m).
template <class S>
class GZRepT {
public:
    GZRepT(const GYoungDiagram& mu, const GroupTable& G, RepForm form);

    const GroupTable& group() const { return *G_; }
    const GYoungDiagram& mu() const { return mu_; }
    RepForm form() const { return form_; }
    int dim() const { return dim_; }
    int num_blocks() const { return int(tableaux_.size()); }
    const std::vector<GTableau>& tableaux() const { return tableaux_; }
    int block_offset(int t) const { return offset_[t]; }
    int block_dim(int t) const { return offset_[t + 1] - offset_[t]; }

    const Matrix<S>& coxeter(int i) const { return coxeter_[i - 1]; }
    Matrix<S> factor_action(int l, int g) const;  // rho(g^(l)), 1-based l
    Matrix<S> perm_matrix(const std::vector<int>& perm) const;
    Matrix<S> group_element_matrix(const WreathElement& w) const;
    Matrix<S> algebra_matrix(const AlgebraElement& a) const;

    Matrix<S> yjm_matrix(int i) const;
    // eigenvalue of X_i on block t: (|G|/dim V^{r_T(i)}) * content
    Rational yjm_expected(int t, int i) const;
    Matrix<S> yjm_expected_matrix(int i) const;

    S character(const WreathElement& w) const { return group_element_matrix(w).trace(); }

private:
    const GroupTable* G_;
    GYoungDiagram mu_;
    RepForm form_;
    std::vector<GTableau> tableaux_;
    std::vector<int> offset_;
    int dim_ = 0;
    std::vector<Matrix<S>> coxeter_;

    void build_coxeter();
};

using GZRepExact = GZRepT<QExt>;
using GZRepComplex = GZRepT<std::complex<double>>;

// Facade choosing the scalar kind: exact quadratic-extension arithmetic
// when every generator matrix fits in Q or a single Q(sqrt d), complex
// double otherwise.
class GZRep {
public:
    GZRep(const GYoungDiagram& mu, const GroupTable& G, RepForm form);

    ScalarKind kind() const { return kind_; }
    RepForm form() const { return form_; }
    int dim() const;
    const std::vector<GTableau>& tableaux() const;
    const GZRepExact* exact() const { return exact_ ? &*exact_ : nullptr; }
    const GZRepComplex* approx() const { return approx_ ? &*approx_ : nullptr; }

    CMatrix group_element_cmatrix(const WreathElement& w) const;
    std::complex<double> character(const WreathElement& w) const;

private:
    ScalarKind kind_;
    RepForm form_;
    std::optional<GZRepExact> exact_;
    std::optional<GZRepComplex> approx_;
};

// binom(n; n_1..n_t) * prod f^{mu_i} * prod d_i^{n_i}
Int dimension(const GYoungDiagram& mu, const GroupTable& G);
Int hook_length_count(const Partition& p);  // f^mu

// Partitions obtained by removing one inner corner of mu(sigma).
std::vector<GYoungDiagram> mu_down_sigma(const GYoungDiagram& mu, int sigma);

struct BranchResult {
    std::vector<std::pair<GYoungDiagram, int>> terms;  // (lambda, multiplicity)
};
BranchResult branch(const GYoungDiagram& mu, const GroupTable& G);

// Canonical element of a given conjugacy type: consecutive cycles, the
// class representative placed in the first slot of each cycle.
WreathElement type_representative(const GroupTable& G, int n, const WreathType& t);

struct CharTable {
    std::vector<GYoungDiagram> mus;
    std::vector<WreathType> types;
    std::vector<WreathElement> reps;
    bool all_exact = false;
    std::vector<std::vector<QExt>> exact;  // [mu][type], when all_exact
    std::vector<std::vector<std::complex<double>>> values;
};
CharTable char_table(const GroupTable& G, int n);

// Defining relations, unitary check (orthogonal form), YJM diagonal, the
// (t5) identity, and a randomized homomorphism check.
CheckReport check_rep(const GZRep& rep, double tol = 1e-9, unsigned seed = 12345);

}  // namespace wreathrep
