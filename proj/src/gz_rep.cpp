#include "wreathrep/gz_rep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace wreathrep {

namespace {

template <class S>
struct Ops;

template <>
struct Ops<QExt> {
    static QExt rat(const Rational& r) { return QExt(r); }
    static QExt sqrt_rat(const Rational& r) { return QExt::sqrt_of(r); }
    static QExt entry(const Irrep& ir, int g, int a, int b) {
        if (!ir.exact) throw exact_error("irrep has no exact matrices");
        return ir.mats[g](a, b);
    }
};

template <>
struct Ops<std::complex<double>> {
    static std::complex<double> rat(const Rational& r) { return {to_double(r), 0.0}; }
    static std::complex<double> sqrt_rat(const Rational& r) {
        return {std::sqrt(to_double(r)), 0.0};
    }
    static std::complex<double> entry(const Irrep& ir, int g, int a, int b) {
        return ir.cmats[g](a, b);
    }
};

// per-tableau tensor index bookkeeping: row-major digits, position 1 most
// significant
struct TensorIndex {
    std::vector<int> dims;

    int size() const {
        int s = 1;
        for (int d : dims) s *= d;
        return s;
    }
    std::vector<int> digits(int m) const {
        std::vector<int> d(dims.size());
        for (int l = int(dims.size()) - 1; l >= 0; --l) {
            d[l] = m % dims[l];
            m /= dims[l];
        }
        return d;
    }
    int encode(const std::vector<int>& d) const {
        int m = 0;
        for (size_t l = 0; l < dims.size(); ++l) m = m * dims[l] + d[l];
        return m;
    }
};

TensorIndex tensor_index(const GTableau& T, const GroupTable& G) {
    TensorIndex ti;
    for (int i = 1; i <= T.n(); ++i) ti.dims.push_back(G.irrep(T.r(i)).dim);
    return ti;
}

int tableau_length(const GTableau& T) { return int(path_from_R(T).size()); }

}  // namespace

template <class S>
GZRepT<S>::GZRepT(const GYoungDiagram& mu, const GroupTable& G, RepForm form)
    : G_(&G), mu_(mu), form_(form) {
    if (mu.total() < 1) throw std::invalid_argument("empty diagram");
    if (mu.components() != G.num_irreps())
        throw std::invalid_argument("diagram component count != irrep count");
    tableaux_ = enumerate_gtableaux(mu);
    offset_.push_back(0);
    for (const auto& T : tableaux_) offset_.push_back(offset_.back() + tensor_index(T, G).size());
    dim_ = offset_.back();
    build_coxeter();
}

template <class S>
void GZRepT<S>::build_coxeter() {
    int n = mu_.total();
    std::map<GTableau, int> index;
    for (int t = 0; t < num_blocks(); ++t) index[tableaux_[t]] = t;
    std::vector<int> length(num_blocks());
    for (int t = 0; t < num_blocks(); ++t) length[t] = tableau_length(tableaux_[t]);

    for (int i = 1; i < n; ++i) {
        Matrix<S> M(dim_, dim_);
        for (int t = 0; t < num_blocks(); ++t) {
            const GTableau& T = tableaux_[t];
            TensorIndex ti = tensor_index(T, *G_);
            int off = offset_[t];
            const Box& bi = T.box(i);
            const Box& bj = T.box(i + 1);
            if (!is_admissible(T, i)) {
                // same row -> +N, same column -> -N (the factor-swap sign
                // forced by the defining relations; see README)
                S sign = bi.row == bj.row ? S(1) : S(-1);
                for (int m = 0; m < ti.size(); ++m) {
                    auto d = ti.digits(m);
                    std::swap(d[i - 1], d[i]);
                    M(off + ti.encode(d), off + m) += sign;
                }
                continue;
            }
            GTableau Stab = apply_transposition(T, i);
            int s = index.at(Stab);
            int offS = offset_[s];
            if (bi.sigma != bj.sigma) {
                // different components: pure coordinate swap into the
                // partner block
                TensorIndex si = tensor_index(Stab, *G_);
                for (int m = 0; m < ti.size(); ++m) {
                    auto d = ti.digits(m);
                    std::swap(d[i - 1], d[i]);
                    M(offS + si.encode(d), off + m) += S(1);
                }
                continue;
            }
            // same component, neither row nor column: handle the pair once,
            // from the shorter tableau
            if (length[s] != length[t] + 1) continue;
            int r = content(bj) - content(bi);
            Rational rinv = Rational(1) / r;
            Rational x = 1 - rinv * rinv;
            S diag = Ops<S>::rat(rinv);
            S upper = form_ == RepForm::seminormal ? Ops<S>::rat(x) : Ops<S>::sqrt_rat(x);
            S lower = form_ == RepForm::seminormal ? S(1) : Ops<S>::sqrt_rat(x);
            for (int m = 0; m < ti.size(); ++m) {
                auto d = ti.digits(m);
                std::swap(d[i - 1], d[i]);
                int mN = ti.encode(d);  // same radices in both blocks
                M(off + mN, off + m) += diag;            // T <- T
                M(offS + mN, off + m) += lower;          // S <- T
                M(off + mN, offS + m) += upper;          // T <- S
                M(offS + mN, offS + m) += -diag;         // S <- S
            }
        }
        coxeter_.push_back(std::move(M));
    }
}

template <class S>
Matrix<S> GZRepT<S>::factor_action(int l, int g) const {
    Matrix<S> M(dim_, dim_);
    for (int t = 0; t < num_blocks(); ++t) {
        const GTableau& T = tableaux_[t];
        TensorIndex ti = tensor_index(T, *G_);
        int off = offset_[t];
        const Irrep& ir = G_->irrep(T.r(l));
        for (int m = 0; m < ti.size(); ++m) {
            auto d = ti.digits(m);
            int col_digit = d[l - 1];
            for (int a = 0; a < ir.dim; ++a) {
                S v = Ops<S>::entry(ir, g, a, col_digit);
                if (is_zero(v)) continue;
                d[l - 1] = a;
                M(off + ti.encode(d), off + m) += v;
            }
        }
    }
    return M;
}

template <class S>
Matrix<S> GZRepT<S>::perm_matrix(const std::vector<int>& perm) const {
    // bubble factorization: repeatedly clear a descent via q <- q s_i,
    // giving pi = s_{i_m} ... s_{i_1}
    std::vector<int> q = perm;
    std::vector<int> word;
    bool found = true;
    while (found) {
        found = false;
        for (int i = 0; i + 1 < int(q.size()); ++i)
            if (q[i] > q[i + 1]) {
                std::swap(q[i], q[i + 1]);
                word.push_back(i + 1);
                found = true;
                break;
            }
    }
    Matrix<S> M = Matrix<S>::identity(dim_);
    for (auto it = word.rbegin(); it != word.rend(); ++it) M = M * coxeter(*it);
    // the loop above multiplies rho(s_{i_m}) ... rho(s_{i_1}) left to right
    return M;
}

template <class S>
Matrix<S> GZRepT<S>::group_element_matrix(const WreathElement& w) const {
    Matrix<S> M = Matrix<S>::identity(dim_);
    for (int l = 1; l <= mu_.total(); ++l)
        if (w.g[l - 1] != 0) M = M * factor_action(l, w.g[l - 1]);
    return M * perm_matrix(w.perm);
}

template <class S>
Matrix<S> GZRepT<S>::algebra_matrix(const AlgebraElement& a) const {
    Matrix<S> M(dim_, dim_);
    for (const auto& [w, c] : a) M += group_element_matrix(w) * Ops<S>::rat(c);
    return M;
}

template <class S>
Matrix<S> GZRepT<S>::yjm_matrix(int i) const {
    return algebra_matrix(yjm(*G_, i, mu_.total()));
}

template <class S>
Rational GZRepT<S>::yjm_expected(int t, int i) const {
    const Box& b = tableaux_[t].box(i);
    return Rational(G_->order(), G_->irrep(b.sigma).dim) * content(b);
}

template <class S>
Matrix<S> GZRepT<S>::yjm_expected_matrix(int i) const {
    Matrix<S> M(dim_, dim_);
    for (int t = 0; t < num_blocks(); ++t) {
        S v = Ops<S>::rat(yjm_expected(t, i));
        for (int m = offset_[t]; m < offset_[t + 1]; ++m) M(m, m) = v;
    }
    return M;
}

template class GZRepT<QExt>;
template class GZRepT<std::complex<double>>;

namespace {

// exact arithmetic stays closed iff at most one distinct nonzero radicand
// appears across all generator matrices
bool single_radicand(const GZRepExact& r) {
    std::set<long long> rads;
    auto scan = [&](const QMatrix& m) {
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (m(i, j).radicand() != 0) rads.insert(m(i, j).radicand());
    };
    int n = r.mu().total();
    for (int i = 1; i < n; ++i) scan(r.coxeter(i));
    for (int l = 1; l <= n; ++l)
        for (int g = 0; g < r.group().order(); ++g) scan(r.factor_action(l, g));
    return rads.size() <= 1;
}

}  // namespace

GZRep::GZRep(const GYoungDiagram& mu, const GroupTable& G, RepForm form) : form_(form) {
    if (G.all_irreps_exact()) {
        try {
            GZRepExact r(mu, G, form);
            if (single_radicand(r)) {
                exact_.emplace(std::move(r));
                kind_ = ScalarKind::exact;
                return;
            }
        } catch (const exact_error&) {
        }
    }
    approx_.emplace(mu, G, form);
    kind_ = ScalarKind::complexd;
}

int GZRep::dim() const { return exact_ ? exact_->dim() : approx_->dim(); }

const std::vector<GTableau>& GZRep::tableaux() const {
    return exact_ ? exact_->tableaux() : approx_->tableaux();
}

CMatrix GZRep::group_element_cmatrix(const WreathElement& w) const {
    if (exact_) return to_complex_matrix(exact_->group_element_matrix(w));
    return approx_->group_element_matrix(w);
}

std::complex<double> GZRep::character(const WreathElement& w) const {
    return group_element_cmatrix(w).trace();
}

Int hook_length_count(const Partition& p) {
    int n = 0;
    for (int part : p) n += part;
    if (n == 0) return 1;
    Int num = 1;
    for (int i = 2; i <= n; ++i) num *= i;
    Int den = 1;
    for (int r = 0; r < int(p.size()); ++r)
        for (int c = 0; c < p[r]; ++c) {
            int arm = p[r] - c - 1;
            int leg = 0;
            for (int rr = r + 1; rr < int(p.size()); ++rr)
                if (p[rr] > c) ++leg;
            den *= arm + leg + 1;
        }
    return num / den;
}

Int dimension(const GYoungDiagram& mu, const GroupTable& G) {
    int n = mu.total();
    Int result = 1;
    for (int i = 2; i <= n; ++i) result *= i;  // n!
    for (int s = 0; s < mu.components(); ++s) {
        int ns = 0;
        for (int part : mu.shapes[s]) ns += part;
        Int fact = 1;
        for (int i = 2; i <= ns; ++i) fact *= i;
        result /= fact;  // multinomial accumulates as n! / prod n_s!
        result *= hook_length_count(mu.shapes[s]);
        for (int k = 0; k < ns; ++k) result *= G.irrep(s).dim;
    }
    return result;
}

std::vector<GYoungDiagram> mu_down_sigma(const GYoungDiagram& mu, int sigma) {
    std::vector<GYoungDiagram> out;
    const Partition& p = mu.shapes[sigma];
    for (int r = 0; r < int(p.size()); ++r) {
        bool corner = (r + 1 == int(p.size())) || p[r + 1] < p[r];
        if (!corner) continue;
        GYoungDiagram lam = mu;
        if (p[r] == 1)
            lam.shapes[sigma].erase(lam.shapes[sigma].begin() + r);
        else
            --lam.shapes[sigma][r];
        out.push_back(std::move(lam));
    }
    return out;
}

BranchResult branch(const GYoungDiagram& mu, const GroupTable& G) {
    BranchResult br;
    for (int s = 0; s < mu.components(); ++s)
        for (auto& lam : mu_down_sigma(mu, s)) br.terms.emplace_back(lam, G.irrep(s).dim);
    std::sort(br.terms.begin(), br.terms.end());
    return br;
}

WreathElement type_representative(const GroupTable& G, int n, const WreathType& t) {
    WreathElement w = widentity(n);
    int pos = 0;
    for (const auto& [k, j] : t) {
        for (int i = 0; i < k; ++i) w.perm[pos + i] = pos + (i + 1) % k;
        w.g[pos] = G.class_rep(j);
        pos += k;
    }
    if (pos != n) throw std::invalid_argument("type does not sum to n");
    return w;
}

CharTable char_table(const GroupTable& G, int n) {
    CharTable ct;
    ct.mus = enumerate_gdiagrams(n, G.num_irreps());
    ct.types = enumerate_types(G, n);
    for (const auto& t : ct.types) ct.reps.push_back(type_representative(G, n, t));
    std::vector<GZRep> reps;
    ct.all_exact = true;
    for (const auto& mu : ct.mus) {
        reps.emplace_back(mu, G, RepForm::seminormal);
        if (reps.back().kind() != ScalarKind::exact) ct.all_exact = false;
    }
    for (const auto& rep : reps) {
        std::vector<std::complex<double>> row;
        std::vector<QExt> erow;
        for (const auto& w : ct.reps) {
            if (ct.all_exact) {
                QExt v = rep.exact()->character(w);
                erow.push_back(v);
                row.push_back(to_complex(v));
            } else {
                row.push_back(rep.character(w));
            }
        }
        ct.values.push_back(std::move(row));
        if (ct.all_exact) ct.exact.push_back(std::move(erow));
    }
    return ct;
}

namespace {

template <class S>
bool matrices_close(const Matrix<S>& a, const Matrix<S>& b, double tol, double& res) {
    if constexpr (std::is_same_v<S, QExt>) {
        (void)tol;
        res = 0.0;
        return a == b;
    } else {
        res = a.max_diff(b);
        return res <= tol;
    }
}

template <class S>
CheckReport check_rep_t(const GZRepT<S>& r, RepForm form, double tol, unsigned seed) {
    CheckReport rep;
    const GroupTable& G = r.group();
    int n = r.mu().total();
    Matrix<S> I = Matrix<S>::identity(r.dim());
    double res, worst;

    bool ok = true;
    worst = 0;
    for (int i = 1; i < n; ++i) {
        ok &= matrices_close(r.coxeter(i) * r.coxeter(i), I, tol, res);
        worst = std::max(worst, res);
    }
    rep.add("coxeter involutions", ok, worst);

    ok = true;
    worst = 0;
    for (int i = 1; i + 1 < n; ++i) {
        ok &= matrices_close(r.coxeter(i) * r.coxeter(i + 1) * r.coxeter(i),
                             r.coxeter(i + 1) * r.coxeter(i) * r.coxeter(i + 1), tol, res);
        worst = std::max(worst, res);
    }
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j) {
            ok &= matrices_close(r.coxeter(i) * r.coxeter(j), r.coxeter(j) * r.coxeter(i), tol,
                                 res);
            worst = std::max(worst, res);
        }
    rep.add("braid and commuting relations", ok, worst);

    ok = true;
    worst = 0;
    for (int l = 1; l <= n; ++l)
        for (int g = 0; g < G.order(); ++g)
            for (int h = 0; h < G.order(); ++h) {
                ok &= matrices_close(r.factor_action(l, g) * r.factor_action(l, h),
                                     r.factor_action(l, G.mul(g, h)), tol, res);
                worst = std::max(worst, res);
            }
    rep.add("factor actions are homomorphisms", ok, worst);

    ok = true;
    worst = 0;
    for (int i = 1; i < n; ++i)
        for (int g = 0; g < G.order(); ++g) {
            ok &= matrices_close(r.coxeter(i) * r.factor_action(i, g) * r.coxeter(i),
                                 r.factor_action(i + 1, g), tol, res);
            worst = std::max(worst, res);
            for (int l = 1; l <= n; ++l) {
                if (l == i || l == i + 1) continue;
                ok &= matrices_close(r.coxeter(i) * r.factor_action(l, g),
                                     r.factor_action(l, g) * r.coxeter(i), tol, res);
                worst = std::max(worst, res);
            }
        }
    rep.add("coxeter/factor intertwining", ok, worst);

    ok = true;
    worst = 0;
    for (int i = 1; i <= n; ++i) {
        ok &= matrices_close(r.yjm_matrix(i), r.yjm_expected_matrix(i), tol, res);
        worst = std::max(worst, res);
    }
    rep.add("YJM matrices are the expected block scalars", ok, worst);

    ok = true;
    worst = 0;
    for (int i = 1; i < n; ++i) {
        Matrix<S> lhs = r.yjm_matrix(i + 1) * r.coxeter(i);
        Matrix<S> rhs = r.coxeter(i) * r.yjm_matrix(i) + r.algebra_matrix(b_element(G, i, n));
        ok &= matrices_close(lhs, rhs, tol, res);
        worst = std::max(worst, res);
    }
    rep.add("X_(i+1) s_i = s_i X_i + b_i image", ok, worst);

    std::mt19937 rng(seed);
    auto random_element = [&] {
        WreathElement w = widentity(n);
        for (int l = 0; l < n; ++l) w.g[l] = int(rng() % unsigned(G.order()));
        for (int l = n - 1; l > 0; --l) std::swap(w.perm[l], w.perm[rng() % unsigned(l + 1)]);
        return w;
    };
    ok = true;
    worst = 0;
    for (int trial = 0; trial < 100; ++trial) {
        WreathElement a = random_element(), b = random_element();
        ok &= matrices_close(r.group_element_matrix(wmul(G, a, b)),
                             r.group_element_matrix(a) * r.group_element_matrix(b), tol, res);
        worst = std::max(worst, res);
    }
    rep.add("homomorphism on random pairs", ok, worst);

    if (form == RepForm::orthogonal) {
        ok = true;
        worst = 0;
        for (int i = 1; i < n; ++i) {
            ok &= matrices_close(r.coxeter(i) * r.coxeter(i).conj_transpose(), I, tol, res);
            worst = std::max(worst, res);
        }
        for (int l = 1; l <= n; ++l)
            for (int g = 0; g < G.order(); ++g) {
                Matrix<S> m = r.factor_action(l, g);
                ok &= matrices_close(m * m.conj_transpose(), I, tol, res);
                worst = std::max(worst, res);
            }
        rep.add("orthogonal form is unitary", ok, worst);
    }
    return rep;
}

}  // namespace

CheckReport check_rep(const GZRep& rep, double tol, unsigned seed) {
    if (rep.exact()) return check_rep_t(*rep.exact(), rep.form(), tol, seed);
    return check_rep_t(*rep.approx(), rep.form(), tol, seed);
}

}  // namespace wreathrep
