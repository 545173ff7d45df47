#include "wreathrep/johnson.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "wreathrep/linalg.hpp"

namespace wreathrep {

namespace {

Int binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

SubsetVector subset_unit(const std::vector<int>& s) {
    std::vector<int> key = s;
    std::sort(key.begin(), key.end());
    return {{key, Rational(1)}};
}

SubsetVector svadd(const SubsetVector& a, const SubsetVector& b) {
    SubsetVector r = a;
    for (const auto& [k, c] : b) {
        Rational& slot = r[k];
        slot += c;
        if (slot == 0) r.erase(k);
    }
    return r;
}

SubsetVector svscale(const SubsetVector& a, const Rational& c) {
    SubsetVector r;
    if (c == 0) return r;
    for (const auto& [k, v] : a) r.emplace(k, v * c);
    return r;
}

SubsetVector up_operator(const SubsetVector& v, int n) {
    SubsetVector r;
    for (const auto& [key, c] : v) {
        for (int y = 1; y <= n; ++y) {
            if (std::binary_search(key.begin(), key.end(), y)) continue;
            std::vector<int> nk = key;
            nk.insert(std::upper_bound(nk.begin(), nk.end(), y), y);
            Rational& slot = r[nk];
            slot += c;
            if (slot == 0) r.erase(nk);
        }
    }
    return r;
}

SubsetVector yjm_sn_apply(int j, const SubsetVector& v) {
    SubsetVector r;
    for (const auto& [key, c] : v) {
        for (int k = 1; k < j; ++k) {
            bool has_k = std::binary_search(key.begin(), key.end(), k);
            bool has_j = std::binary_search(key.begin(), key.end(), j);
            std::vector<int> nk = key;
            if (has_k != has_j) {
                int drop = has_k ? k : j;
                int add = has_k ? j : k;
                nk.erase(std::find(nk.begin(), nk.end(), drop));
                nk.insert(std::upper_bound(nk.begin(), nk.end(), add), add);
            }
            Rational& slot = r[nk];
            slot += c;
            if (slot == 0) r.erase(nk);
        }
    }
    return r;
}

namespace {

SubsetVector bar(const SubsetVector& v, int newel) {
    SubsetVector r;
    for (const auto& [key, c] : v) {
        std::vector<int> nk = key;
        nk.push_back(newel);
        r.emplace(std::move(nk), c);
    }
    return r;
}

GTableau extend_label(const GTableau& T, int row) {
    GTableau out = T;
    int len = 0;
    for (const auto& b : out.entry)
        if (b.row == row) ++len;
    auto& parts = out.shape.shapes[0];
    if (row > int(parts.size())) parts.push_back(0);
    parts[row - 1] += 1;
    out.entry.push_back(Box{0, row, len + 1});
    return out;
}

}  // namespace

std::vector<SJChain> build_sjb(int n) {
    if (n < 1) throw std::invalid_argument("build_sjb: n must be >= 1");
    std::vector<SJChain> cur;
    {
        SJChain base;
        base.start_rank = 0;
        base.label.shape.shapes = {{1}};
        base.label.entry = {Box{0, 1, 1}};
        base.vectors = {subset_unit({}), subset_unit({1})};
        cur.push_back(std::move(base));
    }
    for (int m = 1; m < n; ++m) {
        std::vector<SJChain> next;
        for (const auto& C : cur) {
            int k = C.start_rank;
            auto x = [&](int l) -> SubsetVector {
                if (l < k || l > m - k) return {};
                return C.vectors[l - k];
            };
            if (k == m - k) {
                SJChain nc;
                nc.start_rank = k;
                nc.label = extend_label(C.label, 1);
                nc.vectors = {x(k), bar(x(k), m + 1)};
                next.push_back(std::move(nc));
            } else {
                SJChain yc;
                yc.start_rank = k;
                yc.label = extend_label(C.label, 1);
                for (int l = k; l <= m + 1 - k; ++l)
                    yc.vectors.push_back(svadd(x(l), svscale(bar(x(l - 1), m + 1), l - k)));
                next.push_back(std::move(yc));
                SJChain zc;
                zc.start_rank = k + 1;
                zc.label = extend_label(C.label, 2);
                for (int l = k + 1; l <= m - k; ++l)
                    zc.vectors.push_back(
                        svadd(svscale(bar(x(l - 1), m + 1), m - k - l + 1), svscale(x(l), -1)));
                next.push_back(std::move(zc));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

CheckReport verify_ev(const std::vector<SJChain>& sjb, int n) {
    CheckReport rep;
    for (size_t ci = 0; ci < sjb.size(); ++ci) {
        const auto& C = sjb[ci];
        bool ok = true;
        std::string detail;
        for (size_t vi = 0; vi < C.vectors.size() && ok; ++vi) {
            for (int j = 1; j <= n && ok; ++j) {
                Rational c(content(C.label.box(j)));
                SubsetVector lhs = yjm_sn_apply(j, C.vectors[vi]);
                SubsetVector rhs = svscale(C.vectors[vi], c);
                if (lhs != rhs) {
                    ok = false;
                    std::ostringstream os;
                    os << "chain " << ci << ", Y_" << j << ", vector " << vi;
                    detail = os.str();
                }
            }
        }
        rep.add("eigenvalues chain " + std::to_string(ci), ok, 0.0, detail);
    }
    return rep;
}

std::vector<std::pair<int, Int>> johnson_decomposition(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("johnson_decomposition: need 0 <= i <= n");
    std::vector<std::pair<int, Int>> out;
    for (int k = 0; k <= std::min(i, n - i); ++k)
        out.emplace_back(k, binom(n, k) - binom(n, k - 1));
    return out;
}

bool identity_bi(int n) {
    Int sum = 0;
    for (int k = 0; 2 * k <= n; ++k) sum += (n - 2 * k + 1) * (binom(n, k) - binom(n, k - 1));
    return sum == (Int(1) << n);
}

GAction regular_action(const GroupTable& G) {
    GAction A;
    A.G = &G;
    A.xsize = G.order();
    A.act.resize(G.order(), std::vector<int>(G.order()));
    for (int g = 0; g < G.order(); ++g)
        for (int x = 0; x < G.order(); ++x) A.act[g][x] = G.mul(g, x);
    return A;
}

GAction point_action(const GroupTable& G) {
    GAction A;
    A.G = &G;
    A.xsize = 1;
    A.act.assign(G.order(), {0});
    return A;
}

std::vector<int> action_multiplicities(const GAction& A) {
    const GroupTable& G = *A.G;
    std::vector<int> out;
    for (int j = 0; j < G.num_irreps(); ++j) {
        std::complex<double> sum = 0;
        for (int g = 0; g < G.order(); ++g) {
            int fix = 0;
            for (int x = 0; x < A.xsize; ++x)
                if (A.act[g][x] == x) ++fix;
            sum += double(fix) * std::conj(G.irrep(j).character(g));
        }
        double m = (sum / double(G.order())).real();
        int mi = int(std::lround(m));
        if (std::abs(m - mi) > 1e-6)
            throw std::runtime_error("action_multiplicities: non-integral multiplicity");
        out.push_back(mi);
    }
    return out;
}

namespace {

int trivial_irrep_index(const GroupTable& G) {
    for (int j = 0; j < G.num_irreps(); ++j) {
        if (G.irrep(j).dim != 1) continue;
        bool ok = true;
        for (int g = 0; g < G.order() && ok; ++g)
            if (std::abs(G.irrep(j).character(g) - 1.0) > 1e-9) ok = false;
        if (ok) return j;
    }
    throw std::runtime_error("no trivial irreducible found");
}

// Throws unless V(X) is multiplicity free with the trivial constituent
// occurring once; returns the multiplicity vector.
std::vector<int> checked_multiplicities(const GAction& A) {
    auto mult = action_multiplicities(A);
    for (size_t j = 0; j < mult.size(); ++j)
        if (mult[j] > 1)
            throw std::invalid_argument(
                "V(X) is not multiplicity free: constituent " + std::to_string(j) +
                " occurs " + std::to_string(mult[j]) + " times");
    if (mult[trivial_irrep_index(*A.G)] != 1)
        throw std::invalid_argument("action on X must be transitive");
    return mult;
}

Int int_pow(Int base, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

void check_tuple_guard(const GAction& A, int n) {
    Int cap = 10000;
    if (const char* env = std::getenv("WREATHREP_MAX_ORDER")) cap = Int(env);
    Int total = int_pow(Int(A.xsize + 1), n);
    if (total > cap)
        throw std::invalid_argument("(|X|+1)^n = " + total.str() +
                                    " exceeds the materialization cap " + cap.str());
}

std::vector<std::vector<int>> all_tuples(int letters, int n, int rank) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(n, 0);
    while (true) {
        int r = 0;
        for (int v : t)
            if (v > 0) ++r;
        if (r == rank) out.push_back(t);
        int pos = n - 1;
        while (pos >= 0 && t[pos] == letters) t[pos--] = 0;
        if (pos < 0) break;
        ++t[pos];
    }
    return out;
}

std::vector<int> tuple_image(const GAction& A, const WreathElement& w, const std::vector<int>& a) {
    int n = w.n();
    std::vector<int> pinv(n);
    for (int i = 0; i < n; ++i) pinv[w.perm[i]] = i;
    std::vector<int> b(n);
    for (int i = 0; i < n; ++i) {
        int letter = a[pinv[i]];
        b[i] = letter == 0 ? 0 : A.act[w.g[i]][letter - 1] + 1;
    }
    return b;
}

}  // namespace

TupleVector tuple_apply(const GAction& A, const WreathElement& w, const TupleVector& v) {
    TupleVector r;
    for (const auto& [key, c] : v) {
        auto b = tuple_image(A, w, key);
        QExt& slot = r[b];
        slot += c;
        if (slot.is_zero()) r.erase(b);
    }
    return r;
}

TupleVector tuple_algebra_apply(const GAction& A, const AlgebraElement& a, const TupleVector& v) {
    TupleVector r;
    for (const auto& [w, coef] : a) {
        TupleVector part = tuple_apply(A, w, v);
        for (const auto& [key, c] : part) {
            QExt& slot = r[key];
            slot += QExt(coef) * c;
            if (slot.is_zero()) r.erase(key);
        }
    }
    return r;
}

std::vector<TwoRowShape> enumerate_two_row(const GAction& A, int n) {
    const GroupTable& G = *A.G;
    auto mult = checked_multiplicities(A);
    int triv = trivial_irrep_index(G);
    std::vector<TwoRowShape> out;
    for (const auto& mu : enumerate_gdiagrams(n, G.num_irreps())) {
        bool ok = true;
        int s = 0;
        TwoRowShape sh;
        for (int j = 0; j < G.num_irreps() && ok; ++j) {
            const auto& p = mu.shapes[j];
            if (j == triv) {
                if (p.size() > 2) ok = false;
            } else if (mult[j] == 0) {
                if (!p.empty()) ok = false;
            } else {
                if (p.size() > 1) ok = false;
                if (!p.empty()) s += p[0];
            }
        }
        if (!ok) continue;
        sh.mu = mu;
        sh.a = mu.shapes[triv].empty() ? 0 : mu.shapes[triv][0];
        sh.b = mu.shapes[triv].size() > 1 ? mu.shapes[triv][1] : 0;
        sh.s = s;
        out.push_back(std::move(sh));
    }
    return out;
}

CheckReport generalized_scheme(const GAction& A, int n) {
    const GroupTable& G = *A.G;
    check_tuple_guard(A, n);
    CheckReport rep;
    auto shapes = enumerate_two_row(A, n);

    Int lhs = int_pow(Int(A.xsize + 1), n);
    Int rhs = 0;
    for (const auto& sh : shapes) rhs += (1 + sh.a - sh.b) * dimension(sh.mu, G);
    rep.add("count identity", lhs == rhs, 0.0,
            lhs == rhs ? "" : lhs.str() + " != " + rhs.str());

    // Permutation character on each rank layer versus the predicted
    // multiplicity-free decomposition.
    check_materialization_guard(G, n);
    auto ct = char_table(G, n);
    std::map<WreathType, Int> class_size;
    std::vector<WreathElement> all = enumerate_wreath(G, n);
    for (const auto& w : all) ++class_size[type_of(G, w)];
    double order = double(all.size());

    for (int i = 0; i <= n; ++i) {
        auto tuples = all_tuples(A.xsize, n, i);
        std::vector<double> fix(ct.types.size(), 0.0);
        for (size_t ty = 0; ty < ct.types.size(); ++ty) {
            const auto& w = ct.reps[ty];
            int cnt = 0;
            for (const auto& t : tuples)
                if (tuple_image(A, w, t) == t) ++cnt;
            fix[ty] = double(cnt);
        }
        bool ok = true;
        double residual = 0.0;
        std::string detail;
        for (size_t m = 0; m < ct.mus.size(); ++m) {
            std::complex<double> sum = 0;
            for (size_t ty = 0; ty < ct.types.size(); ++ty)
                sum += class_size.at(ct.types[ty]).convert_to<double>() * fix[ty] *
                       std::conj(ct.values[m][ty]);
            double val = (sum / order).real();
            residual = std::max(residual, std::abs((sum / order).imag()));
            int expected = 0;
            for (const auto& sh : shapes)
                if (sh.mu == ct.mus[m] && sh.b + sh.s <= i && i <= sh.a + sh.s) expected = 1;
            residual = std::max(residual, std::abs(val - expected));
            if (std::abs(val - expected) > 1e-6 && ok) {
                ok = false;
                detail = "layer " + std::to_string(i) + ", diagram index " + std::to_string(m);
            }
        }
        rep.add("multiplicities layer " + std::to_string(i), ok, residual, detail);
    }
    return rep;
}

CheckReport gz_highest_subspace_check(const GAction& A, const TwoRowShape& shape, int i, int n) {
    const GroupTable& G = *A.G;
    check_tuple_guard(A, n);
    CheckReport rep;
    if (shape.mu.total() != n) throw std::invalid_argument("shape size must equal n");
    if (!(shape.b + shape.s <= i && i <= shape.a + shape.s))
        throw std::invalid_argument("rank layer i outside [b+s, a+s]");
    auto mult = checked_multiplicities(A);
    int triv = trivial_irrep_index(G);
    if (triv != 0)
        throw std::invalid_argument("trivial constituent must be component 0");

    int q = shape.a + shape.b;
    GTableau R = row_major_tableau(shape.mu);

    // SJB vector with the prescribed Y_j spectrum: the chain labeled by the
    // row-major two-row tableau of (a, b), at rank i - s.
    SubsetVector u = subset_unit({});
    if (q > 0) {
        GTableau target;
        Partition p;
        if (shape.a > 0) p.push_back(shape.a);
        if (shape.b > 0) p.push_back(shape.b);
        target.shape.shapes = {p};
        target = row_major_tableau(target.shape);
        bool found = false;
        for (const auto& C : build_sjb(q)) {
            if (C.label == target) {
                int idx = (i - shape.s) - C.start_rank;
                if (idx < 0 || idx >= int(C.vectors.size()))
                    throw std::invalid_argument("no chain vector at the required rank");
                u = C.vectors[idx];
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("two-row chain label not found");
    }

    // Injection into tuples: each selected position carries z = sum of the
    // X-letters, the rest carry the empty letter.
    TupleVector gamma;
    for (const auto& [key, c] : u) {
        std::vector<int> letters(key.size(), 1);
        while (true) {
            std::vector<int> t(q, 0);
            for (size_t p = 0; p < key.size(); ++p) t[key[p] - 1] = letters[p];
            QExt& slot = gamma[t];
            slot += QExt(c);
            if (slot.is_zero()) gamma.erase(t);
            int pos = int(key.size()) - 1;
            while (pos >= 0 && letters[pos] == A.xsize) letters[pos--] = 1;
            if (pos < 0) break;
            ++letters[pos];
        }
    }

    // Exact isotypic components of V(X) for the occurring nontrivial
    // constituents: columns of (d_j/|G|) sum_g chi_j(g^-1) action(g).
    std::vector<std::vector<std::vector<QExt>>> comp_basis(G.num_irreps());
    for (int j = 0; j < G.num_irreps(); ++j) {
        if (j == triv || mult[j] == 0) continue;
        const Irrep& ir = G.irrep(j);
        if (!ir.exact)
            throw exact_error("constituent " + std::to_string(j) +
                              " has no exact character values");
        std::vector<std::vector<QExt>> proj(A.xsize, std::vector<QExt>(A.xsize, QExt(0)));
        QExt scale(Rational(ir.dim, G.order()));
        for (int g = 0; g < G.order(); ++g) {
            QExt chi = ir.character_exact(G.inv(g));
            for (int x = 0; x < A.xsize; ++x) proj[A.act[g][x]][x] += scale * chi;
        }
        SparseBasis<int, QExt> span;
        for (int col = 0; col < A.xsize; ++col) {
            std::map<int, QExt> v;
            for (int row = 0; row < A.xsize; ++row)
                if (!proj[row][col].is_zero()) v[row] = proj[row][col];
            if (v.empty()) continue;
            if (span.insert(v)) {
                std::vector<QExt> dense(A.xsize, QExt(0));
                for (const auto& [row, val] : v) dense[row] = val;
                comp_basis[j].push_back(std::move(dense));
            }
        }
        if (int(comp_basis[j].size()) != ir.dim)
            throw std::runtime_error("isotypic component has unexpected dimension");
    }

    // Tensor W = span(gamma) x (component j)^{p_j}, positions q+1..n in the
    // row-major order of R.
    std::vector<int> pos_comp;  // component of each position after the first q
    for (int p = q + 1; p <= n; ++p) pos_comp.push_back(R.r(p));
    std::vector<std::vector<int>> choices = {{}};
    for (int c : pos_comp) {
        std::vector<std::vector<int>> next;
        for (const auto& base : choices)
            for (size_t b = 0; b < comp_basis[c].size(); ++b) {
                auto ext = base;
                ext.push_back(int(b));
                next.push_back(std::move(ext));
            }
        choices = std::move(next);
    }
    std::vector<TupleVector> basis;
    for (const auto& pick : choices) {
        TupleVector v;
        for (const auto& [key, c] : gamma) {
            std::vector<int> letters(n - q, 1);
            // odometer over the letters of each factor vector
            while (true) {
                QExt coef = c;
                std::vector<int> t = key;
                t.resize(n, 0);
                bool zero = false;
                for (int p = 0; p < n - q; ++p) {
                    const auto& vec = comp_basis[pos_comp[p]][pick[p]];
                    QExt entry = vec[letters[p] - 1];
                    if (entry.is_zero()) {
                        zero = true;
                        break;
                    }
                    coef *= entry;
                    t[q + p] = letters[p];
                }
                if (!zero) {
                    QExt& slot = v[t];
                    slot += coef;
                    if (slot.is_zero()) v.erase(t);
                }
                int pos = n - q - 1;
                while (pos >= 0 && letters[pos] == A.xsize) letters[pos--] = 1;
                if (pos < 0) break;
                ++letters[pos];
            }
        }
        basis.push_back(std::move(v));
    }

    rep.add("subspace nonzero", !basis.empty() && !basis[0].empty());

    for (int j = 1; j <= n; ++j) {
        Rational expected =
            Rational(G.order(), G.irrep(R.r(j)).dim) * content(R.box(j));
        AlgebraElement Xj = yjm(G, j, n);
        bool ok = true;
        std::string detail;
        for (size_t b = 0; b < basis.size() && ok; ++b) {
            TupleVector lhs = tuple_algebra_apply(A, Xj, basis[b]);
            TupleVector rhs;
            for (const auto& [key, c] : basis[b]) {
                QExt scaled = QExt(expected) * c;
                if (!scaled.is_zero()) rhs.emplace(key, scaled);
            }
            if (lhs != rhs) {
                ok = false;
                detail = "basis vector " + std::to_string(b) + ", expected " +
                         frac_string(expected);
            }
        }
        rep.add("X_" + std::to_string(j) + " eigenvalue", ok, 0.0, detail);
    }
    return rep;
}

}  // namespace wreathrep
