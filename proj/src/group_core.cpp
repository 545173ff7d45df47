#include "wreathrep/group_core.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <set>

#include <json.hpp>

namespace wreathrep {

namespace {

std::vector<std::vector<int>> conjugacy_classes(const std::vector<std::vector<int>>& mul,
                                                const std::vector<int>& inv) {
    int n = int(mul.size());
    std::vector<int> cls(n, -1);
    std::vector<std::vector<int>> classes;
    for (int g = 0; g < n; ++g) {
        if (cls[g] >= 0) continue;
        std::vector<int> orbit;
        for (int h = 0; h < n; ++h) {
            int c = mul[mul[h][g]][inv[h]];
            if (cls[c] < 0) {
                cls[c] = int(classes.size());
                orbit.push_back(c);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(orbit);
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.size(), a[0]) < std::make_pair(b.size(), b[0]);
    });
    return classes;
}

}  // namespace

GroupTable make_group(std::string name, std::vector<std::vector<int>> mul,
                      std::vector<Irrep> irreps) {
    GroupTable G;
    G.name_ = std::move(name);
    G.order_ = int(mul.size());
    int n = G.order_;
    for (const auto& row : mul)
        if (int(row.size()) != n) throw std::invalid_argument("ragged multiplication table");
    // identity, associativity, inverses
    for (int a = 0; a < n; ++a)
        if (mul[0][a] != a || mul[a][0] != a)
            throw std::invalid_argument("element 0 is not the identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    throw std::invalid_argument("multiplication table is not associative");
    G.inv_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b)
            if (mul[a][b] == 0) {
                G.inv_[a] = b;
                break;
            }
        if (G.inv_[a] < 0) throw std::invalid_argument("element without inverse");
    }
    G.mul_ = std::move(mul);
    G.classes_ = conjugacy_classes(G.mul_, G.inv_);
    G.class_of_.assign(n, -1);
    for (int c = 0; c < int(G.classes_.size()); ++c)
        for (int g : G.classes_[c]) G.class_of_[g] = c;
    if (int(irreps.size()) != int(G.classes_.size()))
        throw std::invalid_argument("irrep count " + std::to_string(irreps.size()) +
                                    " != class count " + std::to_string(G.classes_.size()));
    for (auto& ir : irreps) {
        if (ir.cmats.empty() && ir.exact) {
            for (const auto& m : ir.mats) ir.cmats.push_back(to_complex_matrix(m));
        }
        if (int(ir.cmats.size()) != n) throw std::invalid_argument("irrep matrix count mismatch");
    }
    G.irreps_ = std::move(irreps);
    CheckReport rep = G.verify_irreps();
    if (!rep.all_pass())
        throw std::invalid_argument("irreps rejected: " + rep.first_failure());
    return G;
}

namespace {

Irrep scalar_irrep(std::vector<QExt> values) {
    Irrep ir;
    ir.dim = 1;
    ir.exact = true;
    for (auto& v : values) {
        QMatrix m(1, 1);
        m(0, 0) = v;
        ir.mats.push_back(std::move(m));
    }
    return ir;
}

GroupTable make_cyclic(int m) {
    std::vector<std::vector<int>> mul(m, std::vector<int>(m));
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) mul[a][b] = (a + b) % m;

    std::optional<QExt> omega;  // exact primitive m-th root when one exists
    switch (m) {
        case 1: omega = QExt(1); break;
        case 2: omega = QExt(-1); break;
        case 3: omega = QExt(Rational(-1, 2), Rational(1, 2), -3); break;
        case 4: omega = QExt(Rational(0), Rational(1), -1); break;
        case 6: omega = QExt(Rational(1, 2), Rational(1, 2), -3); break;
        default: break;
    }
    std::vector<Irrep> irreps;
    for (int j = 0; j < m; ++j) {
        if (omega) {
            std::vector<QExt> vals;
            QExt w(1);
            QExt wj(1);
            for (int s = 0; s < j; ++s) wj *= *omega;
            for (int k = 0; k < m; ++k) {
                vals.push_back(w);
                w *= wj;
            }
            irreps.push_back(scalar_irrep(std::move(vals)));
        } else {
            Irrep ir;
            ir.dim = 1;
            ir.exact = false;
            for (int k = 0; k < m; ++k) {
                CMatrix c(1, 1);
                double ang = 2.0 * std::numbers::pi * j * k / m;
                c(0, 0) = {std::cos(ang), std::sin(ang)};
                ir.cmats.push_back(std::move(c));
            }
            irreps.push_back(std::move(ir));
        }
    }
    return make_group("cyclic:" + std::to_string(m), std::move(mul), std::move(irreps));
}

GroupTable make_sym3() {
    // elements: one-line notation in lex order
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::array<int, 3>& q) {
        return int(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    int n = 6;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> q;
            for (int i = 0; i < 3; ++i) q[i] = perms[a][perms[b][i]];
            mul[a][b] = index_of(q);
        }

    std::vector<QExt> triv(6, QExt(1)), sign;
    for (int a = 0; a < n; ++a) {
        int invs = 0;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (perms[a][i] > perms[a][j]) ++invs;
        sign.push_back(QExt(invs % 2 ? -1 : 1));
    }

    // Standard 2-dim representation: restrict the permutation action on C^3
    // to the sum-zero plane, in the orthonormal basis
    // u1 = (1,-1,0)/sqrt(2), u2 = (1,1,-2)/sqrt(6). Entries land in Q(sqrt 3).
    QExt c2 = QExt::sqrt_of(Rational(1, 2));
    QExt c6 = QExt::sqrt_of(Rational(1, 6));
    std::array<std::array<QExt, 3>, 2> u = {
        std::array<QExt, 3>{c2, -c2, QExt(0)},
        std::array<QExt, 3>{c6, c6, QExt(-2) * c6},
    };
    Irrep std2;
    std2.dim = 2;
    std2.exact = true;
    for (int a = 0; a < n; ++a) {
        QMatrix M(2, 2);
        std::array<int, 3> pinv;
        for (int i = 0; i < 3; ++i) pinv[perms[a][i]] = i;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                QExt s(0);
                for (int k = 0; k < 3; ++k) s += u[i][k] * u[j][pinv[k]];
                M(i, j) = s;
            }
        std2.mats.push_back(std::move(M));
    }
    std::vector<Irrep> irreps;
    irreps.push_back(scalar_irrep(std::move(triv)));
    irreps.push_back(scalar_irrep(std::move(sign)));
    irreps.push_back(std::move(std2));
    return make_group("sym:3", std::move(mul), std::move(irreps));
}

QExt parse_entry(const nlohmann::json& j, bool& exact) {
    // entry is [re, im]; each part an exact "p/q" string or a number
    auto part = [&](const nlohmann::json& v) -> Rational {
        if (v.is_string()) return parse_frac(v.get<std::string>());
        exact = false;
        return parse_frac(std::to_string(v.get<double>()));
    };
    Rational re = part(j.at(0)), im = part(j.at(1));
    return QExt(re, im, im == 0 ? 0 : -1);
}

GroupTable load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open group file " + path);
    nlohmann::json j;
    in >> j;
    int order = j.at("order").get<int>();
    auto mul = j.at("mul").get<std::vector<std::vector<int>>>();
    if (int(mul.size()) != order) throw std::invalid_argument("order/mul mismatch");
    std::vector<Irrep> irreps;
    for (const auto& ij : j.at("irreps")) {
        Irrep ir;
        ir.dim = ij.at("dim").get<int>();
        bool exact = true;
        std::vector<QMatrix> mats;
        for (const auto& mj : ij.at("matrices")) {
            QMatrix m(ir.dim, ir.dim);
            for (int r = 0; r < ir.dim; ++r)
                for (int c = 0; c < ir.dim; ++c) m(r, c) = parse_entry(mj.at(r).at(c), exact);
            mats.push_back(std::move(m));
        }
        if (int(mats.size()) != order) throw std::invalid_argument("irrep matrix count mismatch");
        for (const auto& m : mats) ir.cmats.push_back(to_complex_matrix(m));
        ir.exact = exact;
        if (exact) ir.mats = std::move(mats);
        irreps.push_back(std::move(ir));
    }
    std::string name = j.value("name", path);
    return make_group(name, std::move(mul), std::move(irreps));
}

}  // namespace

GroupTable GroupTable::load(const std::string& spec) {
    if (spec == "trivial") return make_cyclic(1);
    if (spec.rfind("cyclic:", 0) == 0) {
        int m = std::stoi(spec.substr(7));
        if (m < 1) throw std::invalid_argument("cyclic order must be >= 1");
        return make_cyclic(m);
    }
    if (spec == "sym:3") return make_sym3();
    return load_json(spec);
}

bool GroupTable::all_irreps_exact() const {
    return std::all_of(irreps_.begin(), irreps_.end(), [](const Irrep& ir) { return ir.exact; });
}

std::vector<int> GroupTable::inverse_class_involution() const {
    std::vector<int> map(num_classes(), -1);
    for (int c = 0; c < num_classes(); ++c) {
        for (int g : classes_[c]) {
            int ci = class_of_[inv_[g]];
            if (map[c] < 0)
                map[c] = ci;
            else if (map[c] != ci)
                throw std::logic_error("inverse-class map not well defined");
        }
    }
    return map;
}

CheckReport GroupTable::verify_irreps(double tol) const {
    CheckReport rep;
    int n = order_;
    long long sumsq = 0;
    for (int i = 0; i < int(irreps_.size()); ++i) {
        const Irrep& ir = irreps_[i];
        sumsq += (long long)ir.dim * ir.dim;
        std::string tag = "irrep " + std::to_string(i);

        double hom_res = 0;
        bool hom_ok = true;
        for (int a = 0; a < n && hom_ok; ++a)
            for (int b = 0; b < n; ++b) {
                if (ir.exact) {
                    if (!(ir.mats[a] * ir.mats[b] == ir.mats[mul_[a][b]])) {
                        hom_ok = false;
                        break;
                    }
                } else {
                    hom_res = std::max(hom_res,
                                       (ir.cmats[a] * ir.cmats[b]).max_diff(ir.cmats[mul_[a][b]]));
                }
            }
        hom_ok = hom_ok && hom_res <= tol;
        rep.add(tag + " homomorphism", hom_ok, hom_res);

        bool id_ok = ir.cmats[0].max_diff(CMatrix::identity(ir.dim)) <= tol;
        rep.add(tag + " identity", id_ok);

        double uni_res = 0;
        for (int a = 0; a < n; ++a)
            uni_res = std::max(uni_res, (ir.cmats[a] * ir.cmats[a].conj_transpose())
                                            .max_diff(CMatrix::identity(ir.dim)));
        rep.add(tag + " unitary", uni_res <= tol, uni_res);
    }
    rep.add("sum of squared dims", sumsq == n, 0.0,
            std::to_string(sumsq) + " vs order " + std::to_string(n));

    // first orthogonality of characters
    double orth_res = 0;
    for (int i = 0; i < int(irreps_.size()); ++i)
        for (int j = 0; j < int(irreps_.size()); ++j) {
            std::complex<double> s = 0;
            for (int g = 0; g < n; ++g)
                s += irreps_[i].character(g) * std::conj(irreps_[j].character(g));
            s /= double(n);
            orth_res = std::max(orth_res, std::abs(s - (i == j ? 1.0 : 0.0)));
        }
    rep.add("character orthogonality", orth_res <= tol, orth_res);
    return rep;
}

}  // namespace wreathrep
