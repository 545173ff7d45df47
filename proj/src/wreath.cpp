#include "wreathrep/wreath.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wreathrep/linalg.hpp"

namespace wreathrep {

WreathElement widentity(int n) {
    WreathElement w;
    w.g.assign(n, 0);
    w.perm.resize(n);
    std::iota(w.perm.begin(), w.perm.end(), 0);
    return w;
}

WreathElement wfrom_perm(const std::vector<int>& perm) {
    WreathElement w = widentity(int(perm.size()));
    w.perm = perm;
    return w;
}

WreathElement wslot(int n, int l, int g) {
    WreathElement w = widentity(n);
    w.g[l - 1] = g;
    return w;
}

WreathElement wcoxeter(int n, int i) {
    WreathElement w = widentity(n);
    std::swap(w.perm[i - 1], w.perm[i]);
    return w;
}

WreathElement wmul(const GroupTable& G, const WreathElement& x, const WreathElement& y) {
    int n = x.n();
    if (y.n() != n) throw std::invalid_argument("wmul: size mismatch");
    std::vector<int> xinv(n);
    for (int i = 0; i < n; ++i) xinv[x.perm[i]] = i;
    WreathElement z;
    z.g.resize(n);
    z.perm.resize(n);
    for (int i = 0; i < n; ++i) {
        z.g[i] = G.mul(x.g[i], y.g[xinv[i]]);
        z.perm[i] = x.perm[y.perm[i]];
    }
    return z;
}

WreathElement winv(const GroupTable& G, const WreathElement& x) {
    int n = x.n();
    WreathElement z;
    z.g.resize(n);
    z.perm.resize(n);
    for (int i = 0; i < n; ++i) {
        z.g[i] = G.inv(x.g[x.perm[i]]);
        z.perm[x.perm[i]] = i;
    }
    return z;
}

WreathType type_of(const GroupTable& G, const WreathElement& x) {
    int n = x.n();
    WreathType t;
    std::vector<bool> seen(n, false);
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> cycle;
        for (int j = i; !seen[j]; j = x.perm[j]) {
            seen[j] = true;
            cycle.push_back(j);
        }
        // product g_{i_k} ... g_{i_1} along the cycle (i_1, i_2 = pi(i_1), ...)
        int p = 0;
        for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) p = G.mul(p, x.g[*it]);
        t.emplace_back(int(cycle.size()), G.class_of(p));
    }
    std::sort(t.begin(), t.end());
    return t;
}

Int wreath_order(const GroupTable& G, int n) {
    Int o = 1;
    for (int i = 1; i <= n; ++i) o *= i * Int(G.order());
    return o;
}

void check_materialization_guard(const GroupTable& G, int n) {
    Int limit = 10000;
    if (const char* env = std::getenv("WREATHREP_MAX_ORDER")) limit = Int(env);
    Int o = wreath_order(G, n);
    if (o > limit)
        throw std::runtime_error("group order " + o.str() + " exceeds materialization cap " +
                                 limit.str() + " (set WREATHREP_MAX_ORDER to raise)");
}

std::vector<WreathElement> enumerate_wreath(const GroupTable& G, int n) {
    check_materialization_guard(G, n);
    std::vector<WreathElement> out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    WreathElement w;
    w.g.assign(n, 0);
    do {
        w.perm = perm;
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == n) {
                out.push_back(w);
                return;
            }
            for (int g = 0; g < G.order(); ++g) {
                w.g[pos] = g;
                self(self, pos + 1);
            }
            w.g[pos] = 0;
        };
        rec(rec, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

AlgebraElement aelem(const WreathElement& w, const Rational& c) {
    AlgebraElement a;
    if (c != 0) a[w] = c;
    return a;
}

AlgebraElement aadd(const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement z = x;
    for (const auto& [w, c] : y) {
        auto& v = z[w];
        v += c;
        if (v == 0) z.erase(w);
    }
    return z;
}

AlgebraElement ascale(const AlgebraElement& x, const Rational& c) {
    AlgebraElement z;
    if (c == 0) return z;
    for (const auto& [w, v] : x) z[w] = v * c;
    return z;
}

AlgebraElement amul(const GroupTable& G, const AlgebraElement& x, const AlgebraElement& y) {
    AlgebraElement z;
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) {
            WreathElement w = wmul(G, wx, wy);
            auto& v = z[w];
            v += cx * cy;
            if (v == 0) z.erase(w);
        }
    return z;
}

AlgebraElement yjm(const GroupTable& G, int i, int n) {
    AlgebraElement x;
    for (int k = 1; k < i; ++k)
        for (int g = 0; g < G.order(); ++g) {
            WreathElement w = widentity(n);
            w.g[k - 1] = G.inv(g);
            w.g[i - 1] = g;
            std::swap(w.perm[k - 1], w.perm[i - 1]);
            x = aadd(x, aelem(w));
        }
    return x;
}

AlgebraElement b_element(const GroupTable& G, int i, int n) {
    AlgebraElement b;
    for (int g = 0; g < G.order(); ++g) {
        WreathElement w = widentity(n);
        w.g[i - 1] = g;
        w.g[i] = G.inv(g);
        b = aadd(b, aelem(w));
    }
    return b;
}

std::vector<WreathType> enumerate_types(const GroupTable& G, int n) {
    // multisets of (cycle length, class) with lengths summing to n
    std::vector<std::pair<int, int>> parts;
    for (int k = 1; k <= n; ++k)
        for (int j = 0; j < G.num_classes(); ++j) parts.emplace_back(k, j);
    std::vector<WreathType> out;
    WreathType cur;
    auto rec = [&](auto&& self, size_t from, int rem) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (size_t p = from; p < parts.size(); ++p) {
            if (parts[p].first > rem) continue;
            cur.push_back(parts[p]);
            self(self, p, rem - parts[p].first);
            cur.pop_back();
        }
    };
    rec(rec, 0, n);
    for (auto& t : out) std::sort(t.begin(), t.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<ClassTriple> enumerate_class_triples(const GroupTable& G, int n) {
    std::vector<ClassTriple> out;
    for (const auto& rho : enumerate_types(G, n)) {
        std::set<std::pair<int, int>> distinct(rho.begin(), rho.end());
        for (const auto& [lambda, j] : distinct) out.push_back({rho, lambda, j});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// (length of the cycle through slot n, class of its cycle product)
std::pair<int, int> cycle_through_last(const GroupTable& G, const WreathElement& x) {
    int n = x.n();
    std::vector<int> cycle;
    int j = n - 1;
    do {
        cycle.push_back(j);
        j = x.perm[j];
    } while (j != n - 1);
    int p = 0;
    for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) p = G.mul(p, x.g[*it]);
    return {int(cycle.size()), G.class_of(p)};
}

}  // namespace

AlgebraElement class_sum(const GroupTable& G, int n, const ClassTriple& tr) {
    bool valid = std::find(tr.rho.begin(), tr.rho.end(), std::make_pair(tr.lambda, tr.j)) !=
                 tr.rho.end();
    if (!valid) throw std::invalid_argument("class_sum: lambda/class pair not a part of rho");
    AlgebraElement c;
    for (const auto& w : enumerate_wreath(G, n)) {
        if (type_of(G, w) != tr.rho) continue;
        if (cycle_through_last(G, w) != std::make_pair(tr.lambda, tr.j)) continue;
        c[w] = 1;
    }
    return c;
}

AlgebraElement y_element(const GroupTable& G, int n, int i, int j) {
    AlgebraElement y;
    for (const auto& w : enumerate_wreath(G, n)) {
        WreathType t = type_of(G, w);
        WreathType want(n - i, {1, 0});
        want.emplace_back(i, j);
        std::sort(want.begin(), want.end());
        if (t != want || w == widentity(n)) continue;
        if (cycle_through_last(G, w) != std::make_pair(1, 0)) continue;
        y[w] = 1;
    }
    return y;
}

AlgebraElement yprime_element(const GroupTable& G, int n, int i, int j) {
    AlgebraElement y;
    for (const auto& w : enumerate_wreath(G, n)) {
        WreathType t = type_of(G, w);
        WreathType want(n - i, {1, 0});
        want.emplace_back(i, j);
        std::sort(want.begin(), want.end());
        if (t != want || w == widentity(n)) continue;
        if (cycle_through_last(G, w) != std::make_pair(i, j)) continue;
        y[w] = 1;
    }
    return y;
}

CheckReport verify_relations(const GroupTable& G, int n) {
    check_materialization_guard(G, n);
    CheckReport rep;
    std::vector<AlgebraElement> X(n + 1);
    for (int i = 1; i <= n; ++i) X[i] = yjm(G, i, n);

    bool ok = true;
    for (int i = 1; i <= n && ok; ++i)
        for (int j = 1; j <= n; ++j)
            if (amul(G, X[i], X[j]) != amul(G, X[j], X[i])) ok = false;
    rep.add("(a) YJM elements commute", ok);

    ok = true;
    for (int i = 1; i <= n && ok; ++i)
        for (int l = 1; l <= n; ++l)
            for (int g = 0; g < G.order(); ++g) {
                AlgebraElement gl = aelem(wslot(n, l, g));
                if (amul(G, X[i], gl) != amul(G, gl, X[i])) ok = false;
            }
    rep.add("(b) YJM elements commute with diagonal factors", ok);

    ok = true;
    for (int i = 1; i < n && ok; ++i)
        for (int g = 0; g < G.order(); ++g) {
            AlgebraElement s = aelem(wcoxeter(n, i));
            AlgebraElement lhs = amul(G, amul(G, s, aelem(wslot(n, i, g))), s);
            if (lhs != aelem(wslot(n, i + 1, g))) ok = false;
        }
    rep.add("(c) s_i g^(i) s_i = g^(i+1)", ok);

    ok = true;
    for (int i = 1; i < n && ok; ++i)
        for (int l = 1; l <= n; ++l) {
            if (l == i || l == i + 1) continue;
            for (int g = 0; g < G.order(); ++g) {
                AlgebraElement s = aelem(wcoxeter(n, i));
                AlgebraElement gl = aelem(wslot(n, l, g));
                if (amul(G, s, gl) != amul(G, gl, s)) ok = false;
            }
        }
    rep.add("(d) s_i commutes with other diagonal factors", ok);

    ok = true;
    for (int i = 1; i < n && ok; ++i) {
        AlgebraElement s = aelem(wcoxeter(n, i));
        AlgebraElement lhs = amul(G, amul(G, s, X[i]), s);
        for (int g = 0; g < G.order(); ++g) {
            WreathElement w = wcoxeter(n, i);
            w.g[i] = g;  // g^(i+1) s_i (g^-1)^(i+1)
            WreathElement t = wmul(G, w, wslot(n, i + 1, G.inv(g)));
            lhs = aadd(lhs, aelem(t));
        }
        if (lhs != X[i + 1]) ok = false;
    }
    rep.add("(e) s_i X_i s_i + sum_g g^(i+1) s_i (g^-1)^(i+1) = X_(i+1)", ok);

    ok = true;
    for (int i = 1; i < n && ok; ++i)
        for (int l = 1; l <= n; ++l) {
            if (l == i || l == i + 1) continue;
            AlgebraElement s = aelem(wcoxeter(n, i));
            if (amul(G, s, X[l]) != amul(G, X[l], s)) ok = false;
        }
    rep.add("(f) s_i commutes with other YJM elements", ok);

    ok = true;
    for (int i = 1; i < n && ok; ++i) {
        AlgebraElement s = aelem(wcoxeter(n, i));
        AlgebraElement lhs = amul(G, X[i], s);
        AlgebraElement rhs = aadd(amul(G, s, X[i + 1]), ascale(b_element(G, i, n), -1));
        if (lhs != rhs) ok = false;
    }
    rep.add("(t5) X_i s_i = s_i X_(i+1) - b_i", ok);
    return rep;
}

CheckReport verify_commutant(const GroupTable& G, int n) {
    check_materialization_guard(G, n);
    CheckReport rep;
    auto all = enumerate_wreath(G, n);

    // subgroup fixing slot n
    std::vector<WreathElement> H;
    for (const auto& w : all)
        if (w.perm[n - 1] == n - 1) H.push_back(w);

    // centralizer basis: H-conjugation orbit sums
    std::set<WreathElement> seen;
    std::vector<AlgebraElement> orbit_sums;
    for (const auto& w : all) {
        if (seen.count(w)) continue;
        AlgebraElement sum;
        for (const auto& h : H) {
            WreathElement c = wmul(G, wmul(G, h, w), winv(G, h));
            if (seen.insert(c).second) sum[c] = 1;
        }
        orbit_sums.push_back(std::move(sum));
    }

    auto triples = enumerate_class_triples(G, n);
    SparseBasis<WreathElement, Rational> basis;
    bool independent = true;
    bool spanning = true;
    SparseBasis<WreathElement, Rational> orbit_span;
    for (const auto& o : orbit_sums) orbit_span.insert(o);
    for (const auto& tr : triples) {
        AlgebraElement c = class_sum(G, n, tr);
        if (!basis.insert(c)) independent = false;
        if (!orbit_span.contains(c)) spanning = false;
    }
    rep.add("class sums linearly independent", independent);
    rep.add("class sums lie in the centralizer", spanning);
    rep.add("dimension matches triple count",
            int(orbit_sums.size()) == int(triples.size()), 0.0,
            "centralizer dim " + std::to_string(orbit_sums.size()) + ", triples " +
                std::to_string(triples.size()));

    bool commutative = true;
    for (size_t a = 0; a < orbit_sums.size() && commutative; ++a)
        for (size_t b = a + 1; b < orbit_sums.size(); ++b)
            if (amul(G, orbit_sums[a], orbit_sums[b]) != amul(G, orbit_sums[b], orbit_sums[a])) {
                commutative = false;
                break;
            }
    rep.add("centralizer commutative", commutative);
    return rep;
}

int gz_dimension(const GroupTable& G, int n) {
    check_materialization_guard(G, n);
    // generators: class-tuple sums spanning the center of C[G^n], plus the
    // YJM elements
    std::vector<AlgebraElement> gens;
    std::vector<int> tuple(n, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == n) {
            AlgebraElement sum;
            WreathElement w = widentity(n);
            auto fill = [&](auto&& fs, int p) -> void {
                if (p == n) {
                    sum[w] = 1;
                    return;
                }
                for (int g : G.classes()[tuple[p]]) {
                    w.g[p] = g;
                    fs(fs, p + 1);
                }
                w.g[p] = 0;
            };
            fill(fill, 0);
            gens.push_back(std::move(sum));
            return;
        }
        for (int j = 0; j < G.num_classes(); ++j) {
            tuple[pos] = j;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    for (int i = 1; i <= n; ++i) gens.push_back(yjm(G, i, n));

    SparseBasis<WreathElement, Rational> basis;
    std::vector<AlgebraElement> members;
    auto try_add = [&](const AlgebraElement& a) {
        if (basis.insert(a)) members.push_back(a);
    };
    try_add(aelem(widentity(n)));
    for (const auto& g : gens) try_add(g);
    // close under right multiplication by the generators
    for (size_t i = 0; i < members.size(); ++i)
        for (const auto& g : gens) try_add(amul(G, members[i], g));
    return basis.dim();
}

}  // namespace wreathrep
