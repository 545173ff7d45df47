#include "wreathrep/tableaux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wreathrep {

std::vector<Partition> enumerate_partitions(int n) {
    // descending lex: (n), (n-1,1), ..., (1,...,1)
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

int GYoungDiagram::total() const {
    int s = 0;
    for (const auto& part : shapes)
        for (int p : part) s += p;
    return s;
}

std::vector<GYoungDiagram> enumerate_gdiagrams(int n, int t) {
    if (n < 0 || t < 1) throw std::invalid_argument("enumerate_gdiagrams: bad arguments");
    std::vector<GYoungDiagram> out;
    GYoungDiagram cur;
    cur.shapes.resize(t);
    auto rec = [&](auto&& self, int sigma, int rem) -> void {
        if (sigma == t) {
            if (rem == 0) out.push_back(cur);
            return;
        }
        for (int k = rem; k >= 0; --k)
            for (const auto& part : enumerate_partitions(k)) {
                cur.shapes[sigma] = part;
                self(self, sigma + 1, rem - k);
            }
        cur.shapes[sigma].clear();
    };
    rec(rec, 0, n);
    return out;
}

namespace {

bool box_in_shape(const GYoungDiagram& mu, const Box& b) {
    const Partition& p = mu.shapes[b.sigma];
    return b.row <= int(p.size()) && b.col <= p[b.row - 1];
}

}  // namespace

bool GTableau::is_standard() const {
    int total = shape.total();
    if (int(entry.size()) != total) return false;
    std::map<Box, int> at;
    for (int i = 1; i <= total; ++i) {
        const Box& b = entry[i - 1];
        if (b.sigma < 0 || b.sigma >= shape.components() || b.row < 1 || b.col < 1 ||
            !box_in_shape(shape, b))
            return false;
        if (!at.emplace(b, i).second) return false;
    }
    for (const auto& [b, i] : at) {
        Box left{b.sigma, b.row, b.col - 1}, up{b.sigma, b.row - 1, b.col};
        if (b.col > 1 && at.at(left) > i) return false;
        if (b.row > 1 && at.at(up) > i) return false;
    }
    return true;
}

std::vector<GTableau> enumerate_gtableaux(const GYoungDiagram& mu) {
    int n = mu.total();
    std::vector<GTableau> out;
    GTableau cur;
    cur.shape = mu;
    // rows_filled[sigma][row-1] = boxes already placed in that row
    std::vector<std::vector<int>> filled(mu.components());
    for (int s = 0; s < mu.components(); ++s) filled[s].assign(mu.shapes[s].size(), 0);
    auto rec = [&](auto&& self, int next) -> void {
        if (next > n) {
            out.push_back(cur);
            return;
        }
        for (int s = 0; s < mu.components(); ++s)
            for (int r = 0; r < int(mu.shapes[s].size()); ++r) {
                int c = filled[s][r];  // next free column (0-based count)
                if (c >= mu.shapes[s][r]) continue;
                if (r > 0 && filled[s][r - 1] <= c) continue;  // box above empty
                cur.entry.push_back(Box{s, r + 1, c + 1});
                ++filled[s][r];
                self(self, next + 1);
                --filled[s][r];
                cur.entry.pop_back();
            }
    };
    rec(rec, 1);
    return out;
}

ContentVector phi(const GTableau& T, const GroupTable& G) {
    ContentVector cv;
    for (int i = 1; i <= T.n(); ++i) {
        const Box& b = T.box(i);
        cv.labels.push_back(b.sigma);
        cv.values.push_back(Rational(G.order(), G.irrep(b.sigma).dim) * content(b));
    }
    return cv;
}

bool is_content_vector_G(const std::vector<int>& labels, const std::vector<Rational>& values,
                         const GroupTable& G) {
    if (labels.size() != values.size()) return false;
    for (int s = 0; s < G.num_irreps(); ++s) {
        std::vector<Int> c;  // rescaled integer contents of component s
        Rational scale(G.irrep(s).dim, G.order());
        for (size_t i = 0; i < labels.size(); ++i) {
            if (labels[i] != s) continue;
            Rational v = values[i] * scale;
            if (denominator(v) != 1) return false;
            c.push_back(numerator(v));
        }
        if (c.empty()) continue;
        if (c[0] != 0) return false;  // (i)
        for (size_t q = 1; q < c.size(); ++q) {  // (ii')
            Int want = c[q] > 0 ? Int(c[q] - 1) : Int(c[q] + 1);
            if (c[q] == 0) continue;
            if (std::find(c.begin(), c.begin() + q, want) == c.begin() + q) return false;
        }
        for (size_t p = 0; p < c.size(); ++p) {  // (iii), consecutive equal pairs
            for (size_t q = p + 1; q < c.size(); ++q) {
                if (c[q] != c[p]) continue;
                bool lo = false, hi = false;
                for (size_t r = p + 1; r < q; ++r) {
                    if (c[r] == c[p] - 1) lo = true;
                    if (c[r] == c[p] + 1) hi = true;
                }
                if (!lo || !hi) return false;
                break;  // only the nearest later occurrence needs checking
            }
        }
    }
    return true;
}

GTableau phi_inverse(const ContentVector& cv, const GroupTable& G) {
    if (!is_content_vector_G(cv.labels, cv.values, G))
        throw std::invalid_argument("phi_inverse: not a content vector for " + G.name());
    GTableau T;
    T.shape.shapes.resize(G.num_irreps());
    // grow each component greedily: place i at the unique addable box of the
    // required content
    for (size_t i = 0; i < cv.labels.size(); ++i) {
        int s = cv.labels[i];
        Rational v = cv.values[i] * Rational(G.irrep(s).dim, G.order());
        int c = int(numerator(v));
        Partition& p = T.shape.shapes[s];
        int placed_row = -1;
        for (int r = 0; r <= int(p.size()); ++r) {
            int len = r < int(p.size()) ? p[r] : 0;
            int above = r > 0 ? p[r - 1] : len + 1;
            if (len >= above) continue;  // not addable
            if (content(r + 1, len + 1) != c) continue;
            placed_row = r;
            break;
        }
        if (placed_row < 0)
            throw std::invalid_argument("phi_inverse: no addable box of content " +
                                        std::to_string(c));
        if (placed_row == int(p.size()))
            p.push_back(1);
        else
            ++p[placed_row];
        T.entry.push_back(Box{s, placed_row + 1, p[placed_row]});
    }
    return T;
}

GTableau row_major_tableau(const GYoungDiagram& mu) {
    GTableau T;
    T.shape = mu;
    for (int s = 0; s < mu.components(); ++s)
        for (int r = 0; r < int(mu.shapes[s].size()); ++r)
            for (int c = 0; c < mu.shapes[s][r]; ++c) T.entry.push_back(Box{s, r + 1, c + 1});
    return T;
}

bool is_admissible(const GTableau& T, int i) {
    if (i < 1 || i >= T.n()) return false;
    const Box& a = T.box(i);
    const Box& b = T.box(i + 1);
    if (a.sigma != b.sigma) return true;
    return a.row != b.row && a.col != b.col;
}

GTableau apply_transposition(const GTableau& T, int i) {
    if (!is_admissible(T, i))
        throw std::invalid_argument("transposition " + std::to_string(i) + " not admissible");
    GTableau out = T;
    std::swap(out.entry[i - 1], out.entry[i]);
    return out;
}

std::vector<int> path_from_R(const GTableau& T) {
    GTableau R = row_major_tableau(T.shape);
    // s(v) = number T assigns to the box where R has v
    std::map<Box, int> tnum;
    for (int i = 1; i <= T.n(); ++i) tnum[T.box(i)] = i;
    std::vector<int> s;
    for (int v = 1; v <= T.n(); ++v) s.push_back(tnum.at(R.box(v)));

    // walk T back to R, one inversion of s at a time, recording admissible
    // swaps; reversing the record gives the path R -> T
    auto inversions = [](const std::vector<int>& p) {
        int inv = 0;
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        return inv;
    };
    std::vector<int> rev;
    GTableau cur = T;
    int remaining = inversions(s);
    while (remaining > 0) {
        bool moved = false;
        for (int i = 1; i < cur.n() && !moved; ++i) {
            if (!is_admissible(cur, i)) continue;
            // swapping numbers i,i+1 in cur swaps the values i,i+1 in s;
            // it removes an inversion iff i sits at a later R-position
            auto pi = std::find(s.begin(), s.end(), i);
            auto pj = std::find(s.begin(), s.end(), i + 1);
            if (pi < pj) continue;
            std::swap(*pi, *pj);
            cur = apply_transposition(cur, i);
            rev.push_back(i);
            --remaining;
            moved = true;
        }
        if (!moved) throw std::logic_error("path_from_R: stuck before reaching R");
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

}  // namespace wreathrep
