#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <map>

#include "wreathrep/gz_rep.hpp"

using namespace wreathrep;

TEST_CASE("dimension formula") {
    auto triv = GroupTable::load("trivial");
    CHECK(dimension(GYoungDiagram{{{4}}}, triv) == 1);
    CHECK(dimension(GYoungDiagram{{{2, 1}}}, triv) == 2);
    CHECK(hook_length_count({3, 2}) == 5);

    auto c2 = GroupTable::load("cyclic:2");
    CHECK(dimension(GYoungDiagram{{{1}, {1}}}, c2) == 2);

    auto s3 = GroupTable::load("sym:3");
    CHECK(dimension(GYoungDiagram{{{}, {}, {2}}}, s3) == 4);

    // sum of squared dims = |G_n|
    for (const char* name : {"trivial", "cyclic:2", "sym:3"}) {
        auto G = GroupTable::load(name);
        for (int n = 1; n <= (G.order() == 1 ? 4 : G.order() == 2 ? 3 : 2); ++n) {
            Int sum = 0;
            for (const auto& mu : enumerate_gdiagrams(n, G.num_irreps())) {
                Int d = dimension(mu, G);
                sum += d * d;
            }
            CHECK(sum == wreath_order(G, n));
        }
    }

    // formula agrees with basis size
    auto c3 = GroupTable::load("cyclic:3");
    for (int n = 1; n <= 2; ++n)
        for (const auto& mu : enumerate_gdiagrams(n, 3)) {
            GZRep rep(mu, c3, RepForm::seminormal);
            CHECK(Int(rep.dim()) == dimension(mu, c3));
        }
}

TEST_CASE("small explicit matrices") {
    auto triv = GroupTable::load("trivial");
    GZRep sign(GYoungDiagram{{{1, 1}}}, triv, RepForm::seminormal);
    REQUIRE(sign.kind() == ScalarKind::exact);
    CHECK(sign.dim() == 1);
    CHECK(sign.exact()->coxeter(1)(0, 0) == QExt(-1));

    GZRep trivrep(GYoungDiagram{{{2}}}, triv, RepForm::seminormal);
    CHECK(trivrep.exact()->coxeter(1)(0, 0) == QExt(1));

    auto c2 = GroupTable::load("cyclic:2");
    GZRep two(GYoungDiagram{{{1}, {1}}}, c2, RepForm::seminormal);
    REQUIRE(two.dim() == 2);
    const auto& s1 = two.exact()->coxeter(1);
    CHECK(s1(0, 0) == QExt(0));
    CHECK(s1(0, 1) == QExt(1));
    CHECK(s1(1, 0) == QExt(1));
    CHECK(s1(1, 1) == QExt(0));
    auto fa = two.exact()->factor_action(1, 1);
    CHECK(fa(0, 0) == QExt(1));
    CHECK(fa(1, 1) == QExt(-1));
    CHECK(fa(0, 1) == QExt(0));

    // classical Young orthogonal form for the standard rep of S_3
    GZRep std3(GYoungDiagram{{{2, 1}}}, triv, RepForm::orthogonal);
    REQUIRE(std3.kind() == ScalarKind::exact);
    REQUIRE(std3.dim() == 2);
    const auto& t1 = std3.exact()->coxeter(1);
    CHECK(t1(0, 0) == QExt(1));
    CHECK(t1(1, 1) == QExt(-1));
    const auto& t2 = std3.exact()->coxeter(2);
    QExt half(Rational(1, 2));
    QExt r32 = QExt::sqrt_of(Rational(3, 4));
    CHECK(t2(0, 0) == -half);
    CHECK(t2(1, 1) == half);
    CHECK(t2(0, 1) == r32);
    CHECK(t2(1, 0) == r32);
}

TEST_CASE("yjm matrices") {
    auto triv = GroupTable::load("trivial");
    GZRep row2(GYoungDiagram{{{2}}}, triv, RepForm::seminormal);
    CHECK(row2.exact()->yjm_matrix(1) == QMatrix(1, 1));
    CHECK(row2.exact()->yjm_matrix(2)(0, 0) == QExt(1));

    auto c2 = GroupTable::load("cyclic:2");
    GZRep r(GYoungDiagram{{{2}, {}}}, c2, RepForm::seminormal);
    CHECK(r.exact()->yjm_matrix(2)(0, 0) == QExt(2));
}

TEST_CASE("representation relation suites") {
    for (const char* name : {"trivial", "cyclic:2", "cyclic:3", "sym:3"}) {
        auto G = GroupTable::load(name);
        int nmax = G.order() <= 2 ? 3 : name == std::string("cyclic:3") ? 3 : 3;
        for (int n = 1; n <= nmax; ++n)
            for (const auto& mu : enumerate_gdiagrams(n, G.num_irreps()))
                for (RepForm form : {RepForm::seminormal, RepForm::orthogonal}) {
                    GZRep rep(mu, G, form);
                    auto chk = check_rep(rep);
                    INFO(name << " n=" << n << " form=" << int(form)
                              << " failure: " << chk.first_failure());
                    CHECK(chk.all_pass());
                }
    }
}

TEST_CASE("scalar kinds") {
    auto c3 = GroupTable::load("cyclic:3");
    GZRep semi(GYoungDiagram{{{1}, {1}, {}}}, c3, RepForm::seminormal);
    CHECK(semi.kind() == ScalarKind::exact);
    // a hook on a component with complex character mixes two radicands
    GZRep orth(GYoungDiagram{{{}, {2, 1}, {}}}, c3, RepForm::orthogonal);
    CHECK(orth.kind() == ScalarKind::complexd);
    CHECK(check_rep(orth).all_pass());

    auto s3 = GroupTable::load("sym:3");
    GZRep sorth(GYoungDiagram{{{2}, {}, {1}}}, s3, RepForm::orthogonal);
    CHECK(sorth.kind() == ScalarKind::exact);

    auto c5 = GroupTable::load("cyclic:5");
    GZRep inex(GYoungDiagram{{{1}, {1}, {}, {}, {}}}, c5, RepForm::seminormal);
    CHECK(inex.kind() == ScalarKind::complexd);
    CHECK(check_rep(inex).all_pass());
}

TEST_CASE("characters") {
    auto c2 = GroupTable::load("cyclic:2");
    for (int n = 1; n <= 3; ++n) {
        auto ct = char_table(c2, n);
        REQUIRE(ct.mus.size() == ct.types.size());
        CHECK(ct.all_exact);
        // chi(e) = dim; identity type is the all-(1, class 0) type
        for (size_t m = 0; m < ct.mus.size(); ++m) {
            size_t id = 0;
            for (size_t ty = 0; ty < ct.types.size(); ++ty)
                if (type_representative(c2, n, ct.types[ty]) == widentity(n)) id = ty;
            CHECK(ct.exact[m][id] == QExt(Rational(dimension(ct.mus[m], c2))));
        }
        // first orthogonality with class weights
        std::map<WreathType, int> class_size;
        for (const auto& w : enumerate_wreath(c2, n)) ++class_size[type_of(c2, w)];
        for (size_t a = 0; a < ct.mus.size(); ++a)
            for (size_t b = 0; b < ct.mus.size(); ++b) {
                QExt sum(0);
                for (size_t ty = 0; ty < ct.types.size(); ++ty)
                    sum += QExt(Rational(class_size.at(ct.types[ty]))) * ct.exact[a][ty] *
                           conj(ct.exact[b][ty]);
                Rational total(wreath_order(c2, n));
                CHECK(sum == (a == b ? QExt(total) : QExt(0)));
            }
    }

    // characters are constant on conjugacy classes
    auto triv = GroupTable::load("trivial");
    GZRep rep(GYoungDiagram{{{2, 1}}}, triv, RepForm::seminormal);
    std::map<WreathType, QExt> val;
    for (const auto& w : enumerate_wreath(triv, 3)) {
        QExt c = rep.exact()->character(w);
        auto [it, fresh] = val.emplace(type_of(triv, w), c);
        if (!fresh) CHECK(it->second == c);
    }
}

namespace {

// restriction multiplicities computed from characters, independent of the
// combinatorial branching rule
std::map<GYoungDiagram, int> restriction_oracle(const GroupTable& G, const GYoungDiagram& mu) {
    int n1 = mu.total();
    int n = n1 - 1;
    GZRep big(mu, G, RepForm::seminormal);
    std::map<GYoungDiagram, int> mult;
    for (const auto& lam : enumerate_gdiagrams(n, G.num_irreps())) {
        GZRep small(lam, G, RepForm::seminormal);
        std::complex<double> sum = 0;
        double order = 0;
        for (const auto& x : enumerate_wreath(G, n)) {
            WreathElement em = widentity(n1);
            std::copy(x.g.begin(), x.g.end(), em.g.begin());
            std::copy(x.perm.begin(), x.perm.end(), em.perm.begin());
            sum += big.character(em) * std::conj(small.character(x));
            order += 1;
        }
        double m = (sum / order).real();
        int mi = int(std::lround(m));
        REQUIRE(std::abs(m - mi) < 1e-6);
        if (mi) mult[lam] = mi;
    }
    return mult;
}

}  // namespace

TEST_CASE("branching") {
    auto triv = GroupTable::load("trivial");
    auto br = branch(GYoungDiagram{{{2, 1}}}, triv);
    REQUIRE(br.terms.size() == 2);
    CHECK(br.terms[0].first == GYoungDiagram{{{1, 1}}});
    CHECK(br.terms[1].first == GYoungDiagram{{{2}}});
    CHECK(br.terms[0].second == 1);

    // the 2-dim rep of Z2 wr S2 restricts to the two nontrivial characters
    auto c2 = GroupTable::load("cyclic:2");
    auto br2 = branch(GYoungDiagram{{{1}, {1}}}, c2);
    REQUIRE(br2.terms.size() == 2);
    CHECK(br2.terms[0].first == GYoungDiagram{{{}, {1}}});
    CHECK(br2.terms[1].first == GYoungDiagram{{{1}, {}}});

    // dimension bookkeeping for sym:3
    auto s3 = GroupTable::load("sym:3");
    for (int n1 = 1; n1 <= 3; ++n1)
        for (const auto& mu : enumerate_gdiagrams(n1, 3)) {
            Int sum = 0;
            for (const auto& [lam, m] : branch(mu, s3).terms) sum += m * dimension(lam, s3);
            CHECK(sum == dimension(mu, s3));
        }

    // character-theoretic oracle
    for (const char* name : {"cyclic:2", "sym:3"}) {
        auto G = GroupTable::load(name);
        for (int n1 = 2; n1 <= 3; ++n1)
            for (const auto& mu : enumerate_gdiagrams(n1, G.num_irreps())) {
                auto oracle = restriction_oracle(G, mu);
                std::map<GYoungDiagram, int> comb;
                for (const auto& [lam, m] : branch(mu, G).terms) comb[lam] += m;
                CHECK(comb == oracle);
            }
    }
}
