#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "wreathrep/tableaux.hpp"
#include "wreathrep/wreath.hpp"

using namespace wreathrep;

TEST_CASE("group law") {
    auto G = GroupTable::load("cyclic:3");
    int n = 2;
    for (const auto& x : enumerate_wreath(G, n)) {
        CHECK(wmul(G, x, widentity(n)) == x);
        CHECK(wmul(G, widentity(n), x) == x);
        CHECK(wmul(G, x, winv(G, x)) == widentity(n));
        for (const auto& y : enumerate_wreath(G, n)) {
            CHECK(winv(G, wmul(G, x, y)) == wmul(G, winv(G, y), winv(G, x)));
            for (const auto& z : enumerate_wreath(G, n))
                CHECK(wmul(G, wmul(G, x, y), z) == wmul(G, x, wmul(G, y, z)));
        }
    }
    // (g^(1)) (h^(1)) = (gh)^(1)
    CHECK(wmul(G, wslot(n, 1, 1), wslot(n, 1, 1)) == wslot(n, 1, 2));
    // s1 g^(1) s1 = g^(2)
    auto s1 = wcoxeter(n, 1);
    CHECK(wmul(G, wmul(G, s1, wslot(n, 1, 1)), s1) == wslot(n, 2, 1));
}

TEST_CASE("types classify conjugacy") {
    auto G = GroupTable::load("cyclic:2");
    int n = 2;
    auto all = enumerate_wreath(G, n);
    // brute-force conjugacy classes of the order-8 group
    std::map<WreathElement, int> cls;
    int nc = 0;
    for (const auto& x : all) {
        if (cls.count(x)) continue;
        for (const auto& h : all) cls.emplace(wmul(G, wmul(G, h, x), winv(G, h)), nc);
        ++nc;
    }
    CHECK(nc == 5);
    for (const auto& x : all)
        for (const auto& y : all)
            CHECK((cls[x] == cls[y]) == (type_of(G, x) == type_of(G, y)));
    // number of types = number of diagrams
    std::set<WreathType> types;
    for (const auto& x : all) types.insert(type_of(G, x));
    CHECK(types.size() == enumerate_gdiagrams(n, G.num_classes()).size());
    CHECK(enumerate_types(G, n).size() == types.size());

    // identity and n-cycle examples
    auto triv = GroupTable::load("trivial");
    CHECK(type_of(triv, widentity(3)) == WreathType{{1, 0}, {1, 0}, {1, 0}});
    WreathElement cyc = wfrom_perm({1, 2, 0});
    CHECK(type_of(triv, cyc) == WreathType{{3, 0}});
}

TEST_CASE("yjm and b elements") {
    auto triv = GroupTable::load("trivial");
    CHECK(yjm(triv, 1, 3).empty());
    CHECK(yjm(triv, 2, 3) == aelem(wmul(triv, widentity(3), wcoxeter(3, 1))));
    CHECK(b_element(triv, 1, 2) == aelem(widentity(2)));

    auto c2 = GroupTable::load("cyclic:2");
    auto x2 = yjm(c2, 2, 2);
    CHECK(x2.size() == 2);
    for (const auto& [w, c] : x2) CHECK(c == 1);
    CHECK(b_element(c2, 1, 2).size() == 2);

    // (t4): h^(l) b_i = b_i h^(omega_i(l)) with omega_i swapping i, i+1
    auto s3 = GroupTable::load("sym:3");
    int n = 3;
    for (int i = 1; i < n; ++i) {
        auto b = b_element(s3, i, n);
        for (int l = 1; l <= n; ++l) {
            int lw = l == i ? i + 1 : l == i + 1 ? i : l;
            for (int h = 0; h < s3.order(); ++h)
                CHECK(amul(s3, aelem(wslot(n, l, h)), b) ==
                      amul(s3, b, aelem(wslot(n, lw, h))));
        }
    }
}

TEST_CASE("class sums and triples") {
    auto triv = GroupTable::load("trivial");
    ClassTriple id2{{{1, 0}, {1, 0}}, 1, 0};
    CHECK(class_sum(triv, 2, id2) == aelem(widentity(2)));
    ClassTriple swap2{{{2, 0}}, 2, 0};
    CHECK(class_sum(triv, 2, swap2) == yjm(triv, 2, 2));

    auto c2 = GroupTable::load("cyclic:2");
    CHECK(enumerate_class_triples(c2, 2).size() == 6);

    CHECK_THROWS_AS(class_sum(triv, 2, ClassTriple{{{2, 0}}, 1, 0}), std::invalid_argument);

    // Y / Y' are class sums: spot check a few identities
    CHECK(yprime_element(triv, 2, 2, 0) == yjm(triv, 2, 2));
    CHECK(y_element(triv, 2, 1, 0).empty());
    auto x3 = yjm(triv, 3, 3);
    CHECK(yprime_element(triv, 3, 2, 0) == x3);  // X_n = Y'_{2,1} for trivial G
}

TEST_CASE("algebra distributes and associates") {
    auto c2 = GroupTable::load("cyclic:2");
    int n = 2;
    auto a = yjm(c2, 2, n);
    auto b = b_element(c2, 1, n);
    auto c = aadd(aelem(widentity(n), Rational(1, 2)), ascale(a, -3));
    CHECK(amul(c2, a, aadd(b, c)) == aadd(amul(c2, a, b), amul(c2, a, c)));
    CHECK(amul(c2, amul(c2, a, b), c) == amul(c2, a, amul(c2, b, c)));
}

TEST_CASE("relation suites") {
    for (const char* name : {"trivial", "cyclic:2", "cyclic:3"}) {
        auto G = GroupTable::load(name);
        for (int n = 2; n <= 3; ++n) {
            auto rep = verify_relations(G, n);
            INFO(name << " n=" << n << " first failure: " << rep.first_failure());
            CHECK(rep.all_pass());
        }
    }
    auto s3 = GroupTable::load("sym:3");
    auto rep = verify_relations(s3, 2);
    INFO("sym:3 n=2 first failure: " << rep.first_failure());
    CHECK(rep.all_pass());
}

TEST_CASE("commutant verification") {
    auto triv = GroupTable::load("trivial");
    auto r2 = verify_commutant(triv, 2);
    CHECK(r2.all_pass());
    CHECK(enumerate_class_triples(triv, 2).size() == 2);

    auto r3 = verify_commutant(triv, 3);
    CHECK(r3.all_pass());
    CHECK(enumerate_class_triples(triv, 3).size() == 4);

    auto c2 = GroupTable::load("cyclic:2");
    auto rc = verify_commutant(c2, 2);
    CHECK(rc.all_pass());
    CHECK(enumerate_class_triples(c2, 2).size() == 6);
}

TEST_CASE("yjm centralizes the smaller subgroup") {
    auto c2 = GroupTable::load("cyclic:2");
    int n = 2;
    auto x2 = yjm(c2, 2, n);
    for (const auto& h : enumerate_wreath(c2, n)) {
        if (h.perm[n - 1] != n - 1) continue;
        CHECK(amul(c2, aelem(h), x2) == amul(c2, x2, aelem(h)));
    }
}

TEST_CASE("gz dimension") {
    auto triv = GroupTable::load("trivial");
    CHECK(gz_dimension(triv, 2) == 2);
    CHECK(gz_dimension(triv, 3) == 4);
    auto c2 = GroupTable::load("cyclic:2");
    CHECK(gz_dimension(c2, 2) == 6);

    // equals the total tableau count
    for (int n = 2; n <= 3; ++n) {
        long long tabs = 0;
        for (const auto& mu : enumerate_gdiagrams(n, 1)) tabs += enumerate_gtableaux(mu).size();
        CHECK(gz_dimension(triv, n) == tabs);
    }
    long long tabs2 = 0;
    for (const auto& mu : enumerate_gdiagrams(2, 2)) tabs2 += enumerate_gtableaux(mu).size();
    CHECK(gz_dimension(c2, 2) == tabs2);
}

TEST_CASE("materialization guard") {
    auto s3 = GroupTable::load("sym:3");
    CHECK_THROWS_AS(enumerate_wreath(s3, 4), std::runtime_error);
}
