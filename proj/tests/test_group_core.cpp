#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "wreathrep/group_core.hpp"

using namespace wreathrep;

TEST_CASE("trivial group") {
    auto G = GroupTable::load("trivial");
    CHECK(G.order() == 1);
    CHECK(G.num_classes() == 1);
    CHECK(G.num_irreps() == 1);
    CHECK(G.irrep(0).dim == 1);
    CHECK(G.verify_irreps().all_pass());
}

TEST_CASE("cyclic groups") {
    auto G = GroupTable::load("cyclic:2");
    CHECK(G.order() == 2);
    CHECK(G.num_classes() == 2);
    CHECK(G.irrep(0).character_exact(1) == QExt(1));
    CHECK(G.irrep(1).character_exact(1) == QExt(-1));
    CHECK(G.all_irreps_exact());

    auto C3 = GroupTable::load("cyclic:3");
    CHECK(C3.all_irreps_exact());
    QExt w = C3.irrep(1).character_exact(1);
    CHECK(w * w * w == QExt(1));
    CHECK(w != QExt(1));
    auto inv3 = C3.inverse_class_involution();
    CHECK(inv3[0] == 0);
    CHECK(inv3[1] == 2);
    CHECK(inv3[2] == 1);

    auto C4 = GroupTable::load("cyclic:4");
    CHECK(C4.verify_irreps(1e-12).all_pass());
    auto C5 = GroupTable::load("cyclic:5");
    CHECK_FALSE(C5.all_irreps_exact());
    CHECK(C5.verify_irreps(1e-9).all_pass());
    auto C6 = GroupTable::load("cyclic:6");
    CHECK(C6.all_irreps_exact());
    CHECK(C6.verify_irreps(1e-12).all_pass());
}

TEST_CASE("symmetric group on three letters") {
    auto G = GroupTable::load("sym:3");
    CHECK(G.order() == 6);
    CHECK(G.num_classes() == 3);
    std::vector<int> dims;
    for (const auto& ir : G.irreps()) dims.push_back(ir.dim);
    CHECK(dims == std::vector<int>{1, 1, 2});
    int sumsq = 0;
    for (int d : dims) sumsq += d * d;
    CHECK(sumsq == 6);
    CHECK(G.all_irreps_exact());
    CHECK(G.verify_irreps(1e-12).all_pass());

    // brute-force check against the classical S3 character table; classes
    // sort by size, so order is identity, 3-cycles, transpositions
    std::vector<size_t> sizes;
    for (const auto& c : G.classes()) sizes.push_back(c.size());
    CHECK(sizes == std::vector<size_t>{1, 2, 3});
    const auto& std2 = G.irrep(2);
    CHECK(std2.character_exact(0) == QExt(2));
    CHECK(std2.character_exact(G.class_rep(1)) == QExt(-1));
    CHECK(std2.character_exact(G.class_rep(2)) == QExt(0));

    auto inv = G.inverse_class_involution();
    CHECK(inv == std::vector<int>{0, 1, 2});
}

TEST_CASE("class invariance under conjugation") {
    for (const char* name : {"cyclic:4", "sym:3"}) {
        auto G = GroupTable::load(name);
        for (int g = 0; g < G.order(); ++g)
            for (int h = 0; h < G.order(); ++h)
                CHECK(G.class_of(G.mul(G.mul(g, h), G.inv(g))) == G.class_of(h));
    }
}

TEST_CASE("group file round trip") {
    // write cyclic:2 as a JSON group file and reload it
    const char* path = "c2_group.json";
    {
        std::ofstream out(path);
        out << R"({"order":2,"mul":[[0,1],[1,0]],"irreps":[)"
            << R"({"dim":1,"matrices":[[[["1","0"]]],[[["1","0"]]]]},)"
            << R"({"dim":1,"matrices":[[[["1","0"]]],[[["-1","0"]]]]}]})";
    }
    auto G = GroupTable::load(path);
    CHECK(G.order() == 2);
    CHECK(G.num_irreps() == 2);
    CHECK(G.all_irreps_exact());
    CHECK(G.irrep(1).character_exact(1) == QExt(-1));
}

TEST_CASE("bad tables are rejected") {
    const char* path = "bad_group.json";
    {
        std::ofstream out(path);
        // "mul" is not associative / has no identity structure
        out << R"({"order":2,"mul":[[1,1],[1,1]],"irreps":[)"
            << R"({"dim":1,"matrices":[[[["1","0"]]],[[["1","0"]]]]},)"
            << R"({"dim":1,"matrices":[[[["1","0"]]],[[["-1","0"]]]]}]})";
    }
    CHECK_THROWS_AS(GroupTable::load(path), std::invalid_argument);
}
