#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genred/cartan.hpp"

using namespace genred;

TEST_CASE("validate_cartan") {
    SUBCASE("G2 matrix is valid") {
        IntMat m = IntMat::from_rows_int({{2, -1}, {-3, 2}});
        CartanMatrix C = validate_cartan(m);
        auto labels = classify(C);
        REQUIRE(labels.size() == 1);
        CHECK(labels[0].str() == "G2");
    }
    SUBCASE("affine A1~ rejected") {
        IntMat m = IntMat::from_rows_int({{2, -2}, {-2, 2}});
        CHECK_THROWS_AS(validate_cartan(m), NotCartan);
    }
    SUBCASE("1x1") {
        CartanMatrix C = validate_cartan(IntMat::from_rows_int({{2}}));
        CHECK(classify(C)[0].str() == "A1");
    }
    SUBCASE("C1 violations") {
        CHECK_THROWS_AS(validate_cartan(IntMat::from_rows_int({{3}})), NotCartan);
        CHECK_THROWS_AS(validate_cartan(IntMat::from_rows_int({{2, 1}, {1, 2}})), NotCartan);
        CHECK_THROWS_AS(validate_cartan(IntMat::from_rows_int({{2, -1}, {0, 2}})), NotCartan);
    }
}

TEST_CASE("classify") {
    SUBCASE("standard B3") {
        auto labels = classify(standard_cartan('B', 3));
        REQUIRE(labels.size() == 1);
        CHECK(labels[0].str() == "B3");
    }
    SUBCASE("block diagonal A1+A1") {
        IntMat m = IntMat::block_diag(standard_cartan('A', 1).entries(), standard_cartan('A', 1).entries());
        auto labels = classify(validate_cartan(m));
        REQUIRE(labels.size() == 2);
        CHECK(labels[0].str() == "A1");
        CHECK(labels[1].str() == "A1");
    }
    SUBCASE("F4 from the explicit matrix") {
        IntMat m = IntMat::from_rows_int({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
        auto labels = classify(validate_cartan(m));
        REQUIRE(labels.size() == 1);
        CHECK(labels[0].str() == "F4");
    }
    SUBCASE("B2 normalizes to C2, D3 to A3") {
        CHECK(classify(standard_cartan('B', 2))[0].str() == "C2");
        CHECK(classify(standard_cartan('D', 3))[0].str() == "A3");
    }
    SUBCASE("round trip on the catalog up to rank 8") {
        for (char fam : {'A', 'B', 'C', 'D', 'E', 'F', 'G'}) {
            std::size_t lo = fam == 'A' ? 1 : (fam == 'E' ? 6 : (fam == 'F' ? 4 : (fam == 'G' ? 2 : 2)));
            std::size_t hi = fam == 'E' ? 8 : (fam == 'F' ? 4 : (fam == 'G' ? 2 : 8));
            for (std::size_t rank = lo; rank <= hi; ++rank) {
                if (fam == 'D' && rank < 3) continue;
                auto labels = classify(standard_cartan(fam, rank));
                REQUIRE(labels.size() == 1);
                char expect_fam = fam;
                if (fam == 'B' && rank == 2) expect_fam = 'C';
                if (fam == 'D' && rank == 3) expect_fam = 'A';
                CHECK(labels[0].family == expect_fam);
                CHECK(labels[0].rank == rank);
            }
        }
    }
    SUBCASE("accepts permuted block combinations") {
        std::mt19937 rng(77);
        for (int trial = 0; trial < 20; ++trial) {
            IntMat block = IntMat::block_diag(standard_cartan('C', 3).entries(), standard_cartan('A', 2).entries());
            std::size_t n = block.rows();
            std::vector<std::size_t> perm(n);
            for (std::size_t i = 0; i < n; ++i) perm[i] = i;
            std::shuffle(perm.begin(), perm.end(), rng);
            IntMat shuffled(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) shuffled.at(perm[i], perm[j]) = block.at(i, j);
            auto labels = classify(validate_cartan(shuffled));
            REQUIRE(labels.size() == 2);
            CHECK(labels[0].str() == "A2");
            CHECK(labels[1].str() == "C3");
        }
    }
}

TEST_CASE("standard_cartan explicit matrices") {
    CHECK(standard_cartan('A', 3).entries() ==
          IntMat::from_rows_int({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
    CHECK(standard_cartan('C', 2).entries() == IntMat::from_rows_int({{2, -1}, {-2, 2}}));
    CHECK(standard_cartan('B', 2).entries() == standard_cartan('C', 2).entries().transpose());
    CHECK_THROWS_AS(standard_cartan('E', 9), BadRank);
    CHECK_THROWS_AS(standard_cartan('G', 3), BadRank);
}

TEST_CASE("fundamental_group matches the table up to rank 8") {
    auto factors = [](const CartanMatrix& C) { return fundamental_group(C); };
    auto eq = [](const std::vector<Int>& got, std::vector<long> want) {
        if (got.size() != want.size()) return false;
        for (std::size_t i = 0; i < got.size(); ++i)
            if (got[i] != want[i]) return false;
        return true;
    };
    // A_{n-1}: Z/n
    for (std::size_t r = 1; r <= 8; ++r) CHECK(eq(factors(standard_cartan('A', r)), {static_cast<long>(r + 1)}));
    // B, C: Z/2
    for (std::size_t r = 2; r <= 8; ++r) {
        CHECK(eq(factors(standard_cartan('B', r)), {2}));
        CHECK(eq(factors(standard_cartan('C', r)), {2}));
    }
    // D: Z/4 (odd), Z/2+Z/2 (even)
    CHECK(eq(factors(standard_cartan('D', 4)), {2, 2}));
    CHECK(eq(factors(standard_cartan('D', 5)), {4}));
    CHECK(eq(factors(standard_cartan('D', 6)), {2, 2}));
    CHECK(eq(factors(standard_cartan('D', 7)), {4}));
    CHECK(eq(factors(standard_cartan('D', 8)), {2, 2}));
    // exceptional
    CHECK(eq(factors(standard_cartan('E', 6)), {3}));
    CHECK(eq(factors(standard_cartan('E', 7)), {2}));
    CHECK(eq(factors(standard_cartan('E', 8)), {}));
    CHECK(eq(factors(standard_cartan('F', 4)), {}));
    CHECK(eq(factors(standard_cartan('G', 2)), {}));
}

TEST_CASE("diagram automorphisms") {
    CHECK(diagram_automorphisms(standard_cartan('A', 3)).size() == 2);
    CHECK(diagram_automorphisms(standard_cartan('D', 4)).size() == 6);
    CHECK(diagram_automorphisms(standard_cartan('G', 2)).size() == 1);
    CHECK(diagram_automorphisms(standard_cartan('E', 6)).size() == 2);
    CHECK(diagram_automorphisms(standard_cartan('B', 3)).size() == 1);
}

TEST_CASE("dynkin diagram edges") {
    DynkinDiagram d = standard_cartan('C', 2).diagram();
    REQUIRE(d.edges.size() == 1);
    CHECK(d.edges[0].bond == 2);
    CHECK(d.edges[0].m == 4);
    // C2: c_{10} = -2 means alpha_0 long, arrow toward node 1
    CHECK(d.edges[0].arrow_toward == 1);

    DynkinDiagram g = standard_cartan('G', 2).diagram();
    REQUIRE(g.edges.size() == 1);
    CHECK(g.edges[0].bond == 3);
    CHECK(g.edges[0].m == 6);
}
