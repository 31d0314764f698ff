#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genred/isogeny.hpp"

using namespace genred;

namespace {

PIsogeny scalar_isogeny(const RootDatum& D, const Int& p, unsigned long m) {
    Int q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), m);
    IntMat P = IntMat::identity(D.rank);
    IntMat Pc = IntMat::identity(D.base_size);
    for (std::size_t i = 0; i < D.rank; ++i) P.at(i, i) = q;
    for (std::size_t s = 0; s < D.base_size; ++s) Pc.at(s, s) = q;
    return validate_isogeny(D, D, p, P, Pc);
}

PIsogeny strangexp_pair(unsigned long m) {
    RootDatum D = direct_product(sc_datum(standard_cartan('A', 1)), adjoint_datum(standard_cartan('A', 1)));
    IntMat P(2, 2), Pc(2, 2);
    Int two_m, two_m1, two_mm1;
    mpz_ui_pow_ui(two_m.get_mpz_t(), 2, m);
    mpz_ui_pow_ui(two_m1.get_mpz_t(), 2, m + 1);
    mpz_ui_pow_ui(two_mm1.get_mpz_t(), 2, m - 1);
    P.at(0, 1) = two_m;
    P.at(1, 0) = two_m;
    Pc.at(0, 1) = two_mm1;
    Pc.at(1, 0) = two_m1;
    return validate_isogeny(D, D, Int(2), P, Pc);
}

}  // namespace

TEST_CASE("validate_isogeny") {
    SUBCASE("suzuki C2 pair") {
        PIsogeny f = exceptional_catalog(ExceptionalType::C2, 1);
        CHECK(f.q_base[0] == 2);
        CHECK(f.q_base[1] == 4);
        CHECK(f.dagger == std::vector<std::size_t>{1, 0});
    }
    SUBCASE("Bn -> Cn special isogeny") {
        PIsogeny f = exceptional_catalog(ExceptionalType::BnCn, 3);
        CHECK(f.q_base == std::vector<Int>{Int(1), Int(2), Int(2)});
        CHECK(!f.is_endo());
    }
    SUBCASE("scalar p-isogeny, all exponents p") {
        for (const RootDatum& D : {sc_datum(standard_cartan('G', 2)), catalog_datum("GL", 3)}) {
            PIsogeny f = scalar_isogeny(D, Int(3), 1);
            for (const Int& q : f.q_roots) CHECK(q == 3);
        }
    }
    SUBCASE("MI1 violations") {
        RootDatum D = adjoint_datum(standard_cartan('A', 1));
        IntMat P(1, 1), Pc(1, 1);
        P.at(0, 0) = 6;
        Pc.at(0, 0) = 6;  // 6 is not a power of 2
        CHECK_THROWS_AS(validate_isogeny(D, D, Int(2), P, Pc), MI1Violation);
        Pc.at(0, 0) = 0;
        CHECK_THROWS_AS(validate_isogeny(D, D, Int(2), P, Pc), MI1Violation);
    }
    SUBCASE("MI2 violations") {
        RootDatum D = adjoint_datum(standard_cartan('C', 2));
        IntMat P = IntMat::identity(2), Pc = IntMat::identity(2);
        P.at(0, 0) = 2;  // breaks Pcirc*Acheck = Acheck*P
        CHECK_THROWS_AS(validate_isogeny(D, D, Int(2), P, Pc), MI2Violation);
        IntMat zero(2, 2);
        CHECK_THROWS_AS(validate_isogeny(D, D, Int(2), zero, Pc), MI2Violation);
    }
    SUBCASE("p = 1 admits only permutation Pcirc") {
        RootDatum gl3 = catalog_datum("GL", 3);
        // unitary pair (-J_n, J_{n-1}): the character map of g -> J (g^tr)^{-1} J
        IntMat J3(3, 3), J2(2, 2);
        for (int i = 0; i < 3; ++i) J3.at(i, 2 - i) = -1;
        for (int i = 0; i < 2; ++i) J2.at(i, 1 - i) = 1;
        PIsogeny f = validate_isogeny(gl3, gl3, Int(1), J3, J2);
        CHECK(f.dagger == std::vector<std::size_t>{1, 0});
        IntMat bad = J2;
        bad.at(0, 1) = 2;
        CHECK_THROWS_AS(validate_isogeny(gl3, gl3, Int(1), J3, bad), MI1Violation);
    }
    SUBCASE("C*Pcirc = Pcirc*C' holds for every validated pair") {
        for (unsigned long m : {0UL, 1UL, 2UL}) {
            PIsogeny f = exceptional_catalog(ExceptionalType::G2, m);
            CHECK(f.target.cartan.entries() * f.Pcirc == f.Pcirc * f.source.cartan.entries());
        }
        PIsogeny bc = exceptional_catalog(ExceptionalType::BnCn, 4);
        CHECK(bc.target.cartan.entries() * bc.Pcirc == bc.Pcirc * bc.source.cartan.entries());
    }
    SUBCASE("q constant on Weyl orbits, exhaustive for rank <= 3") {
        for (auto f : {exceptional_catalog(ExceptionalType::C2, 0), exceptional_catalog(ExceptionalType::BnCn, 3)}) {
            for (std::size_t i = 0; i < f.target.roots.size(); ++i)
                for (std::size_t t = 0; t < f.target.base_size; ++t) {
                    auto j = f.target.root_index(f.target.weyl_gens[t].apply(f.target.roots[i]));
                    REQUIRE(j);
                    CHECK(f.q_roots[*j] == f.q_roots[i]);
                }
        }
    }
}

TEST_CASE("classify_isogeny") {
    SUBCASE("strangexp pair: Steinberg but not Frobenius, q = 2^m") {
        for (unsigned long m : {1UL, 2UL, 3UL}) {
            PIsogeny f = strangexp_pair(m);
            auto cls = classify_isogeny(f);
            CHECK(!cls.central);
            CHECK(!cls.isomorphism);
            CHECK(!cls.frobenius_m);
            REQUIRE(cls.steinberg);
            CHECK(cls.steinberg->first == 2);
            CHECK(cls.steinberg->second == 2 * m);
            Int two_m;
            mpz_ui_pow_ui(two_m.get_mpz_t(), 2, m);
            REQUIRE(cls.q);
            CHECK(*cls.q == QuadNum(two_m));
            CHECK(*cls.twist == TwistKind::Twisted);
            CHECK(*cls.ordinary);
        }
    }
    SUBCASE("suzuki C2 at m = 0: q = sqrt 2, very twisted") {
        auto cls = classify_isogeny(exceptional_catalog(ExceptionalType::C2, 0));
        REQUIRE(cls.steinberg);
        CHECK(cls.steinberg->first == 2);
        CHECK(cls.steinberg->second == 1);
        REQUIRE(cls.q);
        CHECK(*cls.q == QuadNum::sqrt_of(2));
        CHECK(*cls.twist == TwistKind::VeryTwisted);
        CHECK(!*cls.ordinary);
        CHECK(!cls.frobenius_m);
    }
    SUBCASE("scalar pair is Frobenius") {
        auto cls = classify_isogeny(scalar_isogeny(sc_datum(standard_cartan('B', 3)), Int(2), 2));
        REQUIRE(cls.frobenius_m);
        CHECK(*cls.frobenius_m == 2);
        REQUIRE(cls.steinberg);
        CHECK(*cls.twist == TwistKind::Untwisted);
        REQUIRE(cls.q);
        CHECK(*cls.q == QuadNum(4));
    }
    SUBCASE("frobenius implies steinberg with equal exponents") {
        // the unitary twist scaled by q = 3
        RootDatum gl3 = catalog_datum("GL", 3);
        IntMat J3(3, 3), J2(2, 2);
        for (int i = 0; i < 3; ++i) J3.at(i, 2 - i) = -3;
        for (int i = 0; i < 2; ++i) J2.at(i, 1 - i) = 3;
        auto cls = classify_isogeny(validate_isogeny(gl3, gl3, Int(3), J3, J2));
        REQUIRE(cls.frobenius_m);
        CHECK(*cls.frobenius_m == 1);
        REQUIRE(cls.steinberg);
        CHECK(*cls.twist == TwistKind::Twisted);
    }
    SUBCASE("p = 1 unitary pair: isomorphism, central, no frobenius") {
        RootDatum gl2 = catalog_datum("GL", 2);
        IntMat J2(2, 2), J1(1, 1);
        J2.at(0, 1) = -1;
        J2.at(1, 0) = -1;
        J1.at(0, 0) = 1;
        auto cls = classify_isogeny(validate_isogeny(gl2, gl2, Int(1), J2, J1));
        CHECK(cls.central);
        CHECK(cls.isomorphism);
        CHECK(!cls.frobenius_m);
        CHECK(!cls.steinberg);
    }
    SUBCASE("q consistency: |det P| = q^n and q^|S| = prod q_s") {
        for (unsigned long m : {0UL, 1UL}) {
            PIsogeny f = exceptional_catalog(ExceptionalType::F4, m);
            auto cls = classify_isogeny(f);
            REQUIRE(cls.q);
            QuadNum qn = qn_pow(*cls.q, f.target.rank);
            Int det = abs(f.P.det());
            CHECK(qn == QuadNum(det));
            QuadNum qs = qn_pow(*cls.q, f.target.base_size);
            QuadNum prod(1);
            for (const Int& q : f.q_base) prod *= QuadNum(q);
            CHECK(qs == prod);
        }
    }
}

TEST_CASE("induced_sigma") {
    SUBCASE("unitary pair gives diagram reversal") {
        RootDatum gl4 = catalog_datum("GL", 4);
        IntMat J4(4, 4), J3(3, 3);
        for (int i = 0; i < 4; ++i) J4.at(i, 3 - i) = -1;
        for (int i = 0; i < 3; ++i) J3.at(i, 2 - i) = 1;
        PIsogeny f = validate_isogeny(gl4, gl4, Int(1), J4, J3);
        CHECK(induced_sigma(f) == std::vector<std::size_t>{2, 1, 0});
    }
    SUBCASE("scalar isogeny gives the identity") {
        PIsogeny f = scalar_isogeny(sc_datum(standard_cartan('C', 2)), Int(5), 1);
        CHECK(induced_sigma(f) == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("F4 pair gives the order-2 flip") {
        PIsogeny f = exceptional_catalog(ExceptionalType::F4, 0);
        CHECK(induced_sigma(f) == std::vector<std::size_t>{3, 2, 1, 0});
    }
}

TEST_CASE("morphism_check") {
    SUBCASE("SL_n inside GL_n") {
        for (std::size_t n : {2, 3, 4}) {
            RootDatum gl = catalog_datum("GL", n);
            RootDatum sl = catalog_datum("SL", n);
            // restriction matrix: e_i -> coefficients against the coroot-dual basis
            IntMat P(n - 1, n);
            for (std::size_t i = 0; i + 1 < n; ++i) {
                P.at(i, i) = 1;
                P.at(i, i + 1) = -1;
            }
            auto rep = morphism_check(gl, sl, P, Int(3));
            CHECK(rep.is_hom_of_root_data);
            CHECK(rep.is_surjective);
            CHECK(rep.no_p_prime_torsion);
        }
    }
    SUBCASE("suzuki pair is not a hom of root data") {
        PIsogeny f = exceptional_catalog(ExceptionalType::C2, 0);
        auto rep = morphism_check(f.source, f.target, f.P, Int(2));
        CHECK(!rep.is_hom_of_root_data);
    }
    SUBCASE("identity") {
        RootDatum D = sc_datum(standard_cartan('A', 2));
        auto rep = morphism_check(D, D, IntMat::identity(2), Int(2));
        CHECK(rep.is_hom_of_root_data);
        CHECK(rep.is_surjective);
    }
}

TEST_CASE("regular_embedding_check") {
    SUBCASE("SL2 -> GL2 at p = 3") {
        RootDatum gl2 = catalog_datum("GL", 2);
        RootDatum sl2 = catalog_datum("SL", 2);
        IntMat P = IntMat::from_rows_int({{1, -1}});
        auto rep = regular_embedding_check(gl2, sl2, P, Int(3));
        CHECK(rep.is_regular_embedding);
    }
    SUBCASE("identity on sc(A1) at p = 3 fails") {
        RootDatum sl2 = catalog_datum("SL", 2);
        auto rep = regular_embedding_check(sl2, sl2, IntMat::identity(1), Int(3));
        CHECK(!rep.is_regular_embedding);
        CHECK(rep.hom_of_root_data);
        CHECK(rep.surjective);
        CHECK(!rep.p_prime_torsion_free);
    }
    SUBCASE("identity on PGL2 passes for any p") {
        RootDatum pgl2 = catalog_datum("PGL", 2);
        for (long p : {2L, 3L, 5L})
            CHECK(regular_embedding_check(pgl2, pgl2, IntMat::identity(1), Int(p)).is_regular_embedding);
    }
}

TEST_CASE("regular_embedding_build") {
    SUBCASE("sc(A1) at odd p embeds into a GL2-like datum") {
        RegularEmbedding emb = regular_embedding_build(catalog_datum("SL", 2), Int(3));
        CHECK(emb.ambient.rank == 2);
        CHECK(rank1_classify(emb.ambient) == Rank1Class::GL2Like);
        CHECK(is_isomorphic(isomorphic(emb.ambient, catalog_datum("GL", 2))));
        auto rep = regular_embedding_check(emb.ambient, catalog_datum("SL", 2), emb.inclusion, Int(3));
        CHECK(rep.is_regular_embedding);
    }
    SUBCASE("adjoint input gives a product with a torus") {
        RootDatum ad = adjoint_datum(standard_cartan('A', 2));
        RegularEmbedding emb = regular_embedding_build(ad, Int(5));
        CHECK(emb.ambient.rank == 4);
        CHECK(emb.ambient.roots.size() == ad.roots.size());
        CHECK(x_mod_zr_invariants(emb.ambient).free_rank == 2);
        CHECK(x_mod_zr_invariants(emb.ambient).torsion.empty());
    }
    SUBCASE("sc(C2) at p = 2 has connected center") {
        RegularEmbedding emb = regular_embedding_build(sc_datum(standard_cartan('C', 2)), Int(2));
        CHECK(center_is_connected(emb.ambient, Int(2)));
        auto rep = regular_embedding_check(emb.ambient, sc_datum(standard_cartan('C', 2)), emb.inclusion, Int(2));
        CHECK(rep.is_regular_embedding);
    }
    SUBCASE("output always passes its own check across the catalog") {
        for (long p : {2L, 3L}) {
            for (const RootDatum& D :
                 {sc_datum(standard_cartan('A', 2)), sc_datum(standard_cartan('D', 4)),
                  adjoint_datum(standard_cartan('C', 2))}) {
                RegularEmbedding emb = regular_embedding_build(D, Int(p));
                CHECK(regular_embedding_check(emb.ambient, D, emb.inclusion, Int(p)).is_regular_embedding);
                CHECK(center_is_connected(emb.ambient, Int(p)));
            }
        }
    }
    SUBCASE("non-semisimple input rejected") {
        CHECK_THROWS_AS(regular_embedding_build(catalog_datum("GL", 2), Int(3)), NotSemisimple);
    }
}

TEST_CASE("dual_morphism") {
    SUBCASE("dual of a scalar isogeny is scalar") {
        PIsogeny f = scalar_isogeny(sc_datum(standard_cartan('A', 2)), Int(2), 1);
        PIsogeny d = dual_morphism(f);
        CHECK(d.P == f.P.transpose());
        auto cls = classify_isogeny(d);
        REQUIRE(cls.frobenius_m);
        CHECK(*cls.frobenius_m == 1);
    }
    SUBCASE("dual of the suzuki C2 pair validates on the dual datum") {
        PIsogeny f = exceptional_catalog(ExceptionalType::C2, 0);
        PIsogeny d = dual_morphism(f);
        CHECK(classify(d.target.cartan)[0].str() == "C2");
        auto cls = classify_isogeny(d);
        REQUIRE(cls.steinberg);
        CHECK(*cls.twist == TwistKind::VeryTwisted);
    }
    SUBCASE("dual of dual is the original fieldwise") {
        for (auto f : {scalar_isogeny(catalog_datum("GL", 2), Int(5), 1),
                       exceptional_catalog(ExceptionalType::G2, 1)}) {
            PIsogeny dd = dual_morphism(dual_morphism(f));
            CHECK(dd.P == f.P);
            CHECK(dd.Pcirc == f.Pcirc);
            CHECK(dd.source.A == f.source.A);
            CHECK(dd.target.Acheck == f.target.Acheck);
        }
    }
}

TEST_CASE("exceptional_catalog") {
    SUBCASE("G2 at m = 1: P = [[0,3],[9,0]], P^2 = 27 I") {
        PIsogeny f = exceptional_catalog(ExceptionalType::G2, 1);
        CHECK(f.P == IntMat::from_rows_int({{0, 3}, {9, 0}}));
        Int c;
        CHECK((f.P * f.P).is_scalar(c));
        CHECK(c == 27);
    }
    SUBCASE("P_m^2 = p^(2m+1) I for all three families, m <= 3") {
        for (unsigned long m = 0; m <= 3; ++m) {
            for (auto [t, p] : {std::pair{ExceptionalType::C2, 2L}, {ExceptionalType::G2, 3L},
                                {ExceptionalType::F4, 2L}}) {
                PIsogeny f = exceptional_catalog(t, m);
                Int c, want;
                mpz_ui_pow_ui(want.get_mpz_t(), p, 2 * m + 1);
                CHECK((f.P * f.P).is_scalar(c));
                CHECK(c == want);
            }
        }
    }
    SUBCASE("F4 at m = 0 is the printed antidiagonal matrix") {
        PIsogeny f = exceptional_catalog(ExceptionalType::F4, 0);
        CHECK(f.P == IntMat::from_rows_int({{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 2, 0, 0}, {2, 0, 0, 0}}));
    }
    SUBCASE("BnCn at n = 3 is diag(1,2,2)") {
        PIsogeny f = exceptional_catalog(ExceptionalType::BnCn, 3);
        CHECK(f.P == IntMat::from_rows_int({{1, 0, 0}, {0, 2, 0}, {0, 0, 2}}));
        CHECK(classify(f.source.cartan)[0].str() == "B3");
        CHECK(classify(f.target.cartan)[0].str() == "C3");
    }
}
