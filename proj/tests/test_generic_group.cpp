#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "genred/generic_group.hpp"

using namespace genred;

namespace {

QuadMat neg_j(std::size_t n) {
    QuadMat m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, n - 1 - i) = QuadNum(-1);
    return m;
}

QPoly gl_order(std::size_t n) {
    // q^{n(n-1)/2} (q-1)(q^2-1)...(q^n-1)
    QPoly f = QPoly::y_power(n * (n - 1) / 2);
    for (std::size_t k = 1; k <= n; ++k) f = f * QPoly::y_pow_minus(k, 1);
    return f;
}

}  // namespace

TEST_CASE("make_complete") {
    SUBCASE("untwisted A1, case I") {
        CompleteRootDatum crd = make_complete(catalog_datum("SL", 2), QuadMat::identity(1));
        CHECK(crd.order == 1);
        CHECK(crd.p_case == 0);
        CHECK(crd.base_perm == std::vector<std::size_t>{0});
    }
    SUBCASE("GL_n with -J gives the twisted form") {
        CompleteRootDatum crd = make_complete(catalog_datum("GL", 3), neg_j(3));
        CHECK(crd.order == 2);
        CHECK(crd.p_case == 0);
        CHECK(crd.base_perm == std::vector<std::size_t>{1, 0});
    }
    SUBCASE("suzuki coset representative: case II(2)") {
        auto [crd, q] = from_isogeny(exceptional_catalog(ExceptionalType::C2, 0));
        CHECK(q == QuadNum::sqrt_of(2));
        CHECK(crd.p_case == 2);
        CHECK(crd.order == 2);
        CHECK(crd.base_perm == std::vector<std::size_t>{1, 0});
    }
    SUBCASE("base-normalization composes with the unique Weyl element") {
        // -J on the GL3 datum is already base-preserving; s1 * (-J) is not
        RootDatum gl3 = catalog_datum("GL", 3);
        QuadMat q = neg_j(3);
        QuadMat s1(3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) s1.at(i, j) = QuadNum(gl3.weyl_gens[0].at(i, j));
        CompleteRootDatum a = make_complete(gl3, q);
        CompleteRootDatum b = make_complete(gl3, s1 * q);
        CHECK(a.phi0 == b.phi0);  // same coset, same normalized representative
        CHECK(b.base_perm == std::vector<std::size_t>{1, 0});
    }
    SUBCASE("rejects infinite order") {
        QuadMat m(1);
        m.at(0, 0) = QuadNum(2);
        CHECK_THROWS_AS(make_complete(toric_datum(1), m), NotFiniteOrder);
    }
    SUBCASE("an element of W normalizes to the untwisted form") {
        // the coordinate reversal of GL3 is the longest Weyl element
        RootDatum gl3 = catalog_datum("GL", 3);
        QuadMat j(3);
        for (std::size_t i = 0; i < 3; ++i) j.at(i, 2 - i) = QuadNum(1);
        CompleteRootDatum crd = make_complete(gl3, j);
        CHECK(crd.phi0.is_identity());
        CHECK(crd.order == 1);
        CHECK(crd.base_perm == std::vector<std::size_t>{0, 1});
    }
    SUBCASE("explicit suzuki representative (1/sqrt 2) P0 on ad(C2)") {
        RootDatum d = adjoint_datum(standard_cartan('C', 2));
        QuadMat phi(2);
        phi.at(0, 1) = QuadNum(Int(0), Int(1), 2, Int(2));  // 1/sqrt(2)
        phi.at(1, 0) = QuadNum::sqrt_of(2);
        CompleteRootDatum crd = make_complete(d, phi);
        CHECK(crd.p_case == 2);
        CHECK(crd.order == 2);
        CHECK(order_polynomial_bn(crd).poly == order_table_row("2B2")->full);
        auto [via_isog, q] = from_isogeny(exceptional_catalog(ExceptionalType::C2, 0));
        CHECK(crd.phi0 == via_isog.phi0);
    }
    SUBCASE("rejects maps that do not normalize W") {
        QuadMat m(2);
        m.at(0, 0) = QuadNum(1);
        m.at(1, 0) = QuadNum(1);
        m.at(1, 1) = QuadNum(-1);  // order 2 but sends alpha_1 off the root rays
        CHECK_THROWS_AS(make_complete(catalog_datum("SL", 3), m), DoesNotNormalizeW);
    }
}

TEST_CASE("from_isogeny") {
    SUBCASE("scalar frobenius on sc(G2)") {
        RootDatum D = sc_datum(standard_cartan('G', 2));
        IntMat P = IntMat::identity(2), Pc = IntMat::identity(2);
        for (int i = 0; i < 2; ++i) {
            P.at(i, i) = 3;
            Pc.at(i, i) = 3;
        }
        auto [crd, q] = from_isogeny(validate_isogeny(D, D, Int(3), P, Pc));
        CHECK(q == QuadNum(3));
        CHECK(crd.phi0.is_identity());
    }
    SUBCASE("strangexp pair at m = 1: phi0 of order 2, q = 2") {
        RootDatum D = direct_product(sc_datum(standard_cartan('A', 1)), adjoint_datum(standard_cartan('A', 1)));
        IntMat P(2, 2), Pc(2, 2);
        P.at(0, 1) = 2;
        P.at(1, 0) = 2;
        Pc.at(0, 1) = 1;
        Pc.at(1, 0) = 4;
        auto [crd, q] = from_isogeny(validate_isogeny(D, D, Int(2), P, Pc));
        CHECK(q == QuadNum(2));
        CHECK(crd.order == 2);
    }
    SUBCASE("suzuki G2 at m = 0: q = sqrt 3") {
        auto [crd, q] = from_isogeny(exceptional_catalog(ExceptionalType::G2, 0));
        CHECK(q == QuadNum::sqrt_of(3));
        CHECK(crd.p_case == 3);
    }
    SUBCASE("non-steinberg input rejected") {
        RootDatum gl2 = catalog_datum("GL", 2);
        IntMat J2(2, 2), J1 = IntMat::identity(1);
        J2.at(0, 1) = -1;
        J2.at(1, 0) = -1;
        CHECK_THROWS_AS(from_isogeny(validate_isogeny(gl2, gl2, Int(1), J2, J1)), NotSteinberg);
    }
}

TEST_CASE("order_polynomial_bn against known rows") {
    SUBCASE("untwisted A1: y(y^2-1)") {
        CompleteRootDatum crd = standard_complete(1, 'A', 1, true);
        OrderPolynomial op = order_polynomial_bn(crd);
        CHECK(op.poly == QPoly::y() * QPoly::y_pow_minus(2, 1));
        CHECK(op.factored.y_power == 1);
        CHECK(!op.table_sourced);
    }
    SUBCASE("3D4 row") {
        CompleteRootDatum crd = standard_complete(3, 'D', 4, true);
        OrderPolynomial op = order_polynomial_bn(crd);
        CHECK(op.poly == order_table_row("3D4")->full);
    }
    SUBCASE("2B2 row") {
        CompleteRootDatum crd = standard_complete("2B2", false);
        OrderPolynomial op = order_polynomial_bn(crd);
        CHECK(op.poly == QPoly::y_power(4) * QPoly::y_pow_minus(2, 1) * QPoly::y_pow_plus(4, 1));
    }
    SUBCASE("GL_n untwisted for n = 2, 3") {
        for (std::size_t n : {2, 3}) {
            CompleteRootDatum crd = make_complete(catalog_datum("GL", n), QuadMat::identity(n));
            CHECK(order_polynomial_bn(crd).poly == gl_order(n));
        }
    }
}

TEST_CASE("order_polynomial_molien") {
    SUBCASE("untwisted A1 by the two-term sum") {
        CompleteRootDatum crd = standard_complete(1, 'A', 1, true);
        CHECK(order_polynomial_molien(crd).poly == QPoly::y() * QPoly::y_pow_minus(2, 1));
    }
    SUBCASE("toric datum of rank 1: y - 1") {
        CompleteRootDatum crd = make_complete(toric_datum(1), QuadMat::identity(1));
        CHECK(order_polynomial_molien(crd).poly == QPoly::y_pow_minus(1, 1));
    }
    SUBCASE("untwisted G2 row") {
        CompleteRootDatum crd = standard_complete(1, 'G', 2, false);
        CHECK(order_polynomial_molien(crd).poly ==
              QPoly::y_power(6) * QPoly::y_pow_minus(2, 1) * QPoly::y_pow_minus(6, 1));
    }
    SUBCASE("agrees with bn on assorted data") {
        std::vector<CompleteRootDatum> cases;
        cases.push_back(standard_complete(2, 'A', 3, false));
        cases.push_back(standard_complete(1, 'C', 2, true));
        cases.push_back(standard_complete("2G2", false));
        cases.push_back(make_complete(catalog_datum("GL", 3), neg_j(3)));
        for (const auto& crd : cases)
            CHECK(order_polynomial_bn(crd).poly == order_polynomial_molien(crd).poly);
    }
    SUBCASE("2D4 twist on the SO8 lattice matches the table row") {
        // the outer involution of SO8 acts as e_1 -> -e_1 in its natural basis
        RootDatum so8 = catalog_datum("SO", 8);
        QuadMat q = QuadMat::identity(4);
        q.at(0, 0) = QuadNum(-1);
        CompleteRootDatum crd = make_complete(so8, q);
        CHECK(crd.base_perm == std::vector<std::size_t>{1, 0, 2, 3});
        CHECK(order_polynomial_bn(crd).poly == order_table_row("2D4")->full);
        CHECK(order_polynomial_molien(crd).poly == order_table_row("2D4")->full);
    }
}

TEST_CASE("toric_order") {
    SUBCASE("identity twist: (y-1)^rank") {
        CompleteRootDatum crd = standard_complete(1, 'A', 2, true);
        QPoly f = toric_order(crd, IntMat::identity(2));
        CHECK(f == QPoly::y_pow_minus(1, 1) * QPoly::y_pow_minus(1, 1));
    }
    SUBCASE("A1 reflection: y + 1") {
        CompleteRootDatum crd = standard_complete(1, 'A', 1, false);
        QPoly f = toric_order(crd, crd.datum.weyl_gens[0]);
        CHECK(f == QPoly::y_pow_plus(1, 1));
    }
    SUBCASE("2B2 identity: y^2 - 1") {
        CompleteRootDatum crd = standard_complete("2B2", false);
        CHECK(toric_order(crd, IntMat::identity(2)) == QPoly::y_pow_minus(2, 1));
    }
    SUBCASE("divides the order polynomial, exhaustive at small rank") {
        for (const auto& crd : {standard_complete(1, 'A', 2, true), standard_complete(1, 'C', 2, false),
                                standard_complete("2B2", false), standard_complete(1, 'G', 2, true)}) {
            QPoly order = order_polynomial_bn(crd).poly;
            const WeylGroup& W = crd.weyl();
            for (const IntMat& w : W.elements) {
                auto [quot, rem] = order.divmod(toric_order(crd, w));
                CHECK(rem.is_zero());
            }
        }
    }
    SUBCASE("tori-count identity: y^{|R|} |W| = sum |G|/|G_w|") {
        for (const auto& crd : {standard_complete(1, 'A', 2, false), standard_complete(1, 'C', 2, true),
                                standard_complete("2B2", false), standard_complete(2, 'A', 2, true)}) {
            QPoly order = order_polynomial_bn(crd).poly;
            const WeylGroup& W = crd.weyl();
            QPoly sum = QPoly::zero();
            for (const IntMat& w : W.elements) sum = sum + order.div_exact(toric_order(crd, w));
            QPoly expect =
                QPoly::y_power(crd.datum.roots.size()) * QuadNum(Int(static_cast<long>(W.size())));
            CHECK(sum == expect);
        }
    }
}

TEST_CASE("ennola") {
    SUBCASE("GL_n: order matches the unitary form") {
        CompleteRootDatum gl3 = make_complete(catalog_datum("GL", 3), QuadMat::identity(3));
        CompleteRootDatum gu3 = ennola(gl3);
        QPoly got = order_polynomial_bn(gu3).poly;
        // (y+1) * 2A2 row: the datum carries a rank-1 central torus
        QPoly expect = QPoly::y_pow_plus(1, 1) * order_table_row("2A2")->full;
        CHECK(got == expect);
        // and the general sign rule
        QPoly rule = order_polynomial_bn(gl3).poly.substitute_neg_y() * QuadNum(-1);
        CHECK(got == rule);
    }
    SUBCASE("-id in W: ennola is invisible") {
        CompleteRootDatum c2 = standard_complete(1, 'C', 2, true);
        CHECK(order_polynomial_bn(ennola(c2)).poly == order_polynomial_bn(c2).poly);
    }
    SUBCASE("double ennola restores the order polynomial") {
        CompleteRootDatum a2 = standard_complete(1, 'A', 2, false);
        CHECK(order_polynomial_bn(ennola(ennola(a2))).poly == order_polynomial_bn(a2).poly);
    }
    SUBCASE("sign identity on catalog data of rank <= 4") {
        std::vector<CompleteRootDatum> cases;
        cases.push_back(standard_complete(1, 'A', 3, true));
        cases.push_back(standard_complete(1, 'B', 3, false));
        cases.push_back(standard_complete(1, 'D', 4, true));
        cases.push_back(standard_complete(1, 'F', 4, true));
        cases.push_back(make_complete(catalog_datum("GL", 4), QuadMat::identity(4)));
        for (const auto& crd : cases) {
            QPoly lhs = order_polynomial_bn(ennola(crd)).poly;
            QPoly rhs = order_polynomial_bn(crd).poly.substitute_neg_y();
            if (crd.datum.rank % 2 == 1) rhs = rhs * QuadNum(-1);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("dual_complete") {
    SUBCASE("order polynomial is preserved") {
        for (const auto& crd : {standard_complete(1, 'B', 3, true), standard_complete(2, 'A', 3, false),
                                standard_complete("2B2", false)}) {
            CompleteRootDatum dual = dual_complete(crd);
            CHECK(order_polynomial_bn(dual).poly == order_polynomial_bn(crd).poly);
        }
    }
    SUBCASE("dual of sc(B_n) sits on sc-dual of C_n") {
        CompleteRootDatum crd = standard_complete(1, 'B', 3, true);
        CompleteRootDatum dual = dual_complete(crd);
        CHECK(classify(dual.datum.cartan)[0].str() == "C3");
    }
    SUBCASE("toric dual") {
        CompleteRootDatum crd = make_complete(toric_datum(2), QuadMat::identity(2));
        CHECK(order_polynomial_bn(dual_complete(crd)).poly == order_polynomial_bn(crd).poly);
    }
    SUBCASE("double dual") {
        CompleteRootDatum crd = standard_complete(1, 'C', 3, true);
        CHECK(order_polynomial_bn(dual_complete(dual_complete(crd))).poly == order_polynomial_bn(crd).poly);
    }
}

TEST_CASE("p_set_contains") {
    SUBCASE("case I: every prime power, never 1") {
        CompleteRootDatum f4 = standard_complete(1, 'F', 4, false);
        CHECK(p_set_contains(f4, QuadNum(7)));
        CHECK(p_set_contains(f4, QuadNum(8)));
        CHECK(p_set_contains(f4, QuadNum(9)));
        CHECK(!p_set_contains(f4, QuadNum(1)));
        CHECK(!p_set_contains(f4, QuadNum(6)));
        CHECK(!p_set_contains(f4, QuadNum::sqrt_of(2)));
    }
    SUBCASE("case II: only odd powers of sqrt 2 for 2B2") {
        CompleteRootDatum b2 = standard_complete("2B2", false);
        CHECK(!p_set_contains(b2, QuadNum(2)));
        CHECK(p_set_contains(b2, QuadNum::sqrt_of(2)));
        CHECK(p_set_contains(b2, QuadNum(Int(0), Int(2), 2, Int(1))));  // 2 sqrt 2 = sqrt(2)^3
        CHECK(!p_set_contains(b2, QuadNum(4)));
        CHECK(!p_set_contains(b2, QuadNum::sqrt_of(3)));
        CHECK(!p_set_contains(b2, QuadNum(1)));
    }
    SUBCASE("untwisted datum with q = 1 rejected") {
        CompleteRootDatum a1 = standard_complete(1, 'A', 1, true);
        CHECK(!p_set_contains(a1, QuadNum(1)));
    }
}

TEST_CASE("group_order") {
    CompleteRootDatum a1 = standard_complete(1, 'A', 1, true);
    CHECK(group_order(a1, QuadNum(5)) == 120);
    CHECK_THROWS_AS(group_order(a1, QuadNum(6)), QNotInP);

    CompleteRootDatum b2 = standard_complete("2B2", false);
    CHECK(group_order(b2, QuadNum::sqrt_of(2)) == 20);

    CompleteRootDatum g2 = standard_complete("2G2", false);
    CHECK(group_order(g2, QuadNum::sqrt_of(3)) == 1512);
}

TEST_CASE("table_check") {
    SUBCASE("2A2") {
        auto rep = table_check(standard_complete(2, 'A', 2, true));
        CHECK(rep.match);
        CHECK(rep.row_label == "2A2");
        CHECK(rep.table == QPoly::y_power(3) * QPoly::y_pow_minus(2, 1) * QPoly::y_pow_plus(3, 1));
    }
    SUBCASE("2F4") {
        auto rep = table_check(standard_complete("2F4", false));
        CHECK(rep.match);
    }
    SUBCASE("B3 and C3 agree") {
        auto b = table_check(standard_complete(1, 'B', 3, false));
        auto c = table_check(standard_complete(1, 'C', 3, true));
        CHECK(b.match);
        CHECK(c.match);
        CHECK(b.table == c.table);
    }
    SUBCASE("non-simple rejected") {
        CompleteRootDatum gl = make_complete(catalog_datum("GL", 3), QuadMat::identity(3));
        CHECK_THROWS_AS(table_check(gl), NotSimple);
    }
}

TEST_CASE("E7/E8 fall back to the table under the default cap") {
    for (std::size_t rank : {7, 8}) {
        CompleteRootDatum crd = standard_complete(1, 'E', rank, false);
        OrderPolynomial op = order_polynomial_bn(crd);
        CHECK(op.table_sourced);
        std::size_t roots = crd.datum.roots.size();
        CHECK(op.poly.degree() == static_cast<long>(roots + rank));
        CHECK(op.factored.y_power == roots / 2);
        CHECK(op.factored.complete());
        CHECK(order_polynomial_molien(crd).poly == op.poly);
    }
}

TEST_CASE("product and restriction-of-scalars behaviour") {
    SUBCASE("block-diagonal phi0: order multiplies") {
        CompleteRootDatum a = standard_complete(1, 'A', 1, true);
        CompleteRootDatum b = standard_complete(1, 'C', 2, false);
        RootDatum prod = direct_product(a.datum, b.datum);
        QuadMat phi(prod.rank);
        for (std::size_t i = 0; i < a.datum.rank; ++i)
            for (std::size_t j = 0; j < a.datum.rank; ++j) phi.at(i, j) = a.phi0.at(i, j);
        for (std::size_t i = 0; i < b.datum.rank; ++i)
            for (std::size_t j = 0; j < b.datum.rank; ++j)
                phi.at(a.datum.rank + i, a.datum.rank + j) = b.phi0.at(i, j);
        CompleteRootDatum both = make_complete(prod, phi);
        CHECK(order_polynomial_bn(both).poly ==
              order_polynomial_bn(a).poly * order_polynomial_bn(b).poly);
    }
    SUBCASE("r-fold cyclic twist of sc(A1): base order in y^r") {
        for (std::size_t r : {2, 3}) {
            RootDatum base = sc_datum(standard_cartan('A', 1));
            RootDatum prod = base;
            for (std::size_t i = 1; i < r; ++i) prod = direct_product(prod, base);
            QuadMat phi(r);
            for (std::size_t i = 0; i < r; ++i) phi.at((i + 1) % r, i) = QuadNum(1);
            CompleteRootDatum crd = make_complete(prod, phi);
            QPoly base_order = order_polynomial_bn(standard_complete(1, 'A', 1, true)).poly;
            CHECK(order_polynomial_molien(crd).poly == base_order.substitute_y_power(r));
        }
    }
    SUBCASE("r = 2 cyclic twist of sc(A2)") {
        RootDatum base = sc_datum(standard_cartan('A', 2));
        RootDatum prod = direct_product(base, base);
        QuadMat phi(4);
        for (std::size_t i = 0; i < 2; ++i) {
            phi.at(i + 2, i) = QuadNum(1);
            phi.at(i, i + 2) = QuadNum(1);
        }
        CompleteRootDatum crd = make_complete(prod, phi);
        QPoly base_order = order_polynomial_bn(standard_complete(1, 'A', 2, true)).poly;
        CHECK(order_polynomial_molien(crd).poly == base_order.substitute_y_power(2));
        CHECK(order_polynomial_bn(crd).poly == base_order.substitute_y_power(2));
    }
}
