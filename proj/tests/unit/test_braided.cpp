#include "doctest.h"
#include "qhopf/braided.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/validate.hpp"

using namespace qhopf;

namespace {

Presentation trivially_braided(HopfPresentation h) {
    Presentation p = wrap_hopf(std::move(h));
    const QuasiHopfAlgebra a(p);
    p.r_matrix = a.unit_tensor(2);
    p.r_matrix_inv = a.unit_tensor(2);
    return p;
}

}  // namespace

TEST_CASE("xi is the identity for trivial R and trivial coassociator") {
    const QuasiHopfAlgebra a(trivially_braided(group_algebra(4)));
    CHECK(xi_matrix(a, a.counit()) == Mat::identity(4));
}

TEST_CASE("xi is invertible whenever R is present") {
    for (const auto& p : {make_catalog("zn-braided", {3}), make_catalog("semion", {1}), make_catalog("semion", {3})}) {
        CAPTURE(p.name);
        Analysis an(p);
        const auto& a = an.alg();
        const auto n = static_cast<std::size_t>(a.dim());
        CHECK(xi_matrix(a, a.counit()).rank() == n);
        CHECK(xi_matrix(a, an.integrals().modulus_inv).rank() == n);
    }
}

TEST_CASE("xi needs an R-matrix") {
    const QuasiHopfAlgebra a(make_h8(1));
    CHECK_THROWS_AS(xi_matrix(a, a.counit()), Error);
}

TEST_CASE("coend integral of trivially braided group algebras is the Haar form") {
    for (int n : {2, 3, 5}) {
        CAPTURE(n);
        Analysis an(trivially_braided(group_algebra(n)));
        const Vec haar = unit_vec(static_cast<std::size_t>(n), 0);
        CHECK(normalized(coend_integral(an, CoendSource::Monadic)) == haar);
        CHECK(check_coend(an).ok());
    }
}

TEST_CASE("coend integral on unimodular braided algebras") {
    for (const auto& p : {make_catalog("zn-braided", {3}), make_catalog("zn-braided", {5}), make_catalog("semion", {1}),
                          make_catalog("semion", {3})}) {
        CAPTURE(p.name);
        Analysis an(p);
        const auto c = check_coend(an);
        CHECK(c.unimodular);
        CHECK(c.equals_mon_right);
        CHECK(c.equals_hn_formula);
        REQUIRE(c.ratio.has_value());
        CHECK(!c.ratio->is_zero());
    }
}

TEST_CASE("center of commutative algebras is everything") {
    const QuasiHopfAlgebra a(wrap_hopf(group_algebra(5)));
    const auto c = center(a);
    CHECK(c.center_basis.size() == 5);
    CHECK(c.alphaZ_basis.size() == 5);
}

TEST_CASE("center elements commute") {
    for (const auto& p : {make_h8(1), make_uq(3, 1), wrap_hopf(taft(3))}) {
        CAPTURE(p.name);
        const QuasiHopfAlgebra a(p);
        const auto c = center(a);
        CHECK(!c.center_basis.empty());
        CHECK(c.center_basis.size() < static_cast<std::size_t>(a.dim()));
        for (const auto& z : c.center_basis)
            for (int i = 0; i < a.dim(); ++i) CHECK(a.mul(z, a.basis(i)) == a.mul(a.basis(i), z));
        for (std::size_t k = 0; k < c.alphaZ_basis.size(); ++k)
            CHECK(c.alphaZ_basis[k] == a.mul(a.alpha(), c.alphaZ_preimage[k]));
    }
}

TEST_CASE("center of M2 + k has one dimension per block") {
    // basis e11 e12 e21 e22 f, only the multiplication matters here
    Presentation p = wrap_hopf(group_algebra(5));
    p.name = "M2+k";
    TensorBuilder m(3, 5);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const int idx[3] = {2 * i + j, 2 * j + k, 2 * i + k};
                m.add(idx, Scalar(1));
            }
    const int ff[3] = {4, 4, 4};
    m.add(ff, Scalar(1));
    p.mult = m.build();
    p.unit = Vec{1, 0, 0, 1, 1};
    const QuasiHopfAlgebra a(p);
    CHECK(center(a).center_basis.size() == 2);
}

TEST_CASE("SL(2,Z) action on zn-braided") {
    for (int n : {3, 5}) {
        CAPTURE(n);
        Analysis an(make_catalog("zn-braided", {n}));
        const auto r = sl2z_action(an);
        CHECK(r.formulas_agree);
        CHECK(r.S_invertible);
        REQUIRE(r.c.has_value());
        CHECK(!r.c->is_zero());
        CHECK(r.ok());
        // T(alpha) = v^-1 alpha: column of the unit
        const auto& a = an.alg();
        const Vec one_coords = *solve(Mat::from_columns(r.center.alphaZ_basis), a.alpha());
        const Vec t1 = r.T.apply(one_coords);
        const Vec expect = a.mul(*a.inverse(*a.presentation().ribbon), a.alpha());
        CHECK(Mat::from_columns(r.center.alphaZ_basis).apply(t1) == expect);
    }
}

TEST_CASE("SL(2,Z) errors") {
    Presentation p = make_catalog("zn-braided", {3});
    p.omega_hat.reset();
    Analysis no_omega(p);
    CHECK_THROWS_WITH_AS(sl2z_action(no_omega), doctest::Contains("MissingOmegaHat"), Error);
    Analysis no_ribbon(make_catalog("semion", {1}));
    CHECK_THROWS_WITH_AS(sl2z_action(no_ribbon), doctest::Contains("MissingRibbon"), Error);
    // an omega-hat whose second leg is not central
    Presentation t = wrap_hopf(taft(3));
    const QuasiHopfAlgebra ta(t);
    t.ribbon = ta.one();
    Analysis taft_an(t);
    const Tensor w = outer(ta.elem(ta.basis(2)), ta.elem(ta.basis(1)));
    CHECK_THROWS_WITH_AS(sl2z_action(taft_an, w), doctest::Contains("NotInAlphaZ"), Error);
}

TEST_CASE("semion hexagons") {
    ValidateOptions o;
    o.strict_r = true;
    for (int k : {1, 3}) CHECK(validate(QuasiHopfAlgebra(semion(k)), o).ok());
    for (int k : {0, 2}) CHECK(!validate(QuasiHopfAlgebra(semion(k)), o).ok());
    CHECK(validate(QuasiHopfAlgebra(semion(0))).ok());
}
