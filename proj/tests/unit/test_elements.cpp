#include "doctest.h"
#include "qhopf/analysis.hpp"
#include "qhopf/catalog.hpp"

using namespace qhopf;

namespace {

Vec leg0(const Tensor& t, const Vec& form_on_1) { return contract_pair(t, 1, form_on_1); }

}  // namespace

TEST_CASE("both forms of eps and delta agree") {
    for (const auto& p : standard_catalog()) {
        CAPTURE(p.name);
        const auto d = derive_elements(QuasiHopfAlgebra(p), false);
        CHECK(d.eps_forms_agree());
        CHECK(d.delta_forms_agree());
    }
}

TEST_CASE("twist identity q^L and f^-1 against (S x S)(p^R) f_21") {
    for (const auto& p : standard_catalog()) {
        CAPTURE(p.name);
        const QuasiHopfAlgebra a(p);
        const auto d = derive_elements(a);
        // legs q1 q2 a b(1) b(2) for q^L = q1 (x) q2, f^-1 = a (x) b
        const Tensor t = a.S_slot(outer(d.qL, a.delta_slot(d.f_inv, 1)), 2);
        const Tensor lhs = a.assemble(t, {{L(1), L(4)}, {L(2), L(0), L(3)}});
        const Tensor rhs = a.product(a.S_slot(a.S_slot(d.pR, 0), 1), permute(d.f, {1, 0}));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("twists are mutually inverse") {
    for (const auto& p : standard_catalog()) {
        CAPTURE(p.name);
        const QuasiHopfAlgebra a(p);
        const auto d = derive_elements(a);
        CHECK(a.product(d.f, d.f_inv) == a.unit_tensor(2));
        CHECK(a.product(d.fr, d.fr_inv) == a.unit_tensor(2));
    }
}

TEST_CASE("the twist conjugates the coproduct of S") {
    // f Delta(S(h)) f^-1 = (S x S)(Delta^cop(h))
    for (const auto& p : {make_h8(1), make_sf(2, 0), make_uq(3, 1)}) {
        CAPTURE(p.name);
        const QuasiHopfAlgebra a(p);
        const auto d = derive_elements(a);
        for (int h = 0; h < a.dim(); ++h) {
            const Tensor lhs = a.product({d.f, a.delta(a.S(a.basis(h))), d.f_inv});
            const Tensor rhs = a.S_slot(a.S_slot(permute(a.delta(a.basis(h)), {1, 0}), 0), 1);
            REQUIRE(lhs == rhs);
        }
    }
}

TEST_CASE("xi, xi-hat, theta, theta-hat from their definitions") {
    for (const auto& p : {make_h8(1), make_sf(1, 1), make_sf(2, 0), make_uq(2, 1), make_uq(3, 3)}) {
        CAPTURE(p.name);
        Analysis an(p);
        const auto& a = an.alg();
        const auto& d = an.elements();
        const auto& in = an.integrals();
        const auto& m = an.modulus();
        CHECK(m.xi == leg0(d.f_inv, in.modulus));
        CHECK(m.xi_hat == a.Sinv(leg0(d.f_inv, in.modulus_inv)));
        if (a.has_pivot()) {
            CHECK(*m.theta == a.Sinv(contract_pair(d.pL, 0, in.modulus_inv)));
            CHECK(*m.theta_hat == a.S(leg0(d.pR, in.modulus_inv)));
        } else {
            CHECK(!m.theta);
        }
        CHECK(a.inverse(m.u).has_value());
        CHECK(a.inverse(m.u_cop).has_value());
    }
}

TEST_CASE("H8 xi is g") {
    Analysis an(make_h8(1));
    CHECK(an.modulus().xi == an.alg().basis(4));
}

TEST_CASE("hopf algebras: derived elements are units") {
    for (const auto& h : {group_algebra(3), sweedler(), taft(3)}) {
        Analysis an(wrap_hopf(h));
        const auto& a = an.alg();
        const auto& d = an.elements();
        const Tensor one2 = a.unit_tensor(2);
        for (const Tensor* t : {&d.qR, &d.pR, &d.qL, &d.pL, &d.f, &d.f_inv, &d.fr, &d.fr_inv, &d.U, &d.V, &d.Ucop, &d.Vcop})
            CHECK(*t == one2);
        const auto& m = an.modulus();
        CHECK(m.xi == a.one());
        CHECK(m.xi_hat == a.one());
        if (a.has_pivot()) {
            CHECK(*m.theta == a.one());
            CHECK(*m.theta_hat == a.one());
        }
    }
}
