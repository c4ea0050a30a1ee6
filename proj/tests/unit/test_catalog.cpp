#include "doctest.h"
#include "qhopf/catalog.hpp"
#include "qhopf/elements.hpp"
#include "qhopf/error.hpp"
#include "qhopf/integrals.hpp"
#include "qhopf/validate.hpp"

using namespace qhopf;

namespace {

std::string failures(const ValidationReport& r) {
    std::string s;
    for (const auto& c : r.checks)
        if (!c.pass) s += c.name + " at " + c.witness + "; ";
    return s;
}

int index_of(const QuasiHopfAlgebra& a, const std::string& label) {
    for (int i = 0; i < a.dim(); ++i)
        if (a.label(i) == label) return i;
    FAIL("no basis element " << label);
    return -1;
}

}  // namespace

TEST_CASE("catalog algebras validate") {
    for (const auto& p : standard_catalog()) {
        CAPTURE(p.name);
        const QuasiHopfAlgebra a(p);
        const auto r = validate(a);
        CHECK_MESSAGE(r.ok(), failures(r));
    }
}

TEST_CASE("catalog dimensions") {
    CHECK(QuasiHopfAlgebra(make_h8(1)).dim() == 8);
    CHECK(QuasiHopfAlgebra(make_sf(2, 0)).dim() == 16);
    CHECK(QuasiHopfAlgebra(make_sf(3, 1)).dim() == 32);
    CHECK(QuasiHopfAlgebra(make_uq(3, 1)).dim() == 18);
    CHECK(QuasiHopfAlgebra(wrap_hopf(taft(3))).dim() == 9);
    CHECK_THROWS_AS(make_sf(2, 1), Error);
}

TEST_CASE("H8 relations") {
    for (int sign : {1, -1}) {
        const QuasiHopfAlgebra a(make_h8(sign));
        const Vec g = a.basis(4), x = a.basis(1);
        CHECK(a.mul(g, x) == scale(a.mul(x, g), Scalar(-1)));
        CHECK(is_zero(a.mul({x, x, x, x})));
        CHECK(!is_zero(a.mul({x, x, x})));
        CHECK(a.mul(g, g) == a.one());
    }
}

TEST_CASE("uq group-like K") {
    const QuasiHopfAlgebra a(make_uq(3, 1));
    const Vec K = a.basis(1);
    CHECK(a.delta(K) == outer(a.elem(K), a.elem(K)));
    Vec k = a.one();
    for (int i = 0; i < 6; ++i) k = a.mul(k, K);
    CHECK(k == a.one());
}

TEST_CASE("op and cop images validate") {
    for (const auto& p : {make_h8(1), make_sf(2, 0), make_uq(2, 1)}) {
        CAPTURE(p.name);
        const QuasiHopfAlgebra a(p);
        CHECK_MESSAGE(validate(op_cop(a, Dual::Op)).ok(), failures(validate(op_cop(a, Dual::Op))));
        CHECK_MESSAGE(validate(op_cop(a, Dual::Cop)).ok(), failures(validate(op_cop(a, Dual::Cop))));
    }
}

TEST_CASE("H8 twist and modulus") {
    for (int sign : {1, -1}) {
        const QuasiHopfAlgebra a(make_h8(sign));
        const auto d = derive_elements(a);
        // f = 2 p+ (x) p+ - g (x) g
        const Vec one = a.one(), g = a.basis(4);
        const Vec pp = scale(add(one, g), Scalar(1, 2));
        const Tensor expect = outer(a.elem(pp), a.elem(pp)).scaled(Scalar(2)) - outer(a.elem(g), a.elem(g));
        CHECK(d.f == expect);
        const auto in = compute_integrals(a);
        CHECK(in.modulus[static_cast<std::size_t>(index_of(a, a.label(4)))] == Scalar(-1));
        CHECK(!in.unimodular);
    }
}

TEST_CASE("sigma is the reversed cop image of tau") {
    for (const auto& p : {make_h8(1), make_sf(1, 1)}) {
        const QuasiHopfAlgebra a(p);
        const QuasiHopfAlgebra c = op_cop(a, Dual::Cop);
        CHECK(monadic_sigma(a) == permute(monadic_tau(c), {4, 3, 2, 1, 0}));
    }
}

TEST_CASE("hopf algebras collapse") {
    for (const auto& h : {group_algebra(4), sweedler(), taft(3)}) {
        const QuasiHopfAlgebra a(wrap_hopf(h));
        const auto d = derive_elements(a);
        CHECK(d.f == a.unit_tensor(2));
        CHECK(d.qR == a.unit_tensor(2));
    }
}

TEST_CASE("non-hopf data is rejected") {
    auto h = sweedler();
    h.antipode = Mat::identity(4);
    CHECK_THROWS_AS(wrap_hopf(h), Error);
}

namespace {

Vec embed(const Vec& v, const CyclotomicField& f) {
    Vec r;
    for (const auto& c : v) r.push_back(c.embed(f));
    return r;
}

}  // namespace

TEST_CASE("U(2,1) is H(1, zeta_8) under F -> i f") {
    const QuasiHopfAlgebra u(make_uq(2, 1)), h(make_sf(1, 1));
    const auto& q8 = CyclotomicField::get(8);
    const Scalar i = Scalar::root(8, 2);
    // phi(F^m K^n) = i^m f^m K^n, same index
    Mat phi(8, 8);
    for (std::size_t k = 0; k < 8; ++k) phi(k, k) = k >= 4 ? i : Scalar(1);
    auto map = [&](const Vec& v) { return phi.apply(embed(v, q8)); };
    auto map_t = [&](const Tensor& t) {
        TensorBuilder b(t.order(), t.dim());
        for (const auto& [k, c] : t.terms()) b.add_key(k, c.embed(q8));
        Tensor r = b.build();
        for (int s = 0; s < t.order(); ++s) r = apply_map(r, s, phi);
        return r;
    };
    for (int a = 0; a < 8; ++a) {
        CAPTURE(a);
        for (int b = 0; b < 8; ++b) CHECK(map(u.mul(u.basis(a), u.basis(b))) == h.mul(map(u.basis(a)), map(u.basis(b))));
        CHECK(map_t(u.delta(u.basis(a))) == h.delta(map(u.basis(a))));
        CHECK(map(u.S(u.basis(a))) == h.S(map(u.basis(a))));
        CHECK(u.eps(u.basis(a)) == h.eps(map(u.basis(a))));
    }
    CHECK(map_t(u.phi()) == h.phi());
    CHECK(map(u.alpha()) == h.alpha());
    CHECK(map(u.beta()) == h.beta());
}
