#include "doctest.h"
#include "qhopf/analysis.hpp"
#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"

using namespace qhopf;

namespace {

Vec form(int dim, std::initializer_list<std::pair<int, Scalar>> terms) {
    Vec v(static_cast<std::size_t>(dim));
    for (const auto& [i, c] : terms) v[static_cast<std::size_t>(i)] += c;
    return v;
}

}  // namespace

TEST_CASE("H8 monadic cointegrals") {
    for (int sign : {1, -1}) {
        Analysis an(make_h8(sign));
        const Scalar si = Scalar::root(4, 1) * Scalar(sign);
        CHECK(an.monadic(2).form == form(8, {{3, 1}, {7, si}}));
        CHECK(an.monadic(3).form == form(8, {{7, 1}}));
        CHECK_THROWS_AS(an.monadic(1), Error);
    }
}

TEST_CASE("H(N, beta) monadic cointegrals") {
    for (int n = 1; n <= 2; ++n) {
        CAPTURE(n);
        Analysis an(make_sf(n, n % 2));
        const int top = 4 * ((1 << n) - 1), dim = an.alg().dim();
        CHECK(an.monadic(2).form == form(dim, {{top, 1}}));
        if (n % 2 == 0) CHECK(an.monadic(3).form == form(dim, {{top, 1}}));
    }
}

TEST_CASE("left monadic cointegral of H(1, zeta_8) transported from U(2,1)") {
    // F^m K^n -> i^m f^m K^n scales the F-row of the dual basis uniformly, so the
    // U(2,1) value (1 + q^-1) B*_{1,1} + (1 - q^-1) B*_{1,3} at q = i carries over
    Analysis an(make_sf(1, 1));
    const Scalar i = Scalar::root(8, 2);
    CHECK(an.monadic(3).form == normalized(form(8, {{5, Scalar(1) - i}, {7, Scalar(1) + i}})));
}

TEST_CASE("U(p, t) monadic cointegrals") {
    for (auto [p, t] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}}) {
        CAPTURE(p);
        Analysis an(make_uq(p, t));
        const int dim = an.alg().dim(), base = 2 * p * (p - 1), m = 2 * p;
        auto at = [&](int n) { return base + ((n % m) + m) % m; };
        const Scalar c = Scalar::root(2 * p, -t * (p - 1));
        const Scalar q2t = Scalar::root(2 * p, 2 * t);
        const Scalar ct = Scalar::root(2 * p, -t * (p + 1));
        CHECK(an.monadic(2).form == form(dim, {{at(0), 1}}));
        CHECK(an.monadic(3).form == normalized(form(dim, {{at(p - 1), Scalar(1) + c}, {at(2 * p - 1), Scalar(1) - c}})));
        CHECK(an.monadic(1).form ==
              normalized(form(dim, {{at(p - 1), 1}, {at(2 * p - 1), 1}, {at(p - t - 1), q2t}, {at(2 * p - t - 1), -q2t}})));
        CHECK(an.monadic(4).form == form(dim, {{at(0), 1}, {at(p), 1}, {at(t), ct}, {at(p + t), -ct}}));
    }
}

TEST_CASE("monad actions are module actions") {
    Analysis an(make_uq(2, 1));
    const auto& a = an.alg();
    const Vec& gi = an.integrals().modulus_inv;
    for (int i = 1; i <= 4; ++i) {
        CAPTURE(i);
        CHECK(monad_action_matrix(a, i, a.one(), gi) == Mat::identity(8));
        for (int x = 0; x < a.dim(); ++x)
            for (int y = 0; y < a.dim(); ++y) {
                const Mat lhs = monad_action_matrix(a, i, a.mul(a.basis(x), a.basis(y)), gi);
                const Mat rhs = monad_action_matrix(a, i, a.basis(x), gi) * monad_action_matrix(a, i, a.basis(y), gi);
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("kappa maps carry monadic cointegrals") {
    for (const auto& p : {make_uq(3, 1), make_sf(1, 1)}) {
        Analysis an(p);
        const auto& a = an.alg();
        const int lo = a.has_pivot() ? 1 : 2, hi = a.has_pivot() ? 4 : 3;
        for (int i = lo; i <= hi; ++i)
            for (int j = lo; j <= hi; ++j) {
                const Vec img = kappa(a, an.integrals(), i, j).apply(an.monadic(i).form);
                CHECK(proportionality(img, an.monadic(j).form).has_value());
            }
        CHECK(kappa(a, an.integrals(), lo, hi) * kappa(a, an.integrals(), hi, lo) == Mat::identity(static_cast<std::size_t>(a.dim())));
    }
}

TEST_CASE("main theorem on small algebras") {
    for (const auto& p : {make_h8(1), make_h8(-1), make_sf(1, 1), make_uq(2, 1), make_uq(3, 1)}) {
        CAPTURE(p.name);
        Analysis an(p);
        const auto rep = verify_main_theorem(an);
        for (const auto& r : rep.rows) {
            CAPTURE(r.monad);
            if (r.applicable) CHECK(r.pass);
        }
        CHECK(rep.square.pass);
    }
}

TEST_CASE("candidate check accepts solutions and rejects others") {
    for (const auto& p : {make_h8(1), make_sf(1, 1), make_uq(3, 1)}) {
        CAPTURE(p.name);
        Analysis an(p);
        const auto& a = an.alg();
        const int lo = a.has_pivot() ? 1 : 2, hi = a.has_pivot() ? 4 : 3;
        for (int i = lo; i <= hi; ++i) {
            const Vec& f = an.monadic(i).form;
            CHECK(is_monadic_cointegral(a, an.elements(), an.integrals(), i, scale(f, Scalar(3))));
            CHECK(!is_monadic_cointegral(a, an.elements(), an.integrals(), i, add(f, a.counit())));
            CHECK(!is_monadic_cointegral(a, an.elements(), an.integrals(), i, a.zero()));
        }
    }
}
