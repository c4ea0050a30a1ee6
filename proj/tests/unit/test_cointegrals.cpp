#include "doctest.h"
#include "qhopf/catalog.hpp"
#include "qhopf/cointegrals.hpp"
#include "qhopf/error.hpp"

using namespace qhopf;

namespace {

struct Solved {
    QuasiHopfAlgebra a;
    DerivedElements d;
    IntegralData in;
    ModulusElements m;

    explicit Solved(Presentation p)
        : a(std::move(p)), d(derive_elements(a)), in(compute_integrals(a)),
          m(modulus_elements(a, d, in.modulus, in.modulus_inv)) {}

    Vec solve(CointegralKind k) const { return solve_cointegral(a, d, in, k).form; }
};

// sum c B*_{index}
Vec form(int dim, std::initializer_list<std::pair<int, Scalar>> terms) {
    Vec v(static_cast<std::size_t>(dim));
    for (const auto& [i, c] : terms) v[static_cast<std::size_t>(i)] += c;
    return v;
}

Scalar I() { return Scalar::root(4, 1); }
Scalar I8() { return Scalar::root(8, 2); }

}  // namespace

TEST_CASE("H8 cointegrals") {
    for (int sign : {1, -1}) {
        Solved s(make_h8(sign));
        const Scalar si = I() * Scalar(sign);
        CHECK(s.solve(CointegralKind::Right) == form(8, {{3, 1}, {7, -si}}));
        CHECK(s.solve(CointegralKind::Left) == form(8, {{3, 1}}));
        CHECK_THROWS_AS(s.solve(CointegralKind::RightSym), Error);
    }
}

TEST_CASE("H(N, beta) cointegrals") {
    for (int n = 1; n <= 3; ++n) {
        CAPTURE(n);
        const int k = n % 2;
        Solved s(make_sf(n, k));
        const int top = 4 * ((1 << n) - 1);
        const Scalar b2 = Scalar::root(8, 2 * k);
        const bool even = n % 2 == 0;
        const Scalar ar_p = even ? Scalar(1) + b2 : b2 * I8();
        const Scalar ar_m = even ? Scalar(1) - b2 : b2 * I8();
        const Scalar al_p = even ? Scalar(1) + b2 : b2;
        const Scalar al_m = even ? Scalar(1) - b2 : -b2;
        const Scalar odd = even ? Scalar(0) : Scalar(1);
        const int dim = s.a.dim();
        const Vec lr = form(dim, {{top, ar_p}, {top + 2, ar_m}, {top + 1, -odd}, {top + 3, odd}});
        const Vec ll = form(dim, {{top, al_p}, {top + 2, al_m}, {top + 1, -odd}, {top + 3, -odd}});
        CHECK(s.solve(CointegralKind::Right) == normalized(lr));
        CHECK(s.solve(CointegralKind::Left) == normalized(ll));
        CHECK(s.in.unimodular == even);
    }
}

TEST_CASE("U(p, t) cointegrals") {
    for (auto [p, t] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 3}}) {
        CAPTURE(p);
        CAPTURE(t);
        Solved s(make_uq(p, t));
        const int dim = s.a.dim(), base = 2 * p * (p - 1), m = 2 * p;
        auto at = [&](int n) { return base + ((n % m) + m) % m; };
        const Scalar c = Scalar::root(2 * p, -t * (p - 1));
        const Vec lr = form(dim, {{at(0), 1}, {at(p), 1}, {at(t), 1}, {at(p + t), -1}});
        const Vec ll = form(dim, {{at(p - 1), 1}, {at(2 * p - 1), 1}, {at(p - t - 1), c}, {at(2 * p - t - 1), -c}});
        const Vec lrs = form(dim, {{at(p - 1), 1}});
        const Vec lls = form(dim, {{at(0), Scalar(1) + c}, {at(p), Scalar(1) - c}});
        CHECK(s.solve(CointegralKind::Right) == normalized(lr));
        CHECK(s.solve(CointegralKind::Left) == normalized(ll));
        CHECK(s.solve(CointegralKind::RightSym) == normalized(lrs));
        CHECK(s.solve(CointegralKind::LeftSym) == normalized(lls));
        for (auto kind : {CointegralKind::RightSym, CointegralKind::LeftSym}) {
            const CointegralKind hn = kind == CointegralKind::RightSym ? CointegralKind::Right : CointegralKind::Left;
            const Vec f = sym_cointegral_via_formula(s.a, s.m, s.solve(hn), kind);
            CHECK(proportionality(f, s.solve(kind)).has_value());
        }
    }
}

TEST_CASE("right cointegral equals the left cointegral of the coopposite") {
    for (const auto& p : {make_h8(1), make_sf(1, 1), make_uq(3, 1)}) {
        Solved s(p);
        const QuasiHopfAlgebra c = op_cop(s.a, Dual::Cop);
        const DerivedElements dc = derive_elements(c);
        CHECK(dc.V == s.d.Vcop);
        CHECK(dc.U == s.d.Ucop);
        CHECK(solve_cointegral(c, dc, compute_integrals(c), CointegralKind::Left).form == s.solve(CointegralKind::Right));
    }
}

TEST_CASE("left and right cointegrals are related through u") {
    for (const auto& p : {make_h8(-1), make_sf(3, 1), make_uq(2, 1)}) {
        Solved s(p);
        const Vec lr = s.solve(CointegralKind::Right), ll = s.solve(CointegralKind::Left);
        CHECK(proportionality(left_from_right(s.a, s.m, lr), ll).has_value());
        CHECK(proportionality(right_from_left(s.a, s.m, ll), lr).has_value());
        CHECK(pairing_matrix(s.a, lr).rank() == static_cast<std::size_t>(s.a.dim()));
        CHECK(pairing_matrix(s.a, ll).rank() == static_cast<std::size_t>(s.a.dim()));
    }
}

TEST_CASE("twisted trace properties") {
    for (const auto& p : {make_h8(1), make_sf(1, 1), make_uq(3, 1)}) {
        Solved s(p);
        for (auto kind : {CointegralKind::Left, CointegralKind::Right, CointegralKind::LeftSym, CointegralKind::RightSym}) {
            if (!s.a.has_pivot() && (kind == CointegralKind::LeftSym || kind == CointegralKind::RightSym)) continue;
            CAPTURE(to_string(kind));
            const Vec l = s.solve(kind);
            CHECK(!symmetry_violation(s.a, s.in.modulus, l, kind));
        }
        const Vec bad = add(s.solve(CointegralKind::Left), s.a.counit());
        CHECK(symmetry_violation(s.a, s.in.modulus, bad, CointegralKind::Left).has_value());
    }
}
