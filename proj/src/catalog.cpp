#include "qhopf/catalog.hpp"

#include <functional>

#include "qhopf/error.hpp"
#include "qhopf/validate.hpp"

namespace qhopf {

namespace {

using BasisProduct = std::function<std::pair<int, Scalar>(int, int)>;  // index -1 for zero

Tensor mult_tensor(int d, const BasisProduct& prod) {
    TensorBuilder b(3, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            auto [k, c] = prod(i, j);
            if (k < 0 || c.is_zero()) continue;
            const int idx[3] = {i, j, k};
            b.add(idx, c);
        }
    return b.build();
}

// An algebra with the given multiplication and placeholder coalgebra data, used
// to multiply elements and tensors while the real structure is being built.
QuasiHopfAlgebra scratch(const FieldSpec& field, int d, const Tensor& mult, const Vec& unit) {
    Presentation p;
    p.name = "scratch";
    p.field = field;
    p.dim = d;
    p.unit = unit;
    p.counit = Vec(static_cast<std::size_t>(d));
    p.mult = mult;
    p.coproduct = Tensor(3, d);
    p.coassociator = Tensor(3, d);
    p.coassociator_inv = Tensor(3, d);
    p.antipode = Mat::identity(static_cast<std::size_t>(d));
    p.alpha = unit;
    p.beta = unit;
    return QuasiHopfAlgebra(std::move(p));
}

// Extends generator data multiplicatively (and S anti-multiplicatively) to a
// basis given as words in the generators.
struct GeneratorData {
    std::vector<Tensor> delta;
    std::vector<Vec> antipode;
    std::vector<Scalar> counit;
};

void extend_from_generators(Presentation& p, const QuasiHopfAlgebra& alg, const std::vector<std::vector<int>>& words,
                            const GeneratorData& gens) {
    const int d = p.dim;
    TensorBuilder delta(3, d);
    p.antipode = Mat(static_cast<std::size_t>(d), static_cast<std::size_t>(d));
    p.counit = Vec(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const auto& w = words[static_cast<std::size_t>(i)];
        Tensor dl = alg.unit_tensor(2);
        Vec s = alg.one();
        Scalar e(1);
        for (int g : w) {
            dl = alg.product(dl, gens.delta[static_cast<std::size_t>(g)]);
            s = alg.mul(gens.antipode[static_cast<std::size_t>(g)], s);
            e *= gens.counit[static_cast<std::size_t>(g)];
        }
        for (const auto& [k, c] : dl.terms()) {
            int jk[2];
            dl.decode(k, jk);
            const int idx[3] = {i, jk[0], jk[1]};
            delta.add(idx, c);
        }
        for (int r = 0; r < d; ++r) p.antipode(static_cast<std::size_t>(r), static_cast<std::size_t>(i)) = s[static_cast<std::size_t>(r)];
        p.counit[static_cast<std::size_t>(i)] = e;
    }
    p.coproduct = delta.build();
}

// Product of generator elements along a word, used to check the basis words.
Vec word_element(const QuasiHopfAlgebra& alg, const std::vector<Vec>& gen_elems, const std::vector<int>& w) {
    Vec r = alg.one();
    for (int g : w) r = alg.mul(r, gen_elems[static_cast<std::size_t>(g)]);
    return r;
}

void check_words(const QuasiHopfAlgebra& alg, const std::vector<Vec>& gen_elems, const std::vector<std::vector<int>>& words) {
    for (int i = 0; i < alg.dim(); ++i)
        if (word_element(alg, gen_elems, words[static_cast<std::size_t>(i)]) != alg.basis(i))
            throw Error(ErrorKind::InternalInconsistency, "basis word mismatch at index " + std::to_string(i));
}

Tensor t2(const QuasiHopfAlgebra& a, const Vec& x, const Vec& y) { return outer(a.elem(x), a.elem(y)); }
Tensor t3(const QuasiHopfAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
    return outer(outer(a.elem(x), a.elem(y)), a.elem(z));
}

Vec lin(const std::vector<std::pair<Scalar, Vec>>& terms) {
    Vec r(terms.front().second.size());
    for (const auto& [c, v] : terms) r = add(r, scale(v, c));
    return r;
}

Vec power(const QuasiHopfAlgebra& a, const Vec& x, int n) {
    Vec r = a.one();
    for (int k = 0; k < n; ++k) r = a.mul(r, x);
    return r;
}

}  // namespace

Presentation make_h8(int sign) {
    if (sign != 1 && sign != -1) throw Error(ErrorKind::MalformedInput, "sign must be +1 or -1");
    const int d = 8;
    const FieldSpec field{4};
    const Scalar i = Scalar::root(4, 1);
    Presentation p;
    p.name = sign > 0 ? "H+(8)" : "H-(8)";
    p.field = field;
    p.dim = d;
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 4; ++n) {
            std::string s = m ? "g" : "";
            if (n) s += (s.empty() ? "" : "") + std::string("x") + (n > 1 ? "^" + std::to_string(n) : "");
            p.basis.push_back(s.empty() ? "1" : s);
        }
    p.mult = mult_tensor(d, [](int a, int b) -> std::pair<int, Scalar> {
        const int m1 = a / 4, n1 = a % 4, m2 = b / 4, n2 = b % 4;
        if (n1 + n2 >= 4) return {-1, Scalar()};
        const int sgn = (n1 * m2) % 2 ? -1 : 1;
        return {((m1 + m2) % 2) * 4 + n1 + n2, Scalar(sgn)};
    });
    p.unit = unit_vec(d, 0);
    const auto alg = scratch(field, d, p.mult, p.unit);
    const Vec one = alg.one(), g = alg.basis(4), x = alg.basis(1);
    const Vec pp = scale(add(one, g), Scalar(1, 2)), pm = scale(sub(one, g), Scalar(1, 2));
    const Vec ppm = add(pp, scale(pm, Scalar(sign) * i));  // p+ +- i p-

    GeneratorData gens;
    gens.delta = {t2(alg, g, g), t2(alg, x, ppm) + t2(alg, one, alg.mul(pp, x)) + t2(alg, g, alg.mul(pm, x))};
    gens.antipode = {g, scale(alg.mul(x, ppm), Scalar(-1))};
    gens.counit = {Scalar(1), Scalar(0)};
    std::vector<std::vector<int>> words;
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 4; ++n) {
            std::vector<int> w(static_cast<std::size_t>(m), 0);
            w.insert(w.end(), static_cast<std::size_t>(n), 1);
            words.push_back(w);
        }
    check_words(alg, {g, x}, words);
    extend_from_generators(p, alg, words, gens);
    p.coassociator = alg.unit_tensor(3) - t3(alg, pm, pm, pm).scaled(Scalar(2));
    p.coassociator_inv = p.coassociator;
    p.alpha = g;
    p.beta = one;
    return p;
}

Presentation make_sf(int n, int beta_power) {
    if (n < 1 || n > 4) throw Error(ErrorKind::MalformedInput, "N must be between 1 and 4");
    if (((beta_power - n) % 2 + 2) % 2 != 0)
        throw Error(ErrorKind::BadBeta, "beta = zeta_8^" + std::to_string(beta_power) + " does not satisfy beta^4 = (-1)^" + std::to_string(n));
    const int d = (1 << n) * 4;
    const FieldSpec field{8};
    const Scalar i = Scalar::root(8, 2);
    const Scalar beta = Scalar::root(8, beta_power);
    const bool even = n % 2 == 0;

    Presentation p;
    p.name = "H(" + std::to_string(n) + ",z8^" + std::to_string(((beta_power % 8) + 8) % 8) + ")";
    p.field = field;
    p.dim = d;
    auto fbit = [n](int i1) { return 1 << (n - i1); };  // f_{i1}, i1 = 1..N
    for (int J = 0; J < (1 << n); ++J)
        for (int l = 0; l < 4; ++l) {
            std::string s;
            for (int k = 1; k <= n; ++k)
                if (J & fbit(k)) s += "f" + std::to_string(k);
            if (l) s += "K" + (l > 1 ? "^" + std::to_string(l) : std::string());
            p.basis.push_back(s.empty() ? "1" : s);
        }
    p.mult = mult_tensor(d, [n, fbit](int a, int b) -> std::pair<int, Scalar> {
        const int J1 = a / 4, l1 = a % 4, J2 = b / 4, l2 = b % 4;
        if (J1 & J2) return {-1, Scalar()};
        int sign = (l1 * __builtin_popcount(static_cast<unsigned>(J2))) % 2;
        for (int k = 1; k <= n; ++k) {
            if (!(J1 & fbit(k))) continue;
            for (int m = 1; m < k; ++m)
                if (J2 & fbit(m)) sign ^= 1;
        }
        return {(J1 | J2) * 4 + (l1 + l2) % 4, Scalar(sign ? -1 : 1)};
    });
    p.unit = unit_vec(static_cast<std::size_t>(d), 0);
    const auto alg = scratch(field, d, p.mult, p.unit);
    const Vec one = alg.one(), K = alg.basis(1);
    const Vec K2 = alg.mul(K, K);
    const Vec e0 = scale(add(one, K2), Scalar(1, 2)), e1 = sub(one, e0);
    const Vec omega = alg.mul(add(e0, scale(e1, i)), K);
    std::vector<Vec> f;
    for (int k = 1; k <= n; ++k) f.push_back(alg.basis(fbit(k) * 4));

    GeneratorData gens;
    for (int k = 0; k < n; ++k) {
        gens.delta.push_back(t2(alg, f[static_cast<std::size_t>(k)], one) + t2(alg, omega, f[static_cast<std::size_t>(k)]));
        gens.antipode.push_back(alg.mul({f[static_cast<std::size_t>(k)], add(e0, scale(e1, Scalar(even ? 1 : -1) * i)), K}));
        gens.counit.emplace_back(0);
    }
    const Vec e1K = alg.mul(e1, K);
    gens.delta.push_back(t2(alg, K, K) - t2(alg, e1K, e1K).scaled(Scalar(even ? 2 : 0)));
    gens.antipode.push_back(power(alg, K, even ? 1 : 3));
    gens.counit.emplace_back(1);

    std::vector<Vec> gen_elems = f;
    gen_elems.push_back(K);
    std::vector<std::vector<int>> words;
    for (int J = 0; J < (1 << n); ++J)
        for (int l = 0; l < 4; ++l) {
            std::vector<int> w;
            for (int k = 1; k <= n; ++k)
                if (J & fbit(k)) w.push_back(k - 1);
            w.insert(w.end(), static_cast<std::size_t>(l), n);
            words.push_back(w);
        }
    check_words(alg, gen_elems, words);
    extend_from_generators(p, alg, words, gens);

    const Vec KN = power(alg, K, n);
    auto beta_pm = [&](int s) {
        Scalar c = beta * beta;
        for (int k = 0; k < n; ++k) c *= Scalar(s) * i;
        return add(e0, scale(alg.mul(KN, e1), c));
    };
    auto coass = [&](int s) {
        const Vec third = add(alg.mul(e0, sub(KN, one)), alg.mul(e1, sub(beta_pm(s), one)));
        return alg.unit_tensor(3) + t3(alg, e1, e1, third);
    };
    p.coassociator = coass(+1);
    p.coassociator_inv = coass(-1);
    p.alpha = one;
    p.beta = beta_pm(+1);
    return p;
}

Presentation make_uq(int pp, int t) {
    if (pp < 2 || pp > 8) throw Error(ErrorKind::MalformedInput, "p must be between 2 and 8");
    if (t % 2 == 0) throw Error(ErrorKind::MalformedInput, "t must be odd");
    const int n2 = 2 * pp;
    const int d = pp * n2;
    const FieldSpec field{n2};
    auto q = [n2](long k) { return Scalar::root(n2, k); };
    auto mod = [n2](int k) { return ((k % n2) + n2) % n2; };

    Presentation p;
    p.name = "U(" + std::to_string(pp) + "," + std::to_string(t) + ")";
    p.field = field;
    p.dim = d;
    for (int m = 0; m < pp; ++m)
        for (int n = 0; n < n2; ++n) {
            std::string s;
            if (m) s += "F" + (m > 1 ? "^" + std::to_string(m) : std::string());
            if (n) s += "K" + (n > 1 ? "^" + std::to_string(n) : std::string());
            p.basis.push_back(s.empty() ? "1" : s);
        }
    p.mult = mult_tensor(d, [&](int a, int b) -> std::pair<int, Scalar> {
        const int m1 = a / n2, k1 = a % n2, m2 = b / n2, k2 = b % n2;
        if (m1 + m2 >= pp) return {-1, Scalar()};
        return {(m1 + m2) * n2 + (k1 + k2) % n2, q(-2L * k1 * m2)};
    });
    p.unit = unit_vec(static_cast<std::size_t>(d), 0);
    const auto alg = scratch(field, d, p.mult, p.unit);
    const Vec one = alg.one(), F = alg.basis(n2);
    auto Kp = [&](int k) { return alg.basis(mod(k)); };
    const Vec e0 = scale(add(one, Kp(pp)), Scalar(1, 2)), e1 = sub(one, e0);
    const Vec e0qe1 = add(e0, scale(e1, q(-t)));

    GeneratorData gens;
    gens.delta = {t2(alg, F, one) + t2(alg, alg.mul(e0qe1, Kp(-1)), F), t2(alg, Kp(1), Kp(1))};
    gens.antipode = {scale(alg.mul({Kp(1), F, e0qe1}), Scalar(-1)), Kp(-1)};
    gens.counit = {Scalar(0), Scalar(1)};
    std::vector<std::vector<int>> words;
    for (int m = 0; m < pp; ++m)
        for (int n = 0; n < n2; ++n) {
            std::vector<int> w(static_cast<std::size_t>(m), 0);
            w.insert(w.end(), static_cast<std::size_t>(n), 1);
            words.push_back(w);
        }
    check_words(alg, {F, Kp(1)}, words);
    extend_from_generators(p, alg, words, gens);

    p.coassociator = alg.unit_tensor(3) + t3(alg, e1, e1, sub(Kp(-t), one));
    p.coassociator_inv = alg.unit_tensor(3) + t3(alg, e1, e1, sub(Kp(t), one));
    p.alpha = one;
    p.beta = add(e0, alg.mul(Kp(-t), e1));
    p.pivot = sub(alg.mul(e0, Kp(1)), alg.mul(e1, Kp(t + 1)));
    return p;
}

Presentation wrap_hopf(const HopfPresentation& h) {
    Presentation p;
    p.name = h.name;
    p.field = h.field;
    p.dim = h.dim;
    p.basis = h.basis;
    p.unit = h.unit;
    p.counit = h.counit;
    p.mult = h.mult;
    p.coproduct = h.coproduct;
    p.antipode = h.antipode;
    p.pivot = h.pivot;
    p.r_matrix = h.r_matrix;
    p.r_matrix_inv = h.r_matrix_inv;
    p.ribbon = h.ribbon;
    p.omega_hat = h.omega_hat;
    p.alpha = h.unit;
    p.beta = h.unit;
    try {
        const auto one = Tensor::from_vec(h.unit);
        p.coassociator = outer(outer(one, one), one);
        p.coassociator_inv = p.coassociator;
        const QuasiHopfAlgebra alg(p);
        const auto report = validate(alg);
        if (!report.ok()) {
            const auto* bad = report.first_failure();
            throw Error(ErrorKind::NotAHopfAlgebra, h.name + ": " + bad->name + " fails at " + bad->witness);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotAHopfAlgebra) throw;
        throw Error(ErrorKind::NotAHopfAlgebra, h.name + ": " + e.what());
    }
    return p;
}

namespace {

HopfPresentation group_like_base(const std::string& name, int conductor, int n) {
    HopfPresentation h;
    h.name = name;
    h.field = FieldSpec{conductor};
    h.dim = n;
    for (int k = 0; k < n; ++k) h.basis.push_back(k == 0 ? "1" : (k == 1 ? "g" : "g^" + std::to_string(k)));
    h.mult = mult_tensor(n, [n](int a, int b) -> std::pair<int, Scalar> { return {(a + b) % n, Scalar(1)}; });
    h.unit = unit_vec(static_cast<std::size_t>(n), 0);
    h.counit = Vec(static_cast<std::size_t>(n), Scalar(1));
    TensorBuilder c(3, n);
    h.antipode = Mat(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int idx[3] = {k, k, k};
        c.add(idx, Scalar(1));
        h.antipode(static_cast<std::size_t>((n - k) % n), static_cast<std::size_t>(k)) = Scalar(1);
    }
    h.coproduct = c.build();
    return h;
}

}  // namespace

HopfPresentation group_algebra(int n) {
    if (n < 1 || n > 12) throw Error(ErrorKind::MalformedInput, "group order must be between 1 and 12");
    return group_like_base("k[Z" + std::to_string(n) + "]", 1, n);
}

HopfPresentation sweedler() { return taft(2); }

HopfPresentation taft(int n) {
    if (n < 2 || n > 6) throw Error(ErrorKind::MalformedInput, "Taft order must be between 2 and 6");
    const int d = n * n;
    const int cond = n == 2 ? 1 : n;  // zeta_2 = -1 is rational
    auto zeta = [n](long k) { return n == 2 ? Scalar((k % 2 + 2) % 2 ? -1 : 1) : Scalar::root(n, k); };
    HopfPresentation h;
    h.name = n == 2 ? "Sweedler" : "Taft(" + std::to_string(n) + ")";
    h.field = FieldSpec{cond};
    h.dim = d;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::string s;
            if (a) s += "g" + (a > 1 ? "^" + std::to_string(a) : std::string());
            if (b) s += "x" + (b > 1 ? "^" + std::to_string(b) : std::string());
            h.basis.push_back(s.empty() ? "1" : s);
        }
    // g^a x^b g^c x^d = zeta^{-bc} g^{a+c} x^{b+d}, using x g = zeta^{-1} g x
    h.mult = mult_tensor(d, [n, zeta](int u, int v) -> std::pair<int, Scalar> {
        const int a = u / n, b = u % n, c = v / n, e = v % n;
        if (b + e >= n) return {-1, Scalar()};
        return {((a + c) % n) * n + b + e, zeta(-static_cast<long>(b) * c)};
    });
    h.unit = unit_vec(static_cast<std::size_t>(d), 0);
    const auto alg = scratch(h.field, d, h.mult, h.unit);
    const Vec one = alg.one(), g = alg.basis(n), x = alg.basis(1);
    const Vec ginv = power(alg, g, n - 1);
    GeneratorData gens;
    gens.delta = {t2(alg, g, g), t2(alg, x, one) + t2(alg, g, x)};
    gens.antipode = {ginv, scale(alg.mul(ginv, x), Scalar(-1))};
    gens.counit = {Scalar(1), Scalar(0)};
    std::vector<std::vector<int>> words;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> w(static_cast<std::size_t>(a), 0);
            w.insert(w.end(), static_cast<std::size_t>(b), 1);
            words.push_back(w);
        }
    check_words(alg, {g, x}, words);
    Presentation tmp;
    tmp.dim = d;
    extend_from_generators(tmp, alg, words, gens);
    h.coproduct = tmp.coproduct;
    h.antipode = tmp.antipode;
    h.counit = tmp.counit;
    h.pivot = ginv;
    return h;
}

HopfPresentation zn_braided(int n) {
    if (n < 3 || n % 2 == 0 || n > 11) throw Error(ErrorKind::MalformedInput, "n must be odd, between 3 and 11");
    HopfPresentation h = group_like_base("k[Z" + std::to_string(n) + "] braided", n, n);
    const auto alg = scratch(h.field, n, h.mult, h.unit);
    std::vector<Vec> e;
    for (int a = 0; a < n; ++a) {
        Vec v(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = Scalar(1, n) * Scalar::root(n, -static_cast<long>(a) * k);
        e.push_back(v);
    }
    auto bichar = [&](int power) {
        TensorBuilder b(2, n);
        for (int a = 0; a < n; ++a)
            for (int c = 0; c < n; ++c) b.add(t2(alg, e[static_cast<std::size_t>(a)], e[static_cast<std::size_t>(c)]), Scalar::root(n, static_cast<long>(power) * a * c));
        return b.build();
    };
    h.r_matrix = bichar(1);
    h.r_matrix_inv = bichar(-1);
    h.omega_hat = bichar(-2);  // (R_21 R)^-1, pairs with T = v^-1
    Vec v(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) v = add(v, scale(e[static_cast<std::size_t>(a)], Scalar::root(n, -static_cast<long>(a) * a)));
    h.ribbon = v;
    h.pivot = h.unit;
    return h;
}

Presentation semion(int chi_power) {
    HopfPresentation h = group_like_base("semion", 4, 2);
    const auto alg = scratch(h.field, 2, h.mult, h.unit);
    const Vec one = alg.one(), g = alg.basis(1);
    const Vec pp = scale(add(one, g), Scalar(1, 2)), pm = scale(sub(one, g), Scalar(1, 2));
    Presentation p;
    p.name = "semion(z4^" + std::to_string(((chi_power % 4) + 4) % 4) + ")";
    p.field = h.field;
    p.dim = 2;
    p.basis = h.basis;
    p.unit = h.unit;
    p.counit = h.counit;
    p.mult = h.mult;
    p.coproduct = h.coproduct;
    p.antipode = h.antipode;
    p.coassociator = alg.unit_tensor(3) - t3(alg, pm, pm, pm).scaled(Scalar(2));
    p.coassociator_inv = p.coassociator;
    p.alpha = g;
    p.beta = one;
    auto r = [&](long k) {
        return t2(alg, pp, pp) + t2(alg, pp, pm) + t2(alg, pm, pp) + t2(alg, pm, pm).scaled(Scalar::root(4, k));
    };
    p.r_matrix = r(chi_power);
    p.r_matrix_inv = r(-chi_power);
    return p;
}

std::vector<CatalogEntry> catalog_entries() {
    return {
        {"h8+", "H+(8): g^2 = 1, x^4 = 0, gxg^-1 = -x, non-pivotal"},
        {"h8-", "H-(8)"},
        {"sf N [k]", "H(N, zeta_8^k), dimension 4 * 2^N; k defaults to N mod 2"},
        {"uq p t", "U^-(p, t) at q = zeta_{2p}, dimension 2p^2, pivotal"},
        {"zn n", "group algebra k[Z_n] as a Hopf algebra"},
        {"sweedler", "Sweedler's 4-dimensional Hopf algebra, pivot g"},
        {"taft n", "Taft algebra of dimension n^2, pivot g^-1"},
        {"zn-braided n", "k[Z_n], n odd, with bicharacter R-matrix, ribbon element and omega-hat"},
        {"semion k", "k[Z_2] with non-trivial coassociator and R(1,1) = zeta_4^k"},
    };
}

Presentation make_catalog(const std::string& name, const std::vector<int>& params) {
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (params.size() < lo || params.size() > hi)
            throw Error(ErrorKind::MalformedInput, "wrong number of parameters for '" + name + "'");
    };
    if (name == "h8+" || name == "h8-") {
        need(0, 0);
        return make_h8(name == "h8+" ? 1 : -1);
    }
    if (name == "h8") {
        need(1, 1);
        return make_h8(params[0]);
    }
    if (name == "sf") {
        need(1, 2);
        return make_sf(params[0], params.size() > 1 ? params[1] : params[0] % 2);
    }
    if (name == "uq") {
        need(2, 2);
        return make_uq(params[0], params[1]);
    }
    if (name == "zn") {
        need(1, 1);
        return wrap_hopf(group_algebra(params[0]));
    }
    if (name == "sweedler") {
        need(0, 0);
        return wrap_hopf(sweedler());
    }
    if (name == "taft") {
        need(0, 1);
        return wrap_hopf(taft(params.empty() ? 3 : params[0]));
    }
    if (name == "zn-braided") {
        need(0, 1);
        return wrap_hopf(zn_braided(params.empty() ? 3 : params[0]));
    }
    if (name == "semion") {
        need(0, 1);
        return semion(params.empty() ? 1 : params[0]);
    }
    throw Error(ErrorKind::MalformedInput, "unknown catalog algebra '" + name + "'");
}

std::vector<Presentation> standard_catalog() {
    std::vector<Presentation> out;
    out.push_back(make_h8(1));
    out.push_back(make_h8(-1));
    for (int n = 1; n <= 3; ++n) out.push_back(make_sf(n, n % 2));
    for (auto [p, t] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 1}, {3, 3}}) out.push_back(make_uq(p, t));
    for (int n = 2; n <= 6; ++n) out.push_back(wrap_hopf(group_algebra(n)));
    out.push_back(wrap_hopf(sweedler()));
    out.push_back(wrap_hopf(taft(3)));
    out.push_back(wrap_hopf(zn_braided(3)));
    return out;
}

}  // namespace qhopf
