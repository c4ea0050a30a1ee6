#include "qhopf/validate.hpp"

#include <functional>

#include "qhopf/elements.hpp"
#include "qhopf/error.hpp"

namespace qhopf {

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const AxiomCheck* ValidationReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.pass) return &c;
    return nullptr;
}

const AxiomCheck* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

class Checker {
public:
    explicit Checker(const QuasiHopfAlgebra& a) : a_(a) {}

    std::string one(int i) const { return a_.label(i) + " (#" + std::to_string(i) + ")"; }
    std::string two(int i, int j) const {
        return "(" + a_.label(i) + ", " + a_.label(j) + ") (#" + std::to_string(i) + ", #" + std::to_string(j) + ")";
    }

    // Identity holding for every basis element.
    void each(const std::string& name, const std::function<bool(int)>& holds) {
        AxiomCheck c{name, true, {}};
        for (int i = 0; i < a_.dim(); ++i) {
            if (!holds(i)) {
                c.pass = false;
                c.witness = one(i);
                break;
            }
        }
        report.checks.push_back(std::move(c));
    }

    void pairs(const std::string& name, const std::function<bool(int, int)>& holds) {
        AxiomCheck c{name, true, {}};
        for (int i = 0; i < a_.dim() && c.pass; ++i)
            for (int j = 0; j < a_.dim(); ++j)
                if (!holds(i, j)) {
                    c.pass = false;
                    c.witness = two(i, j);
                    break;
                }
        report.checks.push_back(std::move(c));
    }

    void element(const std::string& name, const std::function<bool()>& holds) {
        bool pass;
        try {
            pass = holds();
        } catch (const Error&) {
            pass = false;
        }
        report.checks.push_back({name, pass, pass ? std::string() : std::string("element identity")});
    }

    ValidationReport report;

private:
    const QuasiHopfAlgebra& a_;
};

}  // namespace

ValidationReport validate(const QuasiHopfAlgebra& a, const ValidateOptions& opts) {
    Checker ck(a);
    const int d = a.dim();
    const Vec& one = a.one();
    const Tensor one2 = a.unit_tensor(2), one3 = a.unit_tensor(3);
    const Tensor& phi = a.phi();
    const Tensor& psi = a.psi();
    auto e = [&](int i) { return a.basis(i); };
    auto eps = [&](int i) { return a.counit()[static_cast<std::size_t>(i)]; };

    // algebra
    std::vector<std::vector<Vec>> prod(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) prod[static_cast<std::size_t>(i)].push_back(a.mul(e(i), e(j)));
    auto P = [&](int i, int j) -> const Vec& { return prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
    {
        AxiomCheck c{"associativity", true, {}};
        for (int i = 0; i < d && c.pass; ++i)
            for (int j = 0; j < d && c.pass; ++j)
                for (int k = 0; k < d; ++k)
                    if (a.mul(P(i, j), e(k)) != a.mul(e(i), P(j, k))) {
                        c.pass = false;
                        c.witness = "(" + a.label(i) + ", " + a.label(j) + ", " + a.label(k) + ") (#" + std::to_string(i) +
                                    ", #" + std::to_string(j) + ", #" + std::to_string(k) + ")";
                        break;
                    }
        ck.report.checks.push_back(c);
    }
    ck.each("unit", [&](int i) { return a.mul(one, e(i)) == e(i) && a.mul(e(i), one) == e(i); });

    // coalgebra
    ck.pairs("counit_multiplicative", [&](int i, int j) { return a.eps(P(i, j)) == eps(i) * eps(j); });
    ck.element("counit_unit", [&] { return a.eps(one) == Scalar(1); });
    std::vector<Tensor> delta;
    for (int i = 0; i < d; ++i) delta.push_back(a.delta(e(i)));
    ck.pairs("coproduct_multiplicative", [&](int i, int j) {
        return a.delta(P(i, j)) == a.product(delta[static_cast<std::size_t>(i)], delta[static_cast<std::size_t>(j)]);
    });
    ck.element("coproduct_unit", [&] { return a.delta(one) == one2; });
    ck.each("counit_axiom", [&](int i) {
        const Tensor& t = delta[static_cast<std::size_t>(i)];
        return contract(t, 0, a.counit()).to_vec() == e(i) && contract(t, 1, a.counit()).to_vec() == e(i);
    });

    // coassociator
    ck.each("quasi_coassociativity", [&](int i) {
        const Tensor& t = delta[static_cast<std::size_t>(i)];
        return a.product(a.delta_slot(t, 0), phi) == a.product(phi, a.delta_slot(t, 1));
    });
    ck.element("coassociator_inverse", [&] { return a.product(phi, psi) == one3 && a.product(psi, phi) == one3; });
    ck.element("pentagon", [&] {
        const Tensor lhs = a.product(a.delta_slot(phi, 0), a.delta_slot(phi, 2));
        const Tensor o = a.elem(one);
        const Tensor rhs = a.product({outer(phi, o), a.delta_slot(phi, 1), outer(o, phi)});
        return lhs == rhs;
    });
    ck.element("coassociator_normalized", [&] {
        for (int s = 0; s < 3; ++s)
            if (contract(phi, s, a.counit()) != one2) return false;
        return true;
    });

    // antipode
    ck.element("alpha_beta_counit", [&] { return a.eps(a.alpha()) == Scalar(1) && a.eps(a.beta()) == Scalar(1); });
    ck.pairs("antipode_antimultiplicative", [&](int i, int j) { return a.S(P(i, j)) == a.mul(a.S(e(j)), a.S(e(i))); });
    ck.each("antipode_alpha", [&](int i) {
        const Tensor t = a.S_slot(delta[static_cast<std::size_t>(i)], 0);
        const Vec lhs = a.assemble(t, {{L(0), C(a.alpha()), L(1)}}).to_vec();
        return lhs == scale(a.alpha(), eps(i));
    });
    ck.each("antipode_beta", [&](int i) {
        const Tensor t = a.S_slot(delta[static_cast<std::size_t>(i)], 1);
        const Vec lhs = a.assemble(t, {{L(0), C(a.beta()), L(1)}}).to_vec();
        return lhs == scale(a.beta(), eps(i));
    });
    ck.element("zigzag_phi", [&] {
        const Tensor t = a.S_slot(a.S_slot(phi, 0), 2);
        return a.assemble(t, {{L(0), C(a.alpha()), L(1), C(a.beta()), L(2)}}).to_vec() == one;
    });
    ck.element("zigzag_psi", [&] {
        const Tensor t = a.S_slot(psi, 1);
        return a.assemble(t, {{L(0), C(a.beta()), L(1), C(a.alpha()), L(2)}}).to_vec() == one;
    });

    // pivot
    if (a.has_pivot()) {
        const Vec& g = a.pivot();
        const auto ginv = a.inverse(g);
        ck.element("pivot_counit", [&] { return a.eps(g) == Scalar(1); });
        ck.element("pivot_invertible", [&] { return ginv.has_value(); });
        if (ginv) {
            const Mat S2 = a.S_mat() * a.S_mat();
            ck.each("pivot_square", [&](int i) { return S2.apply(e(i)) == a.mul({g, e(i), *ginv}); });
            ck.element("pivot_antipode", [&] { return a.S(g) == *ginv; });
            ck.element("pivot_coproduct", [&] {
                const DerivedElements de = derive_elements(a, false);
                const Tensor sf21 = a.S_slot(a.S_slot(permute(de.f, {1, 0}), 0), 1);
                const Tensor rhs = a.product({de.f_inv, sf21, outer(a.elem(g), a.elem(g))});
                return a.delta(g) == rhs;
            });
        }
    }

    // R-matrix
    if (a.has_r()) {
        const Tensor& R = a.r_matrix();
        const Tensor& Rb = a.r_matrix_inv();
        ck.each("r_quasi_cocommutative", [&](int i) {
            const Tensor& t = delta[static_cast<std::size_t>(i)];
            return a.product(permute(t, {1, 0}), R) == a.product(R, t);
        });
        ck.element("r_inverse", [&] { return a.product(R, Rb) == one2 && a.product(Rb, R) == one2; });
        if (opts.strict_r) {
            const Tensor o = a.elem(one);
            const Tensor R12 = outer(R, o), R23 = outer(o, R);
            // braiding c = flip . R, associator (UV)W -> U(VW) acts by psi
            ck.element("hexagon_1", [&] {
                Tensor y = a.product(psi, one3);
                Tensor z = permute(a.product(a.delta_slot(R, 1), y), {1, 2, 0});
                const Tensor lhs = a.product(psi, z);
                y = permute(a.product(R12, one3), {1, 0, 2});
                z = a.product(psi, y);
                const Tensor rhs = permute(a.product(R23, z), {0, 2, 1});
                return lhs == rhs;
            });
            ck.element("hexagon_2", [&] {
                Tensor y = a.product(phi, one3);
                Tensor z = permute(a.product(a.delta_slot(R, 0), y), {2, 0, 1});
                const Tensor lhs = a.product(phi, z);
                y = permute(a.product(R23, one3), {0, 2, 1});
                z = a.product(phi, y);
                const Tensor rhs = permute(a.product(R12, z), {1, 0, 2});
                return lhs == rhs;
            });
        }
    }

    // ribbon (partial)
    if (a.presentation().ribbon) {
        const Vec& v = *a.presentation().ribbon;
        ck.each("ribbon_central", [&](int i) { return a.mul(v, e(i)) == a.mul(e(i), v); });
        ck.element("ribbon_counit", [&] { return a.eps(v) == Scalar(1); });
        ck.element("ribbon_invertible", [&] { return a.inverse(v).has_value(); });
    }
    return ck.report;
}

}  // namespace qhopf
