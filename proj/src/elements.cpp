#include "qhopf/elements.hpp"

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

Tensor S_slots(const QuasiHopfAlgebra& a, Tensor t, std::initializer_list<int> slots) {
    for (int s : slots) t = a.S_slot(t, s);
    return t;
}

Tensor Sinv_slots(const QuasiHopfAlgebra& a, Tensor t, std::initializer_list<int> slots) {
    for (int s : slots) t = a.Sinv_slot(t, s);
    return t;
}

}  // namespace

Vec contract_pair(const Tensor& t, int form_slot, const Vec& form, const std::optional<Mat>& m) {
    Tensor r = contract(t, form_slot, form);
    if (m) r = apply_map(r, 0, *m);
    return r.to_vec();
}

DerivedElements derive_elements(const QuasiHopfAlgebra& a, bool check) {
    const Tensor& phi = a.phi();
    const Tensor& psi = a.psi();
    const Vec& al = a.alpha();
    const Vec& be = a.beta();
    DerivedElements d;

    // qR = x1 (x) S^-1(alpha x3) x2
    {
        Tensor t = a.assemble(psi, {{L(0)}, {C(al), L(2)}, {L(1)}});
        t = a.Sinv_slot(t, 1);
        d.qR = a.assemble(t, {{L(0)}, {L(1), L(2)}});
    }
    // pR = X1 (x) X2 beta S(X3)
    d.pR = a.assemble(a.S_slot(phi, 2), {{L(0)}, {L(1), C(be), L(2)}});
    // qL = S(X1) alpha X2 (x) X3
    d.qL = a.assemble(a.S_slot(phi, 0), {{L(0), C(al), L(1)}, {L(2)}});
    // pL = x2 S^-1(x1 beta) (x) x3
    {
        Tensor t = a.assemble(psi, {{L(0), C(be)}, {L(1)}, {L(2)}});
        t = a.Sinv_slot(t, 0);
        d.pL = a.assemble(t, {{L(1), L(0)}, {L(2)}});
    }

    // eps = S(x2) qL1 x3(1) (x) S(x1) alpha qL2 x3(2)
    {
        Tensor t = a.delta_slot(outer(psi, d.qL), 2);  // x1 x2 x3a x3b q1 q2
        t = S_slots(a, t, {0, 1});
        d.eps = a.assemble(t, {{L(1), L(4), L(2)}, {L(0), C(al), L(5), L(3)}});
    }
    // eps = S(qR2 X1(2)) X2 (x) S(qR1 X1(1)) alpha X3
    {
        Tensor t = a.delta_slot(outer(d.qR, phi), 2);  // q1 q2 X1a X1b X2 X3
        t = a.assemble(t, {{L(1), L(3)}, {L(4)}, {L(0), L(2)}, {L(5)}});
        t = S_slots(a, t, {0, 2});
        d.eps_alt = a.assemble(t, {{L(0), L(1)}, {L(2), C(al), L(3)}});
    }
    // delta = x1(1) pR1 beta S(x3) (x) x1(2) pR2 S(x2)
    {
        Tensor t = a.delta_slot(outer(psi, d.pR), 0);  // x1a x1b x2 x3 p1 p2
        t = S_slots(a, t, {2, 3});
        d.delta = a.assemble(t, {{L(0), L(4), C(be), L(3)}, {L(1), L(5), L(2)}});
    }
    // delta = X1 beta S(X3(2) pL2) (x) X2 S(X3(1) pL1)
    {
        Tensor t = a.delta_slot(outer(phi, d.pL), 2);  // X1 X2 X3a X3b p1 p2
        t = a.assemble(t, {{L(0)}, {L(3), L(5)}, {L(1)}, {L(2), L(4)}});
        t = S_slots(a, t, {1, 3});
        d.delta_alt = a.assemble(t, {{L(0), C(be), L(1)}, {L(2), L(3)}});
    }

    // f = (S (x) S)(Delta^cop(pR1)) eps Delta(pR2)
    {
        Tensor t = a.delta_slot(a.delta_slot(d.pR, 0), 2);  // p1a p1b p2a p2b
        t = S_slots(a, t, {0, 1});
        t = outer(t, d.eps);
        d.f = a.assemble(t, {{L(1), L(4), L(2)}, {L(0), L(5), L(3)}});
    }
    // f^-1 = Delta(qL1) delta (S (x) S)(Delta^cop(qL2))
    {
        Tensor t = a.delta_slot(a.delta_slot(d.qL, 1), 0);  // q1a q1b q2a q2b
        t = S_slots(a, t, {2, 3});
        t = outer(t, d.delta);
        d.f_inv = a.assemble(t, {{L(0), L(4), L(3)}, {L(1), L(5), L(2)}});
    }
    // f^r = (S^-1 (x) S^-1)(eps_21 Delta^cop(pL1)) Delta(pL2)
    {
        Tensor t = a.delta_slot(a.delta_slot(d.pL, 0), 2);  // p1a p1b p2a p2b
        t = outer(t, d.eps);
        t = a.assemble(t, {{L(5), L(1)}, {L(4), L(0)}, {L(2)}, {L(3)}});
        t = Sinv_slots(a, t, {0, 1});
        d.fr = a.assemble(t, {{L(0), L(2)}, {L(1), L(3)}});
    }
    // (f^r)^-1 = Delta(qR2) (S^-1 (x) S^-1)(Delta^cop(qR1) delta_21)
    {
        Tensor t = a.delta_slot(a.delta_slot(d.qR, 0), 2);  // q1a q1b q2a q2b
        t = outer(t, d.delta);
        t = a.assemble(t, {{L(2)}, {L(3)}, {L(1), L(5)}, {L(0), L(4)}});
        t = Sinv_slots(a, t, {2, 3});
        d.fr_inv = a.assemble(t, {{L(0), L(2)}, {L(1), L(3)}});
    }

    // U = f^-1 (S (x) S)(qR_21), U^cop = (S^-1 (x) S^-1)(qL f^-1)
    d.U = a.product(d.f_inv, S_slots(a, permute(d.qR, {1, 0}), {0, 1}));
    d.Ucop = Sinv_slots(a, a.product(d.qL, d.f_inv), {0, 1});
    // V = (S^-1 (x) S^-1)(f_21 pR_21), V^cop = (S (x) S)(pL) f_21
    d.V = Sinv_slots(a, a.product(permute(d.f, {1, 0}), permute(d.pR, {1, 0})), {0, 1});
    d.Vcop = a.product(S_slots(a, d.pL, {0, 1}), permute(d.f, {1, 0}));

    if (check) {
        if (!d.eps_forms_agree())
            throw Error(ErrorKind::InternalInconsistency, "the two closed forms of eps disagree");
        if (!d.delta_forms_agree())
            throw Error(ErrorKind::InternalInconsistency, "the two closed forms of delta disagree");
        const Tensor one = a.unit_tensor(2);
        if (a.product(d.f, d.f_inv) != one || a.product(d.f_inv, d.f) != one)
            throw Error(ErrorKind::InternalInconsistency, "f and f^-1 are not inverse");
        if (a.product(d.fr, d.fr_inv) != one || a.product(d.fr_inv, d.fr) != one)
            throw Error(ErrorKind::InternalInconsistency, "f^r and (f^r)^-1 are not inverse");
    }
    return d;
}

Tensor monadic_tau(const QuasiHopfAlgebra& a) {
    // tau = (1 (x) 1 (x) psi) . (id^2 (x) Delta (x) id)((id^2 (x) Delta)(phi) . (1 (x) psi))
    const Tensor one = a.elem(a.one());
    Tensor inner = a.product(a.delta_slot(a.phi(), 2), outer(one, a.psi()));
    inner = a.delta_slot(inner, 2);
    return a.product(outer(outer(one, one), a.psi()), inner);
}

Tensor monadic_sigma(const QuasiHopfAlgebra& a) {
    // sigma = ((Delta (x) id)(Delta (x) id)(psi)) . (phi (x) 1 (x) 1) . ((id (x) Delta (x) id)(phi) (x) 1)
    const Tensor one = a.elem(a.one());
    const Tensor p = a.delta_slot(a.delta_slot(a.psi(), 0), 0);
    const Tensor y = outer(outer(a.phi(), one), one);
    const Tensor x = outer(a.delta_slot(a.phi(), 1), one);
    return a.product({p, y, x});
}

ModulusElements modulus_elements(const QuasiHopfAlgebra& a, const DerivedElements& d, const Vec& gamma,
                                 const Vec& gamma_inv) {
    ModulusElements m;
    const Mat S2 = a.S_mat() * a.S_mat();
    const Mat Sm2 = a.Sinv_mat() * a.Sinv_mat();
    m.u = contract_pair(d.V, 0, gamma, S2);
    m.u_cop = contract_pair(d.Vcop, 0, gamma, Sm2);
    m.xi = contract_pair(d.f_inv, 1, gamma);
    m.xi_hat = contract_pair(d.f_inv, 1, gamma_inv, a.Sinv_mat());
    if (a.has_pivot()) {
        m.theta = contract_pair(d.pL, 0, gamma_inv, a.Sinv_mat());
        m.theta_hat = contract_pair(d.pR, 1, gamma_inv, a.S_mat());
    }
    return m;
}

}  // namespace qhopf
