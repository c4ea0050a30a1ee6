#include "qhopf/braided.hpp"

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

void need_r(const QuasiHopfAlgebra& a) {
    if (!a.has_r()) throw Error(ErrorKind::NoRMatrix, "no R-matrix in '" + a.name() + "'");
}

// flattened matrix as one long vector, for proportionality tests
Vec flat(const Mat& m) {
    Vec v;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

}  // namespace

const char* to_string(CoendSource s) noexcept { return s == CoendSource::Monadic ? "monadic" : "hn"; }

Mat xi_matrix(const QuasiHopfAlgebra& a, const Vec& gamma_inv) {
    need_r(a);
    // legs X1 X2 X3 Rb1 Rb2
    Tensor t = a.assemble(outer(a.phi(), a.r_matrix_inv()), {{L(0)}, {L(1), L(3)}, {L(2), L(4)}});
    t = a.S_slot(contract(t, 2, gamma_inv), 0);
    return sandwich_matrix(a, t).transpose();
}

Vec coend_integral(Analysis& an, CoendSource source) {
    const QuasiHopfAlgebra& a = an.alg();
    need_r(a);
    const auto& d = an.elements();
    const Vec& gi = an.integrals().modulus_inv;
    // legs qR1(1) qR1(2) qR2 X1 X2 X3 Rb1 Rb2 [fi1 fi2]
    Tensor t = outer(outer(a.delta_slot(d.qR, 0), a.phi()), a.r_matrix_inv());
    Vec lam;
    if (source == CoendSource::Monadic) {
        t = a.assemble(t, {{L(0), L(3)}, {L(1), L(4), L(6)}, {L(2), L(5), L(7)}});
        lam = an.monadic(2).form;
    } else {
        t = outer(t, a.Sinv_slot(a.Sinv_slot(d.f_inv, 0), 1));
        t = a.assemble(t, {{L(0), L(3), C(a.beta())}, {L(1), L(4), L(6), L(8)}, {L(2), L(5), L(7), L(9)}});
        lam = an.cointegral(CointegralKind::Right).form;
    }
    t = a.S_slot(contract(t, 2, gi), 0);
    return pullback(lam, sandwich_matrix(a, t));
}

bool CoendCheck::ok() const {
    if (!ratio || ratio->is_zero()) return false;
    return !unimodular || (equals_mon_right && equals_hn_formula);
}

CoendCheck check_coend(Analysis& an) {
    const QuasiHopfAlgebra& a = an.alg();
    CoendCheck c;
    c.monadic = coend_integral(an, CoendSource::Monadic);
    c.hn = coend_integral(an, CoendSource::HN);
    c.ratio = proportionality(c.monadic, c.hn);
    c.unimodular = an.integrals().unimodular;
    if (c.unimodular) {
        c.equals_mon_right = c.monadic == an.monadic(2).form;
        const Vec hn_formula = pullback(an.cointegral(CointegralKind::Right).form, a.left_mult_matrix(a.S(a.beta())));
        c.equals_hn_formula = c.hn == hn_formula;
    }
    return c;
}

CenterData center(const QuasiHopfAlgebra& a) {
    const auto n = static_cast<std::size_t>(a.dim());
    CenterData out;
    out.center_basis = stacked_kernel(n, n, [&](std::size_t i) {
        const Vec e = a.basis(static_cast<int>(i));
        const Mat m = a.left_mult_matrix(e) - a.right_mult_matrix(e);
        std::vector<Vec> rows;
        for (std::size_t k = 0; k < n; ++k) rows.push_back(m.row(k));
        return rows;
    }).basis;
    RowReducer red(n);
    for (const auto& z : out.center_basis) {
        Vec az = a.mul(a.alpha(), z);
        if (red.add_row(az)) {
            out.alphaZ_basis.push_back(std::move(az));
            out.alphaZ_preimage.push_back(z);
        }
    }
    return out;
}

SL2ZReport sl2z_action(Analysis& an, const std::optional<Tensor>& omega_hat) {
    const QuasiHopfAlgebra& a = an.alg();
    const auto& pres = a.presentation();
    if (!pres.ribbon) throw Error(ErrorKind::MissingRibbon, "no ribbon element in '" + a.name() + "'");
    const Tensor* w = omega_hat ? &*omega_hat : (pres.omega_hat ? &*pres.omega_hat : nullptr);
    if (!w) throw Error(ErrorKind::MissingOmegaHat, "no omega-hat supplied for '" + a.name() + "'");
    if (w->order() != 2 || w->dim() != a.dim()) throw Error(ErrorKind::MalformedInput, "omega-hat must be an order-2 tensor on H");
    const auto vinv = a.inverse(*pres.ribbon);
    if (!vinv) throw Error(ErrorKind::MalformedInput, "ribbon element is not invertible");

    SL2ZReport rep;
    rep.center = center(a);
    const auto& zb = rep.center.alphaZ_preimage;
    const Mat basis = Mat::from_columns(rep.center.alphaZ_basis);
    auto coords = [&](const Vec& x, const char* what) {
        auto s = solve(basis, x);
        if (!s) throw Error(ErrorKind::NotInAlphaZ, std::string(what) + " image leaves alphaZ");
        return *s;
    };
    const Vec& lam = an.monadic(2).form;
    std::vector<Vec> s_cols, s_alt_cols, t_cols;
    for (std::size_t k = 0; k < zb.size(); ++k) {
        const Vec& z = zb[k];
        // <lam | w1 z> w2 and w1 <lam | w2 z>
        const Vec lz = pullback(lam, a.right_mult_matrix(z));
        s_cols.push_back(coords(contract_pair(*w, 0, lz), "S"));
        s_alt_cols.push_back(coords(contract_pair(*w, 1, lz), "S (alternative form)"));
        t_cols.push_back(coords(a.mul(*vinv, rep.center.alphaZ_basis[k]), "T"));
    }
    rep.S = Mat::from_columns(s_cols);
    rep.S_alt = Mat::from_columns(s_alt_cols);
    rep.T = Mat::from_columns(t_cols);
    rep.formulas_agree = rep.S == rep.S_alt;
    rep.S_invertible = rep.S.rank() == rep.S.rows();
    const Mat st = rep.S * rep.T;
    rep.c = proportionality(flat(st * st * st), flat(rep.S * rep.S));
    return rep;
}

}  // namespace qhopf
