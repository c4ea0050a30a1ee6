#include "qhopf/monadic.hpp"

#include "qhopf/analysis.hpp"
#include "qhopf/error.hpp"

namespace qhopf {

namespace {

void check_index(const QuasiHopfAlgebra& a, int i) {
    if (i < 1 || i > 4) throw Error(ErrorKind::MalformedInput, "monad index must be 1..4, got " + std::to_string(i));
    if ((i == 1 || i == 4) && !a.has_pivot())
        throw Error(ErrorKind::NoPivot, "A_" + std::to_string(i) + " needs a pivot");
}

// A_h with h.f = f(left(A1) ? A2); left already applied.
Tensor action_tensor(const QuasiHopfAlgebra& a, int i, const Vec& h, const Vec& gamma_inv) {
    Tensor t;
    if (i == 1 || i == 2) {
        // gamma^-1(h(2,1)) h(1) (x) h(2,2)
        t = contract(a.delta_iterated(h, "(.(..))"), 1, gamma_inv);
    } else {
        // gamma^-1(h(1,2)) h(2) (x) h(1,1)
        t = permute(contract(a.delta_iterated(h, "((..).)"), 1, gamma_inv), {1, 0});
    }
    return (i == 2 || i == 4) ? a.S_slot(t, 0) : a.Sinv_slot(t, 0);
}

// L with Q_h = L1 h1 L3 (x) L2 h2 L4.
Tensor direct_tensor(const QuasiHopfAlgebra& a, const DerivedElements& d, const Vec& gamma_inv, int i) {
    const bool anti = i == 2 || i == 4;  // S and f, otherwise S^-1 and f^r
    const Tensor& twist = anti ? d.f : d.fr;
    if (i == 1 || i == 2) {
        Tensor t = contract(monadic_tau(a), 2, gamma_inv);  // t1 t2 t4 t5
        t = anti ? a.S_slot(a.S_slot(t, 0), 1) : a.Sinv_slot(a.Sinv_slot(t, 0), 1);
        return a.assemble(outer(t, twist), {{L(1), L(4)}, {L(0), L(5)}, {L(2)}, {L(3)}});
    }
    Tensor t = contract(monadic_sigma(a), 2, gamma_inv);  // s1 s2 s4 s5
    t = anti ? a.S_slot(a.S_slot(t, 2), 3) : a.Sinv_slot(a.Sinv_slot(t, 2), 3);
    return a.assemble(outer(t, twist), {{L(3), L(4)}, {L(2), L(5)}, {L(0)}, {L(1)}});
}

Vec direct_rhs(const QuasiHopfAlgebra& a, int i) {
    switch (i) {
        case 1: return a.mul(a.pivot_inv(), a.alpha());
        case 2: return a.alpha();
        case 3: return a.Sinv(a.alpha());
        default: return a.mul(a.pivot(), a.Sinv(a.alpha()));
    }
}

}  // namespace

Mat monad_action_matrix(const QuasiHopfAlgebra& a, int i, const Vec& h, const Vec& gamma_inv) {
    return sandwich_matrix(a, action_tensor(a, i, h, gamma_inv)).transpose();
}

Vec monad_action(const QuasiHopfAlgebra& a, int i, const Vec& h, const Vec& f, const Vec& gamma_inv) {
    return monad_action_matrix(a, i, h, gamma_inv).apply(f);
}

namespace {

struct MonadicRows {
    const QuasiHopfAlgebra& a;
    int i;
    const Vec& gamma_inv;
    Tensor L4;
    Vec rhs;
    int lam_leg;

    MonadicRows(const QuasiHopfAlgebra& alg, const DerivedElements& d, const IntegralData& in, int idx)
        : a(alg), i(idx), gamma_inv(in.modulus_inv), L4(direct_tensor(alg, d, in.modulus_inv, idx)),
          rhs(direct_rhs(alg, idx)), lam_leg((idx == 1 || idx == 2) ? 0 : 1) {}

    // (Q_h)(k, j) - delta(j, h) rhs(k): one row per output coordinate k
    std::vector<Vec> direct(std::size_t hi) const {
        const auto n = static_cast<std::size_t>(a.dim());
        static const std::vector<Word> words{{L(0), L(4), L(2)}, {L(1), L(5), L(3)}};
        const Tensor Q = a.assemble(outer(L4, a.delta(a.basis(static_cast<int>(hi)))), words);
        Mat m(n, n);
        int idx[2];
        for (const auto& [key, c] : Q.terms()) {
            Q.decode(key, idx);
            m(static_cast<std::size_t>(idx[1 - lam_leg]), static_cast<std::size_t>(idx[lam_leg])) += c;
        }
        for (std::size_t k = 0; k < n; ++k) m(k, hi) -= rhs[k];
        std::vector<Vec> rows;
        for (std::size_t k = 0; k < n; ++k) rows.push_back(m.row(k));
        return rows;
    }

    // f(M e_a) - eps(h) f(e_a) for every a: rows of M^T - eps(h)
    std::vector<Vec> intertwiner(std::size_t hi) const {
        const auto n = static_cast<std::size_t>(a.dim());
        const Vec h = a.basis(static_cast<int>(hi));
        Mat m = monad_action_matrix(a, i, h, gamma_inv);
        const Scalar e = a.eps(h);
        for (std::size_t k = 0; k < n; ++k) m(k, k) -= e;
        std::vector<Vec> rows;
        for (std::size_t k = 0; k < n; ++k) rows.push_back(m.row(k));
        return rows;
    }
};

}  // namespace

MonadicSolution solve_monadic(const QuasiHopfAlgebra& a, const DerivedElements& d, const IntegralData& in, int i) {
    check_index(a, i);
    const auto n = static_cast<std::size_t>(a.dim());
    const MonadicRows mr(a, d, in, i);
    RowReducer red(n);
    MonadicSolution out;
    out.direct_rows = stream_rows(red, n, [&](std::size_t hi) { return mr.direct(hi); });
    out.direct_kernel_dim = n - red.rank();
    const std::size_t inter = stream_rows(red, n, [&](std::size_t hi) { return mr.intertwiner(hi); });
    out.system.rows = out.direct_rows + inter;
    out.system.rank = red.rank();
    out.system.basis = red.kernel();
    out.form = unique_solution(out.system, "monadic cointegral for A_" + std::to_string(i), ErrorKind::NoSolution,
                               ErrorKind::NonUnique);
    return out;
}

bool is_monadic_cointegral(const QuasiHopfAlgebra& a, const DerivedElements& d, const IntegralData& in, int i,
                           const Vec& form) {
    check_index(a, i);
    if (is_zero(form)) return false;
    const MonadicRows mr(a, d, in, i);
    for (std::size_t hi = 0; hi < static_cast<std::size_t>(a.dim()); ++hi) {
        for (const auto& r : mr.direct(hi))
            if (!dot(r, form).is_zero()) return false;
        for (const auto& r : mr.intertwiner(hi))
            if (!dot(r, form).is_zero()) return false;
    }
    return true;
}

namespace {

Mat kappa_step(const QuasiHopfAlgebra& a, const IntegralData& in, int from) {
    if (from == 2) {
        // f -> gamma^-1(X2) f(S(X1) S(?) X3)
        const Tensor t = a.S_slot(contract(a.phi(), 1, in.modulus_inv), 0);
        return (sandwich_matrix(a, t) * a.S_mat()).transpose();
    }
    if (!a.has_pivot()) throw Error(ErrorKind::NoPivot, "kappa through A_1 or A_4 needs a pivot");
    // f -> f(g^-1 ?)
    return a.left_mult_matrix(a.pivot_inv()).transpose();
}

}  // namespace

Mat kappa(const QuasiHopfAlgebra& a, const IntegralData& in, int from, int to) {
    if (from < 1 || from > 4 || to < 1 || to > 4) throw Error(ErrorKind::MalformedInput, "monad index must be 1..4");
    Mat k = Mat::identity(static_cast<std::size_t>(a.dim()));
    if (from < to)
        for (int s = from; s < to; ++s) k = kappa_step(a, in, s) * k;
    else
        for (int s = from - 1; s >= to; --s) k = kappa_step(a, in, s).inverse() * k;
    return k;
}

Mat theorem_map(const QuasiHopfAlgebra& a, const ModulusElements& m, int i) {
    const Vec& be = a.beta();
    Mat x;
    switch (i) {
        case 1:  // lambda(S(beta) ? S^-1(theta))
            if (!m.theta) throw Error(ErrorKind::NoPivot, "row 1 needs a pivot");
            x = sandwich_matrix(a, a.S(be), a.Sinv(*m.theta));
            break;
        case 2:  // lambda(S(beta) ? S^-1(xi))
            x = sandwich_matrix(a, a.S(be), a.Sinv(m.xi));
            break;
        case 3:  // lambda(S^-2(beta) ? S(xi_hat))
            x = sandwich_matrix(a, a.Sinv(a.Sinv(be)), a.S(m.xi_hat));
            break;
        case 4:  // lambda(beta ? S(theta_hat))
            if (!m.theta_hat) throw Error(ErrorKind::NoPivot, "row 4 needs a pivot");
            x = sandwich_matrix(a, be, a.S(*m.theta_hat));
            break;
        default: throw Error(ErrorKind::MalformedInput, "monad index must be 1..4");
    }
    return x.transpose();
}

bool TheoremReport::ok() const {
    for (const auto& r : rows)
        if (r.applicable && !r.pass) return false;
    return square.pass;
}

TheoremReport verify_main_theorem(Analysis& an) {
    const QuasiHopfAlgebra& a = an.alg();
    TheoremReport rep;
    const CointegralKind sources[4] = {CointegralKind::RightSym, CointegralKind::Right, CointegralKind::Left,
                                       CointegralKind::LeftSym};
    for (int i = 1; i <= 4; ++i) {
        TheoremRow row;
        row.monad = i;
        row.source = sources[i - 1];
        if ((i == 1 || i == 4) && !a.has_pivot()) {
            row.applicable = false;
            rep.rows.push_back(row);
            continue;
        }
        row.image = theorem_map(a, an.modulus(), i).apply(an.cointegral(row.source).form);
        row.monadic = an.monadic(i).form;
        row.ratio = proportionality(row.image, row.monadic);
        row.pass = row.ratio.has_value() && !row.ratio->is_zero();
        rep.rows.push_back(row);
    }

    // kappa_23(row 2(lambda^r)) against row 3 of gamma(alpha S(beta))^-1 (lambda^r o S <- (u^cop)^-1)
    const auto& in = an.integrals();
    const auto& m = an.modulus();
    const Vec& lr = an.cointegral(CointegralKind::Right).form;
    SquareCheck& sq = rep.square;
    sq.prefactor = dot(in.modulus, a.mul(a.alpha(), a.S(a.beta()))).inverse();
    const auto ucop_inv = a.inverse(m.u_cop);
    if (!ucop_inv) throw Error(ErrorKind::InternalInconsistency, "u^cop is not invertible");
    const Vec ll = scale(a.hook_form_right(pullback(lr, a.S_mat()), *ucop_inv), sq.prefactor);
    const Vec lhs = kappa(a, in, 2, 3).apply(theorem_map(a, m, 2).apply(lr));
    const Vec rhs = theorem_map(a, m, 3).apply(ll);
    sq.ratio = proportionality(lhs, rhs);
    sq.pass = sq.ratio.has_value() && !sq.ratio->is_zero();
    sq.exact = sq.pass && sq.ratio->is_one();
    return rep;
}

}  // namespace qhopf
