#include "qhopf/cointegrals.hpp"

#include "qhopf/error.hpp"

namespace qhopf {

const char* to_string(CointegralKind k) noexcept {
    switch (k) {
        case CointegralKind::Left: return "left";
        case CointegralKind::Right: return "right";
        case CointegralKind::LeftSym: return "left-sym";
        case CointegralKind::RightSym: return "right-sym";
    }
    return "?";
}

CointegralKind parse_cointegral_kind(const std::string& s) {
    if (s == "left") return CointegralKind::Left;
    if (s == "right") return CointegralKind::Right;
    if (s == "left-sym") return CointegralKind::LeftSym;
    if (s == "right-sym") return CointegralKind::RightSym;
    throw Error(ErrorKind::Parse, "unknown cointegral kind '" + s + "'");
}

namespace {

// Equations of the shape
//   (lambda on leg `lam_leg`)(A Delta(h) B) = sum lambda(W1 h or h W1) W2,
// one row per output coordinate k, unknowns lambda_j.
struct Equation {
    Tensor A, B;
    int lam_leg = 0;
    Tensor W;
    bool h_left = true;  // h W1 when true, W1 h otherwise
    bool cop = false;    // Delta^cop(h) in place of Delta(h)
};

KernelResult solve_equation(const QuasiHopfAlgebra& a, const Equation& eq) {
    const int d = a.dim();
    const auto n = static_cast<std::size_t>(d);
    return stacked_kernel(n, n, [&](std::size_t hi) {
        const int h = static_cast<int>(hi);
        Tensor dh = a.delta(a.basis(h));
        if (eq.cop) dh = permute(dh, {1, 0});
        const Tensor T = a.product({eq.A, dh, eq.B});
        Mat m(n, n);
        int idx[2];
        for (const auto& [key, c] : T.terms()) {
            T.decode(key, idx);
            const int j = idx[eq.lam_leg], k = idx[1 - eq.lam_leg];
            m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) += c;
        }
        for (const auto& [key, c] : eq.W.terms()) {
            eq.W.decode(key, idx);
            const SparseElem& prod = eq.h_left ? a.mul_basis(h, idx[0]) : a.mul_basis(idx[0], h);
            for (const auto& [j, c1] : prod) m(static_cast<std::size_t>(idx[1]), static_cast<std::size_t>(j)) -= c * c1;
        }
        std::vector<Vec> rows;
        for (std::size_t k = 0; k < n; ++k) rows.push_back(m.row(k));
        return rows;
    });
}

Equation equation_for(const QuasiHopfAlgebra& a, const DerivedElements& d, const IntegralData& in, CointegralKind kind) {
    Equation eq;
    const Vec& gamma = in.modulus;
    switch (kind) {
        case CointegralKind::Left: {
            // (id (x) lambda)(V Delta(h) U) = gamma(X1) lambda(h S(X2)) X3
            eq.A = d.V;
            eq.B = d.U;
            eq.lam_leg = 1;
            eq.W = a.S_slot(contract(a.phi(), 0, gamma), 0);
            eq.h_left = true;
            break;
        }
        case CointegralKind::Right: {
            // the left equation for H^cop: gamma(x3) lambda(h S^-1(x2)) x1
            eq.A = d.Vcop;
            eq.B = d.Ucop;
            eq.lam_leg = 1;
            eq.cop = true;
            eq.W = a.Sinv_slot(permute(contract(a.psi(), 2, gamma), {1, 0}), 0);
            eq.h_left = true;
            break;
        }
        case CointegralKind::RightSym: {
            // (lambda (x) id)(qR Delta(h) pR) = gamma(X1) lambda(X2 h) g^-1 S(X3)
            eq.A = d.qR;
            eq.B = d.pR;
            eq.lam_leg = 0;
            const Tensor t = a.S_slot(contract(a.phi(), 0, gamma), 1);
            eq.W = a.assemble(t, {{L(0)}, {C(a.pivot_inv()), L(1)}});
            eq.h_left = false;
            break;
        }
        case CointegralKind::LeftSym: {
            // (id (x) lambda)(qL Delta(h) pL) = gamma(x3) lambda(x2 h) g S^-1(x1)
            eq.A = d.qL;
            eq.B = d.pL;
            eq.lam_leg = 1;
            const Tensor t = a.Sinv_slot(contract(a.psi(), 2, gamma), 0);
            eq.W = a.assemble(t, {{L(1)}, {C(a.pivot()), L(0)}});
            eq.h_left = false;
            break;
        }
    }
    return eq;
}

}  // namespace

CointegralSolution solve_cointegral(const QuasiHopfAlgebra& a, const DerivedElements& d, const IntegralData& in,
                                    CointegralKind kind) {
    if ((kind == CointegralKind::LeftSym || kind == CointegralKind::RightSym) && !a.has_pivot())
        throw Error(ErrorKind::NoPivot, std::string(to_string(kind)) + " cointegral needs a pivot");
    CointegralSolution out;
    out.system = solve_equation(a, equation_for(a, d, in, kind));
    out.form = unique_solution(out.system, std::string(to_string(kind)) + " cointegral", ErrorKind::NoCointegral,
                               ErrorKind::NonUniqueCointegral);
    return out;
}

Vec sym_cointegral_via_formula(const QuasiHopfAlgebra& a, const ModulusElements& m, const Vec& hn, CointegralKind kind) {
    if (!a.has_pivot()) throw Error(ErrorKind::NoPivot, "symmetrised cointegral needs a pivot");
    switch (kind) {
        case CointegralKind::RightSym: return a.hook_form_right(hn, a.mul(m.u, a.pivot()));
        case CointegralKind::LeftSym: return a.hook_form_right(hn, a.mul(m.u_cop, a.pivot_inv()));
        default: throw Error(ErrorKind::MalformedInput, "formula method applies to symmetrised cointegrals only");
    }
}

Vec left_from_right(const QuasiHopfAlgebra& a, const ModulusElements& m, const Vec& lambda_r) {
    return pullback(a.hook_form_right(lambda_r, m.u), a.S_mat());
}

Vec right_from_left(const QuasiHopfAlgebra& a, const ModulusElements& m, const Vec& lambda_l) {
    return pullback(a.hook_form_right(lambda_l, m.u_cop), a.Sinv_mat());
}

std::optional<std::pair<int, int>> symmetry_violation(const QuasiHopfAlgebra& a, const Vec& gamma, const Vec& lambda,
                                                      CointegralKind kind) {
    const int d = a.dim();
    // one side depends on (a, b); the other is lambda applied to the product
    std::vector<Vec> twisted(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const Vec e = a.basis(i);
        switch (kind) {
            case CointegralKind::Left: twisted[static_cast<std::size_t>(i)] = a.S(a.hook_elem_right(e, gamma)); break;
            case CointegralKind::Right: twisted[static_cast<std::size_t>(i)] = a.Sinv(a.hook_elem_left(gamma, e)); break;
            case CointegralKind::RightSym: twisted[static_cast<std::size_t>(i)] = a.hook_elem_right(e, gamma); break;
            case CointegralKind::LeftSym: twisted[static_cast<std::size_t>(i)] = a.hook_elem_left(gamma, e); break;
        }
    }
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Vec ea = a.basis(i), eb = a.basis(j);
            Scalar lhs, rhs;
            switch (kind) {
                case CointegralKind::Left:  // lambda(S^-1(a) b) = lambda(b S(a <- gamma))
                    lhs = dot(lambda, a.mul(a.Sinv(ea), eb));
                    rhs = dot(lambda, a.mul(eb, twisted[static_cast<std::size_t>(i)]));
                    break;
                case CointegralKind::Right:  // lambda(S(a) b) = lambda(b S^-1(gamma -> a))
                    lhs = dot(lambda, a.mul(a.S(ea), eb));
                    rhs = dot(lambda, a.mul(eb, twisted[static_cast<std::size_t>(i)]));
                    break;
                case CointegralKind::RightSym:  // lambda(ab) = lambda((b <- gamma) a)
                case CointegralKind::LeftSym:   // lambda(ab) = lambda((gamma -> b) a)
                    lhs = dot(lambda, a.mul(ea, eb));
                    rhs = dot(lambda, a.mul(twisted[static_cast<std::size_t>(j)], ea));
                    break;
            }
            if (lhs != rhs) return std::make_pair(i, j);
        }
    return std::nullopt;
}

Mat pairing_matrix(const QuasiHopfAlgebra& a, const Vec& lambda) {
    const auto n = static_cast<std::size_t>(a.dim());
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [k, c] : a.mul_basis(static_cast<int>(i), static_cast<int>(j)))
                m(i, j) += c * lambda[static_cast<std::size_t>(k)];
    return m;
}

}  // namespace qhopf
