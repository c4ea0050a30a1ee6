#include "qhopf/integrals.hpp"

#include "qhopf/error.hpp"
#include "qhopf/forms.hpp"

namespace qhopf {

namespace {

Vec integral(const QuasiHopfAlgebra& a, bool left) {
    const auto d = static_cast<std::size_t>(a.dim());
    const auto k = stacked_kernel(d, d, [&](std::size_t i) {
        const Vec h = a.basis(static_cast<int>(i));
        Mat m = left ? a.left_mult_matrix(h) : a.right_mult_matrix(h);
        const Scalar e = a.eps(h);
        for (std::size_t j = 0; j < d; ++j) m(j, j) -= e;
        std::vector<Vec> rows;
        for (std::size_t r = 0; r < d; ++r) rows.push_back(m.row(r));
        return rows;
    });
    if (k.basis.size() != 1)
        throw Error(ErrorKind::DegenerateIntegralSpace, std::string(left ? "left" : "right") +
                                                           " integral space has dimension " + std::to_string(k.basis.size()));
    return normalized(k.basis.front());
}

}  // namespace

IntegralData compute_integrals(const QuasiHopfAlgebra& a) {
    IntegralData out;
    out.left_integral = integral(a, true);
    out.right_integral = integral(a, false);
    const int d = a.dim();
    const Vec& cl = out.left_integral;
    std::size_t pos = 0;
    while (cl[pos].is_zero()) ++pos;
    out.modulus = a.zero();
    for (int i = 0; i < d; ++i) {
        const Vec prod = a.mul(cl, a.basis(i));
        const Scalar g = prod[pos] / cl[pos];
        if (prod != scale(cl, g))
            throw Error(ErrorKind::InternalInconsistency, "c^l " + a.label(i) + " is not a multiple of c^l");
        out.modulus[static_cast<std::size_t>(i)] = g;
    }
    out.modulus_inv = pullback(out.modulus, a.S_mat());
    if (out.modulus_inv != pullback(out.modulus, a.Sinv_mat()))
        throw Error(ErrorKind::InternalInconsistency, "gamma o S differs from gamma o S^-1");
    // h c^r = gamma^-1(h) c^r
    for (int i = 0; i < d; ++i) {
        const Vec lhs = a.mul(a.basis(i), out.right_integral);
        if (lhs != scale(out.right_integral, out.modulus_inv[static_cast<std::size_t>(i)]))
            throw Error(ErrorKind::InternalInconsistency, "right integral does not transform by gamma o S at " + a.label(i));
    }
    out.unimodular = out.modulus == a.counit();
    if (const auto& hint = a.presentation().modulus_hint) {
        if (*hint != out.modulus) throw Error(ErrorKind::MalformedInput, "modulus_hint does not match the computed modulus");
    }
    return out;
}

}  // namespace qhopf
