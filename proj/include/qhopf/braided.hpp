#pragma once

#include <optional>
#include <string>

#include "qhopf/analysis.hpp"

namespace qhopf {

/// Matrix of f -> gamma^-1(X3 Rb2) f(S(X1) ? X2 Rb1), the realization of xi_D
/// with the one-dimensional leg folded in. Pass the counit for V = 1.
Mat xi_matrix(const QuasiHopfAlgebra& a, const Vec& gamma_inv);

enum class CoendSource { Monadic, HN };
const char* to_string(CoendSource s) noexcept;

/// Left integral of the coend as a form on H, built from the right monadic
/// cointegral or from the right HN cointegral.
Vec coend_integral(Analysis& an, CoendSource source);

struct CoendCheck {
    Vec monadic, hn;
    std::optional<Scalar> ratio;  // monadic = ratio * hn
    bool unimodular = false;
    bool equals_mon_right = false;     // unimodular only
    bool equals_hn_formula = false;    // unimodular only, against lambda^r(S(beta) ?)
    bool ok() const;
};
CoendCheck check_coend(Analysis& an);

struct CenterData {
    std::vector<Vec> center_basis;
    std::vector<Vec> alphaZ_basis;  // alpha z for the listed preimages
    std::vector<Vec> alphaZ_preimage;
};
CenterData center(const QuasiHopfAlgebra& a);

struct SL2ZReport {
    CenterData center;
    Mat S, S_alt, T;  // columns are images of the alphaZ basis
    bool formulas_agree = false;
    bool S_invertible = false;
    std::optional<Scalar> c;  // (ST)^3 = c S^2
    bool ok() const { return formulas_agree && S_invertible && c && !c->is_zero(); }
};

/// S and T on alphaZ. `omega_hat` overrides the presentation's value.
SL2ZReport sl2z_action(Analysis& an, const std::optional<Tensor>& omega_hat = std::nullopt);

}  // namespace qhopf
