#pragma once

#include <optional>

#include "qhopf/algebra.hpp"

namespace qhopf {

/// Elements of H (x) H built from the coassociator and the antipode triple.
/// Both closed forms of eps and delta are kept so they can be compared.
struct DerivedElements {
    Tensor qR, pR, qL, pL;
    Tensor eps, eps_alt;
    Tensor delta, delta_alt;
    Tensor f, f_inv;
    Tensor fr, fr_inv;
    Tensor U, Ucop, V, Vcop;

    bool eps_forms_agree() const { return eps == eps_alt; }
    bool delta_forms_agree() const { return delta == delta_alt; }
};

/// With check = true, throws InternalInconsistency when the two forms of eps or
/// delta differ or the twists fail to be inverse to each other.
DerivedElements derive_elements(const QuasiHopfAlgebra& a, bool check = true);

/// The order-5 tensors tau and sigma entering the monadic cointegral equations.
Tensor monadic_tau(const QuasiHopfAlgebra& a);
Tensor monadic_sigma(const QuasiHopfAlgebra& a);

/// Elements that depend on the modulus.
struct ModulusElements {
    Vec u, u_cop;
    Vec xi, xi_hat;
    std::optional<Vec> theta, theta_hat;  // pivotal only
};

ModulusElements modulus_elements(const QuasiHopfAlgebra& a, const DerivedElements& d, const Vec& gamma,
                                 const Vec& gamma_inv);

/// (x) slotwise: the functional on one leg of an order-2 tensor, the other leg
/// mapped by m (or left alone).
Vec contract_pair(const Tensor& t, int form_slot, const Vec& form, const std::optional<Mat>& m = std::nullopt);

}  // namespace qhopf
