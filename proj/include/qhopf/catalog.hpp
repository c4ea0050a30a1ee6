#pragma once

#include <string>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf {

/// The 8-dimensional algebras H+(8) (sign = +1) and H-(8) (sign = -1), basis
/// B_{m,n} = g^m x^n at index 4m + n, over Q(zeta_4).
Presentation make_h8(int sign);

/// H(N, beta) with beta = zeta_8^beta_power, basis (prod f_i^{j_i}) K^l at index
/// 4 * (j_1 ... j_N read as a binary number, j_1 most significant) + l.
/// Requires beta^4 = (-1)^N, i.e. beta_power = N mod 2; otherwise BadBeta.
Presentation make_sf(int n, int beta_power);

/// U^-(p, t) with q = zeta_{2p}, basis F^m K^n at index 2p m + n, pivotal.
Presentation make_uq(int p, int t);

/// Plain Hopf algebra data (no coassociator, antipode triple collapses).
struct HopfPresentation {
    std::string name;
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;
    Vec unit;
    Vec counit;
    Tensor mult;
    Tensor coproduct;
    Mat antipode;
    std::optional<Vec> pivot;
    std::optional<Tensor> r_matrix;
    std::optional<Tensor> r_matrix_inv;
    std::optional<Vec> ribbon;
    std::optional<Tensor> omega_hat;
};

/// Views a Hopf algebra as a quasi-Hopf algebra with trivial coassociator and
/// alpha = beta = 1. Throws NotAHopfAlgebra when the Hopf axioms fail.
Presentation wrap_hopf(const HopfPresentation& h);

HopfPresentation group_algebra(int n);
/// Sweedler's 4-dimensional algebra, basis g^a x^b at index 2a + b, pivot g.
HopfPresentation sweedler();
/// Taft algebra of dimension n^2 at zeta_n (gx = zeta xg), basis g^a x^b at index
/// n a + b, pivot g^{-1}.
HopfPresentation taft(int n);
/// Group algebra of Z_n (n odd) with R = sum zeta^{ab} e_a (x) e_b over the
/// character idempotents, ribbon element and omega-hat = (R_21 R)^-1.
HopfPresentation zn_braided(int n);

/// k[Z_2] with coassociator 1 - 2 p_- (x) p_- (x) p_-, alpha = g, and the
/// bicharacter R-matrix with R(1,1) = chi, chi a power of zeta_4.
Presentation semion(int chi_power);

struct CatalogEntry {
    std::string name;
    std::string description;
};
std::vector<CatalogEntry> catalog_entries();

/// Builds a catalog algebra from a name and integer parameters, e.g.
/// ("h8", {+1}), ("sf", {N, k}), ("uq", {p, t}), ("zn", {n}), ("sweedler", {}).
Presentation make_catalog(const std::string& name, const std::vector<int>& params);

/// The algebras exercised by the verification suites.
std::vector<Presentation> standard_catalog();

}  // namespace qhopf
