#pragma once

#include "qhopf/algebra.hpp"

namespace qhopf {

struct IntegralData {
    Vec left_integral;   // c^l, h c^l = eps(h) c^l
    Vec right_integral;  // c^r, c^r h = eps(h) c^r
    Vec modulus;         // gamma, c^l h = gamma(h) c^l
    Vec modulus_inv;     // gamma o S
    bool unimodular = false;
};

/// Throws DegenerateIntegralSpace when an integral space is not one-dimensional,
/// InternalInconsistency when the cross-checks on gamma fail and MalformedInput
/// when a modulus hint disagrees with the computed modulus.
IntegralData compute_integrals(const QuasiHopfAlgebra& a);

}  // namespace qhopf
