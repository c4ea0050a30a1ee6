#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qhopf/elements.hpp"
#include "qhopf/forms.hpp"
#include "qhopf/integrals.hpp"

namespace qhopf {

enum class CointegralKind { Left, Right, LeftSym, RightSym };
const char* to_string(CointegralKind k) noexcept;
CointegralKind parse_cointegral_kind(const std::string& s);

struct CointegralSolution {
    Vec form;  // normalized
    KernelResult system;
};

/// Solves the defining linear system. Sym kinds need a pivot (NoPivot).
CointegralSolution solve_cointegral(const QuasiHopfAlgebra& a, const DerivedElements& d, const IntegralData& in,
                                    CointegralKind kind);

/// lambda^r <- u g and lambda^l <- u^cop g^-1, not normalized.
Vec sym_cointegral_via_formula(const QuasiHopfAlgebra& a, const ModulusElements& m, const Vec& hn, CointegralKind kind);

/// (lambda^r <- u) o S, a left cointegral, and (lambda^l <- u^cop) o S^-1, a right one.
Vec left_from_right(const QuasiHopfAlgebra& a, const ModulusElements& m, const Vec& lambda_r);
Vec right_from_left(const QuasiHopfAlgebra& a, const ModulusElements& m, const Vec& lambda_l);

/// Checks the twisted trace property of a solved cointegral on all basis pairs.
/// Returns the first failing pair.
std::optional<std::pair<int, int>> symmetry_violation(const QuasiHopfAlgebra& a, const Vec& gamma, const Vec& lambda,
                                                      CointegralKind kind);

/// The matrix [lambda(e_i e_j)].
Mat pairing_matrix(const QuasiHopfAlgebra& a, const Vec& lambda);

}  // namespace qhopf
