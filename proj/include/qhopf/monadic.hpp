#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qhopf/cointegrals.hpp"

namespace qhopf {

/// Matrix of the action of h on A_i(D) = H*, acting on coefficient vectors of forms.
Mat monad_action_matrix(const QuasiHopfAlgebra& a, int i, const Vec& h, const Vec& gamma_inv);
Vec monad_action(const QuasiHopfAlgebra& a, int i, const Vec& h, const Vec& f, const Vec& gamma_inv);

struct MonadicSolution {
    Vec form;
    KernelResult system;
    std::size_t direct_rows = 0;
    std::size_t direct_kernel_dim = 0;  // kernel of the direct equation alone
};

/// Solves the direct equation together with the intertwiner condition 1 -> A_i(D).
/// i in {1, 4} needs a pivot.
MonadicSolution solve_monadic(const QuasiHopfAlgebra& a, const DerivedElements& d, const IntegralData& in, int i);

/// True when a non-zero form satisfies both the linear equation and the
/// intertwiner condition for A_i. Used to test candidate values from outside.
bool is_monadic_cointegral(const QuasiHopfAlgebra& a, const DerivedElements& d, const IntegralData& in, int i,
                           const Vec& form);

/// The canonical isomorphism A_from(D) -> A_to(D) as a matrix on forms, composed
/// along 1 - 2 - 3 - 4.
Mat kappa(const QuasiHopfAlgebra& a, const IntegralData& in, int from, int to);

/// The linear maps of the main theorem, from a quasi-Hopf cointegral to the
/// monadic cointegral for A_i (i = 1: right-sym, 2: right, 3: left, 4: left-sym).
Mat theorem_map(const QuasiHopfAlgebra& a, const ModulusElements& m, int i);

struct TheoremRow {
    int monad = 0;
    CointegralKind source{};
    bool applicable = true;
    bool pass = false;
    std::optional<Scalar> ratio;  // image = ratio * monadic
    Vec image, monadic;
};

struct SquareCheck {
    bool pass = false;
    bool exact = false;
    Scalar prefactor;             // gamma(alpha S(beta))^-1
    std::optional<Scalar> ratio;  // kappa_23(row 2) = ratio * row 3
};

struct TheoremReport {
    std::vector<TheoremRow> rows;
    SquareCheck square;
    bool ok() const;
};

struct Analysis;
TheoremReport verify_main_theorem(Analysis& an);

}  // namespace qhopf
