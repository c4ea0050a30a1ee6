#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qhopf/linalg.hpp"

namespace qhopf {

/// Raw structure constants, as read from a presentation file or produced by the
/// catalog. Conventions:
///   mult(i, j, k)        e_i e_j = sum_k m e_k
///   coproduct(i, j, k)   Delta(e_i) = sum c e_j (x) e_k
///   antipode(i, j)       S(e_j) = sum_i S(i, j) e_i
struct Presentation {
    std::string name;
    FieldSpec field;
    int dim = 0;
    std::vector<std::string> basis;
    Vec unit;
    Vec counit;
    Tensor mult;
    Tensor coproduct;
    Tensor coassociator;
    Tensor coassociator_inv;
    Mat antipode;
    Vec alpha;
    Vec beta;
    std::optional<Vec> pivot;
    std::optional<Tensor> r_matrix;
    std::optional<Tensor> r_matrix_inv;
    std::optional<Vec> ribbon;
    std::optional<Tensor> omega_hat;
    std::optional<Vec> modulus_hint;
};

using SparseElem = std::vector<std::pair<int, Scalar>>;

/// One output leg of QuasiHopfAlgebra::assemble: a product of input legs and
/// constant elements, read left to right.
struct Piece {
    int leg = -1;
    Vec element;  // used when leg < 0
};
using Word = std::vector<Piece>;
inline Piece L(int leg) { return Piece{leg, {}}; }
inline Piece C(Vec element) { return Piece{-1, std::move(element)}; }

class QuasiHopfAlgebra {
public:
    /// Checks shapes and index ranges and inverts the antipode; does not check axioms.
    explicit QuasiHopfAlgebra(Presentation p);

    const Presentation& presentation() const noexcept { return p_; }
    const std::string& name() const noexcept { return p_.name; }
    int dim() const noexcept { return p_.dim; }
    const CyclotomicField& field() const { return p_.field.field(); }
    const std::vector<std::string>& labels() const noexcept { return p_.basis; }

    Vec zero() const { return Vec(static_cast<std::size_t>(dim())); }
    const Vec& one() const noexcept { return p_.unit; }
    Vec basis(int i) const { return unit_vec(static_cast<std::size_t>(dim()), static_cast<std::size_t>(i)); }
    const Vec& counit() const noexcept { return p_.counit; }
    const Tensor& phi() const noexcept { return p_.coassociator; }
    const Tensor& psi() const noexcept { return p_.coassociator_inv; }
    const Vec& alpha() const noexcept { return p_.alpha; }
    const Vec& beta() const noexcept { return p_.beta; }
    const Mat& S_mat() const noexcept { return p_.antipode; }
    const Mat& Sinv_mat() const noexcept { return s_inv_; }
    bool has_pivot() const noexcept { return p_.pivot.has_value(); }
    const Vec& pivot() const;
    const Vec& pivot_inv() const;
    bool has_r() const noexcept { return p_.r_matrix.has_value(); }
    const Tensor& r_matrix() const;
    const Tensor& r_matrix_inv() const;

    // elements
    const SparseElem& mul_basis(int i, int j) const { return mul_[static_cast<std::size_t>(i * dim() + j)]; }
    Vec mul(const Vec& a, const Vec& b) const;
    Vec mul(const std::vector<Vec>& factors) const;
    Scalar eps(const Vec& a) const { return dot(p_.counit, a); }
    Vec S(const Vec& a) const { return p_.antipode.apply(a); }
    Vec Sinv(const Vec& a) const { return s_inv_.apply(a); }
    /// Two-sided inverse, or nullopt.
    std::optional<Vec> inverse(const Vec& a) const;
    Mat left_mult_matrix(const Vec& a) const;
    Mat right_mult_matrix(const Vec& a) const;

    const std::vector<std::pair<std::pair<int, int>, Scalar>>& delta_basis(int i) const {
        return delta_[static_cast<std::size_t>(i)];
    }
    Tensor delta(const Vec& a) const;
    /// Iterated coproduct following a bracketing such as "((..).)" where each '.'
    /// is a leaf, e.g. "((..).)" gives h(1,1) (x) h(1,2) (x) h(2).
    Tensor delta_iterated(const Vec& a, const std::string& pattern) const;

    // hooks: h -> f = f(? h), f <- h = f(h ?), f -> h = h(1) f(h(2)), h <- f = f(h(1)) h(2)
    Vec hook_form_left(const Vec& h, const Vec& f) const;
    Vec hook_form_right(const Vec& f, const Vec& h) const;
    Vec hook_elem_left(const Vec& f, const Vec& h) const;
    Vec hook_elem_right(const Vec& h, const Vec& f) const;

    // tensors
    Tensor unit_tensor(int order) const;
    Tensor elem(const Vec& a) const { return Tensor::from_vec(a); }
    Tensor product(const Tensor& a, const Tensor& b) const;
    Tensor product(const std::vector<Tensor>& factors) const;
    /// Replaces leg `slot` by its coproduct, raising the order by one.
    Tensor delta_slot(const Tensor& t, int slot) const;
    Tensor S_slot(const Tensor& t, int slot) const { return apply_map(t, slot, p_.antipode); }
    Tensor Sinv_slot(const Tensor& t, int slot) const { return apply_map(t, slot, s_inv_); }
    /// Builds one output leg per word; every input leg must be used exactly once.
    Tensor assemble(const Tensor& t, const std::vector<Word>& words) const;

    SparseElem sparse(const Vec& a) const;
    SparseElem mul_sparse(const SparseElem& a, const SparseElem& b) const;
    std::string label(int i) const { return p_.basis[static_cast<std::size_t>(i)]; }

private:
    Presentation p_;
    Mat s_inv_;
    std::vector<SparseElem> mul_;
    std::vector<std::vector<std::pair<std::pair<int, int>, Scalar>>> delta_;
    std::optional<Vec> pivot_inv_;
};

using AlgebraPtr = std::shared_ptr<const QuasiHopfAlgebra>;

/// An element together with the algebra it lives in.
struct AlgebraElement {
    AlgebraPtr algebra;
    Vec coeffs;
};
AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b);

enum class Dual { Op, Cop };
/// H^op or H^cop. Pivot, R-matrix and ribbon data are not carried over.
QuasiHopfAlgebra op_cop(const QuasiHopfAlgebra& a, Dual which);

/// Slotwise product with an explicit multiplication tensor.
Tensor tensor_mul(const Tensor& a, const Tensor& b, const Tensor& mult);

}  // namespace qhopf
