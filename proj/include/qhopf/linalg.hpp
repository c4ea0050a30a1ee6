#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qhopf/scalar.hpp"

namespace qhopf {

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Vec& a, const Scalar& s);
Scalar dot(const Vec& a, const Vec& b);
/// Divides by the first non-zero entry. The zero vector is returned unchanged.
Vec normalized(const Vec& v);
/// Returns c with a = c * b when the vectors are parallel and b is non-zero.
std::optional<Scalar> proportionality(const Vec& a, const Vec& b);

class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static Mat identity(std::size_t n);
    static Mat from_columns(const std::vector<Vec>& cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Vec apply(const Vec& v) const;
    Mat transpose() const;
    Mat operator*(const Mat& b) const;
    Mat operator-(const Mat& b) const;
    Mat scaled(const Scalar& s) const;
    bool operator==(const Mat& b) const;
    bool is_zero() const;

    std::size_t rank() const;
    /// Throws DivisionByZero for singular input.
    Mat inverse() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

/// Incremental Gauss-Jordan elimination. Rows are reduced against the pivots
/// seen so far and only independent rows are kept, so memory stays bounded by
/// the number of columns no matter how many equations are streamed in.
class RowReducer {
public:
    explicit RowReducer(std::size_t cols) : cols_(cols) {}

    /// Returns true when the row increased the rank.
    bool add_row(Vec row);
    std::size_t rank() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    bool full_rank() const noexcept { return rows_.size() == cols_; }

    /// Reduced echelon basis of the right null space; each vector has leading entry 1.
    std::vector<Vec> kernel() const;

private:
    std::size_t cols_;
    std::vector<Vec> rows_;          // pivot entry normalized to 1
    std::vector<std::size_t> pivots_;
};

std::vector<Vec> kernel(const Mat& m);
/// Some solution of m x = b, or nullopt.
std::optional<Vec> solve(const Mat& m, const Vec& b);

// ---------------------------------------------------------------------------

constexpr int kMaxOrder = 10;
using Key = std::uint64_t;
using Index = std::array<int, kMaxOrder>;

/// Sparse element of the k-fold tensor power of a d-dimensional space. Terms are
/// stored sorted by key, where a key packs the leg indices in base d with the
/// first leg most significant.
class Tensor {
public:
    Tensor() = default;
    Tensor(int order, int dim);
    static Tensor from_vec(const Vec& v);
    static Tensor scalar_unit(int order, int dim, const std::vector<int>& idx, const Scalar& c);

    int order() const noexcept { return order_; }
    int dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<std::pair<Key, Scalar>>& terms() const noexcept { return terms_; }

    Key encode(const int* idx) const;
    void decode(Key key, int* idx) const;
    Scalar coeff(const std::vector<int>& idx) const;

    /// Flattened view of an order-1 tensor.
    Vec to_vec() const;
    /// Order-2 tensor as a dim x dim matrix, entry (i, j) the coefficient of e_i (x) e_j.
    Mat to_mat() const;

    Tensor operator+(const Tensor& b) const;
    Tensor operator-(const Tensor& b) const;
    Tensor scaled(const Scalar& s) const;
    bool operator==(const Tensor& b) const { return order_ == b.order_ && dim_ == b.dim_ && terms_ == b.terms_; }
    bool operator!=(const Tensor& b) const { return !(*this == b); }

    friend class TensorBuilder;

private:
    int order_ = 0;
    int dim_ = 0;
    std::vector<Key> radix_;
    std::vector<std::pair<Key, Scalar>> terms_;
};

class TensorBuilder {
public:
    TensorBuilder(int order, int dim);
    void add(const int* idx, const Scalar& c);
    void add_key(Key key, const Scalar& c);
    void add(const Tensor& t, const Scalar& c = Scalar(1));
    Key encode(const int* idx) const;
    Tensor build();

private:
    Tensor proto_;
    std::vector<std::pair<Key, Scalar>> pending_;
};

/// Outer product a (x) b.
Tensor outer(const Tensor& a, const Tensor& b);
/// Output leg l is input leg perm[l].
Tensor permute(const Tensor& t, const std::vector<int>& perm);
/// Applies a linear map (matrix acting on column vectors) to one leg.
Tensor apply_map(const Tensor& t, int slot, const Mat& m);
/// Evaluates a functional on one leg, removing it. Contracting the last leg of
/// an order-1 tensor yields an order-0 tensor holding a single scalar.
Tensor contract(const Tensor& t, int slot, const Vec& form);
/// Value of an order-0 tensor.
Scalar as_scalar(const Tensor& t);

/// Several slot operations at once, in slot order: each entry is either a map or
/// a functional. Functional slots are removed from the result.
struct SlotOp {
    int slot;
    std::optional<Mat> map;
    std::optional<Vec> form;
};
Tensor tensor_contract(const Tensor& t, const std::vector<SlotOp>& ops);

}  // namespace qhopf
