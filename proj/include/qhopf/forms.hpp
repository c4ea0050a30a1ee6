#pragma once

#include <functional>
#include <string>

#include "qhopf/algebra.hpp"
#include "qhopf/error.hpp"

namespace qhopf {

/// Matrix of x -> sum c a x b for an order-2 tensor sum c a (x) b.
Mat sandwich_matrix(const QuasiHopfAlgebra& alg, const Tensor& ab);
Mat sandwich_matrix(const QuasiHopfAlgebra& alg, const Vec& a, const Vec& b);

/// The form f o m, i.e. x -> f(m x).
Vec pullback(const Vec& f, const Mat& m);

/// Result of stacking linear conditions on an unknown vector.
struct KernelResult {
    std::vector<Vec> basis;
    std::size_t rows = 0;
    std::size_t rank = 0;
};

using RowSource = std::function<std::vector<Vec>(std::size_t)>;

/// Generates the rows for each index in [0, count) in parallel and feeds them to
/// the reducer in index order. Returns the number of rows produced.
std::size_t stream_rows(RowReducer& red, std::size_t count, const RowSource& rows);

/// Streams the rows produced for each index in [0, count) (generated in parallel,
/// reduced in index order) and returns the kernel.
KernelResult stacked_kernel(std::size_t cols, std::size_t count, const RowSource& rows);

/// The unique (normalized) kernel vector, or an error of the given kinds.
Vec unique_solution(const KernelResult& k, const std::string& what, ErrorKind none, ErrorKind many);

}  // namespace qhopf
