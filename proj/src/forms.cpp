#include "qhopf/forms.hpp"

#include "qhopf/parallel.hpp"

namespace qhopf {

Mat sandwich_matrix(const QuasiHopfAlgebra& alg, const Tensor& ab) {
    const int d = alg.dim();
    const auto n = static_cast<std::size_t>(d);
    Mat m(n, n);
    int idx[2];
    for (const auto& [k, c] : ab.terms()) {
        ab.decode(k, idx);
        for (int x = 0; x < d; ++x) {
            const SparseElem ax = alg.mul_basis(idx[0], x);
            for (const auto& [y, c1] : ax)
                for (const auto& [z, c2] : alg.mul_basis(y, idx[1])) m(static_cast<std::size_t>(z), static_cast<std::size_t>(x)) += c * c1 * c2;
        }
    }
    return m;
}

Mat sandwich_matrix(const QuasiHopfAlgebra& alg, const Vec& a, const Vec& b) {
    return sandwich_matrix(alg, outer(alg.elem(a), alg.elem(b)));
}

Vec pullback(const Vec& f, const Mat& m) { return m.transpose().apply(f); }

std::size_t stream_rows(RowReducer& red, std::size_t count, const RowSource& rows) {
    std::vector<std::vector<Vec>> blocks(count);
    parallel_for(count, [&](std::size_t i) { blocks[i] = rows(i); });
    std::size_t n = 0;
    for (auto& block : blocks)
        for (auto& r : block) {
            ++n;
            if (!red.full_rank()) red.add_row(std::move(r));
        }
    return n;
}

KernelResult stacked_kernel(std::size_t cols, std::size_t count, const RowSource& rows) {
    RowReducer red(cols);
    KernelResult out;
    out.rows = stream_rows(red, count, rows);
    out.rank = red.rank();
    out.basis = red.kernel();
    return out;
}

Vec unique_solution(const KernelResult& k, const std::string& what, ErrorKind none, ErrorKind many) {
    if (k.basis.empty()) throw Error(none, what + ": only the zero solution");
    if (k.basis.size() > 1)
        throw Error(many, what + ": solution space has dimension " + std::to_string(k.basis.size()));
    return normalized(k.basis.front());
}

}  // namespace qhopf
