#include "qhopf/linalg.hpp"

#include <algorithm>
#include <limits>

#include "qhopf/error.hpp"

namespace qhopf {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n);
    v[i] = Scalar(1);
    return v;
}

bool is_zero(const Vec& v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

static void check_len(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

Vec add(const Vec& a, const Vec& b) {
    check_len(a, b);
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    check_len(a, b);
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Vec& a, const Scalar& s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) r[i] = a[i] * s;
    return r;
}

Scalar dot(const Vec& a, const Vec& b) {
    check_len(a, b);
    Scalar s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
    return s;
}

Vec normalized(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return x.is_one() ? v : scale(v, x.inverse());
    return v;
}

std::optional<Scalar> proportionality(const Vec& a, const Vec& b) {
    check_len(a, b);
    std::size_t k = 0;
    while (k < b.size() && b[k].is_zero()) ++k;
    if (k == b.size()) return std::nullopt;
    const Scalar c = a[k] / b[k];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != c * b[i]) return std::nullopt;
    return c;
}

// ---------------------------------------------------------------------------

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
}

Mat Mat::from_columns(const std::vector<Vec>& cols) {
    if (cols.empty()) return {};
    Mat m(cols[0].size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != m.rows_) throw Error(ErrorKind::DimensionMismatch, "ragged columns");
        for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Mat::row(std::size_t i) const { return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)); }

Vec Mat::col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

Vec Mat::apply(const Vec& v) const {
    if (v.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
    Vec r(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < rows_; ++i)
            if (!(*this)(i, j).is_zero()) r[i] += (*this)(i, j) * v[j];
    }
    return r;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::operator*(const Mat& b) const {
    if (cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
    Mat r(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& x = (*this)(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
        }
    return r;
}

Mat Mat::operator-(const Mat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference");
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] -= b.a_[i];
    return r;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat r = *this;
    for (auto& x : r.a_)
        if (!x.is_zero()) x *= s;
    return r;
}

bool Mat::operator==(const Mat& b) const { return rows_ == b.rows_ && cols_ == b.cols_ && a_ == b.a_; }

bool Mat::is_zero() const { return qhopf::is_zero(a_); }

std::size_t Mat::rank() const {
    RowReducer r(cols_);
    for (std::size_t i = 0; i < rows_; ++i) r.add_row(row(i));
    return r.rank();
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = rows_;
    std::vector<Vec> aug(n, Vec(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = (*this)(i, j);
        aug[i][n + i] = Scalar(1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && aug[p][c].is_zero()) ++p;
        if (p == n) throw Error(ErrorKind::DivisionByZero, "singular matrix");
        std::swap(aug[p], aug[c]);
        const Scalar inv = aug[c][c].inverse();
        for (auto& x : aug[c])
            if (!x.is_zero()) x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || aug[r][c].is_zero()) continue;
            const Scalar f = aug[r][c];
            for (std::size_t k = c; k < 2 * n; ++k)
                if (!aug[c][k].is_zero()) aug[r][k] -= f * aug[c][k];
        }
    }
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug[i][n + j];
    return inv;
}

// ---------------------------------------------------------------------------

static void axpy(Vec& row, const Scalar& f, const Vec& other) {
    for (std::size_t k = 0; k < row.size(); ++k)
        if (!other[k].is_zero()) row[k] -= f * other[k];
}

bool RowReducer::add_row(Vec row) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "row length");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (row[p].is_zero()) continue;
        const Scalar f = row[p];
        axpy(row, f, rows_[r]);
    }
    std::size_t p = 0;
    while (p < cols_ && row[p].is_zero()) ++p;
    if (p == cols_) return false;
    if (!row[p].is_one()) {
        const Scalar inv = row[p].inverse();
        for (auto& x : row)
            if (!x.is_zero()) x *= inv;
    }
    for (auto& other : rows_) {
        if (other[p].is_zero()) continue;
        const Scalar f = other[p];
        axpy(other, f, row);
    }
    const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    rows_.insert(rows_.begin() + pos, std::move(row));
    return true;
}

std::vector<Vec> RowReducer::kernel() const {
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Vec v(cols_);
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (!rows_[r][f].is_zero()) v[pivots_[r]] = -rows_[r][f];
        basis.push_back(std::move(v));
    }
    if (basis.size() <= 1) {
        for (auto& v : basis) v = normalized(v);
        return basis;
    }
    // canonical form: reduced echelon basis of the span
    RowReducer span(cols_);
    for (auto& v : basis) span.add_row(v);
    return span.rows_;
}

std::vector<Vec> kernel(const Mat& m) {
    RowReducer r(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) r.add_row(m.row(i));
    return r.kernel();
}

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows()) throw Error(ErrorKind::DimensionMismatch, "right-hand side length");
    const std::size_t n = m.cols();
    RowReducer r(n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Vec row = m.row(i);
        row.push_back(-b[i]);
        r.add_row(std::move(row));
    }
    // solutions of [m | -b] (x, 1) = 0
    for (const auto& v : r.kernel()) {
        if (!v[n].is_zero()) {
            Vec x(v.begin(), v.begin() + static_cast<long>(n));
            return scale(x, v[n].inverse());
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------

Tensor::Tensor(int order, int dim) : order_(order), dim_(dim), radix_(static_cast<std::size_t>(order)) {
    if (order < 0 || order > kMaxOrder) throw Error(ErrorKind::OrderMismatch, "tensor order out of range");
    if (dim < 1) throw Error(ErrorKind::DimensionMismatch, "tensor dimension must be positive");
    Key r = 1;
    for (int l = order - 1; l >= 0; --l) {
        radix_[static_cast<std::size_t>(l)] = r;
        if (l > 0 && r > std::numeric_limits<Key>::max() / static_cast<Key>(dim))
            throw Error(ErrorKind::DimensionMismatch, "tensor too large for key packing");
        r *= static_cast<Key>(dim);
    }
}

Tensor Tensor::from_vec(const Vec& v) {
    TensorBuilder b(1, static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) b.add_key(i, v[i]);
    return b.build();
}

Tensor Tensor::scalar_unit(int order, int dim, const std::vector<int>& idx, const Scalar& c) {
    TensorBuilder b(order, dim);
    b.add(idx.data(), c);
    return b.build();
}

Key Tensor::encode(const int* idx) const {
    Key k = 0;
    for (int l = 0; l < order_; ++l) {
        if (idx[l] < 0 || idx[l] >= dim_) throw Error(ErrorKind::SlotOutOfRange, "index out of range");
        k += static_cast<Key>(idx[l]) * radix_[static_cast<std::size_t>(l)];
    }
    return k;
}

void Tensor::decode(Key key, int* idx) const {
    for (int l = order_ - 1; l >= 0; --l) {
        idx[l] = static_cast<int>(key % static_cast<Key>(dim_));
        key /= static_cast<Key>(dim_);
    }
}

Scalar Tensor::coeff(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != order_) throw Error(ErrorKind::OrderMismatch, "index length");
    const Key k = encode(idx.data());
    auto it = std::lower_bound(terms_.begin(), terms_.end(), k, [](const auto& t, Key key) { return t.first < key; });
    if (it != terms_.end() && it->first == k) return it->second;
    return {};
}

Vec Tensor::to_vec() const {
    if (order_ != 1) throw Error(ErrorKind::OrderMismatch, "to_vec needs an order-1 tensor");
    Vec v(static_cast<std::size_t>(dim_));
    for (const auto& [k, c] : terms_) v[k] = c;
    return v;
}

Mat Tensor::to_mat() const {
    if (order_ != 2) throw Error(ErrorKind::OrderMismatch, "to_mat needs an order-2 tensor");
    Mat m(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
    for (const auto& [k, c] : terms_) m(k / static_cast<Key>(dim_), k % static_cast<Key>(dim_)) = c;
    return m;
}

static void check_same_shape(const Tensor& a, const Tensor& b) {
    if (a.order() != b.order()) throw Error(ErrorKind::OrderMismatch, "tensor orders differ");
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "tensor dimensions differ");
}

Tensor Tensor::operator+(const Tensor& b) const {
    check_same_shape(*this, b);
    TensorBuilder out(order_, dim_);
    out.add(*this);
    out.add(b);
    return out.build();
}

Tensor Tensor::operator-(const Tensor& b) const {
    check_same_shape(*this, b);
    TensorBuilder out(order_, dim_);
    out.add(*this);
    out.add(b, Scalar(-1));
    return out.build();
}

Tensor Tensor::scaled(const Scalar& s) const {
    TensorBuilder out(order_, dim_);
    out.add(*this, s);
    return out.build();
}

TensorBuilder::TensorBuilder(int order, int dim) : proto_(order, dim) {}

Key TensorBuilder::encode(const int* idx) const { return proto_.encode(idx); }

void TensorBuilder::add(const int* idx, const Scalar& c) {
    if (!c.is_zero()) pending_.emplace_back(proto_.encode(idx), c);
}

void TensorBuilder::add_key(Key key, const Scalar& c) {
    if (!c.is_zero()) pending_.emplace_back(key, c);
}

void TensorBuilder::add(const Tensor& t, const Scalar& c) {
    check_same_shape(proto_, t);
    if (c.is_zero()) return;
    for (const auto& [k, v] : t.terms()) pending_.emplace_back(k, c.is_one() ? v : v * c);
}

Tensor TensorBuilder::build() {
    std::sort(pending_.begin(), pending_.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Tensor t = proto_;
    for (std::size_t i = 0; i < pending_.size();) {
        std::size_t j = i + 1;
        Scalar sum = std::move(pending_[i].second);
        while (j < pending_.size() && pending_[j].first == pending_[i].first) sum += pending_[j++].second;
        if (!sum.is_zero()) t.terms_.emplace_back(pending_[i].first, std::move(sum));
        i = j;
    }
    pending_.clear();
    return t;
}

// ---------------------------------------------------------------------------

Tensor outer(const Tensor& a, const Tensor& b) {
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "outer product of different dimensions");
    TensorBuilder out(a.order() + b.order(), a.dim());
    Key shift = 1;
    for (int l = 0; l < b.order(); ++l) shift *= static_cast<Key>(b.dim());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add_key(ka * shift + kb, ca * cb);
    return out.build();
}

Tensor permute(const Tensor& t, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != t.order()) throw Error(ErrorKind::OrderMismatch, "permutation length");
    std::vector<bool> seen(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= t.order() || seen[static_cast<std::size_t>(p)])
            throw Error(ErrorKind::SlotOutOfRange, "not a permutation");
        seen[static_cast<std::size_t>(p)] = true;
    }
    TensorBuilder out(t.order(), t.dim());
    Index in{}, o{};
    for (const auto& [k, c] : t.terms()) {
        t.decode(k, in.data());
        for (std::size_t l = 0; l < perm.size(); ++l) o[l] = in[static_cast<std::size_t>(perm[l])];
        out.add(o.data(), c);
    }
    return out.build();
}

static void check_slot(const Tensor& t, int slot) {
    if (slot < 0 || slot >= t.order())
        throw Error(ErrorKind::SlotOutOfRange, "slot " + std::to_string(slot) + " of an order-" + std::to_string(t.order()) + " tensor");
}

Tensor apply_map(const Tensor& t, int slot, const Mat& m) {
    check_slot(t, slot);
    const auto d = static_cast<std::size_t>(t.dim());
    if (m.rows() != d || m.cols() != d) throw Error(ErrorKind::DimensionMismatch, "slot map size");
    // columns of m as sparse lists
    std::vector<std::vector<std::pair<int, Scalar>>> cols(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t i = 0; i < d; ++i)
            if (!m(i, j).is_zero()) cols[j].emplace_back(static_cast<int>(i), m(i, j));
    TensorBuilder out(t.order(), t.dim());
    Index idx{};
    for (const auto& [k, c] : t.terms()) {
        t.decode(k, idx.data());
        const int j = idx[static_cast<std::size_t>(slot)];
        for (const auto& [i, v] : cols[static_cast<std::size_t>(j)]) {
            idx[static_cast<std::size_t>(slot)] = i;
            out.add(idx.data(), c * v);
        }
    }
    return out.build();
}

Tensor contract(const Tensor& t, int slot, const Vec& form) {
    check_slot(t, slot);
    if (form.size() != static_cast<std::size_t>(t.dim())) throw Error(ErrorKind::DimensionMismatch, "functional size");
    TensorBuilder out(t.order() - 1, t.dim());
    Index idx{}, o{};
    for (const auto& [k, c] : t.terms()) {
        t.decode(k, idx.data());
        const Scalar& w = form[static_cast<std::size_t>(idx[static_cast<std::size_t>(slot)])];
        if (w.is_zero()) continue;
        int n = 0;
        for (int l = 0; l < t.order(); ++l)
            if (l != slot) o[static_cast<std::size_t>(n++)] = idx[static_cast<std::size_t>(l)];
        out.add(o.data(), c * w);
    }
    return out.build();
}

Scalar as_scalar(const Tensor& t) {
    if (t.order() != 0) throw Error(ErrorKind::OrderMismatch, "not a fully contracted tensor");
    return t.terms().empty() ? Scalar() : t.terms()[0].second;
}

Tensor tensor_contract(const Tensor& t, const std::vector<SlotOp>& ops) {
    std::vector<bool> seen(static_cast<std::size_t>(t.order()), false);
    for (const auto& op : ops) {
        check_slot(t, op.slot);
        if (seen[static_cast<std::size_t>(op.slot)]) throw Error(ErrorKind::SlotOutOfRange, "slot listed twice");
        seen[static_cast<std::size_t>(op.slot)] = true;
        if (op.map.has_value() == op.form.has_value())
            throw Error(ErrorKind::MalformedInput, "slot operation needs exactly one of map or form");
    }
    Tensor r = t;
    for (const auto& op : ops)
        if (op.map) r = apply_map(r, op.slot, *op.map);
    // functionals from the highest slot down so earlier slot numbers stay valid
    std::vector<const SlotOp*> forms;
    for (const auto& op : ops)
        if (op.form) forms.push_back(&op);
    std::sort(forms.begin(), forms.end(), [](auto a, auto b) { return a->slot > b->slot; });
    for (auto op : forms) r = contract(r, op->slot, *op->form);
    return r;
}

}  // namespace qhopf
