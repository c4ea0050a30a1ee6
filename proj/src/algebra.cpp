#include "qhopf/algebra.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

void check_vec(const Vec& v, int d, const std::string& what) {
    if (v.size() != static_cast<std::size_t>(d))
        throw Error(ErrorKind::DimensionMismatch, what + " has length " + std::to_string(v.size()) + ", expected " + std::to_string(d));
}

void check_tensor(const Tensor& t, int order, int d, const std::string& what) {
    if (t.order() != order) throw Error(ErrorKind::OrderMismatch, what + " must have order " + std::to_string(order));
    if (t.dim() != d) throw Error(ErrorKind::DimensionMismatch, what + " has the wrong dimension");
}

// Accumulates a sparse linear combination in a dense scratch array.
class Accumulator {
public:
    explicit Accumulator(int d) : acc_(static_cast<std::size_t>(d)), used_(static_cast<std::size_t>(d), false) {}
    void add(int i, const Scalar& c) {
        auto u = static_cast<std::size_t>(i);
        if (!used_[u]) {
            used_[u] = true;
            touched_.push_back(i);
            acc_[u] = c;
        } else {
            acc_[u] += c;
        }
    }
    SparseElem take() {
        std::sort(touched_.begin(), touched_.end());
        SparseElem out;
        for (int i : touched_) {
            auto u = static_cast<std::size_t>(i);
            if (!acc_[u].is_zero()) out.emplace_back(i, std::move(acc_[u]));
            acc_[u] = Scalar();
            used_[u] = false;
        }
        touched_.clear();
        return out;
    }

private:
    Vec acc_;
    std::vector<bool> used_;
    std::vector<int> touched_;
};

std::vector<SparseElem> mult_table(const Tensor& mult, int d) {
    std::vector<SparseElem> table(static_cast<std::size_t>(d * d));
    int idx[3];
    for (const auto& [k, c] : mult.terms()) {
        mult.decode(k, idx);
        table[static_cast<std::size_t>(idx[0] * d + idx[1])].emplace_back(idx[2], c);
    }
    return table;
}

SparseElem mul_with(const std::vector<SparseElem>& table, int d, const SparseElem& a, const SparseElem& b) {
    if (a.empty() || b.empty()) return {};
    if (a.size() == 1 && b.size() == 1) {
        const auto& e = table[static_cast<std::size_t>(a[0].first * d + b[0].first)];
        const Scalar c = a[0].second * b[0].second;
        SparseElem out;
        out.reserve(e.size());
        for (const auto& [k, v] : e) out.emplace_back(k, c.is_one() ? v : v * c);
        return out;
    }
    Accumulator acc(d);
    for (const auto& [i, x] : a)
        for (const auto& [j, y] : b) {
            const Scalar xy = x * y;
            for (const auto& [k, v] : table[static_cast<std::size_t>(i * d + j)]) acc.add(k, v * xy);
        }
    return acc.take();
}

Tensor slotwise(const Tensor& a, const Tensor& b, const std::vector<SparseElem>& table) {
    if (a.order() != b.order()) throw Error(ErrorKind::OrderMismatch, "slotwise product of different orders");
    if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "slotwise product of different dimensions");
    const int n = a.order();
    const int d = a.dim();
    TensorBuilder out(n, d);
    Index ia{}, ib{}, io{};
    std::vector<const SparseElem*> legs(static_cast<std::size_t>(n));
    for (const auto& [ka, ca] : a.terms()) {
        a.decode(ka, ia.data());
        for (const auto& [kb, cb] : b.terms()) {
            b.decode(kb, ib.data());
            bool zero = false;
            for (int l = 0; l < n && !zero; ++l) {
                legs[static_cast<std::size_t>(l)] = &table[static_cast<std::size_t>(ia[static_cast<std::size_t>(l)] * d + ib[static_cast<std::size_t>(l)])];
                zero = legs[static_cast<std::size_t>(l)]->empty();
            }
            if (zero) continue;
            const Scalar c = ca * cb;
            // odometer over the legs
            std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
            while (true) {
                Scalar v = c;
                for (int l = 0; l < n; ++l) {
                    const auto& [k, s] = (*legs[static_cast<std::size_t>(l)])[pos[static_cast<std::size_t>(l)]];
                    io[static_cast<std::size_t>(l)] = k;
                    if (!s.is_one()) v *= s;
                }
                out.add(io.data(), v);
                int l = n - 1;
                while (l >= 0 && ++pos[static_cast<std::size_t>(l)] == legs[static_cast<std::size_t>(l)]->size()) pos[static_cast<std::size_t>(l--)] = 0;
                if (l < 0) break;
            }
        }
    }
    return out.build();
}

}  // namespace

QuasiHopfAlgebra::QuasiHopfAlgebra(Presentation p) : p_(std::move(p)) {
    const int d = p_.dim;
    if (d < 1) throw Error(ErrorKind::MalformedInput, "dimension must be positive");
    if (p_.basis.empty()) {
        for (int i = 0; i < d; ++i) p_.basis.push_back("e" + std::to_string(i));
    }
    if (p_.basis.size() != static_cast<std::size_t>(d)) throw Error(ErrorKind::DimensionMismatch, "basis label count");
    check_vec(p_.unit, d, "unit");
    check_vec(p_.counit, d, "counit");
    check_vec(p_.alpha, d, "alpha");
    check_vec(p_.beta, d, "beta");
    check_tensor(p_.mult, 3, d, "mult");
    check_tensor(p_.coproduct, 3, d, "coproduct");
    check_tensor(p_.coassociator, 3, d, "coassociator");
    check_tensor(p_.coassociator_inv, 3, d, "coassociator_inv");
    if (p_.antipode.rows() != static_cast<std::size_t>(d) || p_.antipode.cols() != static_cast<std::size_t>(d))
        throw Error(ErrorKind::DimensionMismatch, "antipode matrix size");
    if (p_.pivot) check_vec(*p_.pivot, d, "pivot");
    if (p_.ribbon) check_vec(*p_.ribbon, d, "ribbon");
    if (p_.modulus_hint) check_vec(*p_.modulus_hint, d, "modulus_hint");
    if (p_.r_matrix) check_tensor(*p_.r_matrix, 2, d, "r_matrix");
    if (p_.r_matrix_inv) check_tensor(*p_.r_matrix_inv, 2, d, "r_matrix_inv");
    if (p_.r_matrix.has_value() != p_.r_matrix_inv.has_value())
        throw Error(ErrorKind::MalformedInput, "r_matrix and r_matrix_inv must be given together");
    if (p_.omega_hat) check_tensor(*p_.omega_hat, 2, d, "omega_hat");

    try {
        s_inv_ = p_.antipode.inverse();
    } catch (const Error&) {
        throw Error(ErrorKind::MalformedInput, "antipode is not invertible");
    }
    mul_ = mult_table(p_.mult, d);
    delta_.resize(static_cast<std::size_t>(d));
    int idx[3];
    for (const auto& [k, c] : p_.coproduct.terms()) {
        p_.coproduct.decode(k, idx);
        delta_[static_cast<std::size_t>(idx[0])].push_back({{idx[1], idx[2]}, c});
    }
    if (p_.pivot) pivot_inv_ = inverse(*p_.pivot);
}

const Vec& QuasiHopfAlgebra::pivot() const {
    if (!p_.pivot) throw Error(ErrorKind::NoPivot, p_.name + " has no pivot");
    return *p_.pivot;
}

const Vec& QuasiHopfAlgebra::pivot_inv() const {
    if (!p_.pivot) throw Error(ErrorKind::NoPivot, p_.name + " has no pivot");
    if (!pivot_inv_) throw Error(ErrorKind::MalformedInput, "pivot is not invertible");
    return *pivot_inv_;
}

const Tensor& QuasiHopfAlgebra::r_matrix() const {
    if (!p_.r_matrix) throw Error(ErrorKind::NoRMatrix, p_.name + " has no R-matrix");
    return *p_.r_matrix;
}

const Tensor& QuasiHopfAlgebra::r_matrix_inv() const {
    if (!p_.r_matrix_inv) throw Error(ErrorKind::NoRMatrix, p_.name + " has no R-matrix");
    return *p_.r_matrix_inv;
}

SparseElem QuasiHopfAlgebra::sparse(const Vec& a) const {
    SparseElem s;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero()) s.emplace_back(static_cast<int>(i), a[i]);
    return s;
}

SparseElem QuasiHopfAlgebra::mul_sparse(const SparseElem& a, const SparseElem& b) const {
    return mul_with(mul_, dim(), a, b);
}

Vec QuasiHopfAlgebra::mul(const Vec& a, const Vec& b) const {
    check_vec(a, dim(), "factor");
    check_vec(b, dim(), "factor");
    Vec r = zero();
    for (const auto& [k, c] : mul_sparse(sparse(a), sparse(b))) r[static_cast<std::size_t>(k)] = c;
    return r;
}

Vec QuasiHopfAlgebra::mul(const std::vector<Vec>& factors) const {
    Vec r = one();
    for (const auto& f : factors) r = mul(r, f);
    return r;
}

Mat QuasiHopfAlgebra::left_mult_matrix(const Vec& a) const {
    std::vector<Vec> cols;
    for (int j = 0; j < dim(); ++j) cols.push_back(mul(a, basis(j)));
    return Mat::from_columns(cols);
}

Mat QuasiHopfAlgebra::right_mult_matrix(const Vec& a) const {
    std::vector<Vec> cols;
    for (int j = 0; j < dim(); ++j) cols.push_back(mul(basis(j), a));
    return Mat::from_columns(cols);
}

std::optional<Vec> QuasiHopfAlgebra::inverse(const Vec& a) const {
    auto x = solve(left_mult_matrix(a), one());
    if (!x) return std::nullopt;
    if (mul(*x, a) != one()) return std::nullopt;
    return x;
}

Tensor QuasiHopfAlgebra::delta(const Vec& a) const { return delta_slot(elem(a), 0); }

Tensor QuasiHopfAlgebra::delta_iterated(const Vec& a, const std::string& pattern) const {
    std::string s;
    for (char c : pattern)
        if (c != ' ') s.push_back(c);
    // parse into (leaves, children) recursively, expanding as we go
    std::size_t pos = 0;
    std::function<int(Tensor&, int)> expand = [&](Tensor& t, int slot) -> int {
        if (pos >= s.size()) throw Error(ErrorKind::Parse, "unterminated bracketing '" + pattern + "'");
        if (s[pos] == '.') {
            ++pos;
            return 1;
        }
        if (s[pos] != '(') throw Error(ErrorKind::Parse, "bad bracketing '" + pattern + "'");
        ++pos;
        t = delta_slot(t, slot);
        // the left subtree may grow, shifting the right leg; track it
        const int left = expand(t, slot);
        const int right = expand(t, slot + left);
        if (pos >= s.size() || s[pos] != ')') throw Error(ErrorKind::Parse, "bad bracketing '" + pattern + "'");
        ++pos;
        return left + right;
    };
    Tensor t = elem(a);
    expand(t, 0);
    if (pos != s.size()) throw Error(ErrorKind::Parse, "trailing characters in '" + pattern + "'");
    return t;
}

Vec QuasiHopfAlgebra::hook_form_left(const Vec& h, const Vec& f) const {
    Vec r = zero();
    for (int x = 0; x < dim(); ++x) r[static_cast<std::size_t>(x)] = dot(f, mul(basis(x), h));
    return r;
}

Vec QuasiHopfAlgebra::hook_form_right(const Vec& f, const Vec& h) const {
    Vec r = zero();
    for (int x = 0; x < dim(); ++x) r[static_cast<std::size_t>(x)] = dot(f, mul(h, basis(x)));
    return r;
}

Vec QuasiHopfAlgebra::hook_elem_left(const Vec& f, const Vec& h) const {
    return contract(delta(h), 1, f).to_vec();
}

Vec QuasiHopfAlgebra::hook_elem_right(const Vec& h, const Vec& f) const {
    return contract(delta(h), 0, f).to_vec();
}

Tensor QuasiHopfAlgebra::unit_tensor(int order) const {
    Tensor t = elem(one());
    for (int i = 1; i < order; ++i) t = outer(t, elem(one()));
    return t;
}

Tensor QuasiHopfAlgebra::product(const Tensor& a, const Tensor& b) const { return slotwise(a, b, mul_); }

Tensor QuasiHopfAlgebra::product(const std::vector<Tensor>& factors) const {
    if (factors.empty()) throw Error(ErrorKind::OrderMismatch, "empty product");
    Tensor r = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i) r = product(r, factors[i]);
    return r;
}

Tensor QuasiHopfAlgebra::delta_slot(const Tensor& t, int slot) const {
    if (slot < 0 || slot >= t.order()) throw Error(ErrorKind::SlotOutOfRange, "coproduct slot");
    TensorBuilder out(t.order() + 1, t.dim());
    Index in{}, o{};
    const auto s = static_cast<std::size_t>(slot);
    for (const auto& [k, c] : t.terms()) {
        t.decode(k, in.data());
        for (std::size_t l = 0; l < s; ++l) o[l] = in[l];
        for (int l = slot + 1; l < t.order(); ++l) o[static_cast<std::size_t>(l + 1)] = in[static_cast<std::size_t>(l)];
        for (const auto& [jk, v] : delta_[static_cast<std::size_t>(in[s])]) {
            o[s] = jk.first;
            o[s + 1] = jk.second;
            out.add(o.data(), c * v);
        }
    }
    return out.build();
}

Tensor QuasiHopfAlgebra::assemble(const Tensor& t, const std::vector<Word>& words) const {
    const int d = dim();
    std::vector<int> uses(static_cast<std::size_t>(t.order()), 0);
    std::vector<std::vector<SparseElem>> consts(words.size());
    for (std::size_t w = 0; w < words.size(); ++w) {
        if (words[w].empty()) throw Error(ErrorKind::MalformedInput, "empty word");
        for (const auto& piece : words[w]) {
            if (piece.leg >= 0) {
                if (piece.leg >= t.order()) throw Error(ErrorKind::SlotOutOfRange, "word refers to a missing leg");
                ++uses[static_cast<std::size_t>(piece.leg)];
                consts[w].emplace_back();
            } else {
                check_vec(piece.element, d, "word constant");
                consts[w].push_back(sparse(piece.element));
            }
        }
    }
    for (int u : uses)
        if (u != 1) throw Error(ErrorKind::MalformedInput, "every leg must be used exactly once");

    const std::size_t n = words.size();
    TensorBuilder out(static_cast<int>(n), d);
    std::vector<std::unordered_map<Key, SparseElem>> cache(n);
    std::vector<const SparseElem*> res(n);
    Index in{}, o{};
    for (const auto& [k, c] : t.terms()) {
        t.decode(k, in.data());
        bool zero = false;
        for (std::size_t w = 0; w < n && !zero; ++w) {
            Key ck = 0;
            for (const auto& piece : words[w])
                if (piece.leg >= 0) ck = ck * static_cast<Key>(d) + static_cast<Key>(in[static_cast<std::size_t>(piece.leg)]);
            auto it = cache[w].find(ck);
            if (it == cache[w].end()) {
                SparseElem acc;
                bool first = true;
                for (std::size_t p = 0; p < words[w].size(); ++p) {
                    const auto& piece = words[w][p];
                    SparseElem f = piece.leg >= 0 ? SparseElem{{in[static_cast<std::size_t>(piece.leg)], Scalar(1)}} : consts[w][p];
                    acc = first ? std::move(f) : mul_sparse(acc, f);
                    first = false;
                    if (acc.empty()) break;
                }
                it = cache[w].emplace(ck, std::move(acc)).first;
            }
            res[w] = &it->second;
            zero = res[w]->empty();
        }
        if (zero) continue;
        std::vector<std::size_t> pos(n, 0);
        while (true) {
            Scalar v = c;
            for (std::size_t w = 0; w < n; ++w) {
                const auto& [i, s] = (*res[w])[pos[w]];
                o[w] = i;
                if (!s.is_one()) v *= s;
            }
            out.add(o.data(), v);
            std::size_t w = n;
            while (w > 0 && ++pos[w - 1] == res[w - 1]->size()) pos[--w] = 0;
            if (w == 0) break;
        }
    }
    return out.build();
}

AlgebraElement product(const AlgebraElement& a, const AlgebraElement& b) {
    if (!a.algebra || a.algebra != b.algebra) throw Error(ErrorKind::AlgebraMismatch, "elements of different algebras");
    return {a.algebra, a.algebra->mul(a.coeffs, b.coeffs)};
}

QuasiHopfAlgebra op_cop(const QuasiHopfAlgebra& a, Dual which) {
    const Presentation& p = a.presentation();
    Presentation q;
    q.field = p.field;
    q.dim = p.dim;
    q.basis = p.basis;
    q.unit = p.unit;
    q.counit = p.counit;
    q.antipode = a.Sinv_mat();
    if (which == Dual::Op) {
        q.name = p.name + "^op";
        q.mult = permute(p.mult, {1, 0, 2});
        q.coproduct = p.coproduct;
        q.coassociator = p.coassociator_inv;
        q.coassociator_inv = p.coassociator;
        q.alpha = a.Sinv(p.beta);
        q.beta = a.Sinv(p.alpha);
    } else {
        q.name = p.name + "^cop";
        q.mult = p.mult;
        q.coproduct = permute(p.coproduct, {0, 2, 1});
        q.coassociator = permute(p.coassociator_inv, {2, 1, 0});
        q.coassociator_inv = permute(p.coassociator, {2, 1, 0});
        q.alpha = a.Sinv(p.alpha);
        q.beta = a.Sinv(p.beta);
    }
    return QuasiHopfAlgebra(std::move(q));
}

Tensor tensor_mul(const Tensor& a, const Tensor& b, const Tensor& mult) {
    if (mult.order() != 3) throw Error(ErrorKind::OrderMismatch, "multiplication tensor must have order 3");
    if (mult.dim() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "multiplication tensor dimension");
    return slotwise(a, b, mult_table(mult, mult.dim()));
}

}  // namespace qhopf
