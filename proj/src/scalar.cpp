#include "qhopf/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

#include "qhopf/error.hpp"

namespace qhopf {

namespace {

using Poly = std::vector<long>;

// Exact division of a by the monic polynomial b.
Poly divide_monic(Poly a, const Poly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) return {0};
    Poly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        const long c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    return q;
}

Poly cyclotomic(int n, std::map<int, Poly>& cache) {
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    Poly p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) p = divide_monic(p, cyclotomic(d, cache));
    cache[n] = p;
    return p;
}

}  // namespace

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

CyclotomicField::CyclotomicField(int n) : n_(n), phi_(euler_phi(n)) {
    std::map<int, Poly> cache;
    cyclo_ = cyclotomic(n, cache);
    const int count = std::max(n, 2 * phi_);
    powers_.reserve(static_cast<std::size_t>(count));
    Poly cur(static_cast<std::size_t>(phi_), 0);
    cur[0] = 1;
    for (int k = 0; k < count; ++k) {
        powers_.push_back(cur);
        // multiply by z, then fold the z^phi term back using the cyclotomic relation
        Poly next(static_cast<std::size_t>(phi_), 0);
        const long top = cur[static_cast<std::size_t>(phi_ - 1)];
        for (int j = phi_ - 1; j > 0; --j) next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
        if (phi_ == 1) next[0] = 0;
        if (top != 0)
            for (int j = 0; j < phi_; ++j) next[static_cast<std::size_t>(j)] -= top * cyclo_[static_cast<std::size_t>(j)];
        cur = std::move(next);
    }
}

const CyclotomicField& CyclotomicField::get(int conductor) {
    if (conductor < 1) throw Error(ErrorKind::MalformedInput, "conductor must be >= 1");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicField>> registry;
    std::lock_guard lock(mutex);
    auto& slot = registry[conductor];
    if (!slot) slot.reset(new CyclotomicField(conductor));
    return *slot;
}

const std::vector<long>& CyclotomicField::power(long k) const {
    long r = k % n_;
    if (r < 0) r += n_;
    return powers_[static_cast<std::size_t>(r)];
}

std::string CyclotomicField::name() const { return "Q(zeta_" + std::to_string(n_) + ")"; }

std::string FieldSpec::name() const { return field().name(); }

FieldSpec FieldSpec::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s == "Q") return {1};
    const std::string prefix = "Q(zeta_";
    if (s.rfind(prefix, 0) != 0 || s.back() != ')')
        throw Error(ErrorKind::Parse, "bad field spec '" + std::string(text) + "'");
    const std::string digits = s.substr(prefix.size(), s.size() - prefix.size() - 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit))
        throw Error(ErrorKind::Parse, "bad field spec '" + std::string(text) + "'");
    return {std::stoi(digits)};
}

// ---------------------------------------------------------------------------

Scalar::Scalar(long value) {
    if (value != 0) c_.emplace_back(value);
}

Scalar::Scalar(const mpq_class& value) {
    if (sgn(value) != 0) {
        c_.push_back(value);
        c_.back().canonicalize();
    }
}

Scalar::Scalar(long num, long den) {
    if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    if (sgn(q) != 0) c_.push_back(q);
}

Scalar::Scalar(const CyclotomicField* field, std::vector<mpq_class> coeffs)
    : field_(field), c_(std::move(coeffs)) {
    canonicalize();
}

void Scalar::canonicalize() {
    for (const auto& c : c_)
        if (sgn(c) != 0) return;
    c_.clear();
}

Scalar Scalar::root(const CyclotomicField& field, long k) {
    const auto& p = field.power(k);
    std::vector<mpq_class> c(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) c[i] = p[i];
    return Scalar(&field, std::move(c));
}

Scalar Scalar::from_coeffs(const CyclotomicField& field, const std::vector<mpq_class>& coeffs) {
    const int phi = field.degree();
    std::vector<mpq_class> c(static_cast<std::size_t>(phi));
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (sgn(coeffs[k]) == 0) continue;
        if (static_cast<int>(k) < phi) {
            c[k] += coeffs[k];
        } else {
            const auto& p = field.power(static_cast<long>(k));
            for (int j = 0; j < phi; ++j)
                if (p[static_cast<std::size_t>(j)] != 0) c[static_cast<std::size_t>(j)] += coeffs[k] * p[static_cast<std::size_t>(j)];
        }
    }
    return Scalar(&field, std::move(c));
}

bool Scalar::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

bool Scalar::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return false;
    return true;
}

const mpq_class& Scalar::rational_value() const {
    static const mpq_class zero_q(0);
    if (!is_rational()) throw Error(ErrorKind::FieldMismatch, "scalar is not rational: " + to_string());
    return c_.empty() ? zero_q : c_[0];
}

std::vector<mpq_class> Scalar::coeffs() const {
    if (c_.empty()) return std::vector<mpq_class>(static_cast<std::size_t>(field_->degree()));
    return c_;
}

const CyclotomicField* Scalar::common_field(const Scalar& a, const Scalar& b) {
    if (a.field_ == b.field_) return a.field_;
    if (a.c_.empty() || a.field_->conductor() == 1) return b.field_;
    if (b.c_.empty() || b.field_->conductor() == 1) return a.field_;
    throw Error(ErrorKind::FieldMismatch, a.field_->name() + " vs " + b.field_->name());
}

std::vector<mpq_class> Scalar::coeffs_in(const CyclotomicField& target) const {
    if (field_ == &target) return c_.empty() ? std::vector<mpq_class>(static_cast<std::size_t>(target.degree())) : c_;
    // only rationals and zero reach here
    std::vector<mpq_class> c(static_cast<std::size_t>(target.degree()));
    if (!c_.empty()) c[0] = c_[0];
    return c;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    if (other.c_.empty()) return *this;
    if (c_.empty()) {
        const CyclotomicField* f = common_field(*this, other);
        *this = other;
        if (field_ != f) {
            c_ = coeffs_in(*f);
            field_ = f;
        }
        return *this;
    }
    const CyclotomicField* f = common_field(*this, other);
    if (field_ != f) {
        c_ = coeffs_in(*f);
        field_ = f;
    }
    if (other.field_ == f) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
    } else {
        c_[0] += other.c_[0];
    }
    canonicalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.c_.empty() || b.c_.empty()) {
        Scalar z;
        z.field_ = Scalar::common_field(a, b);
        return z;
    }
    const CyclotomicField* f = Scalar::common_field(a, b);
    if (a.field_ != f) {  // a is rational
        Scalar r = b;
        for (auto& c : r.c_) c *= a.c_[0];
        return r;
    }
    if (b.field_ != f) {
        Scalar r = a;
        for (auto& c : r.c_) c *= b.c_[0];
        return r;
    }
    const int phi = f->degree();
    if (phi == 1) {
        Scalar r = a;
        r.c_[0] *= b.c_[0];
        return r;
    }
    std::vector<mpq_class> prod(static_cast<std::size_t>(2 * phi - 1));
    mpq_class t;
    for (int i = 0; i < phi; ++i) {
        if (sgn(a.c_[static_cast<std::size_t>(i)]) == 0) continue;
        for (int j = 0; j < phi; ++j) {
            if (sgn(b.c_[static_cast<std::size_t>(j)]) == 0) continue;
            mpq_mul(t.get_mpq_t(), a.c_[static_cast<std::size_t>(i)].get_mpq_t(), b.c_[static_cast<std::size_t>(j)].get_mpq_t());
            prod[static_cast<std::size_t>(i + j)] += t;
        }
    }
    std::vector<mpq_class> out(prod.begin(), prod.begin() + phi);
    for (int k = phi; k < 2 * phi - 1; ++k) {
        const auto& pk = prod[static_cast<std::size_t>(k)];
        if (sgn(pk) == 0) continue;
        const auto& red = f->power(k);
        for (int j = 0; j < phi; ++j) {
            const long r = red[static_cast<std::size_t>(j)];
            if (r == 0) continue;
            if (r == 1) out[static_cast<std::size_t>(j)] += pk;
            else if (r == -1) out[static_cast<std::size_t>(j)] -= pk;
            else out[static_cast<std::size_t>(j)] += pk * r;
        }
    }
    return Scalar(f, std::move(out));
}

Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

Scalar& Scalar::operator/=(const Scalar& other) { return *this = *this * other.inverse(); }

Scalar Scalar::inverse() const {
    if (c_.empty()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    const int phi = field_->degree();
    int nonzero = 0, at = 0;
    for (int i = 0; i < phi; ++i)
        if (sgn(c_[static_cast<std::size_t>(i)]) != 0) {
            ++nonzero;
            at = i;
        }
    if (nonzero == 1) {
        mpq_class inv = 1 / c_[static_cast<std::size_t>(at)];
        inv.canonicalize();
        Scalar r = root(*field_, -at);
        for (auto& c : r.c_) c *= inv;
        return r;
    }
    // Solve (multiplication-by-this) x = 1 over Q.
    std::vector<std::vector<mpq_class>> m(static_cast<std::size_t>(phi), std::vector<mpq_class>(static_cast<std::size_t>(phi) + 1));
    for (int j = 0; j < phi; ++j) {
        const Scalar col = *this * root(*field_, j);
        const auto cc = col.coeffs();
        for (int i = 0; i < phi; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cc[static_cast<std::size_t>(i)];
    }
    m[0][static_cast<std::size_t>(phi)] = 1;
    for (int col = 0; col < phi; ++col) {
        int piv = col;
        while (piv < phi && sgn(m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]) == 0) ++piv;
        if (piv == phi) throw Error(ErrorKind::InternalInconsistency, "singular multiplication matrix");
        std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
        auto& prow = m[static_cast<std::size_t>(col)];
        const mpq_class pv = prow[static_cast<std::size_t>(col)];
        for (auto& v : prow) v /= pv;
        for (int r = 0; r < phi; ++r) {
            if (r == col) continue;
            auto& row = m[static_cast<std::size_t>(r)];
            const mpq_class fct = row[static_cast<std::size_t>(col)];
            if (sgn(fct) == 0) continue;
            for (int c = col; c <= phi; ++c) row[static_cast<std::size_t>(c)] -= fct * prow[static_cast<std::size_t>(c)];
        }
    }
    std::vector<mpq_class> x(static_cast<std::size_t>(phi));
    for (int i = 0; i < phi; ++i) x[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(phi)];
    return Scalar(field_, std::move(x));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.c_.empty() || b.c_.empty()) return a.c_.empty() && b.c_.empty();
    if (a.field_ == b.field_) return a.c_ == b.c_;
    const int n = lcm_conductor(a.field_->conductor(), b.field_->conductor());
    const auto& f = CyclotomicField::get(n);
    return a.embed(f).c_ == b.embed(f).c_;
}

Scalar Scalar::embed(const CyclotomicField& into) const {
    const int m = field_->conductor();
    const int n = into.conductor();
    if (n % m != 0)
        throw Error(ErrorKind::NotASubfield, field_->name() + " is not a subfield of " + into.name());
    if (c_.empty()) return Scalar(&into, {});
    const long step = n / m;
    std::vector<mpq_class> raw(static_cast<std::size_t>(into.degree()));
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        const auto& p = into.power(static_cast<long>(j) * step);
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) raw[i] += c_[j] * p[i];
    }
    return Scalar(&into, std::move(raw));
}

Scalar Scalar::conjugate_root(long k) const {
    const int n = field_->conductor();
    if (std::gcd(static_cast<long>(n), k < 0 ? -k : k) != 1)
        throw Error(ErrorKind::NotCoprime, "gcd(" + std::to_string(k) + ", " + std::to_string(n) + ") != 1");
    if (c_.empty()) return *this;
    std::vector<mpq_class> raw(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        const auto& p = field_->power(static_cast<long>(j) * k);
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] != 0) raw[i] += c_[j] * p[i];
    }
    return Scalar(field_, std::move(raw));
}

std::string Scalar::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        const mpq_class& c = c_[k];
        if (sgn(c) == 0) continue;
        std::string term;
        const bool neg = sgn(c) < 0;
        const mpq_class mag = abs(c);
        if (k == 0) {
            term = mag.get_str();
        } else {
            const std::string zp = k == 1 ? "z" : "z^" + std::to_string(k);
            term = (mag == 1) ? zp : mag.get_str() + "*" + zp;
        }
        if (out.empty()) out = neg ? "-" + term : term;
        else out += (neg ? " - " : " + ") + term;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

// ---------------------------------------------------------------------------
// Parser: sum of terms  c | c*z^k | z^k | c*z, with c an integer or fraction.

namespace {

class ScalarParser {
public:
    ScalarParser(std::string_view text, const CyclotomicField& field) : field_(field) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
        original_ = std::string(text);
    }

    Scalar parse() {
        if (s_.empty()) fail("empty scalar");
        std::vector<mpq_class> coeffs(static_cast<std::size_t>(field_.conductor()));
        bool first = true;
        while (pos_ < s_.size()) {
            int sign = 1;
            if (s_[pos_] == '+' || s_[pos_] == '-') {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coef, power] = term();
            long p = power % field_.conductor();
            if (p < 0) p += field_.conductor();
            coeffs[static_cast<std::size_t>(p)] += sign * coef;
        }
        return Scalar::from_coeffs(field_, coeffs);
    }

private:
    std::pair<mpq_class, long> term() {
        mpq_class coef = 1;
        long power = 0;
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            coef = number();
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                mpz_class den = number();
                if (den == 0) throw Error(ErrorKind::DivisionByZero, "zero denominator in '" + original_ + "'");
                coef /= den;
                coef.canonicalize();
            }
            if (pos_ < s_.size() && s_[pos_] == '*') {
                ++pos_;
                power = zpow();
            }
        } else {
            power = zpow();
        }
        return {coef, power};
    }

    long zpow() {
        if (pos_ >= s_.size() || s_[pos_] != 'z') fail("expected 'z'");
        ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '^') {
            ++pos_;
            int sign = 1;
            if (pos_ < s_.size() && s_[pos_] == '-') {
                sign = -1;
                ++pos_;
            }
            return sign * number().get_si();
        }
        return 1;
    }

    mpz_class number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return mpz_class(s_.substr(start, pos_ - start));
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorKind::Parse, msg + " at position " + std::to_string(pos_) + " in '" + original_ + "'");
    }

    const CyclotomicField& field_;
    std::string s_;
    std::string original_;
    std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text, const CyclotomicField& field) {
    return ScalarParser(text, field).parse();
}

}  // namespace qhopf
