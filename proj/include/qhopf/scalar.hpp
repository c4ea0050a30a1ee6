#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qhopf {

/// The cyclotomic field Q(zeta_n). Instances are interned: there is exactly one
/// object per conductor, so fields compare by address.
class CyclotomicField {
public:
    static const CyclotomicField& get(int conductor);
    static const CyclotomicField& rationals() { return get(1); }

    int conductor() const noexcept { return n_; }
    /// Euler phi of the conductor, i.e. the number of stored coefficients.
    int degree() const noexcept { return phi_; }
    /// Coefficients of the n-th cyclotomic polynomial, constant term first.
    const std::vector<long>& cyclotomic_poly() const noexcept { return cyclo_; }
    /// z^k reduced modulo the cyclotomic polynomial, for any integer k.
    const std::vector<long>& power(long k) const;

    std::string name() const;

    CyclotomicField(const CyclotomicField&) = delete;
    CyclotomicField& operator=(const CyclotomicField&) = delete;

private:
    explicit CyclotomicField(int n);

    int n_;
    int phi_;
    std::vector<long> cyclo_;
    std::vector<std::vector<long>> powers_;  // z^0 .. z^(max(n, 2 phi) - 1)
};

/// Value description of a field, used in file formats.
struct FieldSpec {
    int conductor = 1;

    const CyclotomicField& field() const { return CyclotomicField::get(conductor); }
    std::string name() const;
    static FieldSpec parse(std::string_view text);
    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

int euler_phi(int n);
int lcm_conductor(int a, int b);

/// Exact element of Q(zeta_n), stored as a polynomial in z = zeta_n of degree
/// below phi(n). Zero has no stored coefficients; every non-zero value stores
/// exactly phi(n) canonical rationals, so equality is coefficientwise.
///
/// Rational scalars (conductor 1) combine with scalars of any field. Mixing two
/// different non-trivial fields is a FieldMismatch; use embed() first.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    explicit Scalar(const mpq_class& value);
    Scalar(long num, long den);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    /// zeta_n^k in Q(zeta_n).
    static Scalar root(const CyclotomicField& field, long k);
    static Scalar root(int conductor, long k) { return root(CyclotomicField::get(conductor), k); }
    /// Builds a value from raw (not necessarily reduced) coefficients of powers of z.
    static Scalar from_coeffs(const CyclotomicField& field, const std::vector<mpq_class>& coeffs);
    /// Parses "3/2 + 1/2*z^3" in the given field.
    static Scalar parse(std::string_view text, const CyclotomicField& field);

    const CyclotomicField& field() const noexcept { return *field_; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const;
    bool is_rational() const;
    /// Coefficients of z^0 .. z^(phi-1); all zeros for the zero scalar.
    std::vector<mpq_class> coeffs() const;
    const mpq_class& rational_value() const;

    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);
    Scalar operator-() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    /// Image under zeta_m -> zeta_n^(n/m); requires m | n.
    Scalar embed(const CyclotomicField& into) const;
    /// Galois automorphism zeta_n -> zeta_n^k; requires gcd(k, n) = 1.
    Scalar conjugate_root(long k) const;
    /// Complex conjugation (k = n - 1).
    Scalar conj() const { return conjugate_root(field_->conductor() - 1); }

    std::string to_string() const;

private:
    Scalar(const CyclotomicField* field, std::vector<mpq_class> coeffs);
    void canonicalize();
    static const CyclotomicField* common_field(const Scalar& a, const Scalar& b);
    std::vector<mpq_class> coeffs_in(const CyclotomicField& target) const;

    const CyclotomicField* field_ = &CyclotomicField::rationals();
    std::vector<mpq_class> c_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace qhopf
