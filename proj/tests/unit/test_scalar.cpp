#include <random>
#include <set>

#include "doctest.h"
#include "qhopf/error.hpp"
#include "qhopf/scalar.hpp"

using namespace qhopf;

namespace {

Scalar random_scalar(std::mt19937& rng, const CyclotomicField& f) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
    std::vector<mpq_class> c;
    for (int i = 0; i < f.degree(); ++i) {
        mpq_class q(num(rng), den(rng));
        q.canonicalize();
        c.push_back(q);
    }
    return Scalar::from_coeffs(f, c);
}

}  // namespace

TEST_CASE("roots of unity multiply and reduce") {
    const auto& q8 = CyclotomicField::get(8);
    const Scalar z = Scalar::root(q8, 1);
    CHECK(z * z == Scalar::root(q8, 2));
    CHECK((z * z).to_string() == "z^2");
    CHECK(Scalar::root(q8, 4) == Scalar(-1));
    CHECK(Scalar::root(q8, 4).to_string() == "-1");
    CHECK(Scalar::root(q8, -1) == Scalar::root(q8, 7));

    const auto& q4 = CyclotomicField::get(4);
    const Scalar i = Scalar::root(q4, 1);
    CHECK(Scalar(1, 2) * (Scalar(1) + i) + Scalar(1, 2) * (Scalar(1) - i) == Scalar(1));
}

TEST_CASE("cyclotomic polynomial vanishes at its root") {
    for (int n : {1, 2, 3, 4, 5, 6, 8, 9, 12, 15, 16}) {
        const auto& f = CyclotomicField::get(n);
        const auto& poly = f.cyclotomic_poly();
        CHECK(static_cast<int>(poly.size()) == f.degree() + 1);
        Scalar sum;
        for (std::size_t k = 0; k < poly.size(); ++k) sum += Scalar(poly[k]) * Scalar::root(f, static_cast<long>(k));
        CHECK(sum.is_zero());
    }
    CHECK(CyclotomicField::get(8).cyclotomic_poly() == std::vector<long>{1, 0, 0, 0, 1});
    CHECK(CyclotomicField::get(12).cyclotomic_poly() == std::vector<long>{1, 0, -1, 0, 1});
}

TEST_CASE("embedding") {
    const auto& q4 = CyclotomicField::get(4);
    const auto& q8 = CyclotomicField::get(8);
    CHECK(Scalar::root(q4, 1).embed(q8) == Scalar::root(q8, 2));
    CHECK(Scalar::root(q4, 1).embed(q8).to_string() == "z^2");
    CHECK(Scalar(3, 7).embed(q8) == Scalar(3, 7));
    CHECK(Scalar(3, 7).embed(q8).field().conductor() == 8);
    const Scalar one_plus = Scalar(1) + Scalar::root(CyclotomicField::get(2), 1);
    CHECK(one_plus.embed(q8).is_zero());
    CHECK_THROWS_AS(Scalar::root(q8, 1).embed(q4), Error);
    try {
        (void)Scalar::root(q8, 1).embed(CyclotomicField::get(12));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotASubfield);
    }
}

TEST_CASE("embedding is an injective homomorphism") {
    std::mt19937 rng(7);
    const auto& q6 = CyclotomicField::get(6);
    const auto& q12 = CyclotomicField::get(12);
    std::set<std::string> seen_in, seen_out;
    for (int k = 0; k < 1000; ++k) {
        const Scalar a = random_scalar(rng, q6), b = random_scalar(rng, q6);
        CHECK((a * b).embed(q12) == a.embed(q12) * b.embed(q12));
        CHECK((a + b).embed(q12) == a.embed(q12) + b.embed(q12));
        seen_in.insert(a.to_string());
        seen_out.insert(a.embed(q12).to_string());
    }
    CHECK(seen_in.size() == seen_out.size());
}

TEST_CASE("galois conjugation") {
    const auto& q8 = CyclotomicField::get(8);
    const Scalar z = Scalar::root(q8, 1);
    CHECK(z.conjugate_root(7) == Scalar::root(q8, 7));
    CHECK(z.conjugate_root(7) == z.inverse());
    CHECK(Scalar(5, 3).conjugate_root(3) == Scalar(5, 3));
    CHECK((Scalar(1) + z).conjugate_root(3) == Scalar(1) + Scalar::root(q8, 3));
    CHECK_THROWS_AS(z.conjugate_root(2), Error);
    try {
        (void)z.conjugate_root(4);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotCoprime);
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937 rng(11);
    for (int n : {1, 3, 4, 5, 8, 12}) {
        const auto& f = CyclotomicField::get(n);
        for (int k = 0; k < 60; ++k) {
            const Scalar a = random_scalar(rng, f), b = random_scalar(rng, f), c = random_scalar(rng, f);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        }
    }
}

TEST_CASE("errors on division and field mixing") {
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), Error);
    try {
        (void)Scalar(0).inverse();
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
    const Scalar a = Scalar::root(4, 1), b = Scalar::root(3, 1);
    try {
        (void)(a + b);
        FAIL("expected FieldMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
        CHECK(e.is_input_error());
    }
    // rationals combine with anything
    CHECK((a + Scalar(1, 2)).field().conductor() == 4);
    // equality across fields goes through a common field
    CHECK(Scalar::root(4, 1) == Scalar::root(8, 2));
    CHECK(Scalar::root(4, 1) != Scalar::root(3, 1));
}

TEST_CASE("text round trip") {
    const auto& q8 = CyclotomicField::get(8);
    for (const char* text : {"0", "1", "-1", "3/2 + 1/2*z^3", "z", "-z^2", "1/3 - 2*z + z^3", "-5/7*z"}) {
        const Scalar s = Scalar::parse(text, q8);
        CHECK(s.to_string() == text);
        CHECK(Scalar::parse(s.to_string(), q8) == s);
    }
    CHECK(Scalar::parse("z^4", q8) == Scalar(-1));
    CHECK(Scalar::parse("z^-1", q8) == Scalar::root(q8, 7));
    CHECK(Scalar::parse(" 1 + z ^ 2 ", q8) == Scalar(1) + Scalar::root(q8, 2));
    CHECK_THROWS_AS(Scalar::parse("1 +", q8), Error);
    CHECK_THROWS_AS(Scalar::parse("abc", q8), Error);
    CHECK_THROWS_AS(Scalar::parse("1/0", q8), Error);
    CHECK(FieldSpec::parse("Q(zeta_8)").conductor == 8);
    CHECK(FieldSpec{8}.name() == "Q(zeta_8)");
    CHECK_THROWS_AS(FieldSpec::parse("Q(zeta_)"), Error);
}

TEST_CASE("general inverse") {
    const auto& q5 = CyclotomicField::get(5);
    const Scalar a = Scalar(2) + Scalar::root(q5, 1) - Scalar(3, 4) * Scalar::root(q5, 3);
    CHECK(a * a.inverse() == Scalar(1));
    CHECK(a / a == Scalar(1));
}
