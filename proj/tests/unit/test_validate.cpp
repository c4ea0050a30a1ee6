#include "doctest.h"
#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/validate.hpp"

#include "../common/mutations.hpp"

using namespace qhopf;

TEST_CASE("single constant mutations of h8+ are detected") {
    const auto muts = testing::single_constant_mutations(make_h8(1));
    CHECK(muts.size() == 20);
    for (const auto& [what, p] : muts) {
        CAPTURE(what);
        bool detected = false;
        try {
            const auto r = validate(QuasiHopfAlgebra(p));
            detected = !r.ok();
            if (detected) CHECK(!r.first_failure()->witness.empty());
        } catch (const Error&) {
            detected = true;  // rejected on load
        }
        CHECK(detected);
    }
}

TEST_CASE("strict R checks need the flag") {
    auto p = semion(2);
    ValidateOptions strict;
    strict.strict_r = true;
    const QuasiHopfAlgebra a(p);
    CHECK(validate(a).ok());
    const auto r = validate(a, strict);
    REQUIRE(!r.ok());
    CHECK(r.first_failure()->name.rfind("hexagon", 0) == 0);
}

TEST_CASE("broken R-matrices are rejected") {
    {
        auto p = semion(1);
        const QuasiHopfAlgebra a(p);
        p.r_matrix_inv = a.unit_tensor(2);  // not the inverse
        CHECK(!validate(QuasiHopfAlgebra(p)).ok());
    }
    {
        // 1 (x) x does not intertwine Delta and Delta^op
        auto p = wrap_hopf(sweedler());
        const QuasiHopfAlgebra a(p);
        p.r_matrix = a.unit_tensor(2) + outer(a.elem(a.one()), a.elem(a.basis(1)));
        p.r_matrix_inv = a.unit_tensor(2) - outer(a.elem(a.one()), a.elem(a.basis(1)));
        const auto r = validate(QuasiHopfAlgebra(p));
        CHECK(!r.ok());
    }
}
