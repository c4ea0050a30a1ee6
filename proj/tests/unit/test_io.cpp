#include "doctest.h"
#include "qhopf/catalog.hpp"
#include "qhopf/error.hpp"
#include "qhopf/io.hpp"

using namespace qhopf;

namespace {

void same(const Presentation& a, const Presentation& b) {
    CHECK(a.name == b.name);
    CHECK(a.field == b.field);
    CHECK(a.dim == b.dim);
    CHECK(a.basis == b.basis);
    CHECK(a.unit == b.unit);
    CHECK(a.counit == b.counit);
    CHECK(a.mult == b.mult);
    CHECK(a.coproduct == b.coproduct);
    CHECK(a.coassociator == b.coassociator);
    CHECK(a.coassociator_inv == b.coassociator_inv);
    CHECK(a.antipode == b.antipode);
    CHECK(a.alpha == b.alpha);
    CHECK(a.beta == b.beta);
    CHECK(a.pivot == b.pivot);
    CHECK(a.r_matrix == b.r_matrix);
    CHECK(a.r_matrix_inv == b.r_matrix_inv);
    CHECK(a.ribbon == b.ribbon);
    CHECK(a.omega_hat == b.omega_hat);
}

std::string kind_of(const std::string& text) {
    try {
        presentation_from_json(text);
    } catch (const Error& e) {
        return to_string(e.kind());
    }
    return "ok";
}

}  // namespace

TEST_CASE("presentations round trip through JSON") {
    auto all = standard_catalog();
    all.push_back(semion(1));
    all.push_back(make_catalog("zn-braided", {5}));
    for (const auto& p : all) {
        CAPTURE(p.name);
        const std::string text = presentation_to_json(p);
        const Presentation q = presentation_from_json(text);
        same(p, q);
        CHECK(presentation_to_json(q) == text);
    }
}

TEST_CASE("malformed presentations") {
    const std::string good = presentation_to_json(make_h8(1));
    CHECK(kind_of(good) == "ok");
    CHECK(kind_of("{") == "ParseError");
    CHECK(kind_of("[]") == "MalformedInput");
    std::string s = good;
    s.replace(s.find("\"alpha\""), 7, "\"alfa\"");
    CHECK(kind_of(s) == "MalformedInput");
    s = good;
    s.replace(s.find("\"dim\": 8"), 8, "\"dim\": 4");
    CHECK(kind_of(s) == "MalformedInput");
    s = good;
    const auto at = s.find("\"1\"");
    s.replace(at, 3, "\"1/0\"");
    CHECK(kind_of(s) != "ok");
}

TEST_CASE("dual basis rendering") {
    const QuasiHopfAlgebra a(make_h8(1));
    Vec f(8);
    f[3] = Scalar(1);
    f[7] = -Scalar::root(4, 1);
    CHECK(render_form(a, f) == "B*_{" + a.label(3) + "} - z*B*_{" + a.label(7) + "}");
    CHECK(render_element(a, a.zero()) == "0");
    CHECK(render_element(a, scale(a.one(), Scalar(1, 2))) == "1/2*1");
}
