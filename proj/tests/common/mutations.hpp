#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf::testing {

// Adds 1 to one structure constant. `nth` picks among the stored terms, spread
// evenly; a negative `nth` targets an absent term instead.
inline Tensor bump(const Tensor& t, int nth, int of) {
    TensorBuilder b(t.order(), t.dim());
    b.add(t);
    const auto& terms = t.terms();
    if (nth >= 0) {
        b.add_key(terms[terms.size() * static_cast<std::size_t>(nth) / static_cast<std::size_t>(of)].first, Scalar(1));
    } else {
        Key k = 0;
        for (const auto& [key, c] : terms) {
            if (key != k) break;
            ++k;
        }
        b.add_key(k, Scalar(1));
    }
    return b.build();
}

inline Vec bump(Vec v, std::size_t i) {
    v[i] += Scalar(1);
    return v;
}

// Twenty single-constant corruptions, each labelled by the structure it touches.
inline std::vector<std::pair<std::string, Presentation>> single_constant_mutations(const Presentation& p) {
    std::vector<std::pair<std::string, Presentation>> out;
    auto push = [&](std::string what, auto&& edit) {
        Presentation q = p;
        edit(q);
        out.emplace_back(std::move(what), std::move(q));
    };
    for (int k = 0; k < 5; ++k) push("mult#" + std::to_string(k), [&](Presentation& q) { q.mult = bump(p.mult, k, 5); });
    push("mult#absent", [&](Presentation& q) { q.mult = bump(p.mult, -1, 1); });
    for (int k = 0; k < 5; ++k)
        push("coproduct#" + std::to_string(k), [&](Presentation& q) { q.coproduct = bump(p.coproduct, k, 5); });
    for (int k = 0; k < 2; ++k)
        push("coassociator#" + std::to_string(k), [&](Presentation& q) { q.coassociator = bump(p.coassociator, k, 2); });
    push("coassociator_inv#0", [&](Presentation& q) { q.coassociator_inv = bump(p.coassociator_inv, 0, 1); });
    push("antipode(1,1)", [&](Presentation& q) { q.antipode(1, 1) += Scalar(1); });
    push("antipode(0,4)", [&](Presentation& q) { q.antipode(0, 4) += Scalar(1); });
    push("counit[1]", [&](Presentation& q) { q.counit = bump(p.counit, 1); });
    push("unit[1]", [&](Presentation& q) { q.unit = bump(p.unit, 1); });
    push("alpha[0]", [&](Presentation& q) { q.alpha = bump(p.alpha, 0); });
    push("beta[1]", [&](Presentation& q) { q.beta = bump(p.beta, 1); });
    return out;
}

}  // namespace qhopf::testing
