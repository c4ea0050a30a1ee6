#include "qhopf/analysis.hpp"

namespace qhopf {

const DerivedElements& Analysis::elements() {
    if (!elements_) elements_ = derive_elements(alg());
    return *elements_;
}

const IntegralData& Analysis::integrals() {
    if (!integrals_) integrals_ = compute_integrals(alg());
    return *integrals_;
}

const ModulusElements& Analysis::modulus() {
    if (!modulus_) {
        const auto& in = integrals();
        modulus_ = modulus_elements(alg(), elements(), in.modulus, in.modulus_inv);
    }
    return *modulus_;
}

const CointegralSolution& Analysis::cointegral(CointegralKind kind) {
    auto it = cointegrals_.find(kind);
    if (it == cointegrals_.end())
        it = cointegrals_.emplace(kind, solve_cointegral(alg(), elements(), integrals(), kind)).first;
    return it->second;
}

const MonadicSolution& Analysis::monadic(int i) {
    auto it = monadic_.find(i);
    if (it == monadic_.end()) it = monadic_.emplace(i, solve_monadic(alg(), elements(), integrals(), i)).first;
    return it->second;
}

}  // namespace qhopf
