#pragma once

#include <map>
#include <optional>

#include "qhopf/cointegrals.hpp"
#include "qhopf/monadic.hpp"

namespace qhopf {

/// Lazily computed data attached to one algebra. Not thread-safe.
struct Analysis {
    explicit Analysis(AlgebraPtr a) : algebra(std::move(a)) {}
    explicit Analysis(Presentation p) : algebra(std::make_shared<const QuasiHopfAlgebra>(std::move(p))) {}

    const QuasiHopfAlgebra& alg() const { return *algebra; }
    const DerivedElements& elements();
    const IntegralData& integrals();
    const ModulusElements& modulus();
    const CointegralSolution& cointegral(CointegralKind kind);
    const MonadicSolution& monadic(int i);

    AlgebraPtr algebra;

private:
    std::optional<DerivedElements> elements_;
    std::optional<IntegralData> integrals_;
    std::optional<ModulusElements> modulus_;
    std::map<CointegralKind, CointegralSolution> cointegrals_;
    std::map<int, MonadicSolution> monadic_;
};

}  // namespace qhopf
