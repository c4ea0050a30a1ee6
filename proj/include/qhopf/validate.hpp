#pragma once

#include <string>
#include <vector>

#include "qhopf/algebra.hpp"

namespace qhopf {

struct AxiomCheck {
    std::string name;
    bool pass = true;
    std::string witness;  // basis element(s) where the identity fails
};

struct ValidationReport {
    std::vector<AxiomCheck> checks;

    bool ok() const;
    const AxiomCheck* first_failure() const;
    const AxiomCheck* find(const std::string& name) const;
};

struct ValidateOptions {
    bool strict_r = false;  // also check the hexagon identities
};

ValidationReport validate(const QuasiHopfAlgebra& a, const ValidateOptions& opts = {});

}  // namespace qhopf
