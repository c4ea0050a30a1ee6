#pragma once

#include <string>
#include <string_view>

#include "qhopf/algebra.hpp"

namespace qhopf {

/// JSON presentation format. Scalars are strings in the declared field, vectors
/// are sparse lists of [i, "c"], tensors are lists of [i, j, ..., "c"].
std::string presentation_to_json(const Presentation& p, int indent = 1);
Presentation presentation_from_json(std::string_view text);

Presentation load_presentation(const std::string& path);
void save_presentation(const std::string& path, const Presentation& p);

/// An order-2 tensor given either as {"omega_hat": [...]} or as a bare list.
Tensor load_omega_hat(const std::string& path, const Presentation& p);

/// Text renderings with basis labels. Forms use the dual basis B*_{label}.
std::string render_scalar(const Scalar& s);
std::string render_element(const QuasiHopfAlgebra& a, const Vec& v);
std::string render_form(const QuasiHopfAlgebra& a, const Vec& f);
std::string render_tensor(const QuasiHopfAlgebra& a, const Tensor& t);
std::string render_matrix(const Mat& m);

}  // namespace qhopf
