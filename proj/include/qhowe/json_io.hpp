#pragma once

#include "qhowe/combin.hpp"
#include "qhowe/linear.hpp"
#include "qhowe/verify.hpp"

#include "json.hpp"

#include <string>

namespace qhowe::json_io {

using json = nlohmann::json;

json matrix_to_json(const BlockMatrix& A);
// Rejects ragged, negative, wrongly sized, or block-invalid matrices.
BlockMatrix matrix_from_json(const SuperShape& sh, const json& j);

// [{matrix, coeff, basis}], terms in key order
json element_to_json(const Vect<BlockMatrix>& x, const std::string& basis);
// Accepts a bare matrix (coefficient 1) or a list of {matrix, coeff} terms.
Vect<BlockMatrix> element_from_json(const SuperShape& sh, const json& j);

json report_to_json(const verify::Report& r);
json centralizer_to_json(const verify::CentralizerReport& r);

}  // namespace qhowe::json_io
