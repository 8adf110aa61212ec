#include "qhowe/json_io.hpp"

#include <stdexcept>

namespace qhowe::json_io {

json matrix_to_json(const BlockMatrix& A) { return A.rows(); }

BlockMatrix matrix_from_json(const SuperShape& sh, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("matrix must be a JSON array of rows");
    std::vector<std::vector<int>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw std::invalid_argument("matrix row must be a JSON array");
        std::vector<int> row;
        for (const auto& x : r) {
            if (!x.is_number_integer() || x.get<long long>() < 0)
                throw std::invalid_argument("matrix entries must be nonnegative integers");
            row.push_back(x.get<int>());
        }
        rows.push_back(std::move(row));
    }
    BlockMatrix A(sh, rows);
    if (!A.valid()) throw std::invalid_argument("odd block entries must be 0 or 1: " + A.str());
    return A;
}

json element_to_json(const Vect<BlockMatrix>& x, const std::string& basis) {
    json out = json::array();
    for (const auto& [A, c] : x) out.push_back({{"matrix", matrix_to_json(A)}, {"coeff", c.str()}, {"basis", basis}});
    return out;
}

Vect<BlockMatrix> element_from_json(const SuperShape& sh, const json& j) {
    if (j.is_array() && (j.empty() || j.front().is_object())) {
        Vect<BlockMatrix> x;
        for (const auto& t : j) {
            if (!t.contains("matrix") || !t.contains("coeff")) throw std::invalid_argument("term needs matrix and coeff");
            const auto& c = t.at("coeff");
            LaurentPoly p = c.is_string() ? LaurentPoly::parse(c.get<std::string>())
                            : c.is_number_integer() ? LaurentPoly(c.get<long>())
                                                    : throw std::invalid_argument("coeff must be a string or integer");
            x.add(matrix_from_json(sh, t.at("matrix")), p);
        }
        return x;
    }
    return Vect<BlockMatrix>(matrix_from_json(sh, j));
}

json report_to_json(const verify::Report& r) {
    return {{"name", r.name}, {"checked", r.checked}, {"failed", r.failed}, {"status", r.pass() ? "pass" : "fail"},
            {"witnesses", r.witnesses}};
}

json centralizer_to_json(const verify::CentralizerReport& r) {
    return {{"d", r.d},
            {"basis_size", r.basis_size},
            {"dim_left", r.dim_left},
            {"dim_right", r.dim_right},
            {"dim_commutant_left", r.dim_commutant_left},
            {"dim_commutant_right", r.dim_commutant_right},
            {"status", r.pass() ? "pass" : "fail"}};
}

}  // namespace qhowe::json_io
