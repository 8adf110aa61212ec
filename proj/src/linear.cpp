#include "qhowe/linear.hpp"

namespace qhowe {

Matrix<RationalFn> to_rational(const Matrix<LaurentPoly>& m) {
    return m.map<RationalFn>([](const LaurentPoly& p) { return RationalFn(p); });
}

std::vector<RationalFn> solve_exact(const Matrix<LaurentPoly>& m, const std::vector<LaurentPoly>& b, bool unique) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side size mismatch");
    std::vector<RationalFn> rb(b.begin(), b.end());
    return solve_in_field(to_rational(m), rb, unique);
}

mpq_class evaluate(const LaurentPoly& p, const mpq_class& value) {
    if (value == 0) throw std::domain_error("cannot specialize v at 0");
    mpq_class acc = 0;
    for (const auto& [k, c] : p.terms()) {
        mpq_class pw = 1;
        mpq_class base = k >= 0 ? value : mpq_class(1 / value);
        for (int i = 0; i < (k >= 0 ? k : -k); ++i) pw *= base;
        acc += c * pw;
    }
    return acc;
}

Matrix<mpq_class> evaluate(const Matrix<LaurentPoly>& m, const mpq_class& value) {
    return m.map<mpq_class>([&](const LaurentPoly& p) { return evaluate(p, value); });
}

}  // namespace qhowe
