#include "qhowe/poly_util.hpp"

#include <stdexcept>

namespace qhowe::poly {

Dense from_laurent(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    int lo = p.min_exp();
    Dense d(p.max_exp() - lo + 1);
    for (const auto& [k, c] : p.terms()) d[k - lo] = c;
    return d;
}

LaurentPoly to_laurent(const Dense& p) {
    LaurentPoly r;
    for (size_t i = 0; i < p.size(); ++i) r.add_term(static_cast<int>(i), p[i]);
    return r;
}

void trim(Dense& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::pair<Dense, Dense> divmod(const Dense& a, const Dense& b) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    Dense r = a;
    trim(r);
    if (r.size() < b.size()) return {Dense{}, r};
    Dense q(r.size() - b.size() + 1);
    const mpq_class& lead = b.back();
    for (size_t i = r.size(); i-- >= b.size();) {
        if (r[i] == 0) continue;
        mpq_class c = r[i] / lead;
        size_t off = i - (b.size() - 1);
        q[off] = c;
        for (size_t j = 0; j < b.size(); ++j) r[off + j] -= c * b[j];
    }
    trim(q);
    trim(r);
    return {q, r};
}

Dense monic(const Dense& p) {
    if (p.empty()) return p;
    Dense r = p;
    mpq_class lead = p.back();
    for (auto& c : r) c /= lead;
    return r;
}

Dense gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = divmod(a, b).second;
        a = std::move(b);
        b = monic(r);
    }
    return monic(a);
}

}  // namespace qhowe::poly
