#pragma once

#include "qhowe/laurent.hpp"

#include <utility>
#include <vector>

// Dense univariate polynomials over Q, index = degree, no trailing zeros.
namespace qhowe::poly {

using Dense = std::vector<mpq_class>;

// p / v^{min_exp(p)}
Dense from_laurent(const LaurentPoly& p);
LaurentPoly to_laurent(const Dense& p);

void trim(Dense& p);
std::pair<Dense, Dense> divmod(const Dense& a, const Dense& b);
Dense gcd(Dense a, Dense b);
Dense monic(const Dense& p);

}  // namespace qhowe::poly
