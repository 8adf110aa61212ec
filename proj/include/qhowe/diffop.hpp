#pragma once

#include "qhowe/combin.hpp"
#include "qhowe/linear.hpp"
#include "qhowe/uqgl.hpp"

#include <vector>

namespace qhowe::diffop {

// S: bosonic x_1..x_m, fermionic x_{m+1..m+n}; Lambda: the reverse.
enum class Flavor { S, Lambda };

using ExpVector = std::vector<int>;

bool valid_exponents(const SuperShape& sh, const ExpVector& a, Flavor f);
// Generator on a divided-power monomial X^{(a)} of one tensor factor.
Vect<ExpVector> single_act(const SuperShape& sh, const Generator& g, const ExpVector& a, Flavor f);

struct PowerFactor {
    int i, j, exp;  // X_{ij}^{exp}, ordinary power
};
// Reorders a product of ordinary powers into column-major divided-power form R(A)
// (no h(A) sign): coefficient of X_{11}^{(a_11)} X_{21}^{(a_21)} ...
Vect<BlockMatrix> normalize_monomial(const SuperShape& sh, const std::vector<PowerFactor>& factors);

// Factor sequences of A: column-major, its reverse, and reversed row-major (transposed order).
std::vector<PowerFactor> colmajor_factors(const BlockMatrix& A);
std::vector<PowerFactor> reversed_factors(const BlockMatrix& A);
std::vector<PowerFactor> reversed_rowmajor_factors(const BlockMatrix& A);

// Action in the key basis Y_A = (-1)^{s(A)} X_{11}^{a_11} X_{21}^{a_21} ... (undivided).
Vect<BlockMatrix> act_closed(const Generator& g, const BlockMatrix& A, Side side);

// Coproduct-leg computation in the X^{(A)} basis.
Vect<BlockMatrix> act_oracle_left(const Generator& g, const BlockMatrix& A);
// Transpose, reverse, act on the left by omega(g), transform back; X^{(A)} basis.
Vect<BlockMatrix> act_oracle_right(const Generator& g, const BlockMatrix& A);

// Y_A = key_factor(A) X^{(A)}
LaurentPoly key_factor(const BlockMatrix& A);
// Image of X^{(A)} (given in X coordinates) rewritten as the image of Y_A in Y coordinates.
Vect<BlockMatrix> to_key_basis(const BlockMatrix& A, const Vect<BlockMatrix>& x_image);
// Oracle result in the key basis.
Vect<BlockMatrix> act_oracle(const Generator& g, const BlockMatrix& A, Side side);

}  // namespace qhowe::diffop
