#pragma once

#include "qhowe/combin.hpp"
#include "qhowe/linear.hpp"
#include "qhowe/schur.hpp"
#include "qhowe/uqgl.hpp"

#include <map>
#include <vector>

namespace qhowe::vmod {

std::vector<BlockMatrix> vbasis(const SuperShape& sh, const Ranks& rk, int d);

// Generators acting on the left (rows I~_{k|l}) or right (columns I~_{r|s}).
std::vector<Generator> allowed_generators(const SuperShape& sh, const Ranks& rk, Side side);
bool allowed(const SuperShape& sh, const Ranks& rk, const Generator& g, Side side);

// Action on [A], full index range.
Vect<BlockMatrix> act(const Generator& g, const BlockMatrix& A, Side side);
// Same, with A in M(k|l,r|s;d) and g in the restricted range enforced.
Vect<BlockMatrix> act(const Generator& g, const BlockMatrix& A, Side side, const Ranks& rk);

// [A] = k_A e_A.  The scalars k_A are fixed by requiring the e-basis products with the
// generator images to reproduce `act`, after pinning the diagonal elements and a spanning
// tree of E-type generator matrices; every remaining equation is then checked.
class BracketBasis {
public:
    BracketBasis(const SuperShape& sh, int d);

    const SuperShape& shape() const { return sh_; }
    int degree() const { return d_; }
    const LaurentPoly& scale(const BlockMatrix& A) const;
    // equations left unsatisfied by the solved scalars (0 when the table is consistent)
    size_t inconsistencies() const { return inconsistencies_; }

    schur::SchurElem to_e(const Vect<BlockMatrix>& bracket) const;
    // throws NotDivisible if some coordinate is not a Laurent polynomial
    Vect<BlockMatrix> from_e(const schur::SchurElem& e) const;

    // image of g in S(m|n,d), e basis
    schur::SchurElem surjection_image(const Generator& g) const;
    // [A] times the image of g (right) or image times [A] (left), through brute-force Schur products
    Vect<BlockMatrix> act_via_schur(const Generator& g, const BlockMatrix& A, Side side, schur::SchurAlgebra& S) const;

private:
    SuperShape sh_;
    int d_;
    std::map<BlockMatrix, LaurentPoly> k_;
    size_t inconsistencies_ = 0;
};

// xi_{k|l} = sum over lambda in Lambda~(k|l,d) of [diag lambda]/prod[lambda]!, in the e basis.
schur::SchurElem xi(const SuperShape& sh, int k, int l, int d);

}  // namespace qhowe::vmod
