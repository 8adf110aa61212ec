#pragma once

#include "qhowe/combin.hpp"
#include "qhowe/linear.hpp"
#include "qhowe/uqgl.hpp"

#include <map>
#include <utility>
#include <vector>

namespace qhowe::coord {

using Factor = std::pair<int, int>;  // t_{ij}
using Word = std::vector<Factor>;

// Column-major normal order, ties broken by row.
inline bool factor_less(const Factor& x, const Factor& y) {
    return x.second < y.second || (x.second == y.second && x.first < y.first);
}

Word word_of(const BlockMatrix& A);
BlockMatrix matrix_of_word(const SuperShape& sh, const Word& w);

// Rewrites products of t_{ij} into normal-ordered monomials t^{(A)}.
class Straightener {
public:
    explicit Straightener(const SuperShape& sh) : sh_(sh) {}
    const SuperShape& shape() const { return sh_; }
    Vect<Word> words(const Word& w);
    Vect<BlockMatrix> operator()(const Word& w);
    Vect<BlockMatrix> operator()(const Vect<Word>& x);

private:
    SuperShape sh_;
    std::map<Word, Vect<Word>> cache_;
};

Vect<BlockMatrix> straighten(const SuperShape& sh, const Word& w);

// t^{{A}} = rescale(A) t^{(A)}
LaurentPoly rescale(const BlockMatrix& A);

// Action on the brace basis t^{{A}}.
Vect<BlockMatrix> act_closed(const Generator& g, const BlockMatrix& A, Side side);
// Action on the paren basis t^{(A)}.
Vect<BlockMatrix> act_closed_paren(const Generator& g, const BlockMatrix& A, Side side);
// Generator applied factor by factor through the coproduct, then straightened (paren basis).
Vect<BlockMatrix> act_oracle(const Generator& g, const BlockMatrix& A, Side side, Straightener& st);
// Generator on a single factor t_{ij}.
Vect<Factor> act_factor(const SuperShape& sh, const Generator& g, const Factor& t, Side side);

// x in paren coordinates -> brace coordinates, for the image of t^{(A)} or t^{{A}}
Vect<BlockMatrix> paren_to_brace(const BlockMatrix& source, const Vect<BlockMatrix>& paren_image);

}  // namespace qhowe::coord
