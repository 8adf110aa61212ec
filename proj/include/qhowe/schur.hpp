#pragma once

#include "qhowe/combin.hpp"
#include "qhowe/linear.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qhowe::schur {

struct NoCosetRepresentative : std::logic_error {
    NoCosetRepresentative() : std::logic_error("no double coset representative for matrix") {}
};
struct NotInSpan : std::runtime_error {
    NotInSpan() : std::runtime_error("endomorphism not in the span of the e_A basis") {}
};
struct ShapeMismatch : std::invalid_argument {
    ShapeMismatch() : std::invalid_argument("column sums of the left factor differ from row sums of the right factor") {}
};
struct NotGeneratorForm : std::invalid_argument {
    NotGeneratorForm() : std::invalid_argument("neither factor is of generator form") {}
};

// Element of the Hecke algebra H(S_d) in the basis T_w.
class HeckeElem {
public:
    HeckeElem() = default;
    HeckeElem(const Perm& w, const LaurentPoly& c = LaurentPoly(1));
    static HeckeElem T(const Perm& w) { return HeckeElem(w); }

    const std::map<Perm, LaurentPoly>& terms() const { return terms_; }
    void add(const Perm& w, const LaurentPoly& c);
    // right multiplication by T_{s_k}
    HeckeElem times_simple(int k) const;
    friend HeckeElem operator*(const HeckeElem& x, const HeckeElem& y);
    friend HeckeElem operator+(HeckeElem x, const HeckeElem& y);
    friend bool operator==(const HeckeElem&, const HeckeElem&) = default;
    std::string str() const;

private:
    std::map<Perm, LaurentPoly> terms_;
};

// w = s_{k_1} ... s_{k_r}, reduced, by bubble sort
std::vector<int> reduced_word(const Perm& w);

using TensorIndex = std::vector<int>;
// v_i T_{s_k}
Vect<TensorIndex> tensor_act(const SuperShape& sh, const TensorIndex& i, int k);

// Endomorphism of the tensor space acting on the right of row vectors:
// v_i f = sum_j f(i,j) v_j.  Sparse rows.
class End {
public:
    End() = default;
    explicit End(size_t dim) : rows_(dim) {}
    size_t dim() const { return rows_.size(); }
    const Vect<size_t>& row(size_t i) const { return rows_[i]; }
    void add(size_t i, size_t j, const LaurentPoly& c) { rows_[i].add(j, c); }
    LaurentPoly at(size_t i, size_t j) const { return rows_[i].coeff(j); }
    End scaled(const LaurentPoly& c) const;
    bool is_zero() const;
    // (x * y): first x then y
    friend End operator*(const End& x, const End& y);
    friend End operator+(End x, const End& y);
    friend End operator-(End x, const End& y);
    friend bool operator==(const End&, const End&) = default;

private:
    std::vector<Vect<size_t>> rows_;
};

using SchurElem = Vect<BlockMatrix>;

// Quantum Schur superalgebra S(m|n,d) realized on the super tensor space.
class SchurAlgebra {
public:
    SchurAlgebra(const SuperShape& sh, int d);

    const SuperShape& shape() const { return sh_; }
    int degree() const { return d_; }
    size_t dim() const { return indices_.size(); }
    const std::vector<TensorIndex>& indices() const { return indices_; }
    size_t position(const TensorIndex& i) const;
    const std::vector<BlockMatrix>& basis() const { return basis_; }

    const End& T_simple(int k) const { return simple_[k - 1]; }
    const End& T(const Perm& w);
    End hecke(const HeckeElem& x);

    // (lambda, g, rho) with jmat(lambda, g, rho) = A, g the shortest double coset representative
    Perm coset_rep(const BlockMatrix& A) const;
    const End& eA(const BlockMatrix& A);
    End as_end(const SchurElem& x);
    bool commutes_with_hecke(const End& f) const;
    SchurElem decompose(const End& f);
    // brute-force product in the e basis: x * y as composition "first x then y"
    SchurElem mul(const SchurElem& x, const SchurElem& y);
    SchurElem mul(const BlockMatrix& A, const BlockMatrix& B);

private:
    std::pair<size_t, size_t> pivot(const BlockMatrix& A) const;

    SuperShape sh_;
    int d_;
    std::vector<TensorIndex> indices_;
    std::map<TensorIndex, size_t> position_;
    std::vector<BlockMatrix> basis_;
    std::vector<End> simple_;
    std::map<Perm, End> T_cache_;
    std::map<BlockMatrix, End> e_cache_;
};

enum class GenForm { None, Diagonal, Up, Down };
// Off-diagonal part zero, a single e_{h,h+1}, or a single e_{h+1,h}; h reported through `h`.
GenForm generator_form(const BlockMatrix& B, int* h = nullptr);

// Closed e-basis products when one factor has generator form.
SchurElem mul_closed_e(const BlockMatrix& A, const BlockMatrix& B);
SchurElem mul_closed_e(const SchurElem& x, const SchurElem& y);

// tau(e_A) = (-1)^{hat(A)+hat(A^T)} e_{A^T}
SchurElem tau(const SchurElem& x);

// [diag lambda] -> e basis image of the diagonal idempotent sum over given compositions
SchurElem diagonal_sum(const SuperShape& sh, const std::vector<Composition>& lambdas);

}  // namespace qhowe::schur
