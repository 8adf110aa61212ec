#pragma once

#include <compare>
#include <string>
#include <vector>

namespace qhowe {

struct SuperShape {
    int m = 0;
    int n = 0;

    SuperShape() = default;
    SuperShape(int m_, int n_);
    int N() const { return m + n; }
    // indices are 1-based throughout
    bool odd(int a) const;
    int parity(int a) const { return odd(a) ? 1 : 0; }
    friend auto operator<=>(const SuperShape&, const SuperShape&) = default;
};

// Row/column restriction I~_{k|l} = {m-k+1, ..., m+l}.
struct Ranks {
    int k, l, r, s;
    friend auto operator<=>(const Ranks&, const Ranks&) = default;
};
std::vector<int> restricted_indices(const SuperShape& sh, int k, int l);

using Composition = std::vector<int>;

// All compositions of d into `parts` parts, descending lexicographic order.
std::vector<Composition> compositions(int parts, int d);
// Compositions of d supported on I~_{k|l}.
std::vector<Composition> tilde_compositions(int k, int l, int d, const SuperShape& sh);

class BlockMatrix {
public:
    BlockMatrix() = default;
    explicit BlockMatrix(const SuperShape& sh);
    BlockMatrix(const SuperShape& sh, const std::vector<std::vector<int>>& rows);
    static BlockMatrix diag(const SuperShape& sh, const Composition& lambda);
    // e_{ij}
    static BlockMatrix unit(const SuperShape& sh, int i, int j);

    const SuperShape& shape() const { return shape_; }
    int N() const { return shape_.N(); }
    int operator()(int i, int j) const { return a_[(i - 1) * N() + (j - 1)]; }
    int& at(int i, int j) { return a_[(i - 1) * N() + (j - 1)]; }
    // entry if the cell is odd, else 0
    int tilde(int i, int j) const { return shape_.odd(i) != shape_.odd(j) ? (*this)(i, j) : 0; }
    bool odd_cell(int i, int j) const { return shape_.odd(i) != shape_.odd(j); }

    Composition ro() const;
    Composition co() const;
    int degree() const;
    // sum of odd-cell entries mod 2
    int parity() const;
    bool is_diagonal() const;
    // nonnegative, off-diagonal blocks in {0,1}
    bool valid() const;
    BlockMatrix transpose() const;
    // A + delta*e_{ij}
    BlockMatrix plus(int i, int j, int delta) const;
    BlockMatrix operator+(const BlockMatrix& o) const;
    bool supported_in(const std::vector<int>& rows, const std::vector<int>& cols) const;

    std::vector<std::vector<int>> rows() const;
    std::string str() const;

    friend bool operator==(const BlockMatrix& x, const BlockMatrix& y) { return x.a_ == y.a_ && x.shape_ == y.shape_; }
    friend std::strong_ordering operator<=>(const BlockMatrix& x, const BlockMatrix& y) {
        if (auto c = x.shape_ <=> y.shape_; c != 0) return c;
        return x.a_ <=> y.a_;
    }

private:
    SuperShape shape_;
    std::vector<int> a_;
};

// All valid matrices of total degree d, sorted; optional row/column sums.
std::vector<BlockMatrix> enumerate_M(const SuperShape& sh, int d, const Composition* ro = nullptr,
                                     const Composition* co = nullptr);
// M(k|l, r|s; d): support in I~_{k|l} x I~_{r|s}.
std::vector<BlockMatrix> enumerate_M(const SuperShape& sh, const Ranks& rk, int d);

struct MatrixStats {
    BlockMatrix tilde;
    long h = 0;
    long s = 0;
    long gamma = 0;
    long d = 0;
    long dprime = 0;
    long hat = 0;
};
MatrixStats stats(const BlockMatrix& A);
long h_stat(const BlockMatrix& A);
long s_stat(const BlockMatrix& A);
long gamma_stat(const BlockMatrix& A);
long d_stat(const BlockMatrix& A);
long dprime_stat(const BlockMatrix& A);
long hat_stat(const BlockMatrix& A);
// (i,j) < (k,l) in column-major order
inline bool colmajor_less(int i, int j, int k, int l) { return j < l || (j == l && i < k); }

// One-line notation, values 1..d.
class Perm {
public:
    Perm() = default;
    explicit Perm(std::vector<int> images);
    static Perm identity(int d);
    // simple reflection s_k, 1 <= k < d
    static Perm simple(int d, int k);

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int k) const { return w_[k - 1]; }
    const std::vector<int>& images() const { return w_; }
    int length() const;
    Perm inverse() const;
    // (a*b)(k) = a(b(k))
    friend Perm operator*(const Perm& a, const Perm& b);
    friend auto operator<=>(const Perm&, const Perm&) = default;
    std::string str() const;

private:
    std::vector<int> w_;
};

std::vector<Perm> all_perms(int d);
// blocks R_i of a composition, 1-based positions
std::vector<std::vector<int>> blocks(const Composition& c);
// Young subgroup W_c, enumerated
std::vector<Perm> young_subgroup(const Composition& c);
// D_lambda: w with w^-1 increasing on each block
std::vector<Perm> min_reps(const Composition& lambda);
// D_{lambda rho}: g of minimal length in W_rho g W_lambda (function composition)
std::vector<Perm> double_reps(const Composition& lambda, const Composition& rho);
// even-odd trivial intersection property of g
bool trivial_filter(const SuperShape& sh, const Composition& lambda, const Composition& rho, const Perm& g);
// a_ij = |R_i^lambda cap g^-1(R_j^rho)|
BlockMatrix jmat(const SuperShape& sh, const Composition& lambda, const Perm& g, const Composition& rho);

std::string composition_str(const Composition& c);

}  // namespace qhowe
