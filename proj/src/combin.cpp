#include "qhowe/combin.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qhowe {

SuperShape::SuperShape(int m_, int n_) : m(m_), n(n_) {
    if (m < 0 || n < 0 || m + n < 1) throw std::invalid_argument("super shape needs m, n >= 0 and m+n >= 1");
}

bool SuperShape::odd(int a) const {
    if (a < 1 || a > N()) throw std::out_of_range("index " + std::to_string(a) + " outside I_{m|n}");
    return a > m;
}

std::vector<int> restricted_indices(const SuperShape& sh, int k, int l) {
    if (k < 0 || l < 0 || k > sh.m || l > sh.n) throw std::invalid_argument("ranks exceed shape");
    std::vector<int> out;
    for (int a = sh.m - k + 1; a <= sh.m + l; ++a) out.push_back(a);
    return out;
}

namespace {

void compositions_rec(int parts, int d, Composition& cur, std::vector<Composition>& out) {
    if (static_cast<int>(cur.size()) == parts - 1) {
        cur.push_back(d);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int a = d; a >= 0; --a) {
        cur.push_back(a);
        compositions_rec(parts, d - a, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions(int parts, int d) {
    if (parts < 1 || d < 0) throw std::invalid_argument("compositions needs parts >= 1, d >= 0");
    std::vector<Composition> out;
    Composition cur;
    compositions_rec(parts, d, cur, out);
    return out;
}

std::vector<Composition> tilde_compositions(int k, int l, int d, const SuperShape& sh) {
    auto idx = restricted_indices(sh, k, l);
    std::vector<Composition> out;
    if (idx.empty()) {
        if (d == 0) out.push_back(Composition(sh.N(), 0));
        return out;
    }
    for (const auto& c : compositions(static_cast<int>(idx.size()), d)) {
        Composition full(sh.N(), 0);
        for (size_t t = 0; t < idx.size(); ++t) full[idx[t] - 1] = c[t];
        out.push_back(full);
    }
    return out;
}

BlockMatrix::BlockMatrix(const SuperShape& sh) : shape_(sh), a_(sh.N() * sh.N(), 0) {}

BlockMatrix::BlockMatrix(const SuperShape& sh, const std::vector<std::vector<int>>& rows) : BlockMatrix(sh) {
    if (static_cast<int>(rows.size()) != N()) throw std::invalid_argument("matrix row count does not match shape");
    for (int i = 1; i <= N(); ++i) {
        if (static_cast<int>(rows[i - 1].size()) != N()) throw std::invalid_argument("matrix is not square");
        for (int j = 1; j <= N(); ++j) at(i, j) = rows[i - 1][j - 1];
    }
}

BlockMatrix BlockMatrix::diag(const SuperShape& sh, const Composition& lambda) {
    BlockMatrix A(sh);
    for (int i = 1; i <= sh.N(); ++i) A.at(i, i) = lambda.at(i - 1);
    return A;
}

BlockMatrix BlockMatrix::unit(const SuperShape& sh, int i, int j) {
    BlockMatrix A(sh);
    A.at(i, j) = 1;
    return A;
}

Composition BlockMatrix::ro() const {
    Composition r(N(), 0);
    for (int i = 1; i <= N(); ++i)
        for (int j = 1; j <= N(); ++j) r[i - 1] += (*this)(i, j);
    return r;
}

Composition BlockMatrix::co() const {
    Composition c(N(), 0);
    for (int i = 1; i <= N(); ++i)
        for (int j = 1; j <= N(); ++j) c[j - 1] += (*this)(i, j);
    return c;
}

int BlockMatrix::degree() const { return std::accumulate(a_.begin(), a_.end(), 0); }

int BlockMatrix::parity() const {
    int t = 0;
    for (int i = 1; i <= N(); ++i)
        for (int j = 1; j <= N(); ++j) t += tilde(i, j);
    return t % 2;
}

bool BlockMatrix::is_diagonal() const {
    for (int i = 1; i <= N(); ++i)
        for (int j = 1; j <= N(); ++j)
            if (i != j && (*this)(i, j) != 0) return false;
    return true;
}

bool BlockMatrix::valid() const {
    for (int i = 1; i <= N(); ++i)
        for (int j = 1; j <= N(); ++j) {
            int x = (*this)(i, j);
            if (x < 0) return false;
            if (odd_cell(i, j) && x > 1) return false;
        }
    return true;
}

BlockMatrix BlockMatrix::transpose() const {
    BlockMatrix t(shape_);
    for (int i = 1; i <= N(); ++i)
        for (int j = 1; j <= N(); ++j) t.at(j, i) = (*this)(i, j);
    return t;
}

BlockMatrix BlockMatrix::plus(int i, int j, int delta) const {
    BlockMatrix t = *this;
    t.at(i, j) += delta;
    return t;
}

BlockMatrix BlockMatrix::operator+(const BlockMatrix& o) const {
    BlockMatrix t = *this;
    for (size_t k = 0; k < a_.size(); ++k) t.a_[k] += o.a_[k];
    return t;
}

bool BlockMatrix::supported_in(const std::vector<int>& rows, const std::vector<int>& cols) const {
    for (int i = 1; i <= N(); ++i)
        for (int j = 1; j <= N(); ++j) {
            if ((*this)(i, j) == 0) continue;
            if (std::find(rows.begin(), rows.end(), i) == rows.end()) return false;
            if (std::find(cols.begin(), cols.end(), j) == cols.end()) return false;
        }
    return true;
}

std::vector<std::vector<int>> BlockMatrix::rows() const {
    std::vector<std::vector<int>> r(N(), std::vector<int>(N()));
    for (int i = 1; i <= N(); ++i)
        for (int j = 1; j <= N(); ++j) r[i - 1][j - 1] = (*this)(i, j);
    return r;
}

std::string BlockMatrix::str() const {
    std::string s = "[";
    for (int i = 1; i <= N(); ++i) {
        s += i > 1 ? ",[" : "[";
        for (int j = 1; j <= N(); ++j) s += (j > 1 ? "," : "") + std::to_string((*this)(i, j));
        s += "]";
    }
    return s + "]";
}

namespace {

struct MatrixEnumerator {
    const SuperShape& sh;
    std::vector<std::pair<int, int>> cells;
    const Composition* ro;
    const Composition* co;
    std::vector<BlockMatrix>& out;
    BlockMatrix cur;
    Composition rsum, csum;

    void run(size_t idx, int rem) {
        if (idx == cells.size()) {
            if (rem != 0) return;
            if (ro && rsum != *ro) return;
            if (co && csum != *co) return;
            out.push_back(cur);
            return;
        }
        auto [i, j] = cells[idx];
        int mx = sh.odd(i) != sh.odd(j) ? std::min(1, rem) : rem;
        if (ro) mx = std::min(mx, (*ro)[i - 1] - rsum[i - 1]);
        if (co) mx = std::min(mx, (*co)[j - 1] - csum[j - 1]);
        for (int a = 0; a <= mx; ++a) {
            cur.at(i, j) = a;
            rsum[i - 1] += a;
            csum[j - 1] += a;
            run(idx + 1, rem - a);
            rsum[i - 1] -= a;
            csum[j - 1] -= a;
        }
        cur.at(i, j) = 0;
    }
};

std::vector<BlockMatrix> enumerate_cells(const SuperShape& sh, const std::vector<int>& rows,
                                         const std::vector<int>& cols, int d, const Composition* ro,
                                         const Composition* co) {
    if (d < 0) throw std::invalid_argument("negative degree");
    std::vector<BlockMatrix> out;
    MatrixEnumerator e{sh, {}, ro, co, out, BlockMatrix(sh), Composition(sh.N(), 0), Composition(sh.N(), 0)};
    for (int i : rows)
        for (int j : cols) e.cells.emplace_back(i, j);
    e.run(0, d);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<BlockMatrix> enumerate_M(const SuperShape& sh, int d, const Composition* ro, const Composition* co) {
    std::vector<int> all(sh.N());
    std::iota(all.begin(), all.end(), 1);
    return enumerate_cells(sh, all, all, d, ro, co);
}

std::vector<BlockMatrix> enumerate_M(const SuperShape& sh, const Ranks& rk, int d) {
    return enumerate_cells(sh, restricted_indices(sh, rk.k, rk.l), restricted_indices(sh, rk.r, rk.s), d, nullptr,
                           nullptr);
}

long h_stat(const BlockMatrix& A) {
    long t = 0;
    for (int i = 1; i <= A.N(); ++i)
        for (int j = 1; j <= A.N(); ++j) {
            long x = A.tilde(i, j);
            t += x * (x + 1) / 2;
        }
    return t;
}

long s_stat(const BlockMatrix& A) {
    const int N = A.N();
    long t = 0, before = 0;
    for (int j = 1; j <= N; ++j)
        for (int i = 1; i <= N; ++i) {
            t += before * A.tilde(i, j);
            before += A.tilde(i, j);
        }
    return t;
}

long gamma_stat(const BlockMatrix& A) {
    const int N = A.N();
    long t = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k < i; ++k)
                for (int l = j + 1; l <= N; ++l) t += static_cast<long>(A.tilde(i, j)) * A.tilde(k, l);
    return t;
}

long d_stat(const BlockMatrix& A) {
    const int N = A.N();
    long t = 0;
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int k = 1; k < i; ++k)
                for (int l = j + 1; l <= N; ++l) t += static_cast<long>(A(i, j)) * A(k, l);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            for (int l = j + 1; l <= N; ++l) t += (i % 2 == 0 ? 1 : -1) * static_cast<long>(A(i, j)) * A(i, l);
    return t;
}

long dprime_stat(const BlockMatrix& A) {
    const int N = A.N(), m = A.shape().m;
    long t = 0;
    for (int i = 1; i <= N; ++i)
        for (int k = m + 1; k < i; ++k)
            for (int j = 1; j < m; ++j)
                for (int l = j + 1; l <= N; ++l) t += static_cast<long>(A(i, j)) * A(k, l);
    for (int i = 1; i <= N; ++i)
        for (int k = i + 1; k < m; ++k)
            for (int l = m + 1; l <= N; ++l)
                for (int j = l + 1; j <= N; ++j) t += static_cast<long>(A(i, j)) * A(k, l);
    long u = 0;
    for (int i = 1; i <= m; ++i)
        for (int j = m + 1; j <= N; ++j) u += A(i, j);
    return t + (u - 1) * u / 2;
}

long hat_stat(const BlockMatrix& A) {
    const int N = A.N(), m = A.shape().m;
    long t = 0;
    for (int i = 1; i <= N; ++i)
        for (int k = m + 1; k < i; ++k)
            for (int j = 1; j <= N; ++j)
                for (int l = j + 1; l <= N; ++l) t += static_cast<long>(A(i, j)) * A(k, l);
    return t;
}

MatrixStats stats(const BlockMatrix& A) {
    MatrixStats st;
    st.tilde = BlockMatrix(A.shape());
    for (int i = 1; i <= A.N(); ++i)
        for (int j = 1; j <= A.N(); ++j) st.tilde.at(i, j) = A.tilde(i, j);
    st.h = h_stat(A);
    st.s = s_stat(A);
    st.gamma = gamma_stat(A);
    st.d = d_stat(A);
    st.dprime = dprime_stat(A);
    st.hat = hat_stat(A);
    return st;
}

Perm::Perm(std::vector<int> images) : w_(std::move(images)) {
    std::vector<int> seen(w_.size() + 1, 0);
    for (int x : w_) {
        if (x < 1 || x > size() || seen[x]) throw std::invalid_argument("not a permutation");
        seen[x] = 1;
    }
}

Perm Perm::identity(int d) {
    std::vector<int> w(d);
    std::iota(w.begin(), w.end(), 1);
    return Perm(std::move(w));
}

Perm Perm::simple(int d, int k) {
    if (k < 1 || k >= d) throw std::out_of_range("simple reflection index");
    Perm p = identity(d);
    std::swap(p.w_[k - 1], p.w_[k]);
    return p;
}

int Perm::length() const {
    int t = 0;
    for (size_t i = 0; i < w_.size(); ++i)
        for (size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++t;
    return t;
}

Perm Perm::inverse() const {
    std::vector<int> r(w_.size());
    for (size_t k = 0; k < w_.size(); ++k) r[w_[k] - 1] = static_cast<int>(k) + 1;
    return Perm(std::move(r));
}

Perm operator*(const Perm& a, const Perm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("permutation degree mismatch");
    std::vector<int> r(a.size());
    for (int k = 1; k <= a.size(); ++k) r[k - 1] = a(b(k));
    return Perm(std::move(r));
}

std::string Perm::str() const {
    std::string s = "(";
    for (size_t k = 0; k < w_.size(); ++k) s += (k ? "," : "") + std::to_string(w_[k]);
    return s + ")";
}

std::vector<Perm> all_perms(int d) {
    std::vector<int> w(d);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

std::vector<std::vector<int>> blocks(const Composition& c) {
    std::vector<std::vector<int>> out;
    int pos = 0;
    for (int part : c) {
        std::vector<int> b;
        for (int t = 0; t < part; ++t) b.push_back(++pos);
        out.push_back(std::move(b));
    }
    return out;
}

namespace {

int comp_degree(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

std::vector<int> block_index(const Composition& c) {
    std::vector<int> idx;
    for (size_t i = 0; i < c.size(); ++i)
        for (int t = 0; t < c[i]; ++t) idx.push_back(static_cast<int>(i));
    return idx;
}

}  // namespace

std::vector<Perm> young_subgroup(const Composition& c) {
    auto idx = block_index(c);
    std::vector<Perm> out;
    for (const auto& w : all_perms(comp_degree(c))) {
        bool ok = true;
        for (int k = 1; k <= w.size() && ok; ++k) ok = idx[k - 1] == idx[w(k) - 1];
        if (ok) out.push_back(w);
    }
    return out;
}

std::vector<Perm> min_reps(const Composition& lambda) {
    const int d = comp_degree(lambda);
    auto bl = blocks(lambda);
    std::vector<Perm> out;
    for (const auto& w : all_perms(d)) {
        Perm wi = w.inverse();
        bool ok = true;
        for (const auto& b : bl)
            for (size_t t = 0; t + 1 < b.size() && ok; ++t) ok = wi(b[t]) < wi(b[t + 1]);
        if (ok) out.push_back(w);
    }
    long order = 1;
    for (int part : lambda)
        for (int t = 2; t <= part; ++t) order *= t;
    long fact = 1;
    for (int t = 2; t <= d; ++t) fact *= t;
    if (order * static_cast<long>(out.size()) != fact) throw std::logic_error("|W_lambda| |D_lambda| != d!");
    return out;
}

std::vector<Perm> double_reps(const Composition& lambda, const Composition& rho) {
    if (comp_degree(lambda) != comp_degree(rho)) throw std::invalid_argument("compositions of different degrees");
    // permutations compose as functions, so W_lambda acts on the right of g
    std::set<Perm> dl;
    for (const auto& w : min_reps(lambda)) dl.insert(w.inverse());
    std::vector<Perm> out;
    for (const auto& w : min_reps(rho))
        if (dl.count(w)) out.push_back(w);
    return out;
}

namespace {

// W_c restricted to blocks of the given parity, as a composition with the
// other blocks split into singletons.
Composition parity_part(const SuperShape& sh, const Composition& c, bool odd) {
    Composition r;
    for (int i = 1; i <= static_cast<int>(c.size()); ++i) {
        if (sh.odd(i) == odd)
            r.push_back(c[i - 1]);
        else
            for (int t = 0; t < c[i - 1]; ++t) r.push_back(1);
    }
    return r;
}

bool intersection_trivial(const std::vector<Perm>& lhs, const Composition& rhs_comp, const Perm& g) {
    auto idx = block_index(rhs_comp);
    Perm gi = g.inverse();
    for (const auto& x : lhs) {
        if (x.length() == 0) continue;
        // x in W_lambda-part cap g^-1 W_rho-part g  <=>  g x g^-1 in W_rho-part
        Perm y = g * x * gi;
        bool in = true;
        for (int k = 1; k <= y.size() && in; ++k) in = idx[k - 1] == idx[y(k) - 1];
        if (in) return false;
    }
    return true;
}

}  // namespace

bool trivial_filter(const SuperShape& sh, const Composition& lambda, const Composition& rho, const Perm& g) {
    if (comp_degree(lambda) != comp_degree(rho) || g.size() != comp_degree(lambda))
        throw std::invalid_argument("trivial_filter degree mismatch");
    auto l0 = young_subgroup(parity_part(sh, lambda, false));
    auto l1 = young_subgroup(parity_part(sh, lambda, true));
    return intersection_trivial(l0, parity_part(sh, rho, true), g) &&
           intersection_trivial(l1, parity_part(sh, rho, false), g);
}

BlockMatrix jmat(const SuperShape& sh, const Composition& lambda, const Perm& g, const Composition& rho) {
    if (comp_degree(lambda) != comp_degree(rho) || g.size() != comp_degree(lambda))
        throw std::invalid_argument("jmat degree mismatch");
    auto li = block_index(lambda);
    auto ri = block_index(rho);
    BlockMatrix A(sh);
    // k in R_i^lambda and g(k) in R_j^rho
    for (int k = 1; k <= g.size(); ++k) A.at(li[k - 1] + 1, ri[g(k) - 1] + 1) += 1;
    return A;
}

std::string composition_str(const Composition& c) {
    std::string s = "(";
    for (size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ")";
}

}  // namespace qhowe
