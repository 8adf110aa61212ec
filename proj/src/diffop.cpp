#include "qhowe/diffop.hpp"

#include <algorithm>
#include <stdexcept>

namespace qhowe::diffop {

bool valid_exponents(const SuperShape& sh, const ExpVector& a, Flavor f) {
    if (static_cast<int>(a.size()) != sh.N()) return false;
    for (int i = 1; i <= sh.N(); ++i) {
        if (a[i - 1] < 0) return false;
        bool fermionic = f == Flavor::S ? sh.odd(i) : !sh.odd(i);
        if (fermionic && a[i - 1] > 1) return false;
    }
    return true;
}

Vect<ExpVector> single_act(const SuperShape& sh, const Generator& g, const ExpVector& a, Flavor f) {
    g.validate(sh);
    if (!valid_exponents(sh, a, f)) throw std::invalid_argument("invalid exponent vector");
    const int h = g.index, m = sh.m;
    if (g.is_K()) return Vect<ExpVector>(a, signed_pow(sh.odd(h), g.exp * a[h - 1]));
    int sg = 0;
    if (f == Flavor::Lambda && h == m)
        for (int i = 1; i < m; ++i) sg += a[i - 1];
    ExpVector b = a;
    int gain = g.kind == GenKind::Eup ? h : h + 1;
    int loss = g.kind == GenKind::Eup ? h + 1 : h;
    if (a[loss - 1] == 0) return {};
    b[gain - 1] += 1;
    b[loss - 1] -= 1;
    if (!valid_exponents(sh, b, f)) return {};
    return Vect<ExpVector>(b, sign(sg) * qint(a[gain - 1] + 1));
}

Vect<BlockMatrix> normalize_monomial(const SuperShape& sh, const std::vector<PowerFactor>& factors) {
    std::vector<PowerFactor> w;
    for (const auto& f : factors)
        if (f.exp > 0) w.push_back(f);
    auto par = [&](const PowerFactor& f) { return (sh.parity(f.i) + sh.parity(f.j)) % 2; };
    auto before = [](const PowerFactor& x, const PowerFactor& y) { return colmajor_less(x.i, x.j, y.i, y.j); };
    int sg = 0;
    // insertion sort, tracking Koszul signs
    for (size_t p = 1; p < w.size(); ++p)
        for (size_t q = p; q > 0 && before(w[q], w[q - 1]); --q) {
            sg += par(w[q]) * par(w[q - 1]) * w[q].exp * w[q - 1].exp;
            std::swap(w[q], w[q - 1]);
        }
    BlockMatrix A(sh);
    for (const auto& f : w) A.at(f.i, f.j) += f.exp;
    if (!A.valid()) return {};
    LaurentPoly c = sign(sg);
    for (int i = 1; i <= sh.N(); ++i)
        for (int j = 1; j <= sh.N(); ++j) c *= qfactorial(A(i, j));
    return Vect<BlockMatrix>(A, c);
}

std::vector<PowerFactor> colmajor_factors(const BlockMatrix& A) {
    std::vector<PowerFactor> out;
    for (int j = 1; j <= A.N(); ++j)
        for (int i = 1; i <= A.N(); ++i)
            if (A(i, j)) out.push_back({i, j, A(i, j)});
    return out;
}

std::vector<PowerFactor> reversed_factors(const BlockMatrix& A) {
    auto f = colmajor_factors(A);
    std::reverse(f.begin(), f.end());
    return f;
}

std::vector<PowerFactor> reversed_rowmajor_factors(const BlockMatrix& A) {
    std::vector<PowerFactor> out;
    for (int i = A.N(); i >= 1; --i)
        for (int j = A.N(); j >= 1; --j)
            if (A(i, j)) out.push_back({i, j, A(i, j)});
    return out;
}

namespace {

Flavor column_flavor(const SuperShape& sh, int j) { return sh.odd(j) ? Flavor::Lambda : Flavor::S; }

ExpVector column(const BlockMatrix& A, int j) {
    ExpVector c(A.N());
    for (int i = 1; i <= A.N(); ++i) c[i - 1] = A(i, j);
    return c;
}

int column_parity(const BlockMatrix& A, int j) {
    int t = 0;
    for (int i = 1; i <= A.N(); ++i) t += A.tilde(i, j);
    return t % 2;
}

// Left action on R(A), the divided column-major monomial without sign.
Vect<BlockMatrix> left_raw(const Generator& g, const BlockMatrix& A) {
    const auto& sh = A.shape();
    const int N = sh.N();
    Vect<BlockMatrix> out;
    auto run = [&](const std::vector<GenWord>& legs, const LaurentPoly& scale) {
        std::vector<std::pair<std::vector<ExpVector>, LaurentPoly>> partial{{{}, scale}};
        for (int c = 1; c <= N; ++c) {
            Vect<ExpVector> img(column(A, c));
            for (auto it = legs[c - 1].rbegin(); it != legs[c - 1].rend(); ++it) {
                Vect<ExpVector> nxt;
                for (const auto& [a, ca] : img) nxt.add(single_act(sh, *it, a, column_flavor(sh, c)), ca);
                img = std::move(nxt);
            }
            std::vector<std::pair<std::vector<ExpVector>, LaurentPoly>> nxt;
            for (const auto& [cols, pc] : partial)
                for (const auto& [a, ca] : img) {
                    auto ext = cols;
                    ext.push_back(a);
                    nxt.emplace_back(std::move(ext), pc * ca);
                }
            partial = std::move(nxt);
        }
        for (const auto& [cols, pc] : partial) {
            BlockMatrix B(sh);
            for (int j = 1; j <= N; ++j)
                for (int i = 1; i <= N; ++i) B.at(i, j) = cols[j - 1][i - 1];
            out.add(B, pc);
        }
    };
    if (g.is_K()) {
        run(std::vector<GenWord>(N, GenWord{g}), LaurentPoly(1));
        return out;
    }
    const int h = g.index;
    const GenWord tail = g.kind == GenKind::Eup ? GenWord{Generator::K(h, 1), Generator::K(h + 1, -1)} : GenWord{};
    const GenWord head = g.kind == GenKind::Edown ? GenWord{Generator::K(h, -1), Generator::K(h + 1, 1)} : GenWord{};
    for (int c = 1; c <= N; ++c) {
        std::vector<GenWord> legs(N);
        for (int k = 1; k <= N; ++k) legs[k - 1] = k < c ? head : (k == c ? GenWord{g} : tail);
        int crossed = 0;
        if (g.parity(sh))
            for (int k = 1; k < c; ++k) crossed += column_parity(A, k);
        run(legs, sign(crossed));
    }
    return out;
}

}  // namespace

Vect<BlockMatrix> act_oracle_left(const Generator& g, const BlockMatrix& A) {
    g.validate(A.shape());
    Vect<BlockMatrix> out;
    const long hA = h_stat(A);
    for (const auto& [B, c] : left_raw(g, A)) out.add(B, sign(static_cast<int>((hA + h_stat(B)) % 2)) * c);
    return out;
}

Vect<BlockMatrix> act_oracle_right(const Generator& g, const BlockMatrix& A) {
    g.validate(A.shape());
    auto flip = [](const BlockMatrix& X) { return h_stat(X) + s_stat(X) + gamma_stat(X); };
    const long fa = flip(A);
    Vect<BlockMatrix> out;
    for (const auto& [Bt, c] : left_raw(omega(g), A.transpose())) {
        BlockMatrix B = Bt.transpose();
        out.add(B, sign(static_cast<int>((fa + flip(B)) % 2)) * c);
    }
    return out;
}

LaurentPoly key_factor(const BlockMatrix& A) {
    LaurentPoly c = sign(static_cast<int>((s_stat(A) + h_stat(A)) % 2));
    for (int i = 1; i <= A.N(); ++i)
        for (int j = 1; j <= A.N(); ++j) c *= qfactorial(A(i, j));
    return c;
}

Vect<BlockMatrix> to_key_basis(const BlockMatrix& A, const Vect<BlockMatrix>& x_image) {
    Vect<BlockMatrix> out;
    const LaurentPoly fa = key_factor(A);
    for (const auto& [B, c] : x_image) out.add(B, divide_exact(c * fa, key_factor(B)));
    return out;
}

Vect<BlockMatrix> act_oracle(const Generator& g, const BlockMatrix& A, Side side) {
    return to_key_basis(A, side == Side::Left ? act_oracle_left(g, A) : act_oracle_right(g, A));
}

namespace {

struct Mat {
    const BlockMatrix& A;
    int N, m;
    explicit Mat(const BlockMatrix& a) : A(a), N(a.N()), m(a.shape().m) {}
    int operator()(int i, int j) const { return A(i, j); }
    int p(int i) const { return A.shape().parity(i); }
    LaurentPoly vp(int idx, int k) const { return signed_pow(A.shape().odd(idx), k); }
    // odd-cell mass strictly on one side of (i,j) in column-major order
    int odd_mass(int i, int j, bool after) const {
        int t = 0;
        for (int y = 1; y <= N; ++y)
            for (int x = 1; x <= N; ++x)
                if (after ? colmajor_less(i, j, x, y) : colmajor_less(x, y, i, j)) t += A.tilde(x, y);
        return t;
    }
};

// one summand: move a unit from cell `from` to cell `to`
void emit(Vect<BlockMatrix>& out, const BlockMatrix& A, int fi, int fj, int ti, int tj, const LaurentPoly& c) {
    BlockMatrix B = A.plus(fi, fj, -1).plus(ti, tj, 1);
    if (B.valid()) out.add(B, c);
}

Vect<BlockMatrix> left_closed(const Generator& g, const Mat& X) {
    const int h = g.index, m = X.m, N = X.N;
    const bool up = g.kind == GenKind::Eup;
    const int src = up ? h + 1 : h, dst = up ? h : h + 1;
    Vect<BlockMatrix> out;
    for (int j = 1; j <= N; ++j) {
        if (!X(src, j)) continue;
        int e = 0, s = 0;
        if (up)
            for (int y = j + 1; y <= N; ++y) e += h == m ? X(h, y) + X(h + 1, y) : X(h, y) - X(h + 1, y);
        else
            for (int y = 1; y < j; ++y) e += h == m ? X(h, y) + X(h + 1, y) : X(h + 1, y) - X(h, y);
        if (h == m) s = X.odd_mass(src, j, true);
        emit(out, X.A, src, j, dst, j, sign(s) * X.vp(dst, e) * qint(X(src, j)));
    }
    return out;
}

Vect<BlockMatrix> right_closed(const Generator& g, const Mat& X) {
    const int h = g.index, m = X.m, N = X.N;
    const bool up = g.kind == GenKind::Eup;
    const int src = up ? h : h + 1, dst = up ? h + 1 : h;
    Vect<BlockMatrix> out;
    for (int i = 1; i <= N; ++i) {
        if (!X(i, src)) continue;
        int sx = 0;
        for (int x = i + 1; x <= N; ++x) sx += X.A.tilde(x, h);
        for (int x = 1; x < i; ++x) sx += X.A.tilde(x, h + 1);
        int e = 0, s;
        if (up)
            for (int x = 1; x < i; ++x) e += h == m ? X(x, h + 1) + X(x, h) : X(x, h + 1) - X(x, h);
        else
            for (int x = i + 1; x <= N; ++x) e += h == m ? X(x, h) + X(x, h + 1) : X(x, h) - X(x, h + 1);
        if (h != m)
            s = (X.p(i) + X.p(dst)) * sx;
        else
            s = X.odd_mass(i, src, false) + (X.p(i) + (up ? 1 : 0)) * sx;
        emit(out, X.A, i, src, i, dst, sign(s) * X.vp(dst, e) * qint(X(i, src)));
    }
    return out;
}

}  // namespace

Vect<BlockMatrix> act_closed(const Generator& g, const BlockMatrix& A, Side side) {
    g.validate(A.shape());
    if (g.is_K()) {
        auto c = side == Side::Left ? A.ro() : A.co();
        return Vect<BlockMatrix>(A, signed_pow(A.shape().odd(g.index), g.exp * c[g.index - 1]));
    }
    Mat X(A);
    return side == Side::Left ? left_closed(g, X) : right_closed(g, X);
}

}  // namespace qhowe::diffop
