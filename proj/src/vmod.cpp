#include "qhowe/vmod.hpp"

#include "qhowe/rational_fn.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace qhowe::vmod {

std::vector<BlockMatrix> vbasis(const SuperShape& sh, const Ranks& rk, int d) { return enumerate_M(sh, rk, d); }

std::vector<Generator> allowed_generators(const SuperShape& sh, const Ranks& rk, Side side) {
    return side == Side::Left ? generators(restricted_indices(sh, rk.k, rk.l))
                              : generators(restricted_indices(sh, rk.r, rk.s));
}

bool allowed(const SuperShape& sh, const Ranks& rk, const Generator& g, Side side) {
    auto gens = allowed_generators(sh, rk, side);
    return std::find(gens.begin(), gens.end(), g) != gens.end();
}

namespace {

LaurentPoly vpow(const SuperShape& sh, int idx, int k) { return signed_pow(sh.odd(idx), k); }

int odd_mass_after(const BlockMatrix& A, int i, int j) {
    int t = 0;
    for (int y = j; y <= A.N(); ++y)
        for (int x = (y == j ? i + 1 : 1); x <= A.N(); ++x) t += A.tilde(x, y);
    return t;
}

int odd_mass_before(const BlockMatrix& A, int i, int j) {
    int t = 0;
    for (int y = 1; y <= j; ++y)
        for (int x = 1; x <= (y == j ? i - 1 : A.N()); ++x) t += A.tilde(x, y);
    return t;
}

}  // namespace

Vect<BlockMatrix> act(const Generator& g, const BlockMatrix& A, Side side) {
    const auto& sh = A.shape();
    g.validate(sh);
    const int N = sh.N(), m = sh.m, h = g.index;
    Vect<BlockMatrix> out;
    if (g.is_K()) {
        auto c = side == Side::Left ? A.ro() : A.co();
        out.add(A, vpow(sh, h, g.exp * c[h - 1]));
        return out;
    }
    const bool up = g.kind == GenKind::Eup;
    const bool odd_gen = h == m;
    if (side == Side::Left) {
        // row move h+1 -> h (E) or h -> h+1 (F), one term per column j
        const int from = up ? h + 1 : h, to = up ? h : h + 1;
        for (int j = 1; j <= N; ++j) {
            const int a = A(from, j);
            if (a == 0) continue;
            BlockMatrix B = A.plus(from, j, -1).plus(to, j, 1);
            if (!B.valid()) continue;
            int e = 0;
            const int lo = up ? j + 1 : 1, hi = up ? N : j - 1;
            for (int y = lo; y <= hi; ++y) {
                if (odd_gen)
                    e += A(h, y) + A(h + 1, y);
                else
                    e += A(to, y) - A(from, y);
            }
            int s = odd_gen ? odd_mass_after(A, from, j) : 0;
            out.add(B, sign(s) * vpow(sh, to, e) * qint(a));
        }
        return out;
    }
    const int from = up ? h : h + 1, to = up ? h + 1 : h;
    for (int i = 1; i <= N; ++i) {
        const int a = A(i, from);
        if (a == 0) continue;
        BlockMatrix B = A.plus(i, from, -1).plus(i, to, 1);
        if (!B.valid()) continue;
        int sx = 0;
        for (int x = i + 1; x <= N; ++x) sx += A.tilde(x, h);
        for (int x = 1; x < i; ++x) sx += A.tilde(x, h + 1);
        int e = 0;
        const int lo = up ? 1 : i + 1, hi = up ? i - 1 : N;
        for (int x = lo; x <= hi; ++x) {
            if (odd_gen)
                e += A(x, h) + A(x, h + 1);
            else
                e += A(x, to) - A(x, from);
        }
        int s;
        if (odd_gen)
            s = odd_mass_before(A, i, from) + (sh.parity(i) + (up ? 1 : 0)) * sx;
        else
            s = (sh.parity(i) + sh.parity(to)) * sx;
        out.add(B, sign(s) * vpow(sh, to, e) * qint(a));
    }
    return out;
}

Vect<BlockMatrix> act(const Generator& g, const BlockMatrix& A, Side side, const Ranks& rk) {
    const auto& sh = A.shape();
    if (!allowed(sh, rk, g, side)) throw std::invalid_argument("generator " + g.str() + " outside the restricted range");
    if (!A.supported_in(restricted_indices(sh, rk.k, rk.l), restricted_indices(sh, rk.r, rk.s)))
        throw std::invalid_argument("matrix outside M(k|l,r|s)");
    return act(g, A, side);
}

namespace {

LaurentPoly factorial_product(const Composition& lam) {
    LaurentPoly c(1);
    for (int x : lam) c *= qfactorial(x);
    return c;
}

// diag(lambda) + e_{h,h+1} (up) or e_{h+1,h}
BlockMatrix generator_matrix(const SuperShape& sh, const Composition& lam, int h, bool up) {
    return BlockMatrix::diag(sh, lam).plus(up ? h : h + 1, up ? h + 1 : h, 1);
}

// lambda with generator_matrix(lambda) having the given column sums (left) or row sums (right)
std::optional<Composition> generator_weight(const Composition& sums, int h, bool up, bool match_columns) {
    Composition lam = sums;
    // columns of diag+e_{h,h+1} are lambda+e_{h+1}; rows are lambda+e_h
    int shifted = (up == match_columns) ? h + 1 : h;
    if (lam[shifted - 1] == 0) return std::nullopt;
    --lam[shifted - 1];
    return lam;
}

struct Equation {
    BlockMatrix gen, A, X;
    Composition lam;     // weight of the generator matrix
    RationalFn p, t;     // c_gen k_A p = t k_X with c_gen = k_gen / prod[lam]!
};

}  // namespace

BracketBasis::BracketBasis(const SuperShape& sh, int d) : sh_(sh), d_(d) {
    const int N = sh.N();
    const auto basis = enumerate_M(sh, d);
    std::map<BlockMatrix, RationalFn> known;
    for (const auto& lam : compositions(N, d)) known.emplace(BlockMatrix::diag(sh, lam), RationalFn(factorial_product(lam)));
    // spanning tree of the composition graph through E-type generator matrices
    if (d > 0) {
        std::set<Composition> seen;
        std::deque<Composition> queue;
        Composition start(N, 0);
        start[0] = d;
        seen.insert(start);
        queue.push_back(start);
        while (!queue.empty()) {
            Composition mu = queue.front();
            queue.pop_front();
            for (int h = 1; h < N; ++h)
                for (int dir = 0; dir < 2; ++dir) {
                    // edge between lambda+e_h and lambda+e_{h+1}
                    int leave = dir == 0 ? h : h + 1, enter = dir == 0 ? h + 1 : h;
                    if (mu[leave - 1] == 0) continue;
                    Composition nu = mu;
                    --nu[leave - 1];
                    ++nu[enter - 1];
                    if (seen.count(nu)) continue;
                    seen.insert(nu);
                    queue.push_back(nu);
                    Composition lam = mu;
                    --lam[leave - 1];
                    known[generator_matrix(sh, lam, h, true)] = RationalFn(factorial_product(lam));
                }
        }
    }
    std::vector<Equation> eqs;
    for (const auto& A : enumerate_M(sh, d))
        for (const auto& g : generators(sh)) {
            if (g.is_K()) continue;
            const bool up = g.kind == GenKind::Eup;
            for (Side side : {Side::Left, Side::Right}) {
                const Vect<BlockMatrix> target = act(g, A, side);
                auto lam = generator_weight(side == Side::Left ? A.ro() : A.co(), g.index, up, side == Side::Left);
                schur::SchurElem prod;
                BlockMatrix G;
                if (lam) {
                    G = generator_matrix(sh, *lam, g.index, up);
                    prod = side == Side::Left ? schur::mul_closed_e(G, A) : schur::mul_closed_e(A, G);
                }
                std::set<BlockMatrix> keys;
                for (const auto& [X, c] : target) keys.insert(X);
                for (const auto& [X, c] : prod) keys.insert(X);
                for (const auto& X : keys) {
                    if (!lam) {
                        ++inconsistencies_;
                        continue;
                    }
                    eqs.push_back({G, A, X, *lam, RationalFn(prod.coeff(X)), RationalFn(target.coeff(X))});
                }
            }
        }
    auto has = [&](const BlockMatrix& B) { return known.count(B) > 0; };
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& e : eqs) {
            const RationalFn fl(factorial_product(e.lam));
            int unknown = !has(e.gen) + !has(e.A) + !has(e.X);
            if (unknown != 1 || e.p.is_zero() || e.t.is_zero()) continue;
            if (!has(e.gen))
                known[e.gen] = e.t * known.at(e.X) * fl / (known.at(e.A) * e.p);
            else if (!has(e.A))
                known[e.A] = e.t * known.at(e.X) * fl / (known.at(e.gen) * e.p);
            else
                known[e.X] = known.at(e.gen) * known.at(e.A) * e.p / (fl * e.t);
            progress = true;
        }
    }
    for (const auto& A : enumerate_M(sh, d)) {
        auto it = known.find(A);
        if (it == known.end()) throw std::logic_error("bracket normalization left " + A.str() + " undetermined");
        if (!it->second.is_laurent()) throw std::logic_error("bracket scalar of " + A.str() + " is not Laurent");
        k_.emplace(A, it->second.to_laurent());
    }
    for (const auto& e : eqs) {
        const RationalFn fl(factorial_product(e.lam));
        if (!(known.at(e.gen) * known.at(e.A) * e.p == e.t * known.at(e.X) * fl)) ++inconsistencies_;
    }
}

const LaurentPoly& BracketBasis::scale(const BlockMatrix& A) const {
    auto it = k_.find(A);
    if (it == k_.end()) throw UnknownBasisKey();
    return it->second;
}

schur::SchurElem BracketBasis::to_e(const Vect<BlockMatrix>& bracket) const {
    schur::SchurElem out;
    for (const auto& [A, c] : bracket) out.add(A, c * scale(A));
    return out;
}

Vect<BlockMatrix> BracketBasis::from_e(const schur::SchurElem& e) const {
    Vect<BlockMatrix> out;
    for (const auto& [A, c] : e) out.add(A, divide_exact(c, scale(A)));
    return out;
}

schur::SchurElem BracketBasis::surjection_image(const Generator& g) const {
    g.validate(sh_);
    const int N = sh_.N();
    schur::SchurElem out;
    if (g.is_K()) {
        for (const auto& lam : compositions(N, d_))
            out.add(BlockMatrix::diag(sh_, lam), vpow(sh_, g.index, g.exp * lam[g.index - 1]));
        return out;
    }
    if (d_ == 0) return out;
    for (const auto& lam : compositions(N, d_ - 1)) {
        BlockMatrix B = generator_matrix(sh_, lam, g.index, g.kind == GenKind::Eup);
        out.add(B, divide_exact(scale(B), factorial_product(lam)));
    }
    return out;
}

Vect<BlockMatrix> BracketBasis::act_via_schur(const Generator& g, const BlockMatrix& A, Side side,
                                              schur::SchurAlgebra& S) const {
    const schur::SchurElem x = to_e(Vect<BlockMatrix>(A));
    const schur::SchurElem img = surjection_image(g);
    return from_e(side == Side::Left ? S.mul(img, x) : S.mul(x, img));
}

schur::SchurElem xi(const SuperShape& sh, int k, int l, int d) {
    if (k < 0 || l < 0 || k > sh.m || l > sh.n) throw std::invalid_argument("ranks outside the shape");
    return schur::diagonal_sum(sh, tilde_compositions(k, l, d, sh));
}

}  // namespace qhowe::vmod
