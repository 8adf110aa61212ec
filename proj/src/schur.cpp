#include "qhowe/schur.hpp"

#include <algorithm>
#include <sstream>

namespace qhowe::schur {

HeckeElem::HeckeElem(const Perm& w, const LaurentPoly& c) { add(w, c); }

void HeckeElem::add(const Perm& w, const LaurentPoly& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HeckeElem HeckeElem::times_simple(int k) const {
    HeckeElem out;
    for (const auto& [w, c] : terms_) {
        Perm ws = w * Perm::simple(w.size(), k);
        if (w(k) < w(k + 1)) {
            out.add(ws, c);
        } else {
            out.add(w, c * (LaurentPoly::monomial(2) - LaurentPoly(1)));
            out.add(ws, c * LaurentPoly::monomial(2));
        }
    }
    return out;
}

std::vector<int> reduced_word(const Perm& w) {
    // bubble sort w to the identity from the right: w = (w s_k) s_k with l(w s_k) < l(w)
    std::vector<int> word;
    Perm cur = w;
    while (cur.length() > 0) {
        int k = 1;
        while (!(cur(k) > cur(k + 1))) ++k;
        word.push_back(k);
        cur = cur * Perm::simple(cur.size(), k);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

HeckeElem operator*(const HeckeElem& x, const HeckeElem& y) {
    HeckeElem out;
    for (const auto& [w, c] : y.terms_) {
        HeckeElem part = x;
        for (int k : reduced_word(w)) part = part.times_simple(k);
        for (const auto& [u, cu] : part.terms_) out.add(u, cu * c);
    }
    return out;
}

HeckeElem operator+(HeckeElem x, const HeckeElem& y) {
    for (const auto& [w, c] : y.terms_) x.add(w, c);
    return x;
}

std::string HeckeElem::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*T" << w.str();
    }
    return os.str();
}

Vect<TensorIndex> tensor_act(const SuperShape& sh, const TensorIndex& i, int k) {
    if (k < 1 || k >= static_cast<int>(i.size())) throw std::invalid_argument("simple reflection out of range");
    const int a = i[k - 1], b = i[k];
    TensorIndex j = i;
    std::swap(j[k - 1], j[k]);
    const LaurentPoly sg = sign(sh.parity(a) * sh.parity(b));
    const LaurentPoly v2 = LaurentPoly::monomial(2);
    Vect<TensorIndex> out;
    if (a < b) {
        out.add(j, sg);
    } else if (a == b) {
        out.add(i, sh.odd(a) ? LaurentPoly(-1) : v2);
    } else {
        out.add(j, v2 * sg);
        out.add(i, v2 - LaurentPoly(1));
    }
    return out;
}

End End::scaled(const LaurentPoly& c) const {
    End out(dim());
    for (size_t i = 0; i < dim(); ++i) out.rows_[i].add(rows_[i], c);
    return out;
}

bool End::is_zero() const {
    for (const auto& r : rows_)
        if (!r.is_zero()) return false;
    return true;
}

End operator*(const End& x, const End& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("endomorphism size mismatch");
    End out(x.dim());
    for (size_t i = 0; i < x.dim(); ++i)
        for (const auto& [k, c] : x.rows_[i]) out.rows_[i].add(y.rows_[k], c);
    return out;
}

End operator+(End x, const End& y) {
    for (size_t i = 0; i < x.dim(); ++i) x.rows_[i].add(y.rows_[i]);
    return x;
}

End operator-(End x, const End& y) {
    for (size_t i = 0; i < x.dim(); ++i) x.rows_[i].add(y.rows_[i], LaurentPoly(-1));
    return x;
}

SchurAlgebra::SchurAlgebra(const SuperShape& sh, int d) : sh_(sh), d_(d) {
    if (d < 0) throw std::invalid_argument("negative degree");
    TensorIndex cur(d, 1);
    const int N = sh.N();
    while (true) {
        position_.emplace(cur, indices_.size());
        indices_.push_back(cur);
        int p = d - 1;
        while (p >= 0 && cur[p] == N) cur[p--] = 1;
        if (p < 0) break;
        ++cur[p];
    }
    basis_ = enumerate_M(sh, d);
    for (int k = 1; k < d; ++k) {
        End t(dim());
        for (size_t r = 0; r < dim(); ++r)
            for (const auto& [j, c] : tensor_act(sh, indices_[r], k)) t.add(r, position(j), c);
        simple_.push_back(std::move(t));
    }
}

size_t SchurAlgebra::position(const TensorIndex& i) const {
    auto it = position_.find(i);
    if (it == position_.end()) throw std::invalid_argument("tensor index out of range");
    return it->second;
}

const End& SchurAlgebra::T(const Perm& w) {
    if (auto it = T_cache_.find(w); it != T_cache_.end()) return it->second;
    End r;
    if (w.length() == 0) {
        r = End(dim());
        for (size_t i = 0; i < dim(); ++i) r.add(i, i, LaurentPoly(1));
    } else {
        int k = 1;
        while (!(w(k) > w(k + 1))) ++k;
        Perm ws = w * Perm::simple(d_, k);
        r = T(ws) * T_simple(k);
    }
    return T_cache_.emplace(w, std::move(r)).first->second;
}

End SchurAlgebra::hecke(const HeckeElem& x) {
    End out(dim());
    for (const auto& [w, c] : x.terms()) out = out + T(w).scaled(c);
    return out;
}

Perm SchurAlgebra::coset_rep(const BlockMatrix& A) const {
    if (A.degree() != d_ || !(A.shape() == sh_)) throw std::invalid_argument("matrix outside M(m|n,d)");
    const Composition lam = A.ro(), rho = A.co();
    std::optional<Perm> best;
    for (const auto& g : all_perms(d_))
        if (jmat(sh_, lam, g, rho) == A && (!best || g.length() < best->length())) best = g;
    if (!best) throw NoCosetRepresentative();
    return *best;
}

std::pair<size_t, size_t> SchurAlgebra::pivot(const BlockMatrix& A) const {
    const Composition lam = A.ro(), rho = A.co();
    const Perm g = coset_rep(A);
    TensorIndex il, ir;
    for (int a = 1; a <= sh_.N(); ++a) {
        il.insert(il.end(), lam[a - 1], a);
        ir.insert(ir.end(), rho[a - 1], a);
    }
    TensorIndex j(d_);
    for (int k = 1; k <= d_; ++k) j[k - 1] = ir[g(k) - 1];
    return {position(il), position(j)};
}

const End& SchurAlgebra::eA(const BlockMatrix& A) {
    if (auto it = e_cache_.find(A); it != e_cache_.end()) return it->second;
    const auto [pi, pj] = pivot(A);
    Composition nu;
    for (int i = 1; i <= sh_.N(); ++i)
        for (int j = 1; j <= sh_.N(); ++j) nu.push_back(A(i, j));
    End out(dim());
    for (const auto& w : min_reps(nu)) {
        const End& Tw = T(w);
        const End& Twi = T(w.inverse());
        const LaurentPoly scale = LaurentPoly::monomial(-2 * w.length());
        // T_{w^-1} e_{pi,pj} T_w
        for (size_t i = 0; i < dim(); ++i) {
            LaurentPoly c = Twi.at(i, pi);
            if (c.is_zero()) continue;
            for (const auto& [k, ck] : Tw.row(pj)) out.add(i, k, scale * c * ck);
        }
    }
    return e_cache_.emplace(A, std::move(out)).first->second;
}

End SchurAlgebra::as_end(const SchurElem& x) {
    End out(dim());
    for (const auto& [A, c] : x) out = out + eA(A).scaled(c);
    return out;
}

bool SchurAlgebra::commutes_with_hecke(const End& f) const {
    for (const auto& t : simple_)
        if (!(f * t == t * f)) return false;
    return true;
}

SchurElem SchurAlgebra::decompose(const End& f) {
    if (f.dim() != dim()) throw std::invalid_argument("endomorphism size mismatch");
    SchurElem out;
    for (const auto& A : basis_) {
        const auto [pi, pj] = pivot(A);
        out.add(A, f.at(pi, pj));
    }
    if (!(as_end(out) == f)) throw NotInSpan();
    return out;
}

SchurElem SchurAlgebra::mul(const SchurElem& x, const SchurElem& y) { return decompose(as_end(x) * as_end(y)); }

SchurElem SchurAlgebra::mul(const BlockMatrix& A, const BlockMatrix& B) { return decompose(eA(A) * eA(B)); }

GenForm generator_form(const BlockMatrix& B, int* h) {
    int count = 0, hi = 0, hj = 0;
    for (int i = 1; i <= B.N(); ++i)
        for (int j = 1; j <= B.N(); ++j)
            if (i != j && B(i, j)) {
                count += B(i, j);
                hi = i;
                hj = j;
            }
    if (count == 0) return GenForm::Diagonal;
    if (count != 1) return GenForm::None;
    if (hj == hi + 1) {
        if (h) *h = hi;
        return GenForm::Up;
    }
    if (hi == hj + 1) {
        if (h) *h = hj;
        return GenForm::Down;
    }
    return GenForm::None;
}

namespace {

void put(SchurElem& out, const BlockMatrix& X, const LaurentPoly& c) {
    if (X.valid()) out.add(X, c);
}

// e_A e_B, B of generator form Up (E) or Down (F) at h
SchurElem right_generator(const BlockMatrix& A, int h, bool up) {
    const auto& sh = A.shape();
    const int m = sh.m, N = A.N();
    SchurElem out;
    auto v = [](int k) { return LaurentPoly::monomial(k); };
    int oddblock = 0;  // sum_{x<i, y>m} a_xy, accumulated over i
    for (int i = 1; i <= N; ++i) {
        if (i > 1)
            for (int y = m + 1; y <= N; ++y) oddblock += A(i - 1, y);
        LaurentPoly f;
        int s = 0;
        if (up) {
            if (A(i, h) < 1) continue;
            if (h < m) {
                for (int x = 1; x < i; ++x) s += A(x, h + 1);
                f = v(2 * s);
            } else if (h == m) {
                f = sign(oddblock);
            } else {
                for (int x = i + 1; x <= N; ++x) s += A(x, h);
                f = v(-2 * s);
            }
            put(out, A.plus(i, h, -1).plus(i, h + 1, 1), f * qbracket(A(i, h + 1) + 1, sh.odd(h + 1)));
        } else {
            if (A(i, h + 1) < 1) continue;
            if (h < m) {
                for (int x = i + 1; x <= N; ++x) s += A(x, h);
                f = v(2 * s);
            } else if (h == m) {
                for (int x = 1; x < i; ++x) s -= A(x, m + 1);
                for (int x = i + 1; x <= N; ++x) s += A(x, m);
                f = sign(oddblock) * v(2 * s);
            } else {
                for (int x = 1; x < i; ++x) s += A(x, h + 1);
                f = v(-2 * s);
            }
            put(out, A.plus(i, h, 1).plus(i, h + 1, -1), f * qbracket(A(i, h) + 1, sh.odd(h)));
        }
    }
    return out;
}

// e_B e_A, B of generator form Up (E) or Down (F) at h
SchurElem left_generator(const BlockMatrix& A, int h, bool up) {
    const auto& sh = A.shape();
    const int m = sh.m, N = A.N();
    auto p = [&](int a) { return sh.parity(a); };
    auto v = [](int k) { return LaurentPoly::monomial(k); };
    SchurElem out;
    for (int j = 1; j <= N; ++j) {
        const int pj = p(j);
        // h < m uses the plain parity weights; h = m twists s2; h > m twists both
        const int t1 = h > m ? 1 : 0, t2 = h >= m ? 1 : 0;
        int s1 = 0, s2 = 0;
        for (int y = j + 1; y <= N; ++y) s1 += (t1 + pj * p(y)) * A(h, y);
        for (int y = 1; y < j; ++y) s2 += (t2 + pj * p(y)) * A(h + 1, y);
        const LaurentPoly sg = sign(s1 + s2);
        int e = 0;
        if (up) {
            if (A(h + 1, j) < 1) continue;
            if (h < m) {
                for (int y = j + 1; y <= N; ++y) e += 2 * A(h, y);
            } else if (h == m) {
                for (int y = 1; y < j; ++y) e -= 2 * A(m + 1, y);
                for (int y = j + 1; y <= N; ++y) e += 2 * A(m, y);
            } else {
                for (int y = 1; y < j; ++y) e -= 2 * A(h + 1, y);
            }
            put(out, A.plus(h, j, 1).plus(h + 1, j, -1), sg * v(e) * qbracket(A(h, j) + 1, sh.odd(h)));
        } else {
            if (A(h, j) < 1) continue;
            if (h < m) {
                for (int y = 1; y < j; ++y) e += 2 * A(h + 1, y);
            } else if (h > m) {
                for (int y = j + 1; y <= N; ++y) e -= 2 * A(h, y);
            }
            put(out, A.plus(h, j, -1).plus(h + 1, j, 1), sg * v(e) * qbracket(A(h + 1, j) + 1, sh.odd(h + 1)));
        }
    }
    return out;
}

}  // namespace

SchurElem mul_closed_e(const BlockMatrix& A, const BlockMatrix& B) {
    if (!(A.shape() == B.shape()) || A.degree() != B.degree()) throw ShapeMismatch();
    if (A.co() != B.ro()) throw ShapeMismatch();
    int h = 0;
    switch (generator_form(B, &h)) {
        case GenForm::Diagonal:
            return SchurElem(A);
        case GenForm::Up:
            return right_generator(A, h, true);
        case GenForm::Down:
            return right_generator(A, h, false);
        case GenForm::None:
            break;
    }
    switch (generator_form(A, &h)) {
        case GenForm::Diagonal:
            return SchurElem(B);
        case GenForm::Up:
            return left_generator(B, h, true);
        case GenForm::Down:
            return left_generator(B, h, false);
        case GenForm::None:
            break;
    }
    throw NotGeneratorForm();
}

SchurElem mul_closed_e(const SchurElem& x, const SchurElem& y) {
    SchurElem out;
    for (const auto& [A, a] : x)
        for (const auto& [B, b] : y)
            if (A.co() == B.ro()) out.add(mul_closed_e(A, B), a * b);
    return out;
}

SchurElem tau(const SchurElem& x) {
    SchurElem out;
    for (const auto& [A, c] : x) {
        BlockMatrix At = A.transpose();
        out.add(At, sign(static_cast<int>((hat_stat(A) + hat_stat(At)) % 2)) * c);
    }
    return out;
}

SchurElem diagonal_sum(const SuperShape& sh, const std::vector<Composition>& lambdas) {
    SchurElem out;
    for (const auto& lam : lambdas) out.add(BlockMatrix::diag(sh, lam), LaurentPoly(1));
    return out;
}

}  // namespace qhowe::schur
