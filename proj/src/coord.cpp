#include "qhowe/coord.hpp"

#include <stdexcept>

namespace qhowe::coord {

Word word_of(const BlockMatrix& A) {
    Word w;
    for (int j = 1; j <= A.N(); ++j)
        for (int i = 1; i <= A.N(); ++i)
            for (int t = 0; t < A(i, j); ++t) w.emplace_back(i, j);
    return w;
}

BlockMatrix matrix_of_word(const SuperShape& sh, const Word& w) {
    BlockMatrix A(sh);
    for (const auto& [i, j] : w) A.at(i, j) += 1;
    return A;
}

namespace {

std::pair<long, long> measure(const Word& w) {
    long cols = 0, rows = 0;
    for (size_t p = 0; p < w.size(); ++p)
        for (size_t q = p + 1; q < w.size(); ++q) {
            cols += w[p].second > w[q].second;
            rows += w[p].first > w[q].first;
        }
    return {cols, rows};
}

Word spliced(const Word& w, size_t pos, const Factor& x, const Factor& y) {
    Word r = w;
    r[pos] = x;
    r[pos + 1] = y;
    return r;
}

}  // namespace

Vect<Word> Straightener::words(const Word& w) {
    if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    auto p = [&](int a) { return sh_.parity(a); };
    auto odd = [&](const Factor& f) { return (p(f.first) + p(f.second)) % 2 == 1; };
    Vect<Word> result;
    bool rewritten = false;
    for (size_t pos = 0; pos + 1 < w.size(); ++pos) {
        const Factor x = w[pos], y = w[pos + 1];
        if (x == y && odd(x)) {
            rewritten = true;
            break;
        }
        if (!factor_less(y, x)) continue;
        const auto [a, b] = x;
        const auto [c, d] = y;
        std::vector<std::pair<Word, LaurentPoly>> terms;
        if (b == d) {
            // t_ab t_cb = +- v_b t_cb t_ab, a > c
            int e = (p(a) + p(b)) * (p(c) + p(b));
            terms.emplace_back(spliced(w, pos, y, x), sign(e) * signed_pow(sh_.odd(b), 1));
        } else if (a == c) {
            // t_ab t_ad = +- v_a t_ad t_ab, b > d
            int e = (p(a) + p(b)) * (p(a) + p(d));
            terms.emplace_back(spliced(w, pos, y, x), sign(e) * signed_pow(sh_.odd(a), 1));
        } else if (a > c) {
            int e = (p(a) + p(b)) * (p(c) + p(d));
            int e2 = p(a) * (p(c) + p(d)) + p(c) * p(d);
            terms.emplace_back(spliced(w, pos, y, x), sign(e));
            terms.emplace_back(spliced(w, pos, {c, b}, {a, d}),
                               sign(e2) * (LaurentPoly::monomial(1) - LaurentPoly::monomial(-1)));
        } else {
            int e = (p(a) + p(b)) * (p(c) + p(d));
            terms.emplace_back(spliced(w, pos, y, x), sign(e));
        }
        const auto before = measure(w);
        for (const auto& [w2, c2] : terms) {
            if (!(measure(w2) < before)) throw std::logic_error("straightening step did not decrease the measure");
            result.add(words(w2), c2);
        }
        rewritten = true;
        break;
    }
    if (!rewritten) result.add(w, LaurentPoly(1));
    cache_.emplace(w, result);
    return result;
}

Vect<BlockMatrix> Straightener::operator()(const Word& w) {
    Vect<BlockMatrix> out;
    for (const auto& [nw, c] : words(w)) out.add(matrix_of_word(sh_, nw), c);
    return out;
}

Vect<BlockMatrix> Straightener::operator()(const Vect<Word>& x) {
    Vect<BlockMatrix> out;
    for (const auto& [w, c] : x) out.add((*this)(w), c);
    return out;
}

Vect<BlockMatrix> straighten(const SuperShape& sh, const Word& w) {
    Straightener st(sh);
    return st(w);
}

LaurentPoly rescale(const BlockMatrix& A) {
    const auto& sh = A.shape();
    const int N = A.N(), m = sh.m;
    long e = s_stat(A);
    for (int i = m + 1; i <= N; ++i)
        for (int j = m + 1; j <= N; ++j) e += A(i, j);
    int k = 0;
    auto c = A.co();
    for (int j = 1; j <= N; ++j) {
        int t = c[j - 1] * (c[j - 1] - 1) / 2;
        k += sh.odd(j) ? t : -t;
    }
    return sign(static_cast<int>(e % 2)) * LaurentPoly::monomial(k);
}

namespace {

struct Ctx {
    const BlockMatrix& A;
    const SuperShape& sh;
    int N, m;
    explicit Ctx(const BlockMatrix& a) : A(a), sh(a.shape()), N(a.N()), m(a.shape().m) {}
    int a(int i, int j) const { return A(i, j); }
    int p(int i) const { return sh.parity(i); }
    LaurentPoly vp(int idx, int k) const { return signed_pow(sh.odd(idx), k); }
    // sum of odd-cell entries strictly after (before) (i,j) in column-major order
    int tilde_after(int i, int j) const {
        int t = 0;
        for (int y = 1; y <= N; ++y)
            for (int x = 1; x <= N; ++x)
                if (colmajor_less(i, j, x, y)) t += A.tilde(x, y);
        return t;
    }
    int tilde_before(int i, int j) const {
        int t = 0;
        for (int y = 1; y <= N; ++y)
            for (int x = 1; x <= N; ++x)
                if (colmajor_less(x, y, i, j)) t += A.tilde(x, y);
        return t;
    }
    int sx(int i, int h) const {
        int t = 0;
        for (int x = i + 1; x <= N; ++x) t += A.tilde(x, h);
        for (int x = 1; x < i; ++x) t += A.tilde(x, h + 1);
        return t;
    }
    void put(Vect<BlockMatrix>& out, const BlockMatrix& B, const LaurentPoly& c) const {
        if (B.valid()) out.add(B, c);
    }
};

Vect<BlockMatrix> weight(const Generator& g, const BlockMatrix& A, Side side) {
    auto c = side == Side::Left ? A.ro() : A.co();
    return Vect<BlockMatrix>(A, signed_pow(A.shape().odd(g.index), g.exp * c[g.index - 1]));
}

}  // namespace

Vect<BlockMatrix> act_closed(const Generator& g, const BlockMatrix& A, Side side) {
    g.validate(A.shape());
    if (g.is_K()) return weight(g, A, side);
    Ctx C(A);
    const int h = g.index, m = C.m, N = C.N;
    Vect<BlockMatrix> out;
    if (side == Side::Left) {
        for (int j = 1; j <= N; ++j) {
            if (g.kind == GenKind::Eup) {
                int src = C.a(h + 1, j);
                if (!src) continue;
                BlockMatrix B = A.plus(h, j, 1).plus(h + 1, j, -1);
                int e = 0;
                LaurentPoly c;
                if (h != m) {
                    for (int y = j + 1; y <= N; ++y) e += C.a(h, y) - C.a(h + 1, y);
                    c = C.vp(h, e) * qint(src);
                } else {
                    for (int y = j + 1; y <= N; ++y) e += C.a(m, y) + C.a(m + 1, y);
                    c = sign(C.tilde_after(m + 1, j)) * C.vp(m, e) * qint(src);
                }
                C.put(out, B, c);
            } else {
                int src = C.a(h, j);
                if (!src) continue;
                BlockMatrix B = A.plus(h, j, -1).plus(h + 1, j, 1);
                int e = 0;
                LaurentPoly c;
                if (h != m) {
                    for (int y = 1; y < j; ++y) e += C.a(h + 1, y) - C.a(h, y);
                    c = C.vp(h + 1, e) * qint(src);
                } else {
                    for (int y = 1; y < j; ++y) e += C.a(m, y) + C.a(m + 1, y);
                    c = sign(C.tilde_after(m, j)) * C.vp(m + 1, e) * qint(src);
                }
                C.put(out, B, c);
            }
        }
        return out;
    }
    for (int i = 1; i <= N; ++i) {
        int sx = C.sx(i, h);
        if (g.kind == GenKind::Eup) {
            int src = C.a(i, h);
            if (!src) continue;
            BlockMatrix B = A.plus(i, h, -1).plus(i, h + 1, 1);
            int e = 0, s;
            LaurentPoly c;
            if (h != m) {
                for (int x = 1; x < i; ++x) e += C.a(x, h + 1) - C.a(x, h);
                s = (C.p(i) + C.p(h + 1)) * sx;
            } else {
                for (int x = 1; x < i; ++x) e += C.a(x, m + 1) + C.a(x, m);
                s = C.tilde_before(i, m) + (C.p(i) + 1) * sx;
            }
            C.put(out, B, sign(s) * C.vp(h + 1, e) * qint(src));
        } else {
            int src = C.a(i, h + 1);
            if (!src) continue;
            BlockMatrix B = A.plus(i, h, 1).plus(i, h + 1, -1);
            int e = 0, s;
            if (h != m) {
                for (int x = i + 1; x <= N; ++x) e += C.a(x, h) - C.a(x, h + 1);
                s = (C.p(i) + C.p(h)) * sx;
            } else {
                for (int x = i + 1; x <= N; ++x) e += C.a(x, m) + C.a(x, m + 1);
                s = C.tilde_before(i, m + 1) + C.p(i) * sx;
            }
            C.put(out, B, sign(s) * C.vp(h, e) * qint(src));
        }
    }
    return out;
}

Vect<BlockMatrix> act_closed_paren(const Generator& g, const BlockMatrix& A, Side side) {
    g.validate(A.shape());
    if (g.is_K()) return weight(g, A, side);
    Ctx C(A);
    const int h = g.index, m = C.m, N = C.N;
    Vect<BlockMatrix> out;
    if (side == Side::Left) {
        for (int j = 1; j <= N; ++j) {
            if (g.kind == GenKind::Eup) {
                int src = C.a(h + 1, j);
                if (!src) continue;
                BlockMatrix B = A.plus(h, j, 1).plus(h + 1, j, -1);
                int e = 0;
                LaurentPoly c;
                if (h != m) {
                    for (int y = j + 1; y <= N; ++y) e += C.a(h, y) - C.a(h + 1, y);
                    c = C.vp(h, e) * qint(src);
                } else {
                    for (int y = j + 1; y <= N; ++y) e += C.a(m + 1, y) + C.a(m, y);
                    c = sign(C.tilde_before(m + 1, j) + C.p(j)) * C.vp(m, e) * qint(src);
                }
                C.put(out, B, c);
            } else {
                int src = C.a(h, j);
                if (!src) continue;
                BlockMatrix B = A.plus(h, j, -1).plus(h + 1, j, 1);
                int e = 0;
                LaurentPoly c;
                if (h != m) {
                    for (int y = 1; y < j; ++y) e += C.a(h + 1, y) - C.a(h, y);
                    c = C.vp(h + 1, e) * qint(src);
                } else {
                    for (int y = 1; y < j; ++y) e += C.a(m + 1, y) + C.a(m, y);
                    c = sign(C.tilde_before(m, j) + C.p(j)) * C.vp(m + 1, e) * qint(src);
                }
                C.put(out, B, c);
            }
        }
        return out;
    }
    for (int i = 1; i <= N; ++i) {
        int sx = C.sx(i, h);
        if (g.kind == GenKind::Eup) {
            int src = C.a(i, h);
            if (!src) continue;
            BlockMatrix B = A.plus(i, h, -1).plus(i, h + 1, 1);
            int e = -1, s;
            if (h != m) {
                for (int x = i; x <= N; ++x) e += C.a(x, h) - C.a(x, h + 1);
                s = (C.p(i) + C.p(h + 1)) * sx;
            } else {
                for (int x = i; x <= N; ++x) e += C.a(x, m + 1) + C.a(x, m);
                s = C.tilde_after(i, m) + C.p(i) * (sx + 1) + sx;
            }
            C.put(out, B, sign(s) * C.vp(h, e) * qint(src));
        } else {
            int src = C.a(i, h + 1);
            if (!src) continue;
            BlockMatrix B = A.plus(i, h, 1).plus(i, h + 1, -1);
            int e = -1, s;
            if (h != m) {
                for (int x = 1; x <= i; ++x) e += C.a(x, h + 1) - C.a(x, h);
                s = (C.p(i) + C.p(h)) * sx;
            } else {
                for (int x = 1; x <= i; ++x) e += C.a(x, m + 1) + C.a(x, m);
                s = C.tilde_after(i, m + 1) + C.p(i) * (sx + 1);
            }
            C.put(out, B, sign(s) * C.vp(h + 1, e) * qint(src));
        }
    }
    return out;
}

Vect<Factor> act_factor(const SuperShape& sh, const Generator& g, const Factor& t, Side side) {
    const auto [i, j] = t;
    const int h = g.index;
    // the row index is acted on from the left, the column index from the right
    const int r = side == Side::Left ? i : j;
    const int other = side == Side::Left ? j : i;
    auto p = [&](int a) { return sh.parity(a); };
    auto moved = [&](int to) { return side == Side::Left ? Factor{to, j} : Factor{i, to}; };
    switch (g.kind) {
        case GenKind::K:
            return Vect<Factor>(t, signed_pow(sh.odd(h), r == h ? g.exp : 0));
        case GenKind::Eup:
            if (side == Side::Left && r == h + 1) return Vect<Factor>(moved(h), sign(p(other) * (p(h) + p(h + 1))));
            if (side == Side::Right && r == h) return Vect<Factor>(moved(h + 1), sign(p(other) * (p(h) + p(h + 1))));
            return {};
        case GenKind::Edown:
            if (side == Side::Left && r == h) return Vect<Factor>(moved(h + 1), sign(p(other) * (p(h) + p(h + 1))));
            if (side == Side::Right && r == h + 1) return Vect<Factor>(moved(h), sign(p(other) * (p(h) + p(h + 1))));
            return {};
    }
    return {};
}

Vect<BlockMatrix> act_oracle(const Generator& g, const BlockMatrix& A, Side side, Straightener& st) {
    const auto& sh = A.shape();
    g.validate(sh);
    const Word w = word_of(A);
    const size_t d = w.size();
    auto fpar = [&](const Factor& f) { return (sh.parity(f.first) + sh.parity(f.second)) % 2; };
    Vect<Word> acc;
    // one coproduct leg per factor position; K is grouplike
    auto apply_legs = [&](const std::vector<GenWord>& legs, const LaurentPoly& scale) {
        Vect<Word> partial(Word{}, scale);
        for (size_t c = 0; c < d; ++c) {
            Vect<Factor> img(w[c]);
            for (auto it = legs[c].rbegin(); it != legs[c].rend(); ++it) {
                Vect<Factor> nxt;
                for (const auto& [f, cf] : img) nxt.add(act_factor(sh, *it, f, side), cf);
                img = std::move(nxt);
            }
            Vect<Word> nxt;
            for (const auto& [pw, pc] : partial)
                for (const auto& [f, cf] : img) {
                    Word ext = pw;
                    ext.push_back(f);
                    nxt.add(ext, pc * cf);
                }
            partial = std::move(nxt);
        }
        acc.add(partial);
    };
    if (g.is_K()) {
        apply_legs(std::vector<GenWord>(d, GenWord{g}), LaurentPoly(1));
        return st(acc);
    }
    const int h = g.index;
    const GenWord tail = g.kind == GenKind::Eup ? GenWord{Generator::K(h, 1), Generator::K(h + 1, -1)} : GenWord{};
    const GenWord head = g.kind == GenKind::Edown ? GenWord{Generator::K(h, -1), Generator::K(h + 1, 1)} : GenWord{};
    for (size_t c = 0; c < d; ++c) {
        std::vector<GenWord> legs(d);
        for (size_t k = 0; k < d; ++k) legs[k] = k < c ? head : (k == c ? GenWord{g} : tail);
        int crossed = 0;
        if (g.parity(sh)) {
            if (side == Side::Left)
                for (size_t k = 0; k < c; ++k) crossed += fpar(w[k]);
            else
                for (size_t k = c + 1; k < d; ++k) crossed += fpar(w[k]);
        }
        apply_legs(legs, sign(crossed));
    }
    return st(acc);
}

Vect<BlockMatrix> paren_to_brace(const BlockMatrix& source, const Vect<BlockMatrix>& paren_image) {
    Vect<BlockMatrix> out;
    const LaurentPoly rs = rescale(source);
    for (const auto& [B, c] : paren_image) out.add(B, divide_exact(c * rs, rescale(B)));
    return out;
}

}  // namespace qhowe::coord
