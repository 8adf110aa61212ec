#include "qhowe/verify.hpp"

#include "qhowe/coord.hpp"
#include "qhowe/diffop.hpp"
#include "qhowe/rational_fn.hpp"
#include "qhowe/schur.hpp"
#include "qhowe/vmod.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qhowe::verify {

std::string realization_str(Realization r) {
    switch (r) {
        case Realization::Coord:
            return "coord";
        case Realization::Diffop:
            return "diffop";
        case Realization::Vmod:
            return "vmod";
    }
    return "?";
}

Realization parse_realization(const std::string& s) {
    for (Realization r : all_realizations())
        if (realization_str(r) == s) return r;
    throw std::invalid_argument("unknown realization '" + s + "'");
}

const std::vector<Realization>& all_realizations() {
    static const std::vector<Realization> all{Realization::Coord, Realization::Diffop, Realization::Vmod};
    return all;
}

SidedAction closed_action(Realization r) {
    switch (r) {
        case Realization::Coord:
            return [](const Generator& g, const BlockMatrix& A, Side s) { return coord::act_closed(g, A, s); };
        case Realization::Diffop:
            return [](const Generator& g, const BlockMatrix& A, Side s) { return diffop::act_closed(g, A, s); };
        case Realization::Vmod:
            return [](const Generator& g, const BlockMatrix& A, Side s) { return vmod::act(g, A, s); };
    }
    throw std::invalid_argument("unknown realization");
}

SidedAction sign_flipped(SidedAction f, const Generator& g, Side side) {
    return [f = std::move(f), g, side](const Generator& x, const BlockMatrix& A, Side s) {
        auto out = f(x, A, s);
        return x == g && s == side ? out.scaled(LaurentPoly(-1)) : out;
    };
}

StructureTable structure_table(Realization r, const Generator& g, Side side, const SuperShape& sh, const Ranks& rk,
                               int d) {
    if (!vmod::allowed(sh, rk, g, side)) throw std::invalid_argument("generator " + g.str() + " outside the restricted range");
    StructureTable t{r, g, side, d, {}};
    auto f = closed_action(r);
    for (const auto& A : enumerate_M(sh, rk, d)) t.rows.emplace(A, f(g, A, side));
    return t;
}

void Report::fail(const std::string& witness) {
    ++failed;
    if (witnesses.size() < 5) witnesses.push_back(witness);
}

void Report::merge(const Report& o) {
    checked += o.checked;
    for (const auto& w : o.witnesses)
        if (witnesses.size() < 5) witnesses.push_back(w);
    failed += o.failed;
}

std::string Report::summary() const {
    std::ostringstream os;
    os << name << ": " << (pass() ? "pass" : "FAIL") << " (" << checked << " checked, " << failed << " failed)";
    for (const auto& w : witnesses) os << "\n  witness: " << w;
    return os.str();
}

std::vector<Ranks> all_ranks(const SuperShape& sh) {
    std::vector<Ranks> out;
    for (int k = 0; k <= sh.m; ++k)
        for (int l = 0; l <= sh.n; ++l)
            for (int r = 0; r <= sh.m; ++r)
                for (int s = 0; s <= sh.n; ++s) out.push_back({k, l, r, s});
    return out;
}

std::string ranks_str(const Ranks& rk) {
    std::ostringstream os;
    os << "(" << rk.k << "," << rk.l << "," << rk.r << "," << rk.s << ")";
    return os.str();
}

namespace {

std::string vect_str(const Vect<BlockMatrix>& x) {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [A, c] : x) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")" << A.str();
    }
    return os.str();
}

std::string witness(const Generator& g, Side side, const BlockMatrix& A, const Vect<BlockMatrix>& x,
                    const Vect<BlockMatrix>& y) {
    return side_str(side) + " " + g.str() + " on " + A.str() + ": " + vect_str(x) + " vs " + vect_str(y);
}

}  // namespace

Report compare_actions(const std::string& name, const SidedAction& f, const SidedAction& g, const SuperShape& sh,
                       const Ranks& rk, int dmax) {
    Report rep{name};
    for (int d = 0; d <= dmax; ++d) {
        const auto basis = enumerate_M(sh, rk, d);
        for (Side side : {Side::Left, Side::Right})
            for (const auto& x : vmod::allowed_generators(sh, rk, side))
                for (const auto& A : basis) {
                    ++rep.checked;
                    auto a = f(x, A, side), b = g(x, A, side);
                    if (!(a == b)) rep.fail(witness(x, side, A, a, b));
                }
    }
    return rep;
}

Report compare_all(const SuperShape& sh, const Ranks& rk, int dmax, const std::map<Realization, SidedAction>& overrides) {
    auto pick = [&](Realization r) {
        auto it = overrides.find(r);
        return it != overrides.end() ? it->second : closed_action(r);
    };
    Report rep{"equivalence " + ranks_str(rk)};
    const auto base = pick(Realization::Coord);
    for (Realization r : {Realization::Diffop, Realization::Vmod}) {
        Report part = compare_actions("coord vs " + realization_str(r), base, pick(r), sh, rk, dmax);
        for (auto& w : part.witnesses) w = "coord vs " + realization_str(r) + ", " + w;
        rep.merge(part);
    }
    return rep;
}

Report natural_relations(const SuperShape& sh) {
    Report rep{"natural module " + std::to_string(sh.m) + "|" + std::to_string(sh.n)};
    std::vector<int> basis, idx;
    for (int a = 1; a <= sh.N(); ++a) basis.push_back(a), idx.push_back(a);
    Action<int> act = [&](const Generator& g, const int& b) { return natural_action(sh, g, b); };
    for (const auto& res : relation_suite(act, basis, sh, idx).results) {
        ++rep.checked;
        if (!res.pass) rep.fail(res.relation + " at " + res.witness);
    }
    return rep;
}

Report relation_check(const std::string& name, const SidedAction& f, const SuperShape& sh, const Ranks& rk, int dmax) {
    Report rep{name};
    for (int d = 0; d <= dmax; ++d) {
        const auto basis = enumerate_M(sh, rk, d);
        if (basis.empty()) continue;
        for (Side side : {Side::Left, Side::Right}) {
            auto idx = side == Side::Left ? restricted_indices(sh, rk.k, rk.l) : restricted_indices(sh, rk.r, rk.s);
            if (idx.empty()) continue;
            Action<BlockMatrix> act = [&](const Generator& g, const BlockMatrix& A) { return f(g, A, side); };
            for (const auto& res : relation_suite(act, basis, sh, idx, side).results) {
                ++rep.checked;
                if (!res.pass) rep.fail(side_str(side) + " " + res.relation + " at " + res.witness + ", d=" + std::to_string(d));
            }
        }
    }
    return rep;
}

Report commute_check(const std::string& name, const SidedAction& f, const SuperShape& sh, const Ranks& rk, int dmax) {
    Report rep{name};
    auto apply = [&](const Generator& g, const Vect<BlockMatrix>& x, Side side) {
        Vect<BlockMatrix> out;
        for (const auto& [A, c] : x) out.add(f(g, A, side), c);
        return out;
    };
    const auto lefts = vmod::allowed_generators(sh, rk, Side::Left);
    const auto rights = vmod::allowed_generators(sh, rk, Side::Right);
    for (int d = 0; d <= dmax; ++d)
        for (const auto& A : enumerate_M(sh, rk, d))
            for (const auto& x : lefts)
                for (const auto& y : rights) {
                    ++rep.checked;
                    Vect<BlockMatrix> unit(A);
                    auto a = apply(y, apply(x, unit, Side::Left), Side::Right);
                    auto b = apply(x, apply(y, unit, Side::Right), Side::Left);
                    if (!(a == b)) rep.fail("(" + x.str() + " . " + A.str() + ") . " + y.str());
                }
    return rep;
}

namespace {

using QMat = Matrix<RationalFn>;

QMat operator_matrix(const SidedAction& f, const Generator& g, Side side, const std::vector<BlockMatrix>& basis) {
    LinOp<BlockMatrix> op{[&](const BlockMatrix& A) { return f(g, A, side); }, basis, basis};
    return to_rational(matrix_of(op));
}

// Algebra generated by the operators: fixed point of right multiplication from the identity.
std::vector<QMat> generated_algebra(const std::vector<QMat>& gens, size_t n) {
    RowReducer<RationalFn> red(n * n);
    std::vector<QMat> elems{QMat::identity(n)};
    red.insert(flatten(elems.front()));
    for (size_t next = 0; next < elems.size(); ++next)
        for (const auto& g : gens) {
            QMat y = elems[next] * g;
            if (red.insert(flatten(y))) elems.push_back(std::move(y));
        }
    return elems;
}

bool same_span(const std::vector<QMat>& xs, const std::vector<QMat>& ys, size_t n) {
    RowReducer<RationalFn> rx(n * n), ry(n * n);
    for (const auto& x : xs) rx.insert(flatten(x));
    for (const auto& y : ys) ry.insert(flatten(y));
    if (rx.rank() != ry.rank()) return false;
    for (const auto& y : ys)
        if (!rx.contains(flatten(y))) return false;
    return true;
}

}  // namespace

std::string CentralizerReport::summary() const {
    std::ostringstream os;
    os << "d=" << d << " basis " << basis_size << ": dim L " << dim_left << ", dim R " << dim_right << ", dim L' "
       << dim_commutant_left << ", dim R' " << dim_commutant_right << " -> " << (pass() ? "pass" : "FAIL");
    return os.str();
}

CentralizerReport centralizer_check(const SidedAction& f, const SuperShape& sh, const Ranks& rk, int d) {
    CentralizerReport rep;
    rep.d = d;
    const auto basis = enumerate_M(sh, rk, d);
    const size_t n = basis.size();
    rep.basis_size = n;
    if (n == 0) {
        rep.left_equals = rep.right_equals = true;
        return rep;
    }
    std::vector<QMat> L, R;
    for (const auto& g : vmod::allowed_generators(sh, rk, Side::Left)) L.push_back(operator_matrix(f, g, Side::Left, basis));
    for (const auto& g : vmod::allowed_generators(sh, rk, Side::Right)) R.push_back(operator_matrix(f, g, Side::Right, basis));
    const auto algL = generated_algebra(L, n), algR = generated_algebra(R, n);
    rep.dim_left = algL.size();
    rep.dim_right = algR.size();
    const auto commL = L.empty() ? std::vector<QMat>{} : commutant(L);
    const auto commR = R.empty() ? std::vector<QMat>{} : commutant(R);
    rep.dim_commutant_left = commL.size();
    rep.dim_commutant_right = commR.size();
    rep.left_equals = same_span(commL, algR, n);
    rep.right_equals = same_span(commR, algL, n);
    return rep;
}

namespace {

std::vector<BlockMatrix> up_to(const SuperShape& sh, int dmax) {
    std::vector<BlockMatrix> out;
    for (int d = 0; d <= dmax; ++d)
        for (const auto& A : enumerate_M(sh, d)) out.push_back(A);
    return out;
}

}  // namespace

Report coord_oracle_check(const SuperShape& sh, int dmax, const SidedAction& paren) {
    Report rep{"coord closed vs straightening oracle " + std::to_string(sh.m) + "|" + std::to_string(sh.n)};
    coord::Straightener st(sh);
    for (const auto& A : up_to(sh, dmax))
        for (const auto& g : generators(sh))
            for (Side side : {Side::Left, Side::Right}) {
                ++rep.checked;
                auto a = paren(g, A, side), b = coord::act_oracle(g, A, side, st);
                if (!(a == b)) rep.fail(witness(g, side, A, a, b));
            }
    return rep;
}

Report coord_conjugation_check(const SuperShape& sh, int dmax) {
    Report rep{"coord brace/paren conjugation " + std::to_string(sh.m) + "|" + std::to_string(sh.n)};
    for (const auto& A : up_to(sh, dmax))
        for (const auto& g : generators(sh))
            for (Side side : {Side::Left, Side::Right}) {
                ++rep.checked;
                auto a = coord::paren_to_brace(A, coord::act_closed_paren(g, A, side));
                auto b = coord::act_closed(g, A, side);
                if (!(a == b)) rep.fail(witness(g, side, A, a, b));
            }
    return rep;
}

Report coord_fixture_check(const SuperShape& sh, int dmax) {
    Report rep{"coord proof fixtures " + std::to_string(sh.m) + "|" + std::to_string(sh.n)};
    if (sh.m < 1 || sh.n < 1) return rep;
    const int m = sh.m, N = sh.N();
    coord::Straightener st(sh);
    auto check = [&](const Generator& g, Side side, const BlockMatrix& A, const coord::Word& w, const LaurentPoly& c) {
        ++rep.checked;
        Vect<BlockMatrix> expect = st(w).scaled(c);
        auto got = coord::act_oracle(g, A, side, st);
        auto closed = coord::act_closed_paren(g, A, side);
        if (!(got == expect)) rep.fail("oracle " + witness(g, side, A, got, expect));
        if (!(closed == expect)) rep.fail("closed " + witness(g, side, A, closed, expect));
    };
    for (int d = 1; d <= dmax; ++d)
        for (int j = 1; j <= N; ++j) {
            BlockMatrix A = BlockMatrix(sh).plus(m + 1, j, d);
            if (!A.valid()) continue;
            coord::Word w{{m, j}};
            w.insert(w.end(), d - 1, {m + 1, j});
            check(Generator::Eup(m), Side::Left, A, w, sign(sh.parity(j)) * qint(d));
        }
    for (int d = 1; d <= dmax; ++d)
        for (int i = 1; i <= N; ++i) {
            BlockMatrix A = BlockMatrix(sh).plus(i, m + 1, d);
            if (!A.valid()) continue;
            coord::Word w{{i, m}};
            w.insert(w.end(), d - 1, {i, m + 1});
            check(Generator::Edown(m), Side::Right, A, w, sign(sh.parity(i)) * signed_pow(sh.odd(m + 1), d - 1) * qint(d));
        }
    return rep;
}

Report diffop_oracle_check(const SuperShape& sh, int dmax, const SidedAction& closed) {
    Report rep{"diffop closed vs coproduct/reversal oracle " + std::to_string(sh.m) + "|" + std::to_string(sh.n)};
    for (const auto& A : up_to(sh, dmax))
        for (const auto& g : generators(sh))
            for (Side side : {Side::Left, Side::Right}) {
                ++rep.checked;
                auto a = closed(g, A, side), b = diffop::act_oracle(g, A, side);
                if (!(a == b)) rep.fail(witness(g, side, A, a, b));
            }
    return rep;
}

Report reversal_check(const SuperShape& sh, int dmax) {
    Report rep{"reversal identity " + std::to_string(sh.m) + "|" + std::to_string(sh.n)};
    for (const auto& A : up_to(sh, dmax)) {
        ++rep.checked;
        const auto base = diffop::normalize_monomial(sh, diffop::colmajor_factors(A));
        const auto rev = diffop::normalize_monomial(sh, diffop::reversed_factors(A));
        const auto tr = diffop::normalize_monomial(sh, diffop::reversed_rowmajor_factors(A));
        const long s = s_stat(A), g = gamma_stat(A);
        if (!(base == rev.scaled(sign(static_cast<int>(s % 2))))) rep.fail("reversed order at " + A.str());
        if (!(base == tr.scaled(sign(static_cast<int>((s + g) % 2))))) rep.fail("transposed order at " + A.str());
    }
    return rep;
}

Report schur_closed_check(const SuperShape& sh, int d, size_t samples, unsigned seed) {
    Report rep{"schur closed products vs composition " + std::to_string(sh.m) + "|" + std::to_string(sh.n) + " d=" +
               std::to_string(d)};
    schur::SchurAlgebra S(sh, d);
    std::vector<std::pair<BlockMatrix, BlockMatrix>> pairs;
    for (const auto& A : S.basis())
        for (const auto& B : S.basis())
            if (A.co() == B.ro() &&
                (schur::generator_form(A) != schur::GenForm::None || schur::generator_form(B) != schur::GenForm::None))
                pairs.emplace_back(A, B);
    if (samples > 0 && samples < pairs.size()) {
        std::mt19937 rng(seed);
        std::shuffle(pairs.begin(), pairs.end(), rng);
        pairs.resize(samples);
    }
    for (const auto& [A, B] : pairs) {
        ++rep.checked;
        auto a = schur::mul_closed_e(A, B), b = S.mul(A, B);
        if (!(a == b)) rep.fail("e_" + A.str() + " e_" + B.str() + ": " + vect_str(a) + " vs " + vect_str(b));
    }
    return rep;
}

Report schur_dimension_check(const SuperShape& sh, int d) {
    Report rep{"schur dimension " + std::to_string(sh.m) + "|" + std::to_string(sh.n) + " d=" + std::to_string(d)};
    schur::SchurAlgebra S(sh, d);
    const size_t count = S.basis().size();
    // pivot coordinates separate the e_A, so their span has rank |M|
    for (const auto& A : S.basis()) {
        ++rep.checked;
        if (!S.commutes_with_hecke(S.eA(A))) rep.fail("e_" + A.str() + " does not commute with the Hecke action");
        if (!(S.decompose(S.eA(A)) == schur::SchurElem(A))) rep.fail("e_" + A.str() + " not a coordinate vector");
    }
    // dim End_H at generic v is at most its value at v = 3, and at least |M|
    const size_t n = S.dim();
    size_t dim_end = n * n;
    if (d >= 2) {
        std::vector<Matrix<mpq_class>> ops;
        for (int k = 1; k < d; ++k) {
            Matrix<mpq_class> t(n, n);
            for (size_t i = 0; i < n; ++i)
                for (const auto& [j, c] : S.T_simple(k).row(i)) t(i, j) = evaluate(c, mpq_class(3));
            ops.push_back(std::move(t));
        }
        dim_end = commutant(ops).size();
    }
    ++rep.checked;
    if (dim_end != count)
        rep.fail("dim End_H = " + std::to_string(dim_end) + " but |M| = " + std::to_string(count));
    return rep;
}

Report basis_change_check(const SuperShape& sh, int d) {
    Report rep{"bracket basis change " + std::to_string(sh.m) + "|" + std::to_string(sh.n) + " d=" + std::to_string(d)};
    vmod::BracketBasis bb(sh, d);
    schur::SchurAlgebra S(sh, d);
    ++rep.checked;
    if (bb.inconsistencies() != 0) rep.fail(std::to_string(bb.inconsistencies()) + " normalization equations unsatisfied");
    for (const auto& A : S.basis()) {
        ++rep.checked;
        if (!(bb.from_e(bb.to_e(Vect<BlockMatrix>(A))) == Vect<BlockMatrix>(A))) rep.fail("round trip at " + A.str());
        for (const auto& g : generators(sh))
            for (Side side : {Side::Left, Side::Right}) {
                ++rep.checked;
                const auto expect = vmod::act(g, A, side);
                const auto x = bb.to_e(Vect<BlockMatrix>(A));
                const auto img = bb.surjection_image(g);
                const auto closed = bb.from_e(side == Side::Left ? schur::mul_closed_e(img, x) : schur::mul_closed_e(x, img));
                const auto brute = bb.act_via_schur(g, A, side, S);
                if (!(closed == expect)) rep.fail("closed " + witness(g, side, A, closed, expect));
                if (!(brute == expect)) rep.fail("composition " + witness(g, side, A, brute, expect));
            }
    }
    return rep;
}

}  // namespace qhowe::verify
