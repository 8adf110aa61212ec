#include "doctest.h"
#include "qhowe/coord.hpp"
#include "qhowe/verify.hpp"

using namespace qhowe;
using namespace qhowe::coord;

namespace {

LaurentPoly v(int k = 1) { return LaurentPoly::monomial(k); }

BlockMatrix mat(const SuperShape& sh, std::vector<std::vector<int>> rows) { return BlockMatrix(sh, std::move(rows)); }

}  // namespace

TEST_CASE("straightening rewrites") {
    SuperShape s11(1, 1), s20(2, 0);
    CHECK(straighten(s11, {{1, 2}, {1, 2}}).is_zero());
    CHECK(straighten(s20, {{2, 1}, {1, 1}}) == Vect<BlockMatrix>(mat(s20, {{1, 0}, {1, 0}}), v()));
    Vect<BlockMatrix> expect(BlockMatrix::diag(s20, {1, 1}));
    expect.add(mat(s20, {{0, 1}, {1, 0}}), v() - v(-1));
    CHECK(straighten(s20, {{2, 2}, {1, 1}}) == expect);
}

TEST_CASE("straightening fixes normal-ordered words") {
    for (auto sh : {SuperShape(1, 1), SuperShape(2, 1), SuperShape(1, 2)}) {
        Straightener st(sh);
        for (int d = 0; d <= 3; ++d)
            for (const auto& A : enumerate_M(sh, d)) {
                CHECK(matrix_of_word(sh, word_of(A)) == A);
                CHECK(st(word_of(A)) == Vect<BlockMatrix>(A));
            }
    }
}

TEST_CASE("straightening is independent of the route through the word") {
    // (xy)z and x(yz) reduce to the same normal form
    SuperShape sh(1, 1);
    Straightener st(sh);
    std::vector<Factor> all{{1, 1}, {1, 2}, {2, 1}, {2, 2}};
    for (const auto& x : all)
        for (const auto& y : all)
            for (const auto& z : all) {
                Vect<Word> xy = st.words({x, y});
                Vect<Word> left;
                for (const auto& [w, c] : xy) {
                    Word w2 = w;
                    w2.push_back(z);
                    left.add(w2, c);
                }
                Vect<Word> yz = st.words({y, z});
                Vect<Word> right;
                for (const auto& [w, c] : yz) {
                    Word w2{x};
                    w2.insert(w2.end(), w.begin(), w.end());
                    right.add(w2, c);
                }
                CHECK(st(left) == st(right));
            }
}

TEST_CASE("brace rescaling") {
    SuperShape s11(1, 1);
    CHECK(rescale(BlockMatrix(s11)) == LaurentPoly(1));
    // single entries carry no power of v in the adopted convention
    CHECK(rescale(mat(s11, {{1, 0}, {0, 0}})) == LaurentPoly(1));
    CHECK(rescale(mat(s11, {{0, 1}, {0, 0}})) == LaurentPoly(1));
    CHECK(rescale(mat(s11, {{2, 0}, {0, 0}})) == v(-1));
    CHECK(rescale(mat(s11, {{0, 0}, {0, 2}})) == v());
    CHECK(rescale(mat(s11, {{0, 0}, {0, 1}})) == LaurentPoly(-1));
    CHECK(rescale(mat(s11, {{3, 0}, {0, 0}})) == v(-3));
}

TEST_CASE("closed action examples") {
    SuperShape s11(1, 1), s21(2, 1);
    CHECK(act_closed(Generator::Eup(1), mat(s11, {{0, 0}, {1, 0}}), Side::Left) ==
          Vect<BlockMatrix>(mat(s11, {{1, 0}, {0, 0}})));
    CHECK(act_closed(Generator::Eup(1), mat(s11, {{1, 0}, {0, 0}}), Side::Left).is_zero());
    CHECK(act_closed(Generator::Eup(1), mat(s11, {{0, 1}, {0, 0}}), Side::Left).is_zero());
    CHECK(act_closed(Generator::Edown(1), mat(s11, {{0, 1}, {0, 0}}), Side::Right) ==
          Vect<BlockMatrix>(mat(s11, {{1, 0}, {0, 0}})));
    auto A = mat(s21, {{1, 2, 0}, {0, 1, 1}, {0, 1, 0}});
    CHECK(act_closed(Generator::K(1, 1), A, Side::Left) == Vect<BlockMatrix>(A, v(3)));
    CHECK(act_closed(Generator::K(3, 1), A, Side::Left) == Vect<BlockMatrix>(A, v(-1)));
    CHECK(act_closed(Generator::K(2, -1), A, Side::Right) == Vect<BlockMatrix>(A, v(-4)));
    CHECK(act_closed_paren(Generator::K(1, 1), A, Side::Left) == Vect<BlockMatrix>(A, v(3)));
}

TEST_CASE("closed paren action agrees with the coproduct computation") {
    for (auto sh : {SuperShape(1, 1), SuperShape(2, 1), SuperShape(1, 2)}) {
        Straightener st(sh);
        for (int d = 0; d <= 3; ++d)
            for (const auto& A : enumerate_M(sh, d))
                for (const auto& g : generators(sh))
                    for (Side side : {Side::Left, Side::Right})
                        CHECK_MESSAGE(act_closed_paren(g, A, side) == act_oracle(g, A, side, st),
                                      g.str() << " " << side_str(side) << " " << A.str());
    }
}

TEST_CASE("coproduct computation on the empty word") {
    SuperShape sh(2, 1);
    Straightener st(sh);
    BlockMatrix O(sh);
    CHECK(act_oracle(Generator::K(2, 1), O, Side::Left, st) == Vect<BlockMatrix>(O));
    CHECK(act_oracle(Generator::Eup(1), O, Side::Left, st).is_zero());
    CHECK(act_oracle(Generator::Edown(2), O, Side::Right, st).is_zero());
}

TEST_CASE("raising a power of an odd-row factor") {
    SuperShape sh(1, 1);
    Straightener st(sh);
    for (int d = 1; d <= 4; ++d) {
        Word w{{1, 2}};
        for (int t = 1; t < d; ++t) w.push_back({2, 2});
        auto expect = st(w).scaled(-qint(d));
        CHECK(act_closed_paren(Generator::Eup(1), mat(sh, {{0, 0}, {0, d}}), Side::Left) == expect);
    }
}

TEST_CASE("single factor rules") {
    SuperShape sh(1, 1);
    CHECK(act_factor(sh, Generator::Eup(1), {2, 1}, Side::Left) == Vect<Factor>({1, 1}));
    CHECK(act_factor(sh, Generator::Eup(1), {2, 2}, Side::Left) == Vect<Factor>({1, 2}, LaurentPoly(-1)));
    CHECK(act_factor(sh, Generator::Eup(1), {1, 2}, Side::Left).is_zero());
    CHECK(act_factor(sh, Generator::K(2, 1), {2, 1}, Side::Left) == Vect<Factor>({2, 1}, v(-1)));
}

TEST_CASE("brace and paren actions are conjugate") {
    CHECK(verify::coord_conjugation_check(SuperShape(1, 1), 3).pass());
    CHECK(verify::coord_conjugation_check(SuperShape(2, 1), 2).pass());
    CHECK(verify::coord_fixture_check(SuperShape(1, 1), 3).pass());
}
