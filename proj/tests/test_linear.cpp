#include "doctest.h"
#include "qhowe/linear.hpp"

#include <random>

using namespace qhowe;

namespace {
LaurentPoly v(int k = 1) { return LaurentPoly::monomial(k); }
}

TEST_CASE("free module arithmetic") {
    Vect<int> x;
    x.add(1, v());
    x.add(2, LaurentPoly(3));
    x.add(1, -v());
    CHECK(x.size() == 1);
    CHECK(x.coeff(1).is_zero());
    CHECK(x.coeff(2) == LaurentPoly(3));
    CHECK((x - x).is_zero());
    CHECK(x.scaled(LaurentPoly()).is_zero());
}

TEST_CASE("linear operators") {
    std::vector<int> basis{1, 2, 3};
    LinOp<int> id{[](const int& b) { return Vect<int>(b); }, basis, basis};
    Vect<int> x(2, v());
    CHECK(apply(id, x) == x);
    CHECK(apply(id, Vect<int>()).is_zero());
    LinOp<int> twice{[](const int& b) { return Vect<int>(b, LaurentPoly(2)); }, basis, basis};
    CHECK(apply(twice, x) == Vect<int>(2, LaurentPoly(2) * v()));
    CHECK_THROWS_AS(apply(id, Vect<int>(7)), UnknownBasisKey);
    CHECK(matrix_of(id) == Matrix<LaurentPoly>::identity(3));
    LinOp<int> dg{[](const int& b) { return Vect<int>(b, v(b)); }, basis, basis};
    auto M = matrix_of(dg);
    CHECK(M(0, 0) == v());
    CHECK(M(2, 2) == v(3));
    CHECK(M(0, 1).is_zero());
}

TEST_CASE("matrix of a composition is the product of matrices") {
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> ex(-2, 2), pick(0, 3);
    std::vector<int> basis{0, 1, 2};
    for (int t = 0; t < 20; ++t) {
        std::map<std::pair<int, int>, LaurentPoly> a, b;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                if (pick(rng)) a[{i, j}] = v(ex(rng));
                if (pick(rng)) b[{i, j}] = v(ex(rng)) + LaurentPoly(ex(rng));
            }
        auto mk = [&](std::map<std::pair<int, int>, LaurentPoly>& tab) {
            return LinOp<int>{[&tab](const int& j) {
                                  Vect<int> out;
                                  for (int i = 0; i < 3; ++i)
                                      if (tab.count({i, j})) out.add(i, tab.at({i, j}));
                                  return out;
                              },
                              basis, basis};
        };
        LinOp<int> A = mk(a), B = mk(b);
        LinOp<int> BA{[&](const int& j) { return apply(B, A.action(j)); }, basis, basis};
        CHECK(matrix_of(BA) == matrix_of(B) * matrix_of(A));
    }
}

TEST_CASE("exact solving") {
    Matrix<LaurentPoly> I = Matrix<LaurentPoly>::identity(2);
    auto x = solve_exact(I, {v(), LaurentPoly(2)});
    CHECK(x[0] == RationalFn(v()));
    CHECK(x[1] == RationalFn(2));
    Matrix<LaurentPoly> D(2, 2);
    D(0, 0) = v();
    D(1, 1) = v();
    x = solve_exact(D, {v(2), LaurentPoly()});
    CHECK(x[0] == RationalFn(v()));
    CHECK(x[1].is_zero());
    Matrix<LaurentPoly> S(2, 2);
    S(0, 0) = LaurentPoly(1);
    S(1, 0) = LaurentPoly(1);
    CHECK_THROWS_AS(solve_exact(S, {LaurentPoly(1), LaurentPoly(2)}), NoSolution);
    CHECK_THROWS_AS(solve_exact(S, {LaurentPoly(1), LaurentPoly(1)}), NonUniqueSolution);
    CHECK_NOTHROW(solve_exact(S, {LaurentPoly(1), LaurentPoly(1)}, false));
}

TEST_CASE("commutant dimensions") {
    const size_t n = 3;
    CHECK(commutant(std::vector<Matrix<RationalFn>>{Matrix<RationalFn>::identity(n)}).size() == n * n);
    Matrix<RationalFn> d(2, 2);
    d(0, 0) = RationalFn(v());
    d(1, 1) = RationalFn(v(2));
    auto c = commutant(std::vector<Matrix<RationalFn>>{d});
    CHECK(c.size() == 2);
    for (const auto& x : c) CHECK(x(0, 1).is_zero());
    std::vector<Matrix<RationalFn>> units;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            Matrix<RationalFn> e(n, n);
            e(i, j) = RationalFn(1);
            units.push_back(e);
        }
    CHECK(commutant(units).size() == 1);
}

TEST_CASE("commutant dimension is invariant under change of basis") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> co(-2, 2);
    for (int t = 0; t < 5; ++t) {
        const size_t n = 4;
        Matrix<mpq_class> a(n, n), P = Matrix<mpq_class>::identity(n), Pinv = Matrix<mpq_class>::identity(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a(i, j) = (i <= j) ? co(rng) : 0;
        // unipotent upper-triangular change of basis, inverse by back substitution
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) P(i, j) = co(rng);
        for (size_t c = 0; c < n; ++c)
            for (size_t r = n; r-- > 0;) {
                mpq_class s = (r == c) ? 1 : 0;
                for (size_t k = r + 1; k < n; ++k) s -= P(r, k) * Pinv(k, c);
                Pinv(r, c) = s;
            }
        CHECK(P * Pinv == Matrix<mpq_class>::identity(n));
        auto conj = P * a * Pinv;
        CHECK(commutant(std::vector<Matrix<mpq_class>>{a}).size() == commutant(std::vector<Matrix<mpq_class>>{conj}).size());
    }
}

TEST_CASE("row reducer") {
    RowReducer<mpq_class> red(3);
    CHECK(red.insert({{0, 1}, {1, 2}}));
    CHECK_FALSE(red.insert({{0, 2}, {1, 4}}));
    CHECK(red.contains({{0, 3}, {1, 6}}));
    CHECK(red.insert({{2, 5}}));
    CHECK(red.rank() == 2);
    CHECK(red.kernel().size() == 1);
}
