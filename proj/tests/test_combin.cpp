#include "doctest.h"
#include "qhowe/combin.hpp"

#include <algorithm>
#include <map>

using namespace qhowe;

TEST_CASE("parity and shapes") {
    SuperShape s21(2, 1);
    CHECK(s21.parity(2) == 0);
    CHECK(s21.parity(3) == 1);
    CHECK(SuperShape(0, 1).parity(1) == 1);
    CHECK_THROWS_AS(s21.parity(4), std::out_of_range);
    CHECK_THROWS_AS(SuperShape(0, 0), std::invalid_argument);
    CHECK(restricted_indices(SuperShape(2, 2), 1, 1) == std::vector<int>{2, 3});
    CHECK(restricted_indices(SuperShape(2, 2), 0, 0).empty());
}

TEST_CASE("compositions") {
    CHECK(compositions(2, 2) == std::vector<Composition>{{2, 0}, {1, 1}, {0, 2}});
    CHECK(compositions(1, 5) == std::vector<Composition>{{5}});
    CHECK(compositions(3, 0) == std::vector<Composition>{{0, 0, 0}});
    auto t = tilde_compositions(1, 1, 1, SuperShape(2, 2));
    std::sort(t.begin(), t.end());
    CHECK(t == std::vector<Composition>{{0, 0, 1, 0}, {0, 1, 0, 0}});
}

TEST_CASE("matrix enumeration") {
    SuperShape s11(1, 1);
    CHECK(enumerate_M(s11, 0).size() == 1);
    CHECK(enumerate_M(s11, 0).front() == BlockMatrix(s11));
    CHECK(enumerate_M(s11, 1).size() == 4);
    CHECK(enumerate_M(s11, 2).size() == 8);
    CHECK(enumerate_M(s11, 3).size() == 12);
    for (const auto& A : enumerate_M(SuperShape(2, 1), 3)) {
        CHECK(A.valid());
        CHECK(A.degree() == 3);
    }
    auto restricted = enumerate_M(SuperShape(2, 2), Ranks{1, 1, 1, 1}, 1);
    CHECK(restricted.size() == 4);
    for (const auto& A : restricted) CHECK(A.supported_in({2, 3}, {2, 3}));
    Composition ro{1, 1}, co{2, 0};
    auto fixed = enumerate_M(s11, 2, &ro, &co);
    CHECK(fixed.size() == 1);
    CHECK(fixed.front() == BlockMatrix(s11, {{1, 0}, {1, 0}}));
}

TEST_CASE("matrix statistics") {
    SuperShape s11(1, 1);
    BlockMatrix A(s11, {{0, 1}, {1, 0}});
    auto st = stats(A);
    CHECK(st.h == 2);
    CHECK(st.s == 1);
    CHECK(st.gamma == 1);
    CHECK(st.d == 1);
    CHECK(st.dprime == 0);
    CHECK(st.hat == 0);
    CHECK(st.s + st.gamma == 2);
    auto D = stats(BlockMatrix::diag(s11, {2, 3}));
    CHECK(D.h == 0);
    CHECK(D.s == 0);
    CHECK(D.gamma == 0);
    CHECK(D.hat == 0);
    CHECK(d_stat(BlockMatrix(s11, {{1, 0}, {0, 1}})) == 0);
    CHECK(A.transpose() == A);
    CHECK(BlockMatrix(s11, {{1, 1}, {0, 2}}).str() == "[[1,1],[0,2]]");
}

TEST_CASE("permutations") {
    Perm s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
    CHECK((s1 * s1) == Perm::identity(3));
    CHECK((s1 * s2).length() == 2);
    CHECK((s1 * s2).inverse() == s2 * s1);
    CHECK(all_perms(4).size() == 24);
    CHECK_THROWS_AS(Perm({1, 1}), std::invalid_argument);
}

TEST_CASE("coset representatives") {
    auto d11 = min_reps({1, 1});
    CHECK(d11.size() == 2);
    CHECK(std::count(d11.begin(), d11.end(), Perm::identity(2)) == 1);
    CHECK(std::count(d11.begin(), d11.end(), Perm::simple(2, 1)) == 1);
    CHECK(double_reps({2, 0}, {1, 1}) == std::vector<Perm>{Perm::identity(2)});
    for (int d = 1; d <= 4; ++d)
        for (const auto& lam : compositions(3, d)) {
            long fact = 1;
            for (int k = 2; k <= d; ++k) fact *= k;
            CHECK(static_cast<long>(young_subgroup(lam).size() * min_reps(lam).size()) == fact);
        }
    CHECK_FALSE(trivial_filter(SuperShape(1, 1), {2, 0}, {0, 2}, Perm::identity(2)));
    CHECK_THROWS_AS(double_reps({1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("double coset representatives are minimal on both sides") {
    for (int d = 1; d <= 4; ++d)
        for (const auto& lam : compositions(2, d))
            for (const auto& rho : compositions(3, d))
                for (const auto& g : double_reps(lam, rho)) {
                    for (const auto& b : blocks(lam))
                        for (size_t t = 0; t + 1 < b.size(); ++t) {
                            Perm u = Perm::simple(d, b[t]);
                            CHECK((g * u).length() == g.length() + 1);
                        }
                    for (const auto& b : blocks(rho))
                        for (size_t t = 0; t + 1 < b.size(); ++t) {
                            Perm w = Perm::simple(d, b[t]);
                            CHECK((w * g).length() == g.length() + 1);
                        }
                }
}

TEST_CASE("jmat") {
    SuperShape s11(1, 1);
    CHECK(jmat(s11, {2, 1}, Perm::identity(3), {2, 1}) == BlockMatrix::diag(s11, {2, 1}));
    CHECK(jmat(s11, {2, 0}, Perm::identity(2), {1, 1}) == BlockMatrix(s11, {{1, 1}, {0, 0}}));
    CHECK(jmat(s11, {1, 1}, Perm::simple(2, 1), {1, 1}) == BlockMatrix(s11, {{0, 1}, {1, 0}}));
}

TEST_CASE("filtered double cosets are in bijection with M(m|n,d)") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {1, 2}, {2, 2}, {1, 3}, {0, 2}})
        for (int d = 0; d <= 4; ++d) {
            if (m + n == 4 && d == 4) continue;
            SuperShape sh(m, n);
            size_t total = 0;
            for (const auto& lam : compositions(sh.N(), d))
                for (const auto& rho : compositions(sh.N(), d)) {
                    std::vector<BlockMatrix> images;
                    for (const auto& g : double_reps(lam, rho))
                        if (trivial_filter(sh, lam, rho, g)) {
                            BlockMatrix A = jmat(sh, lam, g, rho);
                            CHECK(A.ro() == lam);
                            CHECK(A.co() == rho);
                            images.push_back(A);
                        }
                    std::sort(images.begin(), images.end());
                    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
                    CHECK(images == enumerate_M(sh, d, &lam, &rho));
                    total += images.size();
                }
            CHECK(total == enumerate_M(sh, d).size());
        }
}
