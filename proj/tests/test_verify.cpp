#include "doctest.h"
#include "qhowe/verify.hpp"

using namespace qhowe;
using namespace qhowe::verify;

namespace {

LaurentPoly v(int k = 1) { return LaurentPoly::monomial(k); }

bool mentions(const Report& r, const std::string& s) {
    for (const auto& w : r.witnesses)
        if (w.find(s) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("realization names") {
    for (auto r : all_realizations()) CHECK(parse_realization(realization_str(r)) == r);
    CHECK_THROWS_AS(parse_realization("tensor"), std::invalid_argument);
}

TEST_CASE("structure tables") {
    SuperShape sh(1, 1);
    Ranks rk{1, 1, 1, 1};
    auto c = structure_table(Realization::Coord, Generator::Eup(1), Side::Left, sh, rk, 1);
    auto d = structure_table(Realization::Diffop, Generator::Eup(1), Side::Left, sh, rk, 1);
    CHECK(c.rows == d.rows);
    CHECK(c.rows.size() == 4);
    CHECK(c.rows.at(BlockMatrix(sh, {{0, 0}, {1, 0}})) == Vect<BlockMatrix>(BlockMatrix(sh, {{1, 0}, {0, 0}})));
    auto k = structure_table(Realization::Vmod, Generator::K(1, 1), Side::Left, sh, rk, 2);
    for (const auto& [A, img] : k.rows) CHECK(img == Vect<BlockMatrix>(A, v(A.ro()[0])));
    CHECK(structure_table(Realization::Vmod, Generator::K(1, 1), Side::Left, sh, Ranks{1, 0, 0, 1}, 2).rows.empty());
}

TEST_CASE("the three realizations agree") {
    CHECK(compare_all(SuperShape(1, 1), {1, 1, 1, 1}, 3).pass());
    CHECK(compare_all(SuperShape(2, 2), {2, 1, 1, 2}, 2).pass());
    CHECK(compare_all(SuperShape(2, 2), {0, 2, 1, 0}, 2).pass());
}

TEST_CASE("left and right actions commute") {
    for (auto r : all_realizations()) CHECK(commute_check(realization_str(r), closed_action(r), SuperShape(1, 1), {1, 1, 1, 1}, 3).pass());
    CHECK(commute_check("coord", closed_action(Realization::Coord), SuperShape(2, 2), {2, 1, 1, 2}, 2).pass());
}

TEST_CASE("relations hold on restricted ranks") {
    for (auto r : all_realizations())
        CHECK(relation_check(realization_str(r), closed_action(r), SuperShape(2, 2), {2, 1, 1, 2}, 2).pass());
    CHECK(natural_relations(SuperShape(2, 1)).pass());
}

TEST_CASE("double centralizer at small degree") {
    auto f = closed_action(Realization::Vmod);
    SuperShape sh(1, 1);
    auto c0 = centralizer_check(f, sh, {1, 1, 1, 1}, 0);
    CHECK(c0.basis_size == 1);
    CHECK(c0.pass());
    auto c1 = centralizer_check(f, sh, {1, 1, 1, 1}, 1);
    CHECK(c1.basis_size == 4);
    CHECK(c1.pass());
    auto c2 = centralizer_check(f, sh, {1, 1, 1, 1}, 2);
    CHECK(c2.basis_size == 8);
    CHECK(c2.pass());
    CHECK(c2.dim_commutant_left == c2.dim_right);
}

TEST_CASE("a flipped sign is caught and localized") {
    SuperShape sh(1, 1);
    Ranks rk{1, 1, 1, 1};
    auto bad = sign_flipped(closed_action(Realization::Diffop), Generator::Edown(1), Side::Right);
    auto rep = compare_all(sh, rk, 2, {{Realization::Diffop, bad}});
    CHECK_FALSE(rep.pass());
    CHECK(mentions(rep, "Edown(1)"));
    CHECK(mentions(rep, "right"));
    auto cmp = compare_actions("coord/flipped", closed_action(Realization::Coord), bad, sh, rk, 1);
    CHECK(cmp.failed > 0);
    CHECK(cmp.witnesses.size() <= 5);
}
