#include "doctest.h"
#include "qhowe/uqgl.hpp"

using namespace qhowe;

namespace {
LaurentPoly v(int k = 1) { return LaurentPoly::monomial(k); }
}

TEST_CASE("generator syntax") {
    CHECK(Generator::parse("K(2,+1)") == Generator::K(2, 1));
    CHECK(Generator::parse("K(1,-1)") == Generator::K(1, -1));
    CHECK(Generator::parse("Eup(3)") == Generator::Eup(3));
    CHECK(Generator::parse("Edown(1)") == Generator::Edown(1));
    for (const auto& g : generators(SuperShape(2, 2))) CHECK(Generator::parse(g.str()) == g);
    CHECK_THROWS_AS(Generator::parse("E(1)"), std::invalid_argument);
    CHECK_THROWS_AS(Generator::Eup(2).validate(SuperShape(1, 1)), std::out_of_range);
    SuperShape sh(2, 1);
    CHECK(Generator::Eup(2).parity(sh) == 1);
    CHECK(Generator::Edown(1).parity(sh) == 0);
    CHECK(Generator::K(2).parity(sh) == 0);
}

TEST_CASE("anti-involution") {
    CHECK(omega(GenWord{Generator::Eup(1)}) == GenWord{Generator::Edown(1)});
    CHECK(omega(GenWord{Generator::K(2, 1)}) == GenWord{Generator::K(2, 1)});
    CHECK(omega(GenWord{Generator::Eup(1), Generator::K(1, 1)}) == GenWord{Generator::K(1, 1), Generator::Edown(1)});
    GenWord w{Generator::Eup(2), Generator::K(1, -1), Generator::Edown(1)};
    CHECK(omega(omega(w)) == w);
}

TEST_CASE("coproduct") {
    auto k = coproduct(Generator::K(1, 1));
    REQUIRE(k.size() == 1);
    CHECK(k[0].left == GenWord{Generator::K(1, 1)});
    CHECK(k[0].right == GenWord{Generator::K(1, 1)});
    auto e = coproduct(Generator::Eup(2));
    REQUIRE(e.size() == 2);
    CHECK(e[0].left == GenWord{Generator::Eup(2)});
    CHECK(e[0].right == GenWord{Generator::K(2, 1), Generator::K(3, -1)});
    CHECK(e[1].left.empty());
    CHECK(e[1].right == GenWord{Generator::Eup(2)});
    auto f = coproduct(Generator::Edown(2));
    REQUIRE(f.size() == 2);
    CHECK(f[0].left == GenWord{Generator::Edown(2)});
    CHECK(f[0].right.empty());
    CHECK(f[1].left == GenWord{Generator::K(2, -1), Generator::K(3, 1)});
    CHECK(f[1].right == GenWord{Generator::Edown(2)});
    SuperShape sh(1, 1);
    for (const auto& t : coproduct(Generator::Eup(1)))
        CHECK((word_parity(sh, t.left) + word_parity(sh, t.right)) % 2 == 1);
}

TEST_CASE("inductive root vectors") {
    SuperShape sh(2, 2);
    auto e12 = expand_E(sh, 1, 2);
    REQUIRE(e12.size() == 1);
    CHECK(e12[0].first == GenWord{Generator::Eup(1)});
    auto e13 = expand_E(sh, 1, 3);
    REQUIRE(e13.size() == 2);
    CHECK(e13[0].first == GenWord{Generator::Eup(1), Generator::Eup(2)});
    CHECK(e13[0].second == LaurentPoly(1));
    CHECK(e13[1].first == GenWord{Generator::Eup(2), Generator::Eup(1)});
    CHECK(e13[1].second == -v(-1));
    auto e31 = expand_E(sh, 3, 1);
    REQUIRE(e31.size() == 2);
    CHECK(e31[0].first == GenWord{Generator::Edown(2), Generator::Edown(1)});
    CHECK(e31[1].first == GenWord{Generator::Edown(1), Generator::Edown(2)});
    CHECK(e31[1].second == -v());
    CHECK_THROWS_AS(expand_E(sh, 2, 2), std::invalid_argument);
}

TEST_CASE("natural module") {
    SuperShape sh(1, 1);
    CHECK(natural_action(sh, Generator::K(1, 1), 1) == Vect<int>(1, v()));
    CHECK(natural_action(sh, Generator::K(2, 1), 2) == Vect<int>(2, v(-1)));
    CHECK(natural_action(sh, Generator::Eup(1), 2) == Vect<int>(1));
    CHECK(natural_action(sh, Generator::Eup(1), 1).is_zero());
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; m + n <= 5; ++n) {
            if (m + n == 0) continue;
            SuperShape s(m, n);
            std::vector<int> basis, idx;
            for (int a = 1; a <= s.N(); ++a) basis.push_back(a), idx.push_back(a);
            Action<int> act = [&](const Generator& g, const int& b) { return natural_action(s, g, b); };
            CHECK(relation_suite(act, basis, s, idx).all_pass());
        }
}

TEST_CASE("relation suite catches a sign flip on the natural module") {
    SuperShape sh(1, 1);
    std::vector<int> basis{1, 2}, idx{1, 2};
    Action<int> act = [&](const Generator& g, const int& b) {
        auto out = natural_action(sh, g, b);
        return g == Generator::Eup(1) ? out.scaled(LaurentPoly(-1)) : out;
    };
    auto rep = relation_suite(act, basis, sh, idx);
    CHECK_FALSE(rep.all_pass());
    bool r3 = false;
    for (const auto& r : rep.results)
        if (!r.pass && r.relation.rfind("R3", 0) == 0) {
            r3 = true;
            CHECK(r.witness == "v_1");
        }
    CHECK(r3);
    for (const auto& r : rep.results)
        if (r.relation.rfind("R1", 0) == 0) CHECK(r.pass);
    std::vector<int> second{2};
    bool at_v2 = false;
    for (const auto& r : relation_suite(act, second, sh, idx).results)
        if (!r.pass && r.relation.rfind("R3", 0) == 0) at_v2 = r.witness == "v_2";
    CHECK(at_v2);
}

TEST_CASE("word actions") {
    SuperShape sh(2, 1);
    Action<int> act = [&](const Generator& g, const int& b) { return natural_action(sh, g, b); };
    // E_{12} E_{23} v_3: the rightmost letter acts first on a left module
    GenWord w{Generator::Eup(1), Generator::Eup(2)};
    CHECK(act_word(act, w, Vect<int>(3), Side::Left) == Vect<int>(1));
    CHECK(act_word(act, w, Vect<int>(3), Side::Right).is_zero());
    CHECK(act_word(act, GenWord{Generator::Eup(2), Generator::Eup(2)}, Vect<int>(3), Side::Left).is_zero());
}
