#include "doctest.h"
#include "qhowe/coord.hpp"
#include "qhowe/json_io.hpp"

using namespace qhowe;
using namespace qhowe::json_io;

TEST_CASE("matrices round-trip through JSON") {
    SuperShape sh(2, 1);
    for (const auto& A : enumerate_M(sh, 2)) CHECK(matrix_from_json(sh, matrix_to_json(A)) == A);
    CHECK(matrix_to_json(BlockMatrix(SuperShape(1, 1), {{0, 1}, {1, 0}})).dump() == "[[0,1],[1,0]]");
    CHECK_THROWS_AS(matrix_from_json(SuperShape(1, 1), json::parse("[[0,2],[0,0]]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(SuperShape(1, 1), json::parse("[[0,1],[0]]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(SuperShape(1, 1), json::parse("[[0,-1],[0,0]]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(SuperShape(1, 1), json::parse("\"e11\"")), std::invalid_argument);
}

TEST_CASE("elements round-trip through JSON") {
    SuperShape sh(1, 1);
    auto x = coord::act_closed(Generator::Eup(1), BlockMatrix(sh, {{1, 0}, {1, 1}}), Side::Left);
    x.add(BlockMatrix(sh, {{0, 0}, {0, 3}}), LaurentPoly::parse("v^2 - 1/3*v^-1"));
    auto j = element_to_json(x, "brace");
    CHECK(element_from_json(sh, json::parse(j.dump())) == x);
    CHECK(element_to_json(Vect<BlockMatrix>(), "V").dump() == "[]");
    auto one = element_to_json(Vect<BlockMatrix>(BlockMatrix(sh, {{1, 0}, {0, 0}})), "brace");
    CHECK(one.dump() == R"([{"basis":"brace","coeff":"1","matrix":[[1,0],[0,0]]}])");
    CHECK(element_from_json(sh, json::parse("[[1,0],[0,0]]")) == Vect<BlockMatrix>(BlockMatrix(sh, {{1, 0}, {0, 0}})));
}

TEST_CASE("reports serialize with a status field") {
    verify::Report r("demo");
    r.checked = 3;
    r.fail("x");
    auto j = report_to_json(r);
    CHECK(j.at("status") == "fail");
    CHECK(j.at("witnesses").size() == 1);
}
