// One pass/fail line per acceptance criterion; exit status 0 iff all pass.
#include "qhowe/coord.hpp"
#include "qhowe/diffop.hpp"
#include "qhowe/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

using namespace qhowe;
using namespace qhowe::verify;

namespace {

bool verbose = false;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void add(const Report& r) {
        pass = pass && r.pass();
        if (verbose || !r.pass()) notes.push_back(r.summary());
    }
};

Outcome criterion1() {
    Outcome o;
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; m + n <= 5; ++n)
            if (m + n >= 1) o.add(natural_relations(SuperShape(m, n)));
    const SuperShape sh(2, 2);
    for (const Ranks& rk : {Ranks{1, 1, 1, 1}, Ranks{2, 1, 1, 2}, Ranks{2, 2, 2, 2}})
        for (Realization r : all_realizations())
            o.add(relation_check(realization_str(r) + " relations " + ranks_str(rk), closed_action(r), sh, rk, 4));
    return o;
}

SidedAction paren_action() {
    return [](const Generator& g, const BlockMatrix& A, Side s) { return coord::act_closed_paren(g, A, s); };
}

Outcome criterion2() {
    Outcome o;
    const SuperShape sh(2, 2);
    o.add(coord_oracle_check(sh, 4, paren_action()));
    o.add(coord_fixture_check(sh, 4));
    o.add(coord_fixture_check(SuperShape(1, 1), 4));
    return o;
}

Outcome criterion3() {
    Outcome o;
    const SuperShape sh(2, 2);
    o.add(diffop_oracle_check(sh, 4, closed_action(Realization::Diffop)));
    o.add(reversal_check(sh, 4));
    return o;
}

Outcome criterion4() {
    Outcome o;
    for (int d = 1; d <= 3; ++d) {
        o.add(schur_closed_check(SuperShape(1, 1), d));
        o.add(schur_closed_check(SuperShape(2, 1), d, 50, 7 + d));
        o.add(schur_dimension_check(SuperShape(1, 1), d));
        o.add(schur_dimension_check(SuperShape(2, 1), d));
    }
    return o;
}

Outcome criterion5() {
    Outcome o;
    for (int d = 1; d <= 3; ++d) o.add(basis_change_check(SuperShape(1, 1), d));
    return o;
}

Outcome criterion6() {
    Outcome o;
    const SuperShape sh(2, 2);
    for (const Ranks& rk : all_ranks(sh)) o.add(compare_all(sh, rk, 3));
    o.add(compare_all(SuperShape(1, 1), Ranks{1, 1, 1, 1}, 4));
    return o;
}

Outcome criterion7() {
    Outcome o;
    const SuperShape sh(2, 2);
    for (Realization r : all_realizations()) {
        Report all(realization_str(r) + " commuting actions");
        for (const Ranks& rk : all_ranks(sh)) all.merge(commute_check("", closed_action(r), sh, rk, 3));
        all.merge(commute_check("", closed_action(r), SuperShape(1, 1), Ranks{1, 1, 1, 1}, 4));
        o.add(all);
    }
    return o;
}

Outcome criterion8() {
    Outcome o;
    const SuperShape sh(1, 1);
    for (int d = 1; d <= 3; ++d) {
        auto rep = centralizer_check(closed_action(Realization::Vmod), sh, Ranks{1, 1, 1, 1}, d);
        o.pass = o.pass && rep.pass();
        o.notes.push_back(rep.summary());
    }
    return o;
}

// Each perturbation must be caught, with a witness naming generator, side and matrix.
Outcome criterion9() {
    Outcome o;
    const SuperShape sh(2, 2);
    const Generator odd_up = Generator::Eup(sh.m), odd_down = Generator::Edown(sh.m);
    auto expect_caught = [&](const std::string& what, const Report& r) {
        bool caught = !r.pass() && !r.witnesses.empty();
        o.pass = o.pass && caught;
        o.notes.push_back(what + ": " + (caught ? "caught, " + r.witnesses.front() : std::string("NOT caught")));
    };
    expect_caught("coord sign flip on left " + odd_up.str(),
                  coord_oracle_check(sh, 2, sign_flipped(paren_action(), odd_up, Side::Left)));
    expect_caught("diffop sign flip on right " + odd_down.str(),
                  diffop_oracle_check(sh, 2, sign_flipped(closed_action(Realization::Diffop), odd_down, Side::Right)));
    expect_caught("vmod sign flip on right " + Generator::Eup(1).str(),
                  compare_all(sh, Ranks{2, 2, 2, 2}, 2,
                              {{Realization::Vmod, sign_flipped(closed_action(Realization::Vmod), Generator::Eup(1), Side::Right)}}));
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i)
        if (std::string(argv[i]) == "-v" || std::string(argv[i]) == "--verbose") verbose = true;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"relation suite on the natural module and the three realizations", criterion1},
        {"coordinate closed action equals the straightening oracle; proof fixtures", criterion2},
        {"differential-operator closed action equals coproduct and reversal oracles; reversal identity", criterion3},
        {"Schur closed products equal brute-force composition; dim End_H = |M|", criterion4},
        {"bracket basis change and vmod action equal Schur multiplication by surjection images", criterion5},
        {"identical structure tables for coord, diffop, vmod", criterion6},
        {"left and right actions commute", criterion7},
        {"double centralizer at ranks (1,1,1,1), shape 1|1, d = 1,2,3", criterion8},
        {"negative controls are detected with a localized witness", criterion9},
    };
    bool all = true;
    for (size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " : " << criteria[i].first << " ("
                  << static_cast<int>(secs * 10) / 10.0 << "s)" << std::endl;
        for (const auto& n : o.notes) std::cout << "    " << n << std::endl;
    }
    return all ? 0 : 1;
}
