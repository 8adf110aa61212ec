#pragma once

#include "qhowe/combin.hpp"
#include "qhowe/linear.hpp"
#include "qhowe/uqgl.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qhowe::verify {

enum class Realization { Coord, Diffop, Vmod };
std::string realization_str(Realization r);
Realization parse_realization(const std::string& s);
const std::vector<Realization>& all_realizations();

using SidedAction = std::function<Vect<BlockMatrix>(const Generator&, const BlockMatrix&, Side)>;
// closed action formulas of a realization, in its identity-keyed basis
SidedAction closed_action(Realization r);
// the same action with every coefficient of g on `side` negated
SidedAction sign_flipped(SidedAction f, const Generator& g, Side side);

struct StructureTable {
    Realization realization;
    Generator g;
    Side side;
    int d;
    std::map<BlockMatrix, Vect<BlockMatrix>> rows;
};
StructureTable structure_table(Realization r, const Generator& g, Side side, const SuperShape& sh, const Ranks& rk, int d);

struct Report {
    Report() = default;
    explicit Report(std::string n) : name(std::move(n)) {}

    std::string name;
    size_t checked = 0;
    size_t failed = 0;
    std::vector<std::string> witnesses;  // first few failures
    bool pass() const { return failed == 0; }
    void fail(const std::string& witness);
    void merge(const Report& o);
    std::string summary() const;
};

std::vector<Ranks> all_ranks(const SuperShape& sh);
std::string ranks_str(const Ranks& rk);

// Every generator on both sides, every basis matrix, degrees 0..dmax.
Report compare_actions(const std::string& name, const SidedAction& f, const SidedAction& g, const SuperShape& sh,
                       const Ranks& rk, int dmax);
Report compare_all(const SuperShape& sh, const Ranks& rk, int dmax,
                   const std::map<Realization, SidedAction>& overrides = {});

Report natural_relations(const SuperShape& sh);
Report relation_check(const std::string& name, const SidedAction& f, const SuperShape& sh, const Ranks& rk, int dmax);
Report commute_check(const std::string& name, const SidedAction& f, const SuperShape& sh, const Ranks& rk, int dmax);

struct CentralizerReport {
    int d = 0;
    size_t basis_size = 0;
    size_t dim_left = 0, dim_right = 0;
    size_t dim_commutant_left = 0, dim_commutant_right = 0;
    bool left_equals = false, right_equals = false;
    bool pass() const { return left_equals && right_equals; }
    std::string summary() const;
};
CentralizerReport centralizer_check(const SidedAction& f, const SuperShape& sh, const Ranks& rk, int d);

// closed formulas against their independent oracles
Report coord_oracle_check(const SuperShape& sh, int dmax, const SidedAction& paren);
Report coord_conjugation_check(const SuperShape& sh, int dmax);
Report coord_fixture_check(const SuperShape& sh, int dmax);
Report diffop_oracle_check(const SuperShape& sh, int dmax, const SidedAction& closed);
Report reversal_check(const SuperShape& sh, int dmax);
// e-basis closed products against brute-force composition; samples = 0 means exhaustive
Report schur_closed_check(const SuperShape& sh, int d, size_t samples = 0, unsigned seed = 1);
// rank of the e_A span and dim End_H both equal |M(m|n,d)|
Report schur_dimension_check(const SuperShape& sh, int d);
// bracket basis: round trip, generator products, and vmod against Schur multiplication by surjection images
Report basis_change_check(const SuperShape& sh, int d);

}  // namespace qhowe::verify
