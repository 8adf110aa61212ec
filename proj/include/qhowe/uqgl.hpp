#pragma once

#include "qhowe/combin.hpp"
#include "qhowe/laurent.hpp"
#include "qhowe/linear.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace qhowe {

enum class GenKind { K, Eup, Edown };

// K(a, +-1), Eup(h) = E_{h,h+1}, Edown(h) = E_{h+1,h}
struct Generator {
    GenKind kind = GenKind::K;
    int index = 1;
    int exp = 1;

    static Generator K(int a, int e = 1) { return {GenKind::K, a, e}; }
    static Generator Eup(int h) { return {GenKind::Eup, h, 1}; }
    static Generator Edown(int h) { return {GenKind::Edown, h, 1}; }
    static Generator parse(const std::string& text);

    bool is_K() const { return kind == GenKind::K; }
    int parity(const SuperShape& sh) const { return !is_K() && index == sh.m ? 1 : 0; }
    void validate(const SuperShape& sh) const;
    std::string str() const;
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

using GenWord = std::vector<Generator>;
int word_parity(const SuperShape& sh, const GenWord& w);
std::string word_str(const GenWord& w);

struct CoproductTerm {
    GenWord left;
    GenWord right;
};

GenWord omega(const GenWord& w);
Generator omega(const Generator& g);
std::vector<CoproductTerm> coproduct(const Generator& g);
// E_{ab} as a formal sum of words
std::vector<std::pair<GenWord, LaurentPoly>> expand_E(const SuperShape& sh, int a, int b);
Vect<int> natural_action(const SuperShape& sh, const Generator& g, int b);

// Generators whose indices all lie in idx (K's, and E's with h, h+1 in idx).
std::vector<Generator> generators(const std::vector<int>& idx);
std::vector<Generator> generators(const SuperShape& sh);

struct RelationInstance {
    std::string name;
    std::vector<std::pair<LaurentPoly, GenWord>> terms;
};
// (R1)-(R6) for the subalgebra on the consecutive index set idx; (R3) cleared.
std::vector<RelationInstance> relations(const SuperShape& sh, const std::vector<int>& idx);

enum class Side { Left, Right };
std::string side_str(Side s);
Side parse_side(const std::string& s);

struct RelationResult {
    std::string relation;
    bool pass = true;
    std::string witness;
};

struct RelationReport {
    std::vector<RelationResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (const auto& r : results) n += r.pass ? 0 : 1;
        return n;
    }
};

inline std::string key_str(int b) { return "v_" + std::to_string(b); }
inline std::string key_str(const BlockMatrix& A) { return A.str(); }

template <class Key>
using Action = std::function<Vect<Key>(const Generator&, const Key&)>;

// Applies a word; left modules act right-to-left, right modules left-to-right.
template <class Key>
Vect<Key> act_word(const Action<Key>& act, const GenWord& w, const Vect<Key>& x, Side side) {
    Vect<Key> cur = x;
    auto step = [&](const Generator& g) {
        Vect<Key> nxt;
        for (const auto& [k, c] : cur) nxt.add(act(g, k), c);
        cur = std::move(nxt);
    };
    if (side == Side::Left)
        for (auto it = w.rbegin(); it != w.rend(); ++it) step(*it);
    else
        for (const auto& g : w) step(g);
    return cur;
}

template <class Key>
RelationReport relation_suite(const Action<Key>& act, const std::vector<Key>& basis, const SuperShape& sh,
                              const std::vector<int>& idx, Side side = Side::Left) {
    RelationReport rep;
    for (const auto& rel : relations(sh, idx)) {
        RelationResult res{rel.name, true, ""};
        for (const auto& b : basis) {
            Vect<Key> total;
            Vect<Key> unit(b);
            for (const auto& [c, w] : rel.terms) total.add(act_word(act, w, unit, side), c);
            if (!total.is_zero()) {
                res.pass = false;
                res.witness = key_str(b);
                break;
            }
        }
        rep.results.push_back(std::move(res));
    }
    return rep;
}

}  // namespace qhowe
