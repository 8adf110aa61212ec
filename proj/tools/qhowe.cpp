// Command-line front end: bases, actions, products, coset listings, verification suites.
#include "qhowe/coord.hpp"
#include "qhowe/diffop.hpp"
#include "qhowe/json_io.hpp"
#include "qhowe/schur.hpp"
#include "qhowe/verify.hpp"
#include "qhowe/vmod.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace qhowe;
using json_io::json;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Options {
    int m = -1, n = -1;
    int k = -1, l = -1, r = -1, s = -1;
    int d = -1, dmax = 3;
    std::string format = "text";
    std::string set = "M";
    bool count = false;
    std::string realization;
    std::string basis = "brace";
    std::string side = "left";
    std::string gen;
    std::string elem;
    std::string x, y;
    std::string method = "brute";
    std::string lambda, rho;
    std::string suite;
    std::string flip;
    int jobs = 1;
};

void add_shape(CLI::App* c, Options& o) {
    c->add_option("--m", o.m, "even rank m")->required()->check(CLI::Range(0, 8));
    c->add_option("--n", o.n, "odd rank n")->required()->check(CLI::Range(0, 8));
}

void add_ranks(CLI::App* c, Options& o) {
    c->add_option("--k", o.k, "left even rank (default m)")->check(CLI::NonNegativeNumber);
    c->add_option("--l", o.l, "left odd rank (default n)")->check(CLI::NonNegativeNumber);
    c->add_option("--r", o.r, "right even rank (default m)")->check(CLI::NonNegativeNumber);
    c->add_option("--s", o.s, "right odd rank (default n)")->check(CLI::NonNegativeNumber);
}

void add_format(CLI::App* c, Options& o) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

SuperShape shape(const Options& o) {
    if (o.m + o.n < 1) throw UsageError("m + n must be at least 1");
    return SuperShape(o.m, o.n);
}

Ranks ranks(const Options& o) {
    Ranks rk{o.k < 0 ? o.m : o.k, o.l < 0 ? o.n : o.l, o.r < 0 ? o.m : o.r, o.s < 0 ? o.n : o.s};
    if (rk.k > o.m || rk.r > o.m || rk.l > o.n || rk.s > o.n) throw UsageError("ranks exceed the shape");
    return rk;
}

json parse_json(const std::string& text, const std::string& what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        throw UsageError(what + " is not valid JSON: " + text);
    }
}

std::vector<int> int_list(const std::string& text, const std::string& what) {
    auto j = parse_json(text, what);
    if (!j.is_array()) throw UsageError(what + " must be a JSON array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw UsageError(what + " must be a JSON array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

Perm perm_of(const std::string& text, const std::string& what) { return Perm(int_list(text, what)); }

Composition composition_of(const std::string& text, const std::string& what) {
    auto c = int_list(text, what);
    for (int x : c)
        if (x < 0) throw UsageError(what + " must have nonnegative parts");
    return c;
}

std::string perm_str(const Perm& w) {
    std::string out = "[";
    for (int k = 1; k <= w.size(); ++k) out += (k > 1 ? "," : "") + std::to_string(w(k));
    return out + "]";
}

std::string element_text(const Vect<BlockMatrix>& x) {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [A, c] : x) {
        if (!out.empty()) out += "\n";
        out += "(" + c.str() + ") " + A.str();
    }
    return out;
}

void print_element(const Options& o, const Vect<BlockMatrix>& x, const std::string& basis) {
    if (o.format == "json")
        std::cout << json_io::element_to_json(x, basis).dump() << "\n";
    else
        std::cout << element_text(x) << "\n";
}

int run_basis(const Options& o) {
    const SuperShape sh = shape(o);
    if (o.d < 0) throw UsageError("--d is required");
    std::vector<BlockMatrix> list = o.set == "M" ? enumerate_M(sh, o.d) : vmod::vbasis(sh, ranks(o), o.d);
    if (o.count) {
        std::cout << list.size() << "\n";
        return 0;
    }
    if (o.format == "json") {
        json out = json::array();
        for (const auto& A : list) out.push_back(json_io::matrix_to_json(A));
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& A : list) std::cout << A.str() << "\n";
    }
    return 0;
}

Vect<BlockMatrix> apply_action(verify::Realization re, bool paren, const Generator& g, const Vect<BlockMatrix>& x,
                               Side side) {
    Vect<BlockMatrix> out;
    for (const auto& [A, c] : x) {
        Vect<BlockMatrix> img = paren ? coord::act_closed_paren(g, A, side) : verify::closed_action(re)(g, A, side);
        out += img.scaled(c);
    }
    return out;
}

int run_act(const Options& o) {
    const SuperShape sh = shape(o);
    const Ranks rk = ranks(o);
    auto re = verify::parse_realization(o.realization);
    const Side side = parse_side(o.side);
    const Generator g = Generator::parse(o.gen);
    g.validate(sh);
    if (!vmod::allowed(sh, rk, g, side))
        throw UsageError(g.str() + " is outside the " + o.side + " generator range for ranks " + verify::ranks_str(rk));
    auto x = json_io::element_from_json(sh, parse_json(o.elem, "--elem"));
    auto rows = restricted_indices(sh, rk.k, rk.l), cols = restricted_indices(sh, rk.r, rk.s);
    for (const auto& [A, c] : x)
        if (!A.supported_in(rows, cols)) throw UsageError(A.str() + " is not supported on the selected ranks");
    const bool paren = re == verify::Realization::Coord && o.basis == "paren";
    std::string tag = re == verify::Realization::Coord ? o.basis : re == verify::Realization::Diffop ? "X" : "V";
    print_element(o, apply_action(re, paren, g, x, side), tag);
    return 0;
}

int run_mul(const Options& o, const std::string& what) {
    if (what == "hecke") {
        Perm x = perm_of(o.x, "--x"), y = perm_of(o.y, "--y");
        if (x.size() != y.size()) throw UsageError("permutations of different degrees");
        auto p = schur::HeckeElem(x) * schur::HeckeElem(y);
        if (o.format == "json") {
            json out = json::array();
            for (const auto& [w, c] : p.terms()) out.push_back({{"perm", int_list(perm_str(w), "perm")}, {"coeff", c.str()}});
            std::cout << out.dump() << "\n";
        } else {
            std::cout << p.str() << "\n";
        }
        return 0;
    }
    const SuperShape sh = shape(o);
    auto x = json_io::element_from_json(sh, parse_json(o.x, "--x"));
    auto y = json_io::element_from_json(sh, parse_json(o.y, "--y"));
    int d = -1;
    for (const auto* v : {&x, &y})
        for (const auto& [A, c] : *v) {
            if (d >= 0 && A.degree() != d) throw UsageError("factors of different degrees");
            d = A.degree();
        }
    Vect<BlockMatrix> out;
    if (d >= 0) {
        if (o.method == "closed") {
            out = schur::mul_closed_e(x, y);
        } else {
            schur::SchurAlgebra S(sh, d);
            out = S.mul(x, y);
        }
    }
    print_element(o, out, "e");
    return 0;
}

int run_cosets(const Options& o) {
    Composition lam = composition_of(o.lambda, "--lambda");
    json out;
    std::ostringstream text;
    if (o.rho.empty()) {
        out = json::array();
        for (const auto& w : min_reps(lam)) {
            out.push_back(int_list(perm_str(w), "perm"));
            text << perm_str(w) << "\n";
        }
    } else {
        const SuperShape sh = shape(o);
        Composition rho = composition_of(o.rho, "--rho");
        if (static_cast<int>(lam.size()) != sh.N() || static_cast<int>(rho.size()) != sh.N())
            throw UsageError("compositions must have m + n parts");
        out = json::array();
        for (const auto& g : double_reps(lam, rho)) {
            bool kept = trivial_filter(sh, lam, rho, g);
            BlockMatrix A = jmat(sh, lam, g, rho);
            out.push_back({{"perm", int_list(perm_str(g), "perm")}, {"filtered", kept}, {"matrix", json_io::matrix_to_json(A)}});
            text << perm_str(g) << " " << (kept ? "kept" : "dropped") << " " << A.str() << "\n";
        }
    }
    if (o.format == "json")
        std::cout << out.dump() << "\n";
    else
        std::cout << text.str();
    return 0;
}

// --flip REALIZATION:SIDE:GEN negates one generator's action on one side
std::map<verify::Realization, verify::SidedAction> flips(const Options& o) {
    std::map<verify::Realization, verify::SidedAction> out;
    if (o.flip.empty()) return out;
    auto a = o.flip.find(':');
    auto b = a == std::string::npos ? a : o.flip.find(':', a + 1);
    if (b == std::string::npos) throw UsageError("--flip expects REALIZATION:SIDE:GEN");
    auto re = verify::parse_realization(o.flip.substr(0, a));
    Side side = parse_side(o.flip.substr(a + 1, b - a - 1));
    Generator g = Generator::parse(o.flip.substr(b + 1));
    out[re] = verify::sign_flipped(verify::closed_action(re), g, side);
    return out;
}

int run_check(const Options& o) {
    const SuperShape sh = shape(o);
    const Ranks rk = ranks(o);
    auto overrides = flips(o);
    auto action = [&](verify::Realization re) {
        return overrides.count(re) ? overrides.at(re) : verify::closed_action(re);
    };
    std::vector<verify::Realization> chosen = verify::all_realizations();
    if (!o.realization.empty()) chosen = {verify::parse_realization(o.realization)};

    std::vector<verify::Report> reports;
    std::vector<verify::CentralizerReport> cents;
    if (o.suite == "relations") {
        for (auto re : chosen)
            reports.push_back(verify::relation_check(verify::realization_str(re) + " relations " + verify::ranks_str(rk),
                                                     action(re), sh, rk, o.dmax));
    } else if (o.suite == "equiv") {
        reports.push_back(verify::compare_all(sh, rk, o.dmax, overrides));
    } else if (o.suite == "commute") {
        for (auto re : chosen)
            reports.push_back(verify::commute_check(verify::realization_str(re) + " commuting actions " + verify::ranks_str(rk),
                                                    action(re), sh, rk, o.dmax));
    } else if (o.suite == "centralizer") {
        auto re = o.realization.empty() ? verify::Realization::Vmod : chosen.front();
        if (o.d >= 0)
            cents.push_back(verify::centralizer_check(action(re), sh, rk, o.d));
        else
            for (int d = 1; d <= o.dmax; ++d) cents.push_back(verify::centralizer_check(action(re), sh, rk, d));
    } else {
        verify::SidedAction paren = [](const Generator& g, const BlockMatrix& A, Side side) {
            return coord::act_closed_paren(g, A, side);
        };
        if (overrides.count(verify::Realization::Coord)) {
            // perturb the paren formulas the same way as the requested brace ones
            auto a = o.flip.find(':'), b = o.flip.find(':', a + 1);
            paren = verify::sign_flipped(paren, Generator::parse(o.flip.substr(b + 1)), parse_side(o.flip.substr(a + 1, b - a - 1)));
        }
        reports.push_back(verify::coord_oracle_check(sh, o.dmax, paren));
        reports.push_back(verify::coord_fixture_check(sh, o.dmax));
        reports.push_back(verify::diffop_oracle_check(sh, o.dmax, action(verify::Realization::Diffop)));
        reports.push_back(verify::reversal_check(sh, o.dmax));
        for (int d = 1; d <= std::min(o.dmax, 3); ++d) {
            reports.push_back(verify::schur_closed_check(sh, d));
            reports.push_back(verify::schur_dimension_check(sh, d));
        }
    }
    bool pass = true;
    json out = json::array();
    for (const auto& r : reports) {
        pass = pass && r.pass();
        out.push_back(json_io::report_to_json(r));
        if (o.format == "text") std::cout << r.summary() << "\n";
    }
    for (const auto& c : cents) {
        pass = pass && c.pass();
        out.push_back(json_io::centralizer_to_json(c));
        if (o.format == "text") std::cout << c.summary() << "\n";
    }
    if (o.format == "json") std::cout << json{{"suite", o.suite}, {"status", pass ? "pass" : "fail"}, {"reports", out}}.dump() << "\n";
    return pass ? 0 : 1;
}

int run_stats(const Options& o) {
    const SuperShape sh = shape(o);
    BlockMatrix A = json_io::matrix_from_json(sh, parse_json(o.elem, "--elem"));
    auto st = stats(A);
    json out{{"h", st.h},       {"s", st.s},     {"gamma", st.gamma},        {"d", st.d},
             {"dprime", st.dprime}, {"hat", st.hat}, {"parity", A.parity()}, {"degree", A.degree()}};
    if (o.format == "json") {
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& key : {"h", "s", "gamma", "d", "dprime", "hat", "parity", "degree"})
            std::cout << key << " " << out.at(key).get<long>() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qhowe: quantum supergroup bimodules, Schur superalgebras and their checks"};
    app.require_subcommand(1);
    Options o;
    app.add_option("--jobs", o.jobs, "worker cap (computations run on one thread)")->check(CLI::PositiveNumber);

    auto* basis = app.add_subcommand("basis", "enumerate M(m|n,d) or M(k|l,r|s;d)");
    add_shape(basis, o);
    add_ranks(basis, o);
    add_format(basis, o);
    basis->add_option("--d", o.d, "degree")->required()->check(CLI::NonNegativeNumber);
    basis->add_option("--set", o.set, "M: full set, V: restricted to the ranks")->check(CLI::IsMember({"M", "V"}));
    basis->add_flag("--count", o.count, "print only the number of matrices");

    auto* act = app.add_subcommand("act", "apply a generator to an element of a realization");
    add_shape(act, o);
    add_ranks(act, o);
    add_format(act, o);
    act->add_option("--realization", o.realization, "coord, diffop or vmod")
        ->required()
        ->check(CLI::IsMember({"coord", "diffop", "vmod"}));
    act->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
    act->add_option("--gen", o.gen, "K(a,+1), K(a,-1), Eup(h) or Edown(h)")->required();
    act->add_option("--elem", o.elem, "JSON matrix or list of {matrix, coeff}")->required();
    act->add_option("--basis", o.basis, "coord only: brace or paren")->check(CLI::IsMember({"brace", "paren"}));

    auto* mul = app.add_subcommand("mul", "Hecke or Schur products");
    std::string mul_what;
    mul->add_option("algebra", mul_what, "hecke or schur")->required()->check(CLI::IsMember({"hecke", "schur"}));
    mul->add_option("--m", o.m, "even rank m")->check(CLI::Range(0, 8));
    mul->add_option("--n", o.n, "odd rank n")->check(CLI::Range(0, 8));
    add_format(mul, o);
    mul->add_option("--x", o.x, "left factor: one-line permutation or e-basis element")->required();
    mul->add_option("--y", o.y, "right factor")->required();
    mul->add_option("--method", o.method, "schur only: brute or closed")->check(CLI::IsMember({"brute", "closed"}));

    auto* cosets = app.add_subcommand("cosets", "minimal coset representatives");
    cosets->add_option("--lambda", o.lambda, "composition as a JSON array")->required();
    cosets->add_option("--rho", o.rho, "second composition: list double cosets with the parity filter");
    cosets->add_option("--m", o.m, "even rank m")->check(CLI::Range(0, 8));
    cosets->add_option("--n", o.n, "odd rank n")->check(CLI::Range(0, 8));
    add_format(cosets, o);

    auto* check = app.add_subcommand("check", "verification suites");
    check->add_option("suite", o.suite, "relations, equiv, commute, centralizer or oracles")
        ->required()
        ->check(CLI::IsMember({"relations", "equiv", "commute", "centralizer", "oracles"}));
    add_shape(check, o);
    add_ranks(check, o);
    add_format(check, o);
    check->add_option("--realization", o.realization, "restrict to one realization")
        ->check(CLI::IsMember({"coord", "diffop", "vmod"}));
    check->add_option("--dmax", o.dmax, "largest degree")->check(CLI::Range(0, 6));
    check->add_option("--d", o.d, "centralizer: single degree")->check(CLI::Range(0, 6));
    check->add_option("--flip", o.flip, "negative control REALIZATION:SIDE:GEN");

    auto* st = app.add_subcommand("stats", "matrix statistics");
    add_shape(st, o);
    add_format(st, o);
    st->add_option("--elem", o.elem, "JSON matrix")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mul->parsed() && mul_what == "schur" && (o.m < 0 || o.n < 0)) throw UsageError("mul schur needs --m and --n");
        if (cosets->parsed() && !o.rho.empty() && (o.m < 0 || o.n < 0)) throw UsageError("--rho needs --m and --n");
        if (basis->parsed()) return run_basis(o);
        if (act->parsed()) return run_act(o);
        if (mul->parsed()) return run_mul(o, mul_what);
        if (cosets->parsed()) return run_cosets(o);
        if (check->parsed()) return run_check(o);
        if (st->parsed()) return run_stats(o);
    } catch (const std::invalid_argument& e) {
        std::cerr << "qhowe: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        std::cerr << "qhowe: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qhowe: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
