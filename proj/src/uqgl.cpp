#include "qhowe/uqgl.hpp"

#include <regex>
#include <stdexcept>

namespace qhowe {

Generator Generator::parse(const std::string& text) {
    static const std::regex k_re(R"(\s*K\(\s*(\d+)\s*,\s*([+-]?1)\s*\)\s*)");
    static const std::regex e_re(R"(\s*(Eup|Edown)\(\s*(\d+)\s*\)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, k_re)) return K(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(text, m, e_re))
        return m[1] == "Eup" ? Eup(std::stoi(m[2])) : Edown(std::stoi(m[2]));
    throw std::invalid_argument("cannot parse generator '" + text + "'");
}

void Generator::validate(const SuperShape& sh) const {
    if (is_K()) {
        if (index < 1 || index > sh.N() || (exp != 1 && exp != -1))
            throw std::out_of_range("generator " + str() + " out of range");
    } else if (index < 1 || index >= sh.N()) {
        throw std::out_of_range("generator " + str() + " out of range");
    }
}

std::string Generator::str() const {
    switch (kind) {
        case GenKind::K:
            return "K(" + std::to_string(index) + "," + (exp > 0 ? "+1" : "-1") + ")";
        case GenKind::Eup:
            return "Eup(" + std::to_string(index) + ")";
        case GenKind::Edown:
            return "Edown(" + std::to_string(index) + ")";
    }
    return "";
}

int word_parity(const SuperShape& sh, const GenWord& w) {
    int p = 0;
    for (const auto& g : w) p += g.parity(sh);
    return p % 2;
}

std::string word_str(const GenWord& w) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + w[i].str();
    return s;
}

Generator omega(const Generator& g) {
    switch (g.kind) {
        case GenKind::K:
            return g;
        case GenKind::Eup:
            return Generator::Edown(g.index);
        case GenKind::Edown:
            return Generator::Eup(g.index);
    }
    return g;
}

GenWord omega(const GenWord& w) {
    GenWord r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(omega(*it));
    return r;
}

std::vector<CoproductTerm> coproduct(const Generator& g) {
    const int h = g.index;
    switch (g.kind) {
        case GenKind::K:
            return {{{g}, {g}}};
        case GenKind::Eup:
            return {{{g}, {Generator::K(h, 1), Generator::K(h + 1, -1)}}, {{}, {g}}};
        case GenKind::Edown:
            return {{{g}, {}}, {{Generator::K(h, -1), Generator::K(h + 1, 1)}, {g}}};
    }
    return {};
}

std::vector<std::pair<GenWord, LaurentPoly>> expand_E(const SuperShape& sh, int a, int b) {
    if (a == b) throw std::invalid_argument("expand_E needs a != b");
    if (b == a + 1) return {{{Generator::Eup(a)}, LaurentPoly(1)}};
    if (b == a - 1) return {{{Generator::Edown(b)}, LaurentPoly(1)}};
    int c = a < b ? b - 1 : b + 1;
    LaurentPoly twist = -signed_pow(sh.odd(c), a < b ? -1 : 1);
    auto x = expand_E(sh, a, c);
    auto y = expand_E(sh, c, b);
    std::vector<std::pair<GenWord, LaurentPoly>> out;
    for (const auto& [wx, cx] : x)
        for (const auto& [wy, cy] : y) {
            GenWord xy = wx, yx = wy;
            xy.insert(xy.end(), wy.begin(), wy.end());
            yx.insert(yx.end(), wx.begin(), wx.end());
            out.emplace_back(xy, cx * cy);
            out.emplace_back(yx, cx * cy * twist);
        }
    return out;
}

Vect<int> natural_action(const SuperShape& sh, const Generator& g, int b) {
    g.validate(sh);
    const int h = g.index;
    switch (g.kind) {
        case GenKind::K:
            return Vect<int>(b, signed_pow(sh.odd(h), h == b ? g.exp : 0));
        case GenKind::Eup:
            return b == h + 1 ? Vect<int>(h) : Vect<int>();
        case GenKind::Edown:
            return b == h ? Vect<int>(h + 1) : Vect<int>();
    }
    return {};
}

std::vector<Generator> generators(const std::vector<int>& idx) {
    std::vector<Generator> out;
    for (int a : idx) {
        out.push_back(Generator::K(a, 1));
        out.push_back(Generator::K(a, -1));
    }
    for (size_t t = 0; t + 1 < idx.size(); ++t) {
        out.push_back(Generator::Eup(idx[t]));
        out.push_back(Generator::Edown(idx[t]));
    }
    return out;
}

std::vector<Generator> generators(const SuperShape& sh) { return generators(restricted_indices(sh, sh.m, sh.n)); }

std::vector<RelationInstance> relations(const SuperShape& sh, const std::vector<int>& idx) {
    auto has = [&](int a) {
        for (int x : idx)
            if (x == a) return true;
        return false;
    };
    std::vector<int> es;
    for (int h : idx)
        if (has(h + 1)) es.push_back(h);
    const int m = sh.m;
    const LaurentPoly one(1), minus(-1);
    using G = Generator;
    std::vector<RelationInstance> rels;
    auto S = [](int x) { return std::to_string(x); };

    for (int a : idx) {
        rels.push_back({"R1 K" + S(a) + "K" + S(a) + "^-1", {{one, {G::K(a, 1), G::K(a, -1)}}, {minus, {}}}});
        rels.push_back({"R1 K" + S(a) + "^-1K" + S(a), {{one, {G::K(a, -1), G::K(a, 1)}}, {minus, {}}}});
        for (int b : idx)
            if (a < b)
                rels.push_back({"R1 K" + S(a) + "K" + S(b), {{one, {G::K(a), G::K(b)}}, {minus, {G::K(b), G::K(a)}}}});
    }
    for (int a : idx)
        for (int b : es) {
            int e = (a == b) - (a == b + 1);
            rels.push_back({"R2 K" + S(a) + " Eup" + S(b),
                            {{one, {G::K(a, 1), G::Eup(b), G::K(a, -1)}}, {-signed_pow(sh.odd(a), e), {G::Eup(b)}}}});
            rels.push_back({"R2 K" + S(a) + " Edown" + S(b),
                            {{one, {G::K(a, 1), G::Edown(b), G::K(a, -1)}},
                             {-signed_pow(sh.odd(a), -e), {G::Edown(b)}}}});
        }
    for (int a : es)
        for (int b : es) {
            int pe = G::Eup(a).parity(sh) * G::Edown(b).parity(sh);
            LaurentPoly va = signed_pow(sh.odd(a), 1) - signed_pow(sh.odd(a), -1);
            RelationInstance r{"R3 Eup" + S(a) + " Edown" + S(b),
                               {{va, {G::Eup(a), G::Edown(b)}}, {pe ? va : -va, {G::Edown(b), G::Eup(a)}}}};
            if (a == b) {
                r.terms.push_back({minus, {G::K(a, 1), G::K(a + 1, -1)}});
                r.terms.push_back({one, {G::K(a, -1), G::K(a + 1, 1)}});
            }
            rels.push_back(std::move(r));
        }
    for (int a : es)
        for (int b : es)
            if (a - b >= 2) {
                rels.push_back({"R4 Eup" + S(a) + " Eup" + S(b), {{one, {G::Eup(a), G::Eup(b)}}, {minus, {G::Eup(b), G::Eup(a)}}}});
                rels.push_back({"R4 Edown" + S(a) + " Edown" + S(b),
                                {{one, {G::Edown(a), G::Edown(b)}}, {minus, {G::Edown(b), G::Edown(a)}}}});
            }
    const LaurentPoly vv = -(LaurentPoly::monomial(1) + LaurentPoly::monomial(-1));
    for (int a : es)
        for (int b : es)
            if (std::abs(a - b) == 1 && a != m) {
                for (bool up : {true, false}) {
                    G x = up ? G::Eup(a) : G::Edown(a);
                    G y = up ? G::Eup(b) : G::Edown(b);
                    rels.push_back({std::string("R5 ") + (up ? "Eup" : "Edown") + S(a) + "," + S(b),
                                    {{one, {x, x, y}}, {vv, {x, y, x}}, {one, {y, x, x}}}});
                }
            }
    if (has(m) && has(m + 1)) {
        rels.push_back({"R6 Eup" + S(m) + "^2", {{one, {G::Eup(m), G::Eup(m)}}}});
        rels.push_back({"R6 Edown" + S(m) + "^2", {{one, {G::Edown(m), G::Edown(m)}}}});
        if (has(m - 1) && has(m + 2)) {
            for (bool up : {true, false}) {
                int a = up ? m - 1 : m + 2, b = up ? m + 2 : m - 1;
                G g = up ? G::Eup(m) : G::Edown(m);
                RelationInstance r{"R6 [E" + S(a) + "," + S(b) + ", " + g.str() + "]", {}};
                // both odd: the bracket is an anticommutator
                for (const auto& [w, c] : expand_E(sh, a, b)) {
                    GenWord wg = w, gw{g};
                    wg.push_back(g);
                    gw.insert(gw.end(), w.begin(), w.end());
                    r.terms.push_back({c, wg});
                    r.terms.push_back({c, gw});
                }
                rels.push_back(std::move(r));
            }
        }
    }
    return rels;
}

std::string side_str(Side s) { return s == Side::Left ? "left" : "right"; }

Side parse_side(const std::string& s) {
    if (s == "left" || s == "L") return Side::Left;
    if (s == "right" || s == "R") return Side::Right;
    throw std::invalid_argument("side must be left or right");
}

}  // namespace qhowe
