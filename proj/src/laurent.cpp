#include "qhowe/laurent.hpp"

#include "qhowe/poly_util.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace qhowe {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const mpq_class& c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int k, const mpq_class& c) {
    LaurentPoly p;
    if (c != 0) p.terms_[k] = c;
    return p;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

mpq_class LaurentPoly::coeff(int k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(int k, const mpq_class& c) {
    if (c == 0) return;
    mpq_class cc = c;
    cc.canonicalize();
    auto [it, fresh] = terms_.try_emplace(k, cc);
    if (!fresh) {
        it->second += cc;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1) {
        const auto& [k, c] = *a.terms_.begin();
        for (const auto& [k2, c2] : b.terms_) r.terms_.emplace_hint(r.terms_.end(), k + k2, c * c2);
        return r;
    }
    if (b.terms_.size() == 1) {
        const auto& [k, c] = *b.terms_.begin();
        for (const auto& [k2, c2] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), k + k2, c * c2);
        return r;
    }
    for (const auto& [k1, c1] : a.terms_)
        for (const auto& [k2, c2] : b.terms_) r.add_term(k1 + k2, c1 * c2);
    return r;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    return std::lexicographical_compare(
        a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
        [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return x.second < y.second;
        });
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(-k, c);
    return r;
}

LaurentPoly LaurentPoly::shifted(int s) const {
    LaurentPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k + s, c);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        int k = it->first;
        mpq_class c = it->second;
        bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (k == 0) {
            out += c.get_str();
            continue;
        }
        if (c != 1) out += c.get_str() + "*";
        out += "v";
        if (k != 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail() const {
        throw std::invalid_argument("cannot parse Laurent polynomial: '" + s + "'");
    }
    long integer(bool allow_sign) {
        skip();
        size_t start = pos;
        if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail();
        return std::stol(s.substr(start, pos - start));
    }
    mpq_class rational() {
        skip();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            size_t d = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == d) fail();
        }
        mpq_class q(s.substr(start, pos - start));
        q.canonicalize();
        return q;
    }
    // term := [rational ['*']] ['v' ['^' int]]
    void term(LaurentPoly& out, bool neg) {
        skip();
        mpq_class c = 1;
        bool have_c = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            c = rational();
            have_c = true;
            eat('*');
        }
        int k = 0;
        if (eat('v')) {
            k = 1;
            if (eat('^')) k = static_cast<int>(integer(true));
        } else if (!have_c) {
            fail();
        }
        out.add_term(k, neg ? mpq_class(-c) : c);
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Parser p{text};
    LaurentPoly out;
    bool neg = p.eat('-');
    if (!neg) p.eat('+');
    p.term(out, neg);
    while (true) {
        p.skip();
        if (p.pos >= text.size()) break;
        if (p.eat('+'))
            p.term(out, false);
        else if (p.eat('-'))
            p.term(out, true);
        else
            p.fail();
    }
    return out;
}

LaurentPoly qint(int a) {
    if (a < 0) throw std::invalid_argument("qint of negative integer");
    LaurentPoly r;
    for (int i = 0; i < a; ++i) r.add_term(a - 1 - 2 * i, 1);
    return r;
}

LaurentPoly qfactorial(int a) {
    LaurentPoly r(1);
    for (int i = 2; i <= a; ++i) r *= qint(i);
    return r;
}

LaurentPoly qbracket(int a, bool odd) {
    if (a < 0) throw std::invalid_argument("qbracket of negative integer");
    LaurentPoly r;
    for (int i = 0; i < a; ++i) r.add_term(odd ? -2 * i : 2 * i, 1);
    return r;
}

LaurentPoly signed_pow(bool odd, int k) { return LaurentPoly::monomial(odd ? -k : k); }

LaurentPoly sign(int e) { return LaurentPoly((e % 2 == 0) ? 1 : -1); }

LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q) {
    if (q.is_zero()) throw std::domain_error("division by zero polynomial");
    if (p.is_zero()) return {};
    if (q.is_monomial()) {
        const auto& [k, c] = *q.terms().begin();
        LaurentPoly r;
        for (const auto& [k2, c2] : p.terms()) r.add_term(k2 - k, c2 / c);
        return r;
    }
    int shift = p.min_exp() - q.min_exp();
    auto [quot, rem] = poly::divmod(poly::from_laurent(p), poly::from_laurent(q));
    if (!rem.empty()) throw NotDivisible();
    return poly::to_laurent(quot).shifted(shift);
}

}  // namespace qhowe
