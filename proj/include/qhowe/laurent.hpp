#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>

namespace qhowe {

struct NotDivisible : std::runtime_error {
    NotDivisible() : std::runtime_error("Laurent division is not exact") {}
};

// Element of Q[v, v^-1]; zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<int, mpq_class>;

    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const mpq_class& c);

    static LaurentPoly monomial(int k, const mpq_class& c = 1);
    static LaurentPoly v() { return monomial(1); }
    static LaurentPoly parse(const std::string& text);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    int max_exp() const;
    int min_exp() const;
    mpq_class coeff(int k) const;
    mpq_class leading_coeff() const { return terms_.rbegin()->second; }

    void add_term(int k, const mpq_class& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b);

    // v -> v^-1
    LaurentPoly bar() const;
    LaurentPoly shifted(int k) const;
    std::string str() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

// [a] = (v^a - v^-a)/(v - v^-1)
LaurentPoly qint(int a);
// [a]! = [1][2]...[a]
LaurentPoly qfactorial(int a);
// (v^{2a}-1)/(v^2-1), with v -> v^-1 when odd
LaurentPoly qbracket(int a, bool odd);
// v_p^k: v^k for even p, v^-k for odd
LaurentPoly signed_pow(bool odd, int k);
LaurentPoly sign(int e);

// r with r*q == p; throws NotDivisible
LaurentPoly divide_exact(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace qhowe
