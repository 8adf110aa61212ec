#pragma once

#include "qhowe/laurent.hpp"

namespace qhowe {

// Element of Q(v). Stored reduced: the denominator is a polynomial with
// nonzero constant term and leading coefficient 1, the numerator absorbs
// any power of v.
class RationalFn {
public:
    RationalFn() = default;
    RationalFn(long c) : num_(c), den_(1) {}
    RationalFn(const LaurentPoly& p) : num_(p), den_(1) {}
    RationalFn(const LaurentPoly& n, const LaurentPoly& d);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == LaurentPoly(1); }
    // throws NotDivisible when not Laurent
    LaurentPoly to_laurent() const;

    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);
    RationalFn operator-() const;
    RationalFn inverse() const;

    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string str() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_{1};
};

inline bool is_zero(const RationalFn& x) { return x.is_zero(); }

}  // namespace qhowe
