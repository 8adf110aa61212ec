#include "qhowe/rational_fn.hpp"

#include "qhowe/poly_util.hpp"

#include <stdexcept>

namespace qhowe {

RationalFn::RationalFn(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (d.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
}

void RationalFn::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_monomial()) {
        const auto& [k, c] = *den_.terms().begin();
        LaurentPoly r;
        for (const auto& [k2, c2] : num_.terms()) r.add_term(k2 - k, c2 / c);
        num_ = std::move(r);
        den_ = LaurentPoly(1);
        return;
    }
    int shift = num_.min_exp() - den_.min_exp();
    poly::Dense n = poly::from_laurent(num_);
    poly::Dense d = poly::from_laurent(den_);
    poly::Dense g = poly::gcd(n, d);
    if (g.size() > 1) {
        n = poly::divmod(n, g).first;
        d = poly::divmod(d, g).first;
    }
    mpq_class lead = d.back();
    for (auto& c : n) c /= lead;
    for (auto& c : d) c /= lead;
    num_ = poly::to_laurent(n).shifted(shift);
    den_ = poly::to_laurent(d);
}

LaurentPoly RationalFn::to_laurent() const {
    if (!is_laurent()) throw NotDivisible();
    return num_;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!(den_ == LaurentPoly(1))) normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFn();
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    if (!(den_ == LaurentPoly(1))) normalize();
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.inverse(); }

RationalFn RationalFn::operator-() const {
    RationalFn r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFn RationalFn::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFn(den_, num_);
}

std::string RationalFn::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace qhowe
