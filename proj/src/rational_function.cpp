#include "ramlab/rational_function.hpp"

namespace ramlab {

RationalFunction::RationalFunction(FqPolynomial num, FqPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = FqPolynomial::constant(den_.field()->one());
        return;
    }
    FqPolynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.div(g);
        den_ = den_.div(g);
    }
    FqElement lc = den_.leading();
    if (!lc.is_one()) {
        FqElement inv = lc.inverse();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

RationalFunction RationalFunction::zero(const FqFieldPtr& field) {
    return from_poly(FqPolynomial::zero(field));
}

RationalFunction RationalFunction::one(const FqFieldPtr& field) {
    return from_poly(FqPolynomial::constant(field->one()));
}

RationalFunction RationalFunction::from_poly(FqPolynomial p) {
    auto field = p.field();
    return RationalFunction(std::move(p), FqPolynomial::constant(field->one()));
}

RationalFunction RationalFunction::constant(const FqElement& c) {
    return from_poly(FqPolynomial::constant(c));
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DomainError("division by the zero function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::operator*(const FqElement& c) const {
    return RationalFunction(num_ * c, den_);
}

RationalFunction RationalFunction::pow(long long k) const {
    if (k < 0) {
        if (is_zero()) throw DomainError("negative power of zero");
        return RationalFunction(den_, num_).pow(-k);
    }
    return RationalFunction(num_.pow((uint32_t)k), den_.pow((uint32_t)k));
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
}

bool operator<(const RationalFunction& a, const RationalFunction& b) {
    if (a.num_ != b.num_) return a.num_ < b.num_;
    return a.den_ < b.den_;
}

long long RationalFunction::order_at(const Place& place) const {
    if (is_zero()) throw DomainError("the zero function has no order");
    if (place.is_infinity()) return den_.degree() - num_.degree();
    const FqPolynomial& pi = place.poly();
    long long ord = 0;
    FqPolynomial n = num_;
    while (true) {
        auto [q, r] = n.divmod(pi);
        if (!r.is_zero()) break;
        n = q;
        ++ord;
    }
    FqPolynomial d = den_;
    while (true) {
        auto [q, r] = d.divmod(pi);
        if (!r.is_zero()) break;
        d = q;
        --ord;
    }
    return ord;
}

std::string RationalFunction::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction artin_schreier_image(const RationalFunction& h) {
    return h.pow((long long)h.field()->p()) - h;
}

} // namespace ramlab
