#ifndef RAMLAB_RATIONAL_FUNCTION_HPP
#define RAMLAB_RATIONAL_FUNCTION_HPP

#include "ramlab/fq_poly.hpp"

namespace ramlab {

// Element of F_q(t) in canonical form: numerator and denominator coprime,
// denominator monic.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(FqPolynomial num, FqPolynomial den);

    static RationalFunction zero(const FqFieldPtr& field);
    static RationalFunction one(const FqFieldPtr& field);
    static RationalFunction from_poly(FqPolynomial p);
    static RationalFunction constant(const FqElement& c);

    const FqPolynomial& num() const { return num_; }
    const FqPolynomial& den() const { return den_; }
    const FqFieldPtr& field() const { return num_.field(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction operator*(const FqElement& c) const;
    RationalFunction pow(long long k) const;

    friend bool operator==(const RationalFunction& a, const RationalFunction& b);
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }
    friend bool operator<(const RationalFunction& a, const RationalFunction& b);

    // ord_z of a nonzero function; at infinity this is deg den - deg num.
    long long order_at(const Place& place) const;
    long long pole_order_at(const Place& place) const { return std::max(0ll, -order_at(place)); }

    // Quotient num div den; carries the pole at infinity.
    FqPolynomial polynomial_part() const { return num_.div(den_); }

    std::string str() const;

private:
    FqPolynomial num_;
    FqPolynomial den_;
};

// The Artin-Schreier operator h -> h^p - h.
RationalFunction artin_schreier_image(const RationalFunction& h);

} // namespace ramlab

#endif
