#ifndef RAMLAB_FQ_POLY_HPP
#define RAMLAB_FQ_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ramlab/fq.hpp"

namespace ramlab {

// Univariate polynomial over F_q, coefficients low-to-high, no trailing
// zeros (the zero polynomial has an empty coefficient vector).
class FqPolynomial {
public:
    FqPolynomial() = default;
    FqPolynomial(FqFieldPtr field, std::vector<FqElement> coeffs);

    static FqPolynomial zero(FqFieldPtr field) { return FqPolynomial(std::move(field), {}); }
    static FqPolynomial constant(const FqElement& c);
    static FqPolynomial x(FqFieldPtr field); // the variable t
    // Monic polynomial of the given degree whose lower coefficients are the
    // base-q digits of idx (enumeration order for places and moduli).
    static FqPolynomial monic_from_index(FqFieldPtr field, uint32_t degree, uint64_t idx);

    const FqFieldPtr& field() const { return field_; }
    const std::vector<FqElement>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    long long degree() const { return coeffs_.empty() ? -1 : (long long)coeffs_.size() - 1; }
    const FqElement& leading() const;
    FqElement coeff(size_t i) const; // zero beyond degree
    bool is_monic() const;
    bool is_constant() const { return coeffs_.size() <= 1; }

    FqPolynomial operator-() const;
    friend FqPolynomial operator+(const FqPolynomial& a, const FqPolynomial& b);
    friend FqPolynomial operator-(const FqPolynomial& a, const FqPolynomial& b);
    friend FqPolynomial operator*(const FqPolynomial& a, const FqPolynomial& b);
    FqPolynomial operator*(const FqElement& c) const;

    // Euclidean division; remainder degree < divisor degree.
    std::pair<FqPolynomial, FqPolynomial> divmod(const FqPolynomial& divisor) const;
    FqPolynomial mod(const FqPolynomial& divisor) const { return divmod(divisor).second; }
    FqPolynomial div(const FqPolynomial& divisor) const { return divmod(divisor).first; }

    FqPolynomial monic() const; // divide by leading coefficient
    FqPolynomial derivative() const;
    FqPolynomial pow(uint32_t k) const;
    FqElement eval(const FqElement& at) const;

    friend bool operator==(const FqPolynomial& a, const FqPolynomial& b);
    friend bool operator!=(const FqPolynomial& a, const FqPolynomial& b) { return !(a == b); }
    // Order by (degree, coefficient indices low-to-high); deterministic.
    friend bool operator<(const FqPolynomial& a, const FqPolynomial& b);

    std::string str(const std::string& var = "t") const;

private:
    FqFieldPtr field_;
    std::vector<FqElement> coeffs_;
};

FqPolynomial gcd(const FqPolynomial& a, const FqPolynomial& b); // monic gcd
FqPolynomial powmod(const FqPolynomial& base, uint64_t e, const FqPolynomial& modulus);

// Rabin irreducibility test; requires f monic of degree >= 1.
bool poly_is_irreducible(const FqPolynomial& f);

// A closed point of P^1 over F_q: either a monic irreducible polynomial or
// the place at infinity.
class Place {
public:
    static Place infinity(FqFieldPtr field);
    static Place finite(FqPolynomial poly); // validates monic irreducible

    bool is_infinity() const { return infinity_; }
    const FqPolynomial& poly() const;
    const FqFieldPtr& field() const { return field_; }
    long long degree() const { return infinity_ ? 1 : poly_.degree(); }

    friend bool operator==(const Place& a, const Place& b);
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
    // infinity first, then by (degree, coefficient order)
    friend bool operator<(const Place& a, const Place& b);

    std::string str() const;

private:
    Place() = default;
    bool infinity_ = false;
    FqFieldPtr field_;
    FqPolynomial poly_;
};

// Infinity plus all monic irreducible polynomials of degree <= d, in the
// deterministic (degree, index) order.
std::vector<Place> places_up_to_degree(const FqFieldPtr& field, uint32_t d);

// Factorization of a nonzero polynomial into monic irreducibles by trial
// division at desk scale; returns (irreducible, multiplicity) pairs plus the
// leading unit. Degree capped to keep enumeration bounded.
struct MonicFactorization {
    FqElement unit;
    std::vector<std::pair<FqPolynomial, long long>> factors;
};
MonicFactorization factor_poly(const FqPolynomial& f, long long degree_cap = 24);

} // namespace ramlab

#endif
