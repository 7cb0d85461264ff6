#ifndef RAMLAB_LAURENT_HPP
#define RAMLAB_LAURENT_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "ramlab/fq.hpp"

namespace ramlab {

// Truncated Laurent series over F_q in the base uniformizer t.
//
// A series is one of
//   * exact       : finitely many terms, all higher coefficients known zero
//                   (prec() == kExact);
//   * truncated   : coefficients known for exponents < prec() only;
//   * zero-to-prec: no nonzero coefficient below prec(), nothing known beyond.
// Nonzero series keep lead() = valuation with a nonzero coefficient there.
class LaurentSeries {
public:
    static constexpr long long kExact = std::numeric_limits<long long>::max();

    LaurentSeries() = default;

    static LaurentSeries exact_zero(FqFieldPtr field);
    static LaurentSeries zero_to_prec(FqFieldPtr field, long long prec);
    // c * t^k; exact. Zero c gives the exact zero.
    static LaurentSeries monomial(const FqElement& c, long long k);
    static LaurentSeries constant(const FqElement& c) { return monomial(c, 0); }
    static LaurentSeries t(FqFieldPtr field);
    // coeffs[i] is the coefficient of t^(lead+i); prec = kExact makes it a
    // Laurent polynomial.
    static LaurentSeries make(FqFieldPtr field, long long lead,
                              std::vector<FqElement> coeffs, long long prec = kExact);

    const FqFieldPtr& field() const { return field_; }
    long long prec() const { return prec_; }
    bool is_exact() const { return prec_ == kExact; }
    bool is_exact_zero() const { return coeffs_.empty() && is_exact(); }
    bool is_zero_to_prec() const { return coeffs_.empty(); }

    // Valuation; nullopt means provably +infinity (exact zero).
    // Throws PrecisionError for a truncated series with no visible term.
    std::optional<long long> valuation() const;
    long long lead() const; // valuation of a series known nonzero

    // Coefficient of t^k for k < prec (PrecisionError beyond).
    FqElement at(long long k) const;

    // Stored coefficient window starting at lead(); coefficients between the
    // window end and prec() are implicitly zero.
    const std::vector<FqElement>& window() const { return coeffs_; }

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

    LaurentSeries scaled(const FqElement& c) const;
    LaurentSeries shifted(long long k) const; // * t^k

    // Multiplicative inverse. For an exact input the expansion is generally
    // infinite, so the result is truncated at prec_hint (absolute exponent
    // bound); pass kExact to keep an exact monomial inverse exact.
    LaurentSeries inverse(long long prec_hint) const;

    // Substitute t -> c * t^k, k >= 1, c != 0.
    LaurentSeries compose_monomial(const FqElement& c, long long k) const;

    LaurentSeries truncated(long long new_prec) const;
    LaurentSeries pow(long long k, long long prec_hint) const;

    // Equal wherever both are known (vacuously true on an empty joint range).
    friend bool equal_to_precision(const LaurentSeries& a, const LaurentSeries& b);
    // Strict structural equality (same lead/prec/coefficients).
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);
    friend bool operator!=(const LaurentSeries& a, const LaurentSeries& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();

    FqFieldPtr field_;
    long long lead_ = 0;                // meaningful only when coeffs_ nonempty
    std::vector<FqElement> coeffs_;     // coeffs_[0] != 0 when nonempty
    long long prec_ = kExact;
};

} // namespace ramlab

#endif
