#ifndef RAMLAB_FQ_HPP
#define RAMLAB_FQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ramlab/errors.hpp"

namespace ramlab {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

// Element of F_q, q = p^n, in the polynomial basis over the prime field.
// coords()[i] is the coefficient of x^i, values in [0, p).
class FqElement {
public:
    FqElement() = default;
    FqElement(FqFieldPtr field, std::vector<uint32_t> coords);

    const FqFieldPtr& field() const { return field_; }
    const std::vector<uint32_t>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_one() const;

    // Base-p integer encoding sum coords[i] * p^i; used for canonical
    // element ordering and enumeration.
    uint64_t index() const;

    FqElement operator-() const;
    friend FqElement operator+(const FqElement& a, const FqElement& b);
    friend FqElement operator-(const FqElement& a, const FqElement& b);
    friend FqElement operator*(const FqElement& a, const FqElement& b);
    FqElement& operator+=(const FqElement& b) { return *this = *this + b; }
    FqElement& operator-=(const FqElement& b) { return *this = *this - b; }
    FqElement& operator*=(const FqElement& b) { return *this = *this * b; }

    FqElement inverse() const;
    FqElement pow(long long k) const;   // negative k via inverse
    FqElement frobenius() const;        // a^p
    FqElement pth_root() const;         // inverse of frobenius
    uint32_t trace() const;             // Tr_{F_q/F_p}, value in [0, p)

    friend bool operator==(const FqElement& a, const FqElement& b);
    friend bool operator!=(const FqElement& a, const FqElement& b) { return !(a == b); }

    std::string str() const;

private:
    FqFieldPtr field_;
    std::vector<uint32_t> coords_;
};

// The field context F_q = F_p[x]/(modulus).  Immutable; elements keep a
// shared_ptr back to it.
class FqField : public std::enable_shared_from_this<FqField> {
public:
    static constexpr uint64_t kDefaultMaxQ = 1u << 16;

    // modulus: coefficients low-to-high over F_p, length n+1, monic,
    // irreducible over F_p (verified here).
    static FqFieldPtr create(uint32_t p, uint32_t n, std::vector<uint32_t> modulus,
                             uint64_t max_q = kDefaultMaxQ);

    // Canonical modulus: the monic irreducible of degree n over F_p whose
    // coefficient vector (c_0..c_{n-1}) has the least base-p index.
    static FqFieldPtr create_canonical(uint32_t p, uint32_t n,
                                       uint64_t max_q = kDefaultMaxQ);

    uint32_t p() const { return p_; }
    uint32_t n() const { return n_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus() const { return modulus_; }

    FqElement zero() const;
    FqElement one() const;
    FqElement from_coords(std::vector<uint32_t> coords) const;
    FqElement from_index(uint64_t idx) const;      // inverse of FqElement::index
    FqElement from_int(long long v) const;         // image of an integer (prime subfield)
    FqElement generator() const;                   // x itself (a root of the modulus)
    FqElement primitive_element() const;           // generator of F_q^x (cached)

    // Prime-subfield arithmetic helpers.
    uint32_t padd(uint32_t a, uint32_t b) const { return (a + b) % p_; }
    uint32_t psub(uint32_t a, uint32_t b) const { return (a + p_ - b) % p_; }
    uint32_t pmul(uint32_t a, uint32_t b) const { return (uint32_t)(((uint64_t)a * b) % p_); }
    uint32_t pinv(uint32_t a) const;

    bool same_as(const FqField& other) const {
        return p_ == other.p_ && n_ == other.n_ && modulus_ == other.modulus_;
    }

    // Reduce a raw coefficient vector (low-to-high over F_p) mod the modulus.
    std::vector<uint32_t> reduce_mod_modulus(std::vector<uint32_t> raw) const;

private:
    FqField(uint32_t p, uint32_t n, std::vector<uint32_t> modulus);

    uint32_t p_;
    uint32_t n_;
    uint64_t q_;
    std::vector<uint32_t> modulus_;
    mutable std::vector<uint32_t> primitive_cache_; // coords; empty until first use
};

// Fails unless both operands live in the same field.
void require_same_field(const FqElement& a, const FqElement& b);

} // namespace ramlab

#endif
