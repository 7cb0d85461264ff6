#ifndef RAMLAB_DIVISOR_HPP
#define RAMLAB_DIVISOR_HPP

#include <map>

#include "ramlab/fq_poly.hpp"

namespace ramlab {

// Effective divisor on P^1 over F_q: finitely many places with nonnegative
// multiplicities (zero entries are dropped).
class EffectiveDivisor {
public:
    explicit EffectiveDivisor(FqFieldPtr field) : field_(std::move(field)) {}

    const FqFieldPtr& field() const { return field_; }
    const std::map<Place, long long>& entries() const { return entries_; }

    void add(const Place& place, long long mult);
    long long multiplicity(const Place& place) const;
    long long degree() const; // sum mult * deg(place)
    bool empty() const { return entries_.empty(); }

    // pointwise comparison of multiplicities
    friend bool operator<=(const EffectiveDivisor& a, const EffectiveDivisor& b);
    friend bool operator==(const EffectiveDivisor& a, const EffectiveDivisor& b);

    std::string str() const;

private:
    FqFieldPtr field_;
    std::map<Place, long long> entries_;
};

} // namespace ramlab

#endif
