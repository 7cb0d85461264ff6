#include "ramlab/divisor.hpp"

#include <sstream>

namespace ramlab {

void EffectiveDivisor::add(const Place& place, long long mult) {
    if (mult < 0) throw DomainError("effective divisors need nonnegative multiplicities");
    if (mult == 0) return;
    entries_[place] += mult;
}

long long EffectiveDivisor::multiplicity(const Place& place) const {
    auto it = entries_.find(place);
    return it == entries_.end() ? 0 : it->second;
}

long long EffectiveDivisor::degree() const {
    long long d = 0;
    for (const auto& [place, mult] : entries_) d += mult * place.degree();
    return d;
}

bool operator<=(const EffectiveDivisor& a, const EffectiveDivisor& b) {
    for (const auto& [place, mult] : a.entries_)
        if (mult > b.multiplicity(place)) return false;
    return true;
}

bool operator==(const EffectiveDivisor& a, const EffectiveDivisor& b) {
    return a.entries_ == b.entries_;
}

std::string EffectiveDivisor::str() const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [place, mult] : entries_) {
        if (!first) os << " + ";
        first = false;
        os << mult << "[" << place.str() << "]";
    }
    return os.str();
}

} // namespace ramlab
