#ifndef RAMLAB_TESTS_ORACLES_HPP
#define RAMLAB_TESTS_ORACLES_HPP

// Brute-force reference counts for the cover censuses.  These never call
// as_reduce: equivalence is decided by exhaustive search over witnesses, so
// the census implementation is checked by an independent route.

#include <map>
#include <set>
#include <vector>

#include "ramlab/census.hpp"

namespace ramlab::oracle {

struct BruteCounts {
    long long classes = 0;
    long long fields = 0;
    long long constants = 0;
};

// Enumerate the span of L(D); two functions are equivalent iff their
// difference is h^p - h for some h in the span of L(floor(D/p)) (a difference
// of bounded classes always has such a witness).  A class is kept when some
// member has all pole orders <= D pointwise after minimizing over members.
inline BruteCounts brute_force_as_census(const FqFieldPtr& field, const EffectiveDivisor& D) {
    const long long p = field->p();
    EffectiveDivisor D_over_p(field);
    for (const auto& [place, mult] : D.entries()) D_over_p.add(place, mult / p);

    auto span = [&](const EffectiveDivisor& bound) {
        auto basis = riemann_roch_basis(bound);
        uint64_t total = 1;
        for (size_t i = 0; i < basis.size(); ++i) total *= field->q();
        std::vector<RationalFunction> out;
        out.reserve(total);
        for (uint64_t idx = 0; idx < total; ++idx) {
            RationalFunction g = RationalFunction::zero(field);
            uint64_t rest = idx;
            for (const auto& b : basis) {
                uint64_t digit = rest % field->q();
                rest /= field->q();
                if (digit != 0) g = g + b * field->from_index(digit);
            }
            out.push_back(std::move(g));
        }
        return out;
    };

    std::vector<RationalFunction> ambient = span(D);
    std::vector<RationalFunction> witness_images;
    for (const auto& h : span(D_over_p)) witness_images.push_back(artin_schreier_image(h));

    std::set<RationalFunction> seen;
    std::vector<std::vector<RationalFunction>> classes;
    for (const auto& g : ambient) {
        if (seen.count(g)) continue;
        std::vector<RationalFunction> members;
        for (const auto& w : witness_images) {
            RationalFunction member = g + w;
            if (!seen.insert(member).second) continue;
            members.push_back(member);
        }
        classes.push_back(std::move(members));
    }

    BruteCounts counts;
    std::vector<RationalFunction> kept_reps;
    for (const auto& members : classes) {
        bool zero_class = false;
        for (const auto& m : members)
            if (m.is_zero()) zero_class = true;
        if (zero_class) continue;
        // minimal pole orders over the class at every place in |D| and beyond
        bool bounded = true;
        bool constant = false;
        for (const auto& m : members)
            if (m.is_constant()) constant = true;
        // the minimal-pole member witnesses the Swan divisor
        const RationalFunction* best = &members.front();
        long long best_degree = pole_divisor(*best).degree();
        for (const auto& m : members) {
            long long deg = pole_divisor(m).degree();
            if (deg < best_degree) {
                best = &m;
                best_degree = deg;
            }
        }
        if (!(pole_divisor(*best) <= D)) bounded = false;
        if (!bounded) continue;
        ++counts.classes;
        if (constant) ++counts.constants;
        kept_reps.push_back(*best);
    }
    // fields: join classes under scaling by the prime subfield's units
    std::set<size_t> used;
    for (size_t i = 0; i < kept_reps.size(); ++i) {
        if (used.count(i)) continue;
        ++counts.fields;
        used.insert(i);
        for (long long a = 2; a < p; ++a) {
            RationalFunction scaled = kept_reps[i] * field->from_int(a);
            for (size_t j = 0; j < kept_reps.size(); ++j) {
                if (used.count(j)) continue;
                // same class iff difference has a witness
                for (const auto& w : witness_images)
                    if (kept_reps[j] == scaled + w) {
                        used.insert(j);
                        break;
                    }
            }
        }
    }
    return counts;
}

// Kummer classes by pairwise e-th power ratio testing over all candidate
// functions supported in S.
inline long long brute_force_kummer_census(const FqFieldPtr& field, const std::set<Place>& S,
                                           long long e) {
    std::vector<Place> finite;
    bool has_inf = false;
    for (const auto& place : S) {
        if (place.is_infinity())
            has_inf = true;
        else
            finite.push_back(place);
    }
    // all f = c prod pi^{n_i}, c in F_q^x, n_i in [0, e)
    std::vector<RationalFunction> pool;
    uint64_t maps = 1;
    for (size_t i = 0; i < finite.size(); ++i) maps *= (uint64_t)e;
    for (uint64_t code = 0; code < maps; ++code) {
        uint64_t rest = code;
        FqPolynomial f = FqPolynomial::constant(field->one());
        long long weighted = 0;
        for (const auto& place : finite) {
            long long n = (long long)(rest % (uint64_t)e);
            rest /= (uint64_t)e;
            weighted += n * place.degree();
            f = f * place.poly().pow((uint32_t)n);
        }
        if (!has_inf && weighted % e != 0) continue; // ramified at infinity
        for (uint64_t ci = 1; ci < field->q(); ++ci)
            pool.push_back(RationalFunction::from_poly(f * field->from_index(ci)));
    }
    auto is_eth_power_ratio = [&](const RationalFunction& a, const RationalFunction& b) {
        RationalFunction ratio = a / b;
        // candidates g = d prod pi^{k_i} with e*k_i matching the ratio orders
        for (const auto& place : finite)
            if (ratio.order_at(place) % e != 0) return false;
        RationalFunction root = RationalFunction::one(field);
        for (const auto& place : finite)
            root = root * RationalFunction::from_poly(place.poly()).pow(ratio.order_at(place) / e);
        RationalFunction unit = ratio / root.pow(e);
        if (!unit.is_constant()) return false;
        FqElement u = unit.num().coeff(0) * unit.den().coeff(0).inverse();
        for (uint64_t ci = 1; ci < field->q(); ++ci)
            if (field->from_index(ci).pow(e) == u) return true;
        return false;
    };
    std::vector<RationalFunction> reps;
    long long nontrivial = 0;
    for (const auto& f : pool) {
        bool known = false;
        for (const auto& r : reps)
            if (is_eth_power_ratio(f, r)) { known = true; break; }
        if (known) continue;
        reps.push_back(f);
        if (!is_eth_power_ratio(f, RationalFunction::one(field))) ++nontrivial;
    }
    return nontrivial;
}

} // namespace ramlab::oracle

#endif
