#ifndef RAMLAB_CENSUS_HPP
#define RAMLAB_CENSUS_HPP

#include <set>

#include "ramlab/divisor.hpp"
#include "ramlab/rational_function.hpp"

namespace ramlab {

// Basis of L(D) = { g : div(g) >= -D } on P^1: powers of t over the product
// of the finite-place polynomials.  Size deg(D) + 1, deterministic order.
std::vector<RationalFunction> riemann_roch_basis(const EffectiveDivisor& D);

// An Artin-Schreier class: g modulo the image of h -> h^p - h, held by its
// unique reduced representative (all pole orders prime to p, constant part
// in a fixed transversal of the Artin-Schreier image of F_q).
struct ASClass {
    RationalFunction reduced;
    EffectiveDivisor conductor; // pole divisor of the reduced representative

    friend bool operator==(const ASClass& a, const ASClass& b) { return a.reduced == b.reduced; }
    friend bool operator<(const ASClass& a, const ASClass& b) { return a.reduced < b.reduced; }
};

// Canonicalize g modulo h^p - h; the result does not depend on the order in
// which poles are reduced.
ASClass as_reduce(const RationalFunction& g);

// Pole divisor of a rational function (by denominator factorization plus the
// degree gap at infinity).
EffectiveDivisor pole_divisor(const RationalFunction& g);

// Swan divisor of a reduced class: multiplicity = pole order at each pole,
// empty for constant classes.
EffectiveDivisor swan_divisor_of_class(const ASClass& c);

// Residue of g * pi^m at the place pi (m = pole order), as the canonical
// representative mod pi.  For a rational place this is the local leading
// coefficient of the pole.
FqPolynomial pole_leading_residue(const RationalFunction& g, const Place& place);

struct CensusReport {
    long long count_classes = 0;  // nonzero classes (constants included)
    long long count_fields = 0;   // classes up to the prime-subfield scaling
    long long count_constant = 0; // everywhere-unramified (constant) classes
    std::vector<RationalFunction> classes; // sorted reduced reps / defining functions
};

struct CensusOptions {
    long long degree_cap = 12;
    int workers = 1;
};

// All degree-p Artin-Schreier classes with Swan divisor <= D: enumerate the
// F_q-span of the Riemann-Roch basis, reduce, deduplicate, filter.
CensusReport census_artin_schreier(const FqFieldPtr& field, const EffectiveDivisor& D,
                                   const CensusOptions& opts = {});

// Cyclic degree-e Kummer classes ramified only inside S (e | q - 1): pairs of
// an exponent map on S with weighted sum 0 mod e and a unit class of
// F_q^x / (F_q^x)^e, minus the trivial pair.  classes holds the canonical
// defining functions f with y^e = f.
CensusReport census_kummer(const FqFieldPtr& field, const std::set<Place>& S, long long e);

struct ChainReport {
    std::vector<long long> counts;
    bool ok = false; // counts non-decreasing and class sets nested
};

// Census along a chain D_1 <= D_2 <= ...: counts must be finite and
// non-decreasing with nested class sets.
ChainReport census_monotonicity_check(const FqFieldPtr& field,
                                      const std::vector<EffectiveDivisor>& chain,
                                      const CensusOptions& opts = {});

} // namespace ramlab

#endif
