#ifndef RAMLAB_FILTRATION_HPP
#define RAMLAB_FILTRATION_HPP

#include <map>
#include <optional>

#include "ramlab/galois_datum.hpp"
#include "ramlab/herbrand.hpp"

namespace ramlab {

// Lower-numbering ramification filtration of a Galois datum.  Subgroups are
// bitmasks over element ids (identity always included).
struct RamificationFiltration {
    GaloisDatumPtr datum;
    int group_size = 1;
    std::vector<long long> breaks;               // sorted mu >= 0 with G_mu != G_{mu+1}
    std::map<long long, uint64_t> subgroup_at;   // keys: -1, 0 and every break
    std::map<int, long long> d_values;           // sigma id -> v_L(sigma(u) - u)

    // G_mu for any integer mu: the subgroup at the smallest break >= mu,
    // the full group below -1, trivial past the last break.
    uint64_t subgroup_at_level(long long mu) const;
    uint64_t full_mask() const;
    uint64_t identity_mask() const;
    long long max_break() const; // -1 when there is none
};

// Upper-numbering filtration: breaks are phi(lower breaks).
struct UpperFiltration {
    GaloisDatumPtr datum;
    int group_size = 1;
    std::vector<Rational> breaks;                 // sorted, >= 0
    std::vector<uint64_t> subgroups;              // parallel to breaks
    // G^lambda: subgroup at the smallest break >= lambda, trivial beyond.
    uint64_t level(const Rational& lambda) const;
    // G^{lambda+}: subgroup at the smallest break > lambda, trivial beyond.
    uint64_t successor(const Rational& lambda) const;
    uint64_t identity_mask() const;
    std::optional<Rational> max_break() const;
};

// d_sigma = v_L(sigma(u) - u) for every sigma != 1; G_mu derived from them.
// Retries with doubled working precision (up to 3 times) on precision errors.
RamificationFiltration lower_filtration(const GaloisDatumPtr& d);

HerbrandFunction herbrand_phi(const RamificationFiltration& f);
HerbrandFunction herbrand_psi(const HerbrandFunction& phi);

UpperFiltration upper_filtration(const RamificationFiltration& f);

// True iff every upper break is <= lambda (lambda >= 0).
bool is_bounded_by(const RamificationFiltration& f, const Rational& lambda);

// v_L of the different, by the Hilbert formula; both routes
// (sum of d_sigma, sum over mu of |G_mu| - 1) are computed and must agree.
long long different_valuation(const RamificationFiltration& f);

// v_K of the discriminant of a totally ramified datum (= v_L of the
// different); cross-checked against v_t(disc(minpoly of u)) computed by a
// resultant over the base field.
long long discriminant_valuation(const RamificationFiltration& f);

// The explicit bound m' = n * n! * m: any separable degree-n extension with
// v_K(D) <= m has ramification bounded by m'.
long long disc_bound_to_ram_bound(long long m, long long n);

struct BaseChangeReport {
    long long eprime = 1;
    Rational lambda_before;  // max upper break of the input datum (0 if none)
    Rational bound;          // eprime * lambda_before
    Rational lambda_after;   // max upper break after base change
    bool ok = false;         // lambda_after <= bound
};

// Builds the base-changed datum and checks its ramification bound.
BaseChangeReport check_base_change_bound(const GaloisDatumPtr& d, long long eprime);

// Minimal polynomial of the uniformizer u over K, computed from the Galois
// conjugates by symmetric functions (coefficients verified to lie in K).
std::vector<LaurentSeries> uniformizer_minpoly(const GaloisDatumPtr& d);

// v_t of the discriminant of a monic separable polynomial over K, via the
// Euclidean resultant of f and f'.
long long poly_disc_valuation(const std::vector<LaurentSeries>& f, const FqFieldPtr& field,
                              long long working_prec);

} // namespace ramlab

#endif
