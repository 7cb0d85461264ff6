#include "ramlab/census.hpp"

#include <algorithm>
#include <thread>

namespace ramlab {

namespace {

// extended Euclid: inverse of a mod pi in F_q[x]/(pi)
FqPolynomial inverse_mod(const FqPolynomial& a, const FqPolynomial& pi) {
    FqPolynomial r0 = pi, r1 = a.mod(pi);
    const auto& field = pi.field();
    FqPolynomial s0 = FqPolynomial::zero(field);
    FqPolynomial s1 = FqPolynomial::constant(field->one());
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        FqPolynomial s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw DomainError("inverse_mod: element shares a factor with the modulus");
    return (s0 * r0.leading().inverse()).mod(pi);
}

// p-th root in F_q[x]/(pi) = F_{q^d} by iterated Frobenius: x -> x^p applied
// n*d - 1 times inverts x -> x^p.
FqPolynomial pth_root_mod(const FqPolynomial& a, const FqPolynomial& pi) {
    const auto& field = pi.field();
    long long steps = (long long)field->n() * pi.degree() - 1;
    FqPolynomial r = a.mod(pi);
    for (long long i = 0; i < steps; ++i) r = powmod(r, field->p(), pi);
    return r;
}

// canonical representative of c modulo the Artin-Schreier image of F_q:
// least element (in index order) with the same trace
FqElement trace_transversal_rep(const FqElement& c) {
    const auto& field = c.field();
    uint32_t target = c.trace();
    for (uint64_t idx = 0; idx < field->q(); ++idx) {
        FqElement z = field->from_index(idx);
        if (z.trace() == target) return z;
    }
    throw InternalInconsistencyError("trace transversal exhausted F_q");
}

} // namespace

std::vector<RationalFunction> riemann_roch_basis(const EffectiveDivisor& D) {
    const auto& field = D.field();
    FqPolynomial denom = FqPolynomial::constant(field->one());
    long long m_inf = 0;
    for (const auto& [place, mult] : D.entries()) {
        if (place.is_infinity())
            m_inf = mult;
        else
            denom = denom * place.poly().pow((uint32_t)mult);
    }
    long long top = denom.degree() + m_inf; // = deg D
    std::vector<RationalFunction> basis;
    basis.reserve((size_t)top + 1);
    FqPolynomial tpow = FqPolynomial::constant(field->one());
    FqPolynomial t = FqPolynomial::x(field);
    for (long long i = 0; i <= top; ++i) {
        basis.emplace_back(tpow, denom);
        tpow = tpow * t;
    }
    return basis;
}

FqPolynomial pole_leading_residue(const RationalFunction& g, const Place& place) {
    if (place.is_infinity()) {
        // leading coefficient of the polynomial part
        FqPolynomial part = g.polynomial_part();
        if (part.degree() < 1) throw DomainError("no pole at infinity");
        return FqPolynomial::constant(part.leading());
    }
    const FqPolynomial& pi = place.poly();
    long long m = g.pole_order_at(place);
    if (m < 1) throw DomainError("no pole at the given place");
    FqPolynomial den_cofactor = g.den().div(pi.pow((uint32_t)m));
    return (g.num().mod(pi) * inverse_mod(den_cofactor, pi)).mod(pi);
}

EffectiveDivisor pole_divisor(const RationalFunction& g) {
    EffectiveDivisor D(g.field());
    if (g.is_zero()) return D;
    if (g.den().degree() >= 1) {
        auto factorization = factor_poly(g.den());
        for (auto& [pi, mult] : factorization.factors) D.add(Place::finite(pi), mult);
    }
    long long at_inf = g.num().degree() - g.den().degree();
    if (at_inf > 0) D.add(Place::infinity(g.field()), at_inf);
    return D;
}

ASClass as_reduce(const RationalFunction& g) {
    const auto& field = g.field();
    const long long p = field->p();
    RationalFunction work = g;

    bool changed = true;
    while (changed) {
        changed = false;
        // finite poles of order divisible by p
        if (!work.is_zero() && work.den().degree() >= 1) {
            auto factorization = factor_poly(work.den());
            for (auto& [pi, mult] : factorization.factors) {
                if (mult % p != 0) continue;
                Place place = Place::finite(pi);
                FqPolynomial residue = pole_leading_residue(work, place);
                FqPolynomial root = pth_root_mod(residue, pi);
                RationalFunction h(root, pi.pow((uint32_t)(mult / p)));
                work = work - artin_schreier_image(h);
                changed = true;
                break; // denominator changed; re-factor
            }
            if (changed) continue;
        }
        // pole at infinity of order divisible by p
        if (!work.is_zero()) {
            long long M = work.num().degree() - work.den().degree();
            if (M > 0 && M % p == 0) {
                FqElement a = work.polynomial_part().leading();
                FqElement b = a.pth_root();
                FqPolynomial mono =
                    FqPolynomial::x(field).pow((uint32_t)(M / p)) * b;
                work = work - artin_schreier_image(RationalFunction::from_poly(mono));
                changed = true;
            }
        }
    }
    // constant-part normalization onto the trace transversal
    FqElement c = work.polynomial_part().coeff(0);
    FqElement rep = trace_transversal_rep(c);
    work = work - RationalFunction::constant(c - rep);

    ASClass out{std::move(work), pole_divisor(RationalFunction::zero(field))};
    out.conductor = pole_divisor(out.reduced);
    return out;
}

EffectiveDivisor swan_divisor_of_class(const ASClass& c) { return c.conductor; }

// --- Artin-Schreier census ------------------------------------------------------

namespace {

RationalFunction span_element(const std::vector<RationalFunction>& basis, uint64_t idx,
                              const FqFieldPtr& field) {
    RationalFunction g = RationalFunction::zero(field);
    for (const auto& b : basis) {
        uint64_t digit = idx % field->q();
        idx /= field->q();
        if (digit != 0) g = g + b * field->from_index(digit);
    }
    return g;
}

} // namespace

CensusReport census_artin_schreier(const FqFieldPtr& field, const EffectiveDivisor& D,
                                   const CensusOptions& opts) {
    if (D.degree() > opts.degree_cap)
        throw ResourceError("census divisor degree " + std::to_string(D.degree()) +
                            " exceeds cap " + std::to_string(opts.degree_cap));
    auto basis = riemann_roch_basis(D);
    uint64_t total = 1;
    for (size_t i = 0; i < basis.size(); ++i) total *= field->q();

    int workers = std::max(1, opts.workers);
    std::vector<std::set<RationalFunction>> partial((size_t)workers);
    auto run = [&](int wi) {
        uint64_t lo = total * (uint64_t)wi / (uint64_t)workers;
        uint64_t hi = total * (uint64_t)(wi + 1) / (uint64_t)workers;
        for (uint64_t idx = lo; idx < hi; ++idx) {
            RationalFunction g = span_element(basis, idx, field);
            if (g.is_zero()) continue;
            ASClass cls = as_reduce(g);
            if (cls.reduced.is_zero()) continue;
            if (!(cls.conductor <= D)) continue; // cannot trigger for span inputs
            partial[(size_t)wi].insert(cls.reduced);
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (int wi = 0; wi < workers; ++wi) threads.emplace_back(run, wi);
        for (auto& th : threads) th.join();
    }
    std::set<RationalFunction> classes;
    for (auto& s : partial) classes.merge(s);

    CensusReport report;
    report.count_classes = (long long)classes.size();
    for (const auto& g : classes) {
        report.classes.push_back(g);
        if (g.is_constant()) ++report.count_constant;
    }
    // fields: orbits under g -> a g for a in the prime subfield's units
    std::set<RationalFunction> visited;
    for (const auto& g : classes) {
        if (visited.count(g)) continue;
        ++report.count_fields;
        for (long long a = 1; a < (long long)field->p(); ++a)
            visited.insert(as_reduce(g * field->from_int(a)).reduced);
    }
    return report;
}

// --- Kummer census ---------------------------------------------------------------

CensusReport census_kummer(const FqFieldPtr& field, const std::set<Place>& S, long long e) {
    if (e < 1) throw DomainError("Kummer degree must be positive");
    if ((field->q() - 1) % (uint64_t)e != 0)
        throw UnsupportedFamilyError("Kummer census needs e | q - 1, got e = " + std::to_string(e) +
                                     ", q = " + std::to_string(field->q()));
    CensusReport report;
    if (e == 1) return report;

    std::vector<Place> finite;
    bool has_inf = false;
    for (const auto& place : S) {
        if (place.is_infinity())
            has_inf = true;
        else
            finite.push_back(place);
    }
    uint64_t maps = 1;
    for (size_t i = 0; i < finite.size(); ++i) {
        maps *= (uint64_t)e;
        if (maps > (uint64_t)1 << 24) throw ResourceError("Kummer support too large");
    }
    FqElement gen = field->primitive_element();

    std::vector<std::pair<RationalFunction, bool>> found; // (defining function, is_constant)
    for (uint64_t code = 0; code < maps; ++code) {
        uint64_t c = code;
        std::vector<long long> exps(finite.size());
        long long weighted = 0;
        for (size_t i = 0; i < finite.size(); ++i) {
            exps[i] = (long long)(c % (uint64_t)e);
            c /= (uint64_t)e;
            weighted += exps[i] * finite[i].degree();
        }
        long long n_inf = ((-(weighted % e)) % e + e) % e;
        if (!has_inf && n_inf != 0) continue; // would ramify at infinity
        bool exps_trivial = n_inf == 0 &&
                            std::all_of(exps.begin(), exps.end(), [](long long x) { return x == 0; });
        for (long long j = 0; j < e; ++j) {
            if (exps_trivial && j == 0) continue; // the trivial class
            FqPolynomial f = FqPolynomial::constant(gen.pow(j));
            for (size_t i = 0; i < finite.size(); ++i)
                f = f * finite[i].poly().pow((uint32_t)exps[i]);
            found.emplace_back(RationalFunction::from_poly(std::move(f)), exps_trivial);
        }
    }
    std::sort(found.begin(), found.end());
    report.count_classes = (long long)found.size();
    for (auto& [f, constant] : found) {
        report.classes.push_back(f);
        if (constant) ++report.count_constant;
    }
    // fields: orbits of (class) -> (class^k), k coprime to e
    std::set<RationalFunction> visited;
    for (const auto& [f, constant] : found) {
        if (visited.count(f)) continue;
        ++report.count_fields;
        // f^k has exponents k*n_z mod e and unit class gen^{k j mod e};
        // recompute its canonical defining function
        for (long long k = 1; k < e; ++k) {
            if (std::gcd(k, e) != 1) continue;
            FqPolynomial fk = FqPolynomial::constant(field->one());
            // canonical form of f^k: reduce each exponent mod e
            auto factorization = factor_poly(f.num());
            FqElement unit = factorization.unit.pow(k);
            // unit must be folded back to a power of gen modulo e-th powers
            long long uj = -1;
            FqElement acc = field->one();
            for (long long jj = 0; jj < (long long)field->q() - 1; ++jj) {
                if (acc == unit) { uj = jj % e; break; }
                acc = acc * gen;
            }
            if (uj < 0) throw InternalInconsistencyError("unit not a power of the generator");
            fk = fk * gen.pow(uj);
            for (auto& [pi, mult] : factorization.factors)
                fk = fk * pi.pow((uint32_t)((mult * k) % e));
            visited.insert(RationalFunction::from_poly(std::move(fk)));
        }
    }
    return report;
}

ChainReport census_monotonicity_check(const FqFieldPtr& field,
                                      const std::vector<EffectiveDivisor>& chain,
                                      const CensusOptions& opts) {
    for (size_t i = 1; i < chain.size(); ++i)
        if (!(chain[i - 1] <= chain[i]))
            throw DomainError("divisor chain is not totally ordered");
    ChainReport report;
    report.ok = true;
    std::vector<RationalFunction> prev;
    for (const auto& D : chain) {
        CensusReport r = census_artin_schreier(field, D, opts);
        report.counts.push_back(r.count_classes);
        if (!prev.empty() || !report.counts.empty()) {
            if (!std::includes(r.classes.begin(), r.classes.end(), prev.begin(), prev.end()))
                throw InternalInconsistencyError("census class sets are not nested along the chain");
        }
        if (report.counts.size() >= 2 &&
            report.counts[report.counts.size() - 2] > report.counts.back())
            throw InternalInconsistencyError("census counts decreased along the chain");
        prev = std::move(r.classes);
    }
    return report;
}

} // namespace ramlab
