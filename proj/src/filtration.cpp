#include "ramlab/filtration.hpp"

#include <algorithm>
#include <set>

namespace ramlab {

namespace {

// run fn(datum), doubling the working precision up to 3 times on
// precision errors before letting them surface
template <typename Fn>
auto with_precision_retry(const GaloisDatumPtr& d, Fn&& fn) {
    GaloisDatumPtr cur = d;
    for (int attempt = 0;; ++attempt) {
        try {
            return fn(cur);
        } catch (const PrecisionError&) {
            if (attempt >= 3) throw;
            cur = cur->with_precision(cur->working_prec() * 2);
        }
    }
}

bool is_prime_power(long long n, long long p) {
    if (n < 1) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

} // namespace

uint64_t RamificationFiltration::full_mask() const {
    return group_size == 64 ? ~0ull : (1ull << group_size) - 1;
}

uint64_t RamificationFiltration::identity_mask() const {
    return 1ull << (datum ? datum->identity_id() : 0);
}

long long RamificationFiltration::max_break() const {
    return breaks.empty() ? -1 : breaks.back();
}

uint64_t RamificationFiltration::subgroup_at_level(long long mu) const {
    if (mu <= -1) return full_mask();
    auto it = std::lower_bound(breaks.begin(), breaks.end(), mu);
    if (it == breaks.end()) return identity_mask();
    return subgroup_at.at(*it);
}

uint64_t UpperFiltration::identity_mask() const {
    return 1ull << (datum ? datum->identity_id() : 0);
}

std::optional<Rational> UpperFiltration::max_break() const {
    if (breaks.empty()) return std::nullopt;
    return breaks.back();
}

uint64_t UpperFiltration::level(const Rational& lambda) const {
    for (size_t i = 0; i < breaks.size(); ++i)
        if (lambda <= breaks[i]) return subgroups[i];
    return identity_mask();
}

uint64_t UpperFiltration::successor(const Rational& lambda) const {
    for (size_t i = 0; i < breaks.size(); ++i)
        if (lambda < breaks[i]) return subgroups[i];
    return identity_mask();
}

RamificationFiltration lower_filtration(const GaloisDatumPtr& d) {
    const auto& view = d->group_view();
    if (view.identity < 0)
        throw DomainError("datum has no identity element; run verify first");
    for (const auto& row : view.table)
        for (int entry : row)
            if (entry < 0) throw DomainError("datum group is not closed; run verify first");

    return with_precision_retry(d, [](const GaloisDatumPtr& cur) {
        RamificationFiltration f;
        f.datum = cur;
        f.group_size = (int)cur->e();
        ExtElement u = ExtElement::uniformizer(cur);
        for (const auto& g : cur->group()) {
            if (g.id == cur->identity_id()) continue;
            ExtElement diff = u.apply(g) - u;
            auto v = diff.valuation();
            if (!v) throw DomainError("non-identity element fixes the uniformizer");
            if (*v < 1)
                throw DomainError("v_L(sigma(u) - u) < 1: u is not a common uniformizer");
            f.d_values[g.id] = *v;
        }
        std::set<long long> bs;
        for (const auto& [id, dv] : f.d_values) bs.insert(dv - 1);
        f.breaks.assign(bs.begin(), bs.end());

        auto subgroup_of = [&](long long mu) {
            uint64_t mask = 1ull << cur->identity_id();
            for (const auto& [id, dv] : f.d_values)
                if (dv >= mu + 1) mask |= 1ull << id;
            return mask;
        };
        f.subgroup_at[-1] = f.full_mask();
        f.subgroup_at[0] = subgroup_of(0);
        if (f.subgroup_at[0] != f.full_mask())
            throw InternalInconsistencyError("G_0 is not the full group on a totally ramified datum");
        for (long long b : f.breaks) f.subgroup_at[b] = subgroup_of(b);

        const auto& view2 = cur->group_view();
        for (const auto& [mu, mask] : f.subgroup_at) {
            if (!view2.is_subgroup(mask))
                throw DomainError("filtration level G_" + std::to_string(mu) +
                                  " is not a subgroup: malformed datum");
            if (!view2.is_normal(mask))
                throw DomainError("filtration level G_" + std::to_string(mu) +
                                  " is not normal: malformed datum");
            if (mu >= 1 && !is_prime_power(GroupView::mask_size(mask), cur->field()->p()))
                throw InternalInconsistencyError("wild inertia level is not a p-group");
        }
        return f;
    });
}

HerbrandFunction herbrand_phi(const RamificationFiltration& f) {
    std::vector<std::pair<long long, long long>> profile;
    for (long long b : f.breaks)
        profile.emplace_back(b, GroupView::mask_size(f.subgroup_at.at(b)));
    return HerbrandFunction::from_profile(profile, f.group_size);
}

HerbrandFunction herbrand_psi(const HerbrandFunction& phi) { return phi.inverse(); }

UpperFiltration upper_filtration(const RamificationFiltration& f) {
    HerbrandFunction phi = herbrand_phi(f);
    UpperFiltration u;
    u.datum = f.datum;
    u.group_size = f.group_size;
    for (long long b : f.breaks) {
        u.breaks.push_back(phi.eval(Rational(b)));
        u.subgroups.push_back(f.subgroup_at.at(b));
    }
    return u;
}

bool is_bounded_by(const RamificationFiltration& f, const Rational& lambda) {
    if (lambda < Rational(0)) throw DomainError("ramification bounds must be >= 0");
    UpperFiltration u = upper_filtration(f);
    auto mx = u.max_break();
    return !mx || *mx <= lambda;
}

long long different_valuation(const RamificationFiltration& f) {
    long long by_sigma = 0;
    for (const auto& [id, dv] : f.d_values) by_sigma += dv;
    long long by_levels = 0;
    for (long long mu = 0; mu <= f.max_break(); ++mu)
        by_levels += GroupView::mask_size(f.subgroup_at_level(mu)) - 1;
    if (by_sigma != by_levels)
        throw InternalInconsistencyError(
            "Hilbert formula cross-check failed: sum d_sigma = " + std::to_string(by_sigma) +
            " but sum (|G_mu| - 1) = " + std::to_string(by_levels));
    return by_sigma;
}

// --- resultant machinery over K = F_q((t)) -----------------------------------

namespace {

using SPoly = std::vector<LaurentSeries>; // coefficients low-to-high

// drop high coefficients that are exactly zero; a zero-to-precision leading
// coefficient leaves the degree undetermined
void strim(SPoly& f) {
    while (!f.empty()) {
        if (f.back().is_exact_zero()) { f.pop_back(); continue; }
        if (f.back().is_zero_to_prec())
            throw PrecisionError("polynomial degree undetermined at current precision");
        break;
    }
}

LaurentSeries resultant(SPoly a, SPoly b, const FqFieldPtr& field, long long prec) {
    strim(a);
    strim(b);
    LaurentSeries acc = LaurentSeries::constant(field->one());
    int sign = 1;
    while (true) {
        if (b.empty()) {
            if (a.size() <= 1) break; // res of constants is 1 by convention here
            throw InternalInconsistencyError("resultant of polynomials with a common factor");
        }
        if (b.size() == 1) {
            // res(a, const) = const^{deg a}
            acc = acc * b[0].pow((long long)a.size() - 1, prec);
            break;
        }
        if (a.size() < b.size()) {
            long long da = (long long)a.size() - 1, db = (long long)b.size() - 1;
            if ((da * db) % 2 != 0) sign = -sign;
            std::swap(a, b);
        }
        long long da = (long long)a.size() - 1, db = (long long)b.size() - 1;
        LaurentSeries lcb_inv = b.back().inverse(prec);
        SPoly r = a;
        for (long long i = da; i >= db; --i) {
            LaurentSeries c = r[(size_t)i] * lcb_inv;
            if (c.is_exact_zero()) continue;
            for (long long j = 0; j <= db; ++j)
                r[(size_t)(i - db + j)] = r[(size_t)(i - db + j)] - c * b[(size_t)j];
            r[(size_t)i] = LaurentSeries::exact_zero(field);
        }
        strim(r);
        long long dr = r.empty() ? -1 : (long long)r.size() - 1;
        if (dr < 0) throw InternalInconsistencyError("resultant of polynomials with a common factor");
        // res(a, b) = (-1)^{da db} lc(b)^{da - dr} res(b, r)
        if ((da * db) % 2 != 0) sign = -sign;
        acc = acc * b.back().pow(da - dr, prec);
        a = std::move(b);
        b = std::move(r);
    }
    return sign < 0 ? -acc : acc;
}

} // namespace

std::vector<LaurentSeries> uniformizer_minpoly(const GaloisDatumPtr& d) {
    ExtElement u = ExtElement::uniformizer(d);
    std::vector<ExtElement> conj;
    for (const auto& g : d->group()) conj.push_back(u.apply(g));

    // expand prod (y - c) with ExtElement coefficients
    std::vector<ExtElement> poly{ExtElement::one(d)};
    for (const auto& c : conj) {
        std::vector<ExtElement> next((size_t)poly.size() + 1, ExtElement::zero(d));
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = next[i + 1] + poly[i];
            next[i] = next[i] - c * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<LaurentSeries> out;
    out.reserve(poly.size());
    for (const auto& coeff : poly) {
        for (size_t i = 1; i < coeff.rep().size(); ++i)
            if (!coeff.rep()[i].is_zero_to_prec())
                throw InternalInconsistencyError(
                    "conjugate product left the base field: theta^" + std::to_string(i) +
                    " coefficient is visible");
        out.push_back(coeff.rep()[0]);
    }
    return out;
}

long long poly_disc_valuation(const std::vector<LaurentSeries>& f, const FqFieldPtr& field,
                              long long working_prec) {
    if (f.size() < 2) throw DomainError("discriminant needs degree >= 1");
    if (f.size() == 2) return 0; // monic linear: disc = 1
    SPoly fp;
    for (size_t i = 1; i < f.size(); ++i)
        fp.push_back(f[i].scaled(field->from_int((long long)i)));
    LaurentSeries res = resultant(f, fp, field, working_prec);
    auto v = res.valuation();
    if (!v) throw InternalInconsistencyError("discriminant is exactly zero");
    return *v;
}

long long discriminant_valuation(const RamificationFiltration& f) {
    long long v = different_valuation(f);
    // independent route: v_t(disc(minpoly of u)) by resultant
    long long by_resultant = with_precision_retry(f.datum, [](const GaloisDatumPtr& cur) {
        auto g = uniformizer_minpoly(cur);
        return poly_disc_valuation(g, cur->field(), cur->working_prec());
    });
    if (by_resultant != v)
        throw InternalInconsistencyError(
            "discriminant cross-check failed: Hilbert route gives " + std::to_string(v) +
            ", resultant route gives " + std::to_string(by_resultant));
    return v;
}

long long disc_bound_to_ram_bound(long long m, long long n) {
    if (m < 0 || n < 1) throw DomainError("need m >= 0 and n >= 1");
    __int128 fact = 1;
    for (long long i = 2; i <= n; ++i) {
        fact *= i;
        if (fact > (__int128)INT64_MAX) throw ResourceError("n! overflows at this scale");
    }
    __int128 out = (__int128)n * fact * m;
    if (out > (__int128)INT64_MAX) throw ResourceError("bound overflows at this scale");
    return (long long)out;
}

BaseChangeReport check_base_change_bound(const GaloisDatumPtr& d, long long eprime) {
    BaseChangeReport report;
    report.eprime = eprime;
    auto up_before = upper_filtration(lower_filtration(d));
    report.lambda_before = up_before.max_break().value_or(Rational(0));
    report.bound = Rational(eprime) * report.lambda_before;
    GaloisDatumPtr changed = base_change_tame(d, eprime);
    auto up_after = upper_filtration(lower_filtration(changed));
    report.lambda_after = up_after.max_break().value_or(Rational(0));
    report.ok = report.lambda_after <= report.bound;
    return report;
}

} // namespace ramlab
