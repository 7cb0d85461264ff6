#include "ramlab/galois_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace ramlab {

std::string family_name(Family f) {
    switch (f) {
        case Family::trivial: return "trivial";
        case Family::tame_kummer: return "tame_kummer";
        case Family::artin_schreier: return "artin_schreier";
        case Family::custom: return "custom";
    }
    return "custom";
}

Family family_from_name(const std::string& s) {
    if (s == "trivial") return Family::trivial;
    if (s == "tame_kummer") return Family::tame_kummer;
    if (s == "artin_schreier") return Family::artin_schreier;
    if (s == "custom") return Family::custom;
    throw DomainError("unknown family label: " + s);
}

// --- GroupView -------------------------------------------------------------

int GroupView::inverse_of(int i) const {
    for (int j = 0; j < size; ++j)
        if (table[(size_t)i][(size_t)j] == identity) return j;
    throw DomainError("group element has no inverse (invalid table)");
}

bool GroupView::is_abelian() const {
    for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j)
            if (table[(size_t)i][(size_t)j] != table[(size_t)j][(size_t)i]) return false;
    return true;
}

uint64_t GroupView::subgroup_generated(uint64_t seed_mask) const {
    uint64_t mask = seed_mask | identity_mask();
    bool grew = true;
    while (grew) {
        grew = false;
        for (int i = 0; i < size; ++i) {
            if (!(mask >> i & 1)) continue;
            for (int j = 0; j < size; ++j) {
                if (!(mask >> j & 1)) continue;
                int k = table[(size_t)i][(size_t)j];
                if (k < 0) throw DomainError("group table is not closed");
                if (!(mask >> k & 1)) { mask |= 1ull << k; grew = true; }
            }
        }
    }
    return mask;
}

bool GroupView::is_subgroup(uint64_t mask) const {
    if (!(mask >> identity & 1)) return false;
    for (int i = 0; i < size; ++i) {
        if (!(mask >> i & 1)) continue;
        for (int j = 0; j < size; ++j) {
            if (!(mask >> j & 1)) continue;
            int k = table[(size_t)i][(size_t)j];
            if (k < 0 || !(mask >> k & 1)) return false;
        }
    }
    return true;
}

bool GroupView::is_normal(uint64_t mask) const {
    for (int g = 0; g < size; ++g) {
        int ginv = inverse_of(g);
        for (int h = 0; h < size; ++h) {
            if (!(mask >> h & 1)) continue;
            int c = table[(size_t)table[(size_t)g][(size_t)h]][(size_t)ginv];
            if (!(mask >> c & 1)) return false;
        }
    }
    return true;
}

int GroupView::mask_size(uint64_t mask) { return __builtin_popcountll(mask); }

// --- raw polynomial-mod-f helpers -------------------------------------------

namespace {

// rep: coefficients of a polynomial in theta, low-to-high.  Reduce mod the
// monic minpoly (degree e) and pad to length e.
std::vector<LaurentSeries> reduce_mod_f(std::vector<LaurentSeries> rep,
                                        const std::vector<LaurentSeries>& minpoly,
                                        const FqFieldPtr& field) {
    size_t e = minpoly.size() - 1;
    while (rep.size() > e) {
        LaurentSeries c = rep.back();
        rep.pop_back();
        if (c.is_exact_zero()) continue;
        size_t shift = rep.size() - e;
        for (size_t i = 0; i < e; ++i)
            rep[shift + i] = rep[shift + i] - c * minpoly[i];
    }
    while (rep.size() < e) rep.push_back(LaurentSeries::exact_zero(field));
    return rep;
}

std::vector<LaurentSeries> poly_mul_mod(const std::vector<LaurentSeries>& a,
                                        const std::vector<LaurentSeries>& b,
                                        const std::vector<LaurentSeries>& minpoly,
                                        const FqFieldPtr& field) {
    std::vector<LaurentSeries> out(a.size() + b.size() - 1, LaurentSeries::exact_zero(field));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_exact_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] = out[i + j] + a[i] * b[j];
    }
    return reduce_mod_f(std::move(out), minpoly, field);
}

std::vector<LaurentSeries> eval_poly_at_rep(const std::vector<LaurentSeries>& poly,
                                            const std::vector<LaurentSeries>& at,
                                            const std::vector<LaurentSeries>& minpoly,
                                            const FqFieldPtr& field) {
    size_t e = minpoly.size() - 1;
    std::vector<LaurentSeries> acc(e, LaurentSeries::exact_zero(field));
    for (size_t i = poly.size(); i-- > 0;) {
        acc = poly_mul_mod(acc, at, minpoly, field);
        acc[0] = acc[0] + poly[i];
    }
    return acc;
}

bool reps_equal_to_precision(const std::vector<LaurentSeries>& a,
                             const std::vector<LaurentSeries>& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (!equal_to_precision(a[i], b[i])) return false;
    return true;
}

std::pair<long long, long long> canonical_unif_exponents(long long e, long long w) {
    if (e == 1) return {1, 0};
    long long wm = ((w % e) + e) % e;
    long long b = -1;
    for (long long cand = 1; cand < e; ++cand)
        if (cand * wm % e == 1) { b = cand; break; }
    if (b < 0) throw DomainError("gcd(w, e) != 1: no uniformizer exponents");
    long long a = (1 - b * w) / e;
    if (a * e + b * w != 1) throw InternalInconsistencyError("unif exponent arithmetic");
    return {a, b};
}

} // namespace

// --- GaloisDatum -------------------------------------------------------------

long long GaloisDatum::default_precision(long long e, long long w) {
    if (const char* env = std::getenv("RAMLAB_PRECISION")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
        throw DomainError("RAMLAB_PRECISION must be a positive integer");
    }
    long long aw = w < 0 ? -w : w;
    return 4 * e * (1 + aw * e);
}

GaloisDatumPtr GaloisDatum::create(FqFieldPtr field, long long e, long long w,
                                   std::vector<LaurentSeries> minpoly,
                                   std::vector<GroupElement> group,
                                   long long unif_a, long long unif_b,
                                   Family label,
                                   std::optional<long long> working_prec) {
    if (!field) throw DomainError("datum needs a field");
    if (e < 1) throw DomainError("degree e must be positive");
    if (e > kMaxGroupSize)
        throw ResourceError("group size exceeds desk-scale cap " + std::to_string(kMaxGroupSize));
    if ((long long)minpoly.size() != e + 1)
        throw DomainError("minpoly must have degree e");
    const LaurentSeries& lc = minpoly.back();
    if (lc.is_zero_to_prec() || lc.lead() != 0 || !lc.at(0).is_one() ||
        !equal_to_precision(lc, LaurentSeries::constant(field->one())))
        throw DomainError("minpoly must be monic");
    if ((long long)group.size() != e)
        throw DomainError("group order must equal e (totally ramified)");
    if (std::gcd(w < 0 ? -w : w, e) != 1)
        throw DomainError("gcd(w, e) must be 1");

    std::vector<bool> seen((size_t)e, false);
    for (const auto& g : group) {
        if (g.id < 0 || g.id >= e || seen[(size_t)g.id])
            throw DomainError("group element ids must be 0..e-1 and unique");
        seen[(size_t)g.id] = true;
    }
    std::sort(group.begin(), group.end(),
              [](const GroupElement& a, const GroupElement& b) { return a.id < b.id; });

    auto d = std::shared_ptr<GaloisDatum>(new GaloisDatum());
    d->field_ = std::move(field);
    d->e_ = e;
    d->w_ = w;
    d->minpoly_ = std::move(minpoly);
    d->unif_a_ = unif_a;
    d->unif_b_ = unif_b;
    d->label_ = label;
    d->working_prec_ = working_prec.value_or(default_precision(e, w));

    // canonicalize actions mod f
    for (auto& g : group) g.action = reduce_mod_f(std::move(g.action), d->minpoly_, d->field_);
    d->group_ = std::move(group);

    // composition table: entry (i, j) is the element acting by P_i(P_j(x)),
    // -1 when no element matches (left for verify_datum to report)
    GroupView v;
    v.size = (int)e;
    v.table.assign((size_t)e, std::vector<int>((size_t)e, -1));
    std::vector<LaurentSeries> xpoly = reduce_mod_f(
        {LaurentSeries::exact_zero(d->field_), LaurentSeries::constant(d->field_->one())},
        d->minpoly_, d->field_);
    v.identity = -1;
    for (const auto& g : d->group_)
        if (reps_equal_to_precision(g.action, xpoly)) { v.identity = g.id; break; }
    for (const auto& gi : d->group_) {
        for (const auto& gj : d->group_) {
            auto composed = eval_poly_at_rep(gi.action, gj.action, d->minpoly_, d->field_);
            for (const auto& gk : d->group_) {
                if (reps_equal_to_precision(composed, gk.action)) {
                    v.table[(size_t)gi.id][(size_t)gj.id] = gk.id;
                    break;
                }
            }
        }
    }
    // element orders from the table where possible
    v.orders.assign((size_t)e, 0);
    bool table_ok = v.identity >= 0;
    for (const auto& row : v.table)
        for (int entry : row) table_ok = table_ok && entry >= 0;
    if (table_ok) {
        for (int i = 0; i < (int)e; ++i) {
            int cur = i;
            long long ord = 1;
            while (cur != v.identity && ord <= e) {
                cur = v.table[(size_t)cur][(size_t)i];
                ++ord;
            }
            v.orders[(size_t)i] = cur == v.identity ? ord : 0;
        }
        for (auto& g : d->group_) g.order = v.orders[(size_t)g.id];
    }
    d->view_ = std::move(v);
    return d;
}

GaloisDatumPtr GaloisDatum::with_precision(long long prec) const {
    return create(field_, e_, w_, minpoly_, group_, unif_a_, unif_b_, label_, prec);
}

// --- ExtElement ---------------------------------------------------------------

ExtElement::ExtElement(GaloisDatumPtr datum, std::vector<LaurentSeries> rep)
    : datum_(std::move(datum)), rep_(std::move(rep)) {
    if ((long long)rep_.size() > datum_->e())
        rep_ = reduce_mod_f(std::move(rep_), datum_->minpoly(), datum_->field());
    while ((long long)rep_.size() < datum_->e())
        rep_.push_back(LaurentSeries::exact_zero(datum_->field()));
}

ExtElement ExtElement::zero(const GaloisDatumPtr& d) { return ExtElement(d, {}); }

ExtElement ExtElement::one(const GaloisDatumPtr& d) {
    return from_series(d, LaurentSeries::constant(d->field()->one()));
}

ExtElement ExtElement::theta(const GaloisDatumPtr& d) {
    std::vector<LaurentSeries> rep{LaurentSeries::exact_zero(d->field()),
                                   LaurentSeries::constant(d->field()->one())};
    return ExtElement(d, std::move(rep));
}

ExtElement ExtElement::from_series(const GaloisDatumPtr& d, LaurentSeries s) {
    return ExtElement(d, {std::move(s)});
}

ExtElement ExtElement::uniformizer(const GaloisDatumPtr& d) {
    ExtElement th_pow = theta(d).pow(d->unif_b());
    LaurentSeries ta = LaurentSeries::monomial(d->field()->one(), d->unif_a());
    std::vector<LaurentSeries> rep;
    rep.reserve(th_pow.rep().size());
    for (const auto& c : th_pow.rep()) rep.push_back(c * ta);
    return ExtElement(d, std::move(rep));
}

ExtElement ExtElement::operator-() const {
    std::vector<LaurentSeries> rep;
    rep.reserve(rep_.size());
    for (const auto& c : rep_) rep.push_back(-c);
    return ExtElement(datum_, std::move(rep));
}

ExtElement operator+(const ExtElement& a, const ExtElement& b) {
    std::vector<LaurentSeries> rep;
    rep.reserve(a.rep_.size());
    for (size_t i = 0; i < a.rep_.size(); ++i) rep.push_back(a.rep_[i] + b.rep_[i]);
    return ExtElement(a.datum_, std::move(rep));
}

ExtElement operator-(const ExtElement& a, const ExtElement& b) { return a + (-b); }

ExtElement operator*(const ExtElement& a, const ExtElement& b) {
    return ExtElement(a.datum_,
                      poly_mul_mod(a.rep_, b.rep_, a.datum_->minpoly(), a.datum_->field()));
}

ExtElement ExtElement::pow(long long k) const {
    if (k < 0) {
        // only theta has a closed-form inverse in this representation
        if (rep_.size() >= 2 && rep_[1].is_exact() && !rep_[1].is_exact_zero()) {
            bool is_theta = equal_to_precision(rep_[1], LaurentSeries::constant(datum_->field()->one()));
            for (size_t i = 0; i < rep_.size() && is_theta; ++i)
                if (i != 1 && !rep_[i].is_exact_zero()) is_theta = false;
            if (is_theta) return theta_inverse(datum_).pow(-k);
        }
        throw DomainError("negative powers are only supported for theta");
    }
    ExtElement r = one(datum_);
    ExtElement base = *this;
    unsigned long long e = (unsigned long long)k;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

ExtElement ExtElement::theta_inverse(const GaloisDatumPtr& d) {
    // theta * (theta^{e-1} + a_{e-1} theta^{e-2} + ... + a_1) = -a_0
    const auto& f = d->minpoly();
    long long e = d->e();
    LaurentSeries a0inv = f[0].inverse(d->working_prec());
    std::vector<LaurentSeries> rep((size_t)e, LaurentSeries::exact_zero(d->field()));
    for (long long i = 0; i < e - 1; ++i) rep[(size_t)i] = -(f[(size_t)(i + 1)] * a0inv);
    rep[(size_t)(e - 1)] = -a0inv;
    return ExtElement(d, std::move(rep));
}

ExtElement ExtElement::apply(const GroupElement& sigma) const {
    ExtElement image(datum_, sigma.action);
    ExtElement acc = zero(datum_);
    for (size_t i = rep_.size(); i-- > 0;) {
        acc = acc * image;
        acc = acc + from_series(datum_, rep_[i]);
    }
    return acc;
}

bool ExtElement::is_exact_zero() const {
    return std::all_of(rep_.begin(), rep_.end(),
                       [](const LaurentSeries& s) { return s.is_exact_zero(); });
}

bool ExtElement::is_zero_to_prec() const {
    return std::all_of(rep_.begin(), rep_.end(),
                       [](const LaurentSeries& s) { return s.is_zero_to_prec(); });
}

std::optional<long long> ExtElement::valuation() const {
    const long long e = datum_->e(), w = datum_->w();
    std::optional<long long> best;
    for (size_t i = 0; i < rep_.size(); ++i) {
        if (rep_[i].is_zero_to_prec()) continue;
        long long v = e * rep_[i].lead() + (long long)i * w;
        if (!best || v < *best) best = v;
    }
    // the candidate values e*v + i*w are pairwise distinct mod e, so the
    // visible minimum is exact unless an unknown coefficient could undercut it
    for (size_t i = 0; i < rep_.size(); ++i) {
        if (!rep_[i].is_zero_to_prec() || rep_[i].is_exact_zero()) continue;
        long long bound = e * rep_[i].prec() + (long long)i * w;
        if (!best || bound <= *best)
            throw PrecisionError("valuation undetermined: coefficient of theta^" +
                                 std::to_string(i) + " known only to O(t^" +
                                 std::to_string(rep_[i].prec()) + ")");
    }
    return best; // nullopt = exact zero = +infinity
}

std::string ExtElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < rep_.size(); ++i) {
        if (rep_[i].is_exact_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << rep_[i].str() << ")";
        if (i == 1) os << "*th";
        if (i > 1) os << "*th^" << i;
    }
    if (first) os << "0";
    return os.str();
}

ExtElement eval_poly_at_ext(const std::vector<LaurentSeries>& poly, const ExtElement& at) {
    const auto& d = at.datum();
    return ExtElement(d, eval_poly_at_rep(poly, at.rep(), d->minpoly(), d->field()));
}

// --- builders -------------------------------------------------------------------

GaloisDatumPtr build_trivial(const FqFieldPtr& field) { return build_tame_kummer(field, 1); }

GaloisDatumPtr build_tame_kummer(const FqFieldPtr& field, long long e) {
    if (e < 1) throw DomainError("Kummer degree must be positive");
    if ((long long)((field->q() - 1) % (uint64_t)e) != 0)
        throw UnsupportedFamilyError("tame Kummer needs e | q - 1 (mu_e in F_q), got e=" +
                                     std::to_string(e) + ", q=" + std::to_string(field->q()));
    // minpoly x^e - t
    std::vector<LaurentSeries> f((size_t)e + 1, LaurentSeries::exact_zero(field));
    f[0] = -LaurentSeries::t(field);
    f[(size_t)e] = LaurentSeries::constant(field->one());

    FqElement zeta = e == 1 ? field->one()
                            : field->primitive_element().pow((long long)((field->q() - 1) / (uint64_t)e));
    std::vector<GroupElement> group;
    FqElement z = field->one();
    for (long long j = 0; j < e; ++j) {
        GroupElement g;
        g.id = (int)j;
        g.action = {LaurentSeries::exact_zero(field), LaurentSeries::constant(z)};
        group.push_back(std::move(g));
        z = z * zeta;
    }
    auto [a, b] = canonical_unif_exponents(e, 1);
    return GaloisDatum::create(field, e, 1, std::move(f), std::move(group), a, b,
                               e == 1 ? Family::trivial : Family::tame_kummer);
}

GaloisDatumPtr build_artin_schreier(const FqFieldPtr& field, long long m, const FqElement& c) {
    long long p = field->p();
    if (m < 1) throw DomainError("Artin-Schreier pole order m must be positive");
    if (c.is_zero()) throw DomainError("Artin-Schreier coefficient c must be nonzero");
    if (m % p == 0)
        throw UnsupportedFamilyError(
            "p | m: reduce the class first (pole order must be prime to p)");
    // minpoly x^p - x - c t^{-m}
    std::vector<LaurentSeries> f((size_t)p + 1, LaurentSeries::exact_zero(field));
    f[0] = LaurentSeries::monomial(-c, -m);
    f[1] = LaurentSeries::constant(-field->one());
    f[(size_t)p] = LaurentSeries::constant(field->one());

    std::vector<GroupElement> group;
    for (long long a = 0; a < p; ++a) {
        GroupElement g;
        g.id = (int)a;
        g.action = {LaurentSeries::constant(field->from_int(a)),
                    LaurentSeries::constant(field->one())};
        group.push_back(std::move(g));
    }
    auto [ua, ub] = canonical_unif_exponents(p, -m);
    return GaloisDatum::create(field, p, -m, std::move(f), std::move(group), ua, ub,
                               Family::artin_schreier);
}

GaloisDatumPtr base_change_tame(const GaloisDatumPtr& d, long long eprime) {
    if (eprime < 1) throw DomainError("base-change index must be positive");
    if (eprime == 1) return d;
    long long p = d->field()->p();
    switch (d->label()) {
        case Family::trivial:
            return d;
        case Family::tame_kummer: {
            if (std::gcd(eprime, d->e()) != 1)
                throw UnsupportedFamilyError("tame base change needs gcd(e', e) = 1");
            return build_tame_kummer(d->field(), d->e());
        }
        case Family::artin_schreier: {
            if (std::gcd(eprime, p * d->e()) != 1)
                throw UnsupportedFamilyError("Artin-Schreier base change needs gcd(e', p e) = 1");
            // theta^p - theta = c t^{-m}; t = s^{e'} gives pole order e' m in s
            const LaurentSeries& a0 = d->minpoly()[0];
            long long m = -a0.lead();
            FqElement c = -a0.at(a0.lead());
            return build_artin_schreier(d->field(), eprime * m, c);
        }
        case Family::custom:
            throw UnsupportedFamilyError("base change is only implemented for family-built data");
    }
    throw UnsupportedFamilyError("base change: unknown family");
}

GaloisDatumPtr build_custom(FqFieldPtr field, long long e, long long w,
                            std::vector<LaurentSeries> minpoly,
                            std::vector<std::vector<LaurentSeries>> generator_actions,
                            std::optional<long long> working_prec) {
    if ((long long)minpoly.size() != e + 1) throw DomainError("minpoly must have degree e");
    // close the generators under composition
    std::vector<std::vector<LaurentSeries>> actions;
    std::vector<LaurentSeries> xpoly = reduce_mod_f(
        {LaurentSeries::exact_zero(field), LaurentSeries::constant(field->one())}, minpoly, field);
    actions.push_back(xpoly);
    auto known = [&](const std::vector<LaurentSeries>& cand) {
        for (const auto& a : actions)
            if (reps_equal_to_precision(a, cand)) return true;
        return false;
    };
    for (auto& g : generator_actions) {
        auto r = reduce_mod_f(std::move(g), minpoly, field);
        if (!known(r)) actions.push_back(std::move(r));
    }
    bool grew = true;
    while (grew) {
        grew = false;
        for (size_t i = 0; i < actions.size(); ++i) {
            for (size_t j = 0; j < actions.size(); ++j) {
                auto comp = eval_poly_at_rep(actions[i], actions[j], minpoly, field);
                if (!known(comp)) {
                    actions.push_back(std::move(comp));
                    if ((long long)actions.size() > e)
                        throw DomainError("group closure exceeds the declared degree e");
                    grew = true;
                }
            }
        }
    }
    if ((long long)actions.size() != e)
        throw DomainError("generators close into a group of order " +
                          std::to_string(actions.size()) + ", expected e = " + std::to_string(e));
    std::vector<GroupElement> group;
    for (size_t i = 0; i < actions.size(); ++i) {
        GroupElement g;
        g.id = (int)i;
        g.action = std::move(actions[i]);
        group.push_back(std::move(g));
    }
    auto [a, b] = canonical_unif_exponents(e, w);
    return GaloisDatum::create(std::move(field), e, w, std::move(minpoly), std::move(group), a, b,
                               Family::custom, working_prec);
}

// --- verification -----------------------------------------------------------------

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerifyCheck& c) { return c.pass; });
}

VerifyReport verify_datum(const GaloisDatumPtr& d) {
    VerifyReport report;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        report.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    const auto& view = d->group_view();
    long long e = d->e();

    add("group_size", (long long)d->group().size() == e,
        "|G| = " + std::to_string(d->group().size()) + ", e = " + std::to_string(e));

    add("identity_present", view.identity >= 0,
        view.identity >= 0 ? "id " + std::to_string(view.identity) : "no element acts as x");

    bool closed = true;
    std::string closure_detail;
    for (int i = 0; i < view.size && closed; ++i)
        for (int j = 0; j < view.size && closed; ++j)
            if (view.table[(size_t)i][(size_t)j] < 0) {
                closed = false;
                closure_detail = "composition " + std::to_string(i) + " after " +
                                 std::to_string(j) + " matches no element";
            }
    if (closed) {
        // Latin square: each row and column is a permutation
        for (int i = 0; i < view.size && closed; ++i) {
            uint64_t row = 0, col = 0;
            for (int j = 0; j < view.size; ++j) {
                row |= 1ull << view.table[(size_t)i][(size_t)j];
                col |= 1ull << view.table[(size_t)j][(size_t)i];
            }
            if (row != view.full_mask() || col != view.full_mask()) {
                closed = false;
                closure_detail = "composition table is not a Latin square at row " + std::to_string(i);
            }
        }
    }
    add("closure", closed, closure_detail);

    bool actions_distinct = true;
    for (size_t i = 0; i < d->group().size() && actions_distinct; ++i)
        for (size_t j = i + 1; j < d->group().size() && actions_distinct; ++j)
            if (reps_equal_to_precision(d->group()[i].action, d->group()[j].action))
                actions_distinct = false;
    add("actions_distinct", actions_distinct);

    bool roots_ok = true;
    std::string root_detail;
    try {
        ExtElement th = ExtElement::theta(d);
        for (const auto& g : d->group()) {
            ExtElement image = th.apply(g);
            ExtElement residue = eval_poly_at_ext(d->minpoly(), image);
            if (!residue.is_zero_to_prec()) {
                roots_ok = false;
                root_detail = "f(sigma_" + std::to_string(g.id) + "(theta)) != 0";
                break;
            }
        }
    } catch (const std::exception& ex) {
        roots_ok = false;
        root_detail = ex.what();
    }
    add("minpoly_root", roots_ok, root_detail);

    bool orders_ok = closed;
    if (closed) {
        for (const auto& g : d->group()) {
            long long ord = view.orders[(size_t)g.id];
            if (ord <= 0 || e % ord != 0 || g.order != ord) { orders_ok = false; break; }
        }
    }
    add("orders_divide_group", orders_ok);

    add("gcd_w_e", std::gcd(d->w() < 0 ? -d->w() : d->w(), e) == 1,
        "w = " + std::to_string(d->w()) + ", e = " + std::to_string(e));
    add("unif_exponents", d->unif_a() * e + d->unif_b() * d->w() == 1,
        std::to_string(d->unif_a()) + "*e + " + std::to_string(d->unif_b()) + "*w");

    try {
        auto vt = ExtElement::from_series(d, LaurentSeries::t(d->field())).valuation();
        add("valuation_of_t", vt && *vt == e, vt ? "v_L(t) = " + std::to_string(*vt) : "infinite");
    } catch (const std::exception& ex) {
        add("valuation_of_t", false, ex.what());
    }
    try {
        auto vu = ExtElement::uniformizer(d).valuation();
        add("valuation_of_uniformizer", vu && *vu == 1,
            vu ? "v_L(u) = " + std::to_string(*vu) : "infinite");
    } catch (const std::exception& ex) {
        add("valuation_of_uniformizer", false, ex.what());
    }
    return report;
}

} // namespace ramlab
