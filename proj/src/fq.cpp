#include "ramlab/fq.hpp"

#include <algorithm>
#include <sstream>

namespace ramlab {

namespace {

bool is_prime(uint64_t v) {
    if (v < 2) return false;
    for (uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// --- mod-p polynomial helpers used only for modulus validation ---------
// Polynomials over F_p as coefficient vectors, low-to-high, normalized.

using PPoly = std::vector<uint32_t>;

void ptrim(PPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

PPoly pmod(PPoly a, const PPoly& m, uint32_t p) {
    // m monic
    while (a.size() >= m.size() && !a.empty()) {
        uint32_t c = a.back();
        size_t shift = a.size() - m.size();
        if (c != 0) {
            for (size_t i = 0; i < m.size(); ++i) {
                uint64_t sub = (uint64_t)c * m[i] % p;
                a[i + shift] = (uint32_t)((a[i + shift] + p - sub) % p);
            }
        }
        a.pop_back();
        ptrim(a);
        if (a.size() < m.size()) break;
    }
    ptrim(a);
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (uint32_t)((r[i + j] + (uint64_t)a[i] * b[j]) % p);
    return pmod(std::move(r), m, p);
}

PPoly ppowmod(PPoly base, uint64_t e, const PPoly& m, uint32_t p) {
    PPoly r{1};
    base = pmod(std::move(base), m, p);
    while (e) {
        if (e & 1) r = pmulmod(r, base, m, p);
        base = pmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // make b monic
        uint32_t lc = b.back();
        if (lc != 1) {
            uint32_t inv = 1;
            for (uint32_t t = 1; t < p; ++t)
                if ((uint64_t)lc * t % p == 1) { inv = t; break; }
            for (auto& c : b) c = (uint32_t)((uint64_t)c * inv % p);
        }
        PPoly r = pmod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin test over the prime field: f monic of degree n is irreducible iff
// x^{p^n} = x (mod f) and gcd(f, x^{p^d} - x) = 1 for all d <= n/2.
bool prime_poly_irreducible(const PPoly& f, uint32_t p) {
    size_t n = f.size() - 1;
    if (n == 0) return false;
    if (n == 1) return true;
    PPoly x{0, 1};
    PPoly h = x; // x^{p^d} mod f, iterated
    for (size_t d = 1; d <= n / 2; ++d) {
        h = ppowmod(h, p, f, p);
        PPoly diff = h;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (uint32_t)((diff[1] + p - 1) % p);
        ptrim(diff);
        PPoly g = pgcd(f, diff, p);
        if (!(g.size() == 1)) return false;
    }
    for (size_t d = n / 2; d < n; ++d) h = ppowmod(h, p, f, p);
    return h == x;
}

} // namespace

// --- FqField ------------------------------------------------------------

FqField::FqField(uint32_t p, uint32_t n, std::vector<uint32_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
    q_ = 1;
    for (uint32_t i = 0; i < n_; ++i) q_ *= p_;
}

FqFieldPtr FqField::create(uint32_t p, uint32_t n, std::vector<uint32_t> modulus,
                           uint64_t max_q) {
    if (!is_prime(p)) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
    if (n == 0) throw DomainError("extension degree must be positive");
    if (modulus.size() != n + 1 || modulus.back() != 1)
        throw DomainError("modulus must be monic of degree n");
    for (uint32_t c : modulus)
        if (c >= p) throw DomainError("modulus coefficients must lie in [0, p)");
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > max_q) throw ResourceError("q exceeds desk-scale cap " + std::to_string(max_q));
    }
    if (!prime_poly_irreducible(modulus, p))
        throw DomainError("modulus is reducible over the prime field");
    return FqFieldPtr(new FqField(p, n, std::move(modulus)));
}

FqFieldPtr FqField::create_canonical(uint32_t p, uint32_t n, uint64_t max_q) {
    if (!is_prime(p)) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
    if (n == 0) throw DomainError("extension degree must be positive");
    uint64_t count = 1;
    for (uint32_t i = 0; i < n; ++i) {
        count *= p;
        if (count > max_q) throw ResourceError("q exceeds desk-scale cap " + std::to_string(max_q));
    }
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<uint32_t> mod(n + 1, 0);
        uint64_t v = idx;
        for (uint32_t i = 0; i < n; ++i) { mod[i] = (uint32_t)(v % p); v /= p; }
        mod[n] = 1;
        if (prime_poly_irreducible(mod, p)) return create(p, n, std::move(mod), max_q);
    }
    throw InternalInconsistencyError("no irreducible modulus found"); // unreachable
}

std::vector<uint32_t> FqField::reduce_mod_modulus(std::vector<uint32_t> raw) const {
    // raw: coefficients low-to-high, any length; reduce mod modulus_.
    while (raw.size() > n_) {
        uint32_t c = raw.back();
        size_t shift = raw.size() - (n_ + 1);
        if (c != 0) {
            for (size_t i = 0; i <= n_; ++i) {
                uint64_t sub = (uint64_t)c * modulus_[i] % p_;
                raw[i + shift] = (uint32_t)((raw[i + shift] + p_ - sub) % p_);
            }
        }
        raw.pop_back();
    }
    raw.resize(n_, 0);
    return raw;
}

FqElement FqField::zero() const { return FqElement(shared_from_this(), std::vector<uint32_t>(n_, 0)); }

FqElement FqField::one() const {
    std::vector<uint32_t> c(n_, 0);
    c[0] = 1 % p_;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::from_coords(std::vector<uint32_t> coords) const {
    if (coords.size() > n_) {
        coords = reduce_mod_modulus(std::move(coords));
    } else {
        coords.resize(n_, 0);
    }
    for (auto& c : coords) c %= p_;
    return FqElement(shared_from_this(), std::move(coords));
}

FqElement FqField::from_index(uint64_t idx) const {
    if (idx >= q_) throw DomainError("element index out of range");
    std::vector<uint32_t> c(n_, 0);
    for (uint32_t i = 0; i < n_; ++i) { c[i] = (uint32_t)(idx % p_); idx /= p_; }
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::from_int(long long v) const {
    long long r = v % (long long)p_;
    if (r < 0) r += p_;
    std::vector<uint32_t> c(n_, 0);
    c[0] = (uint32_t)r;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::generator() const {
    if (n_ == 1) throw DomainError("prime field has no polynomial generator");
    std::vector<uint32_t> c(n_, 0);
    c[1] = 1;
    return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::primitive_element() const {
    if (primitive_cache_.empty()) {
        for (uint64_t idx = 1; idx < q_; ++idx) {
            FqElement g = from_index(idx);
            // order of g is q-1 iff g^((q-1)/r) != 1 for every prime r | q-1
            uint64_t m = q_ - 1;
            bool ok = true;
            uint64_t mm = m;
            for (uint64_t r = 2; r * r <= mm; ++r) {
                if (mm % r == 0) {
                    if (g.pow((long long)(m / r)).is_one()) { ok = false; break; }
                    while (mm % r == 0) mm /= r;
                }
            }
            if (ok && mm > 1 && g.pow((long long)(m / mm)).is_one()) ok = false;
            if (ok) { primitive_cache_ = g.coords(); break; }
        }
        if (primitive_cache_.empty())
            throw InternalInconsistencyError("no primitive element found");
    }
    return FqElement(shared_from_this(), primitive_cache_);
}

uint32_t FqField::pinv(uint32_t a) const {
    a %= p_;
    if (a == 0) throw DomainError("inversion of zero in prime field");
    // extended Euclid
    long long t = 0, newt = 1, r = p_, newr = a;
    while (newr != 0) {
        long long qq = r / newr;
        long long tmp = t - qq * newt; t = newt; newt = tmp;
        tmp = r - qq * newr; r = newr; newr = tmp;
    }
    if (t < 0) t += p_;
    return (uint32_t)t;
}

// --- FqElement ----------------------------------------------------------

FqElement::FqElement(FqFieldPtr field, std::vector<uint32_t> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {}

void require_same_field(const FqElement& a, const FqElement& b) {
    if (!a.field() || !b.field()) throw DomainError("uninitialized field element");
    if (a.field().get() == b.field().get()) return;
    if (!a.field()->same_as(*b.field()))
        throw DomainError("field elements from different fields");
}

bool FqElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](uint32_t c) { return c == 0; });
}

bool FqElement::is_one() const {
    if (coords_.empty() || coords_[0] != 1 % field_->p()) return false;
    for (size_t i = 1; i < coords_.size(); ++i)
        if (coords_[i] != 0) return false;
    return true;
}

uint64_t FqElement::index() const {
    uint64_t v = 0;
    for (size_t i = coords_.size(); i-- > 0;) v = v * field_->p() + coords_[i];
    return v;
}

FqElement FqElement::operator-() const {
    std::vector<uint32_t> c(coords_.size());
    for (size_t i = 0; i < coords_.size(); ++i) c[i] = field_->psub(0, coords_[i]);
    return FqElement(field_, std::move(c));
}

FqElement operator+(const FqElement& a, const FqElement& b) {
    require_same_field(a, b);
    std::vector<uint32_t> c(a.coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.field_->padd(a.coords_[i], b.coords_[i]);
    return FqElement(a.field_, std::move(c));
}

FqElement operator-(const FqElement& a, const FqElement& b) {
    require_same_field(a, b);
    std::vector<uint32_t> c(a.coords_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.field_->psub(a.coords_[i], b.coords_[i]);
    return FqElement(a.field_, std::move(c));
}

FqElement operator*(const FqElement& a, const FqElement& b) {
    require_same_field(a, b);
    const auto& F = *a.field_;
    size_t n = a.coords_.size();
    std::vector<uint32_t> raw(2 * n - 1, 0);
    for (size_t i = 0; i < n; ++i) {
        if (a.coords_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j)
            raw[i + j] = (uint32_t)((raw[i + j] + (uint64_t)a.coords_[i] * b.coords_[j]) % F.p());
    }
    return FqElement(a.field_, F.reduce_mod_modulus(std::move(raw)));
}

FqElement FqElement::inverse() const {
    if (is_zero()) throw DomainError("inversion of zero field element");
    // a^(q-2); q <= 2^16 keeps this cheap
    return pow((long long)(field_->q() - 2));
}

FqElement FqElement::pow(long long k) const {
    if (k < 0) return inverse().pow(-k);
    FqElement base = *this;
    FqElement r = field_->one();
    unsigned long long e = (unsigned long long)k;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

FqElement FqElement::frobenius() const { return pow((long long)field_->p()); }

FqElement FqElement::pth_root() const {
    // Frobenius has order n on F_{p^n}; its inverse is n-1 further applications.
    FqElement r = *this;
    for (uint32_t i = 0; i + 1 < field_->n(); ++i) r = r.frobenius();
    if (field_->n() == 1) return r; // x^p = x on the prime field
    return r;
}

uint32_t FqElement::trace() const {
    FqElement acc = *this;
    FqElement term = *this;
    for (uint32_t i = 1; i < field_->n(); ++i) {
        term = term.frobenius();
        acc = acc + term;
    }
    for (size_t i = 1; i < acc.coords_.size(); ++i)
        if (acc.coords_[i] != 0) throw InternalInconsistencyError("trace left the prime field");
    return acc.coords_.empty() ? 0 : acc.coords_[0];
}

bool operator==(const FqElement& a, const FqElement& b) {
    require_same_field(a, b);
    return a.coords_ == b.coords_;
}

std::string FqElement::str() const {
    if (field_->n() == 1) return std::to_string(coords_[0]);
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ",";
        os << coords_[i];
    }
    os << "]";
    return os.str();
}

} // namespace ramlab
