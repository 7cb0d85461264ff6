#include "ramlab/fq_poly.hpp"

#include <algorithm>
#include <sstream>

namespace ramlab {

FqPolynomial::FqPolynomial(FqFieldPtr field, std::vector<FqElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FqPolynomial FqPolynomial::constant(const FqElement& c) {
    return FqPolynomial(c.field(), {c});
}

FqPolynomial FqPolynomial::x(FqFieldPtr field) {
    auto zero = field->zero();
    auto one = field->one();
    return FqPolynomial(std::move(field), {zero, one});
}

FqPolynomial FqPolynomial::monic_from_index(FqFieldPtr field, uint32_t degree, uint64_t idx) {
    std::vector<FqElement> c;
    c.reserve(degree + 1);
    for (uint32_t i = 0; i < degree; ++i) {
        c.push_back(field->from_index(idx % field->q()));
        idx /= field->q();
    }
    if (idx != 0) throw DomainError("polynomial index out of range");
    c.push_back(field->one());
    return FqPolynomial(std::move(field), std::move(c));
}

const FqElement& FqPolynomial::leading() const {
    if (coeffs_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

FqElement FqPolynomial::coeff(size_t i) const {
    if (i < coeffs_.size()) return coeffs_[i];
    return field_->zero();
}

bool FqPolynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().is_one();
}

FqPolynomial FqPolynomial::operator-() const {
    std::vector<FqElement> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(-a);
    return FqPolynomial(field_, std::move(c));
}

FqPolynomial operator+(const FqPolynomial& a, const FqPolynomial& b) {
    const auto& f = a.field_ ? a.field_ : b.field_;
    std::vector<FqElement> c(std::max(a.coeffs_.size(), b.coeffs_.size()), f->zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] = a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] = c[i] + b.coeffs_[i];
    return FqPolynomial(f, std::move(c));
}

FqPolynomial operator-(const FqPolynomial& a, const FqPolynomial& b) { return a + (-b); }

FqPolynomial operator*(const FqPolynomial& a, const FqPolynomial& b) {
    const auto& f = a.field_ ? a.field_ : b.field_;
    if (a.is_zero() || b.is_zero()) return FqPolynomial::zero(f);
    std::vector<FqElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, f->zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return FqPolynomial(f, std::move(c));
}

FqPolynomial FqPolynomial::operator*(const FqElement& c) const {
    std::vector<FqElement> r;
    r.reserve(coeffs_.size());
    for (const auto& a : coeffs_) r.push_back(a * c);
    return FqPolynomial(field_, std::move(r));
}

std::pair<FqPolynomial, FqPolynomial> FqPolynomial::divmod(const FqPolynomial& divisor) const {
    if (divisor.is_zero()) throw DomainError("polynomial division by zero");
    if (degree() < divisor.degree()) return {FqPolynomial::zero(field_), *this};
    FqElement lcinv = divisor.leading().inverse();
    std::vector<FqElement> rem = coeffs_;
    std::vector<FqElement> quot(degree() - divisor.degree() + 1, field_->zero());
    for (long long i = degree(); i >= divisor.degree(); --i) {
        FqElement c = rem[(size_t)i] * lcinv;
        if (c.is_zero()) continue;
        quot[(size_t)(i - divisor.degree())] = c;
        for (long long j = 0; j <= divisor.degree(); ++j)
            rem[(size_t)(i - divisor.degree() + j)] =
                rem[(size_t)(i - divisor.degree() + j)] - c * divisor.coeffs_[(size_t)j];
    }
    return {FqPolynomial(field_, std::move(quot)), FqPolynomial(field_, std::move(rem))};
}

FqPolynomial FqPolynomial::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

FqPolynomial FqPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return FqPolynomial::zero(field_);
    std::vector<FqElement> c;
    c.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        c.push_back(coeffs_[i] * field_->from_int((long long)i));
    return FqPolynomial(field_, std::move(c));
}

FqPolynomial FqPolynomial::pow(uint32_t k) const {
    FqPolynomial r = FqPolynomial::constant(field_->one());
    FqPolynomial base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

FqElement FqPolynomial::eval(const FqElement& at) const {
    FqElement v = at.field()->zero();
    for (size_t i = coeffs_.size(); i-- > 0;) v = v * at + coeffs_[i];
    return v;
}

bool operator==(const FqPolynomial& a, const FqPolynomial& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

bool operator<(const FqPolynomial& a, const FqPolynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        uint64_t ia = a.coeffs_[i].index(), ib = b.coeffs_[i].index();
        if (ia != ib) return ia < ib;
    }
    return false;
}

std::string FqPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || !coeffs_[i].is_one()) os << coeffs_[i].str();
        if (i >= 1) {
            if (!coeffs_[i].is_one()) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

FqPolynomial gcd(const FqPolynomial& a, const FqPolynomial& b) {
    FqPolynomial x = a, y = b;
    while (!y.is_zero()) {
        FqPolynomial r = x.mod(y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

FqPolynomial powmod(const FqPolynomial& base, uint64_t e, const FqPolynomial& modulus) {
    FqPolynomial r = FqPolynomial::constant(base.field()->one());
    FqPolynomial b = base.mod(modulus);
    while (e) {
        if (e & 1) r = (r * b).mod(modulus);
        b = (b * b).mod(modulus);
        e >>= 1;
    }
    return r;
}

bool poly_is_irreducible(const FqPolynomial& f) {
    if (f.degree() < 1) throw DomainError("irreducibility needs degree >= 1");
    if (!f.is_monic()) throw DomainError("irreducibility test expects a monic polynomial");
    const auto& field = f.field();
    long long n = f.degree();
    if (n == 1) return true;
    FqPolynomial x = FqPolynomial::x(field);
    FqPolynomial h = x; // x^{q^d} mod f
    for (long long d = 1; d <= n / 2; ++d) {
        h = powmod(h, field->q(), f);
        FqPolynomial g = gcd(f, h - x);
        if (g.degree() != 0) return false;
    }
    for (long long d = n / 2; d < n; ++d) h = powmod(h, field->q(), f);
    return h == x;
}

// --- Place ---------------------------------------------------------------

Place Place::infinity(FqFieldPtr field) {
    Place p;
    p.infinity_ = true;
    p.field_ = std::move(field);
    return p;
}

Place Place::finite(FqPolynomial poly) {
    if (poly.degree() < 1 || !poly.is_monic() || !poly_is_irreducible(poly))
        throw DomainError("finite place needs a monic irreducible polynomial");
    Place p;
    p.field_ = poly.field();
    p.poly_ = std::move(poly);
    return p;
}

const FqPolynomial& Place::poly() const {
    if (infinity_) throw DomainError("place at infinity has no polynomial");
    return poly_;
}

bool operator==(const Place& a, const Place& b) {
    if (a.infinity_ != b.infinity_) return false;
    if (a.infinity_) return true;
    return a.poly_ == b.poly_;
}

bool operator<(const Place& a, const Place& b) {
    if (a.infinity_ != b.infinity_) return a.infinity_;
    if (a.infinity_) return false;
    return a.poly_ < b.poly_;
}

std::string Place::str() const {
    if (infinity_) return "inf";
    return poly_.str();
}

std::vector<Place> places_up_to_degree(const FqFieldPtr& field, uint32_t d) {
    if (d < 1) throw DomainError("place enumeration needs d >= 1");
    std::vector<Place> out;
    out.push_back(Place::infinity(field));
    for (uint32_t deg = 1; deg <= d; ++deg) {
        uint64_t count = 1;
        for (uint32_t i = 0; i < deg; ++i) {
            count *= field->q();
            if (count > (uint64_t)1 << 24) throw ResourceError("place enumeration too large");
        }
        for (uint64_t idx = 0; idx < count; ++idx) {
            FqPolynomial f = FqPolynomial::monic_from_index(field, deg, idx);
            if (poly_is_irreducible(f)) out.push_back(Place::finite(std::move(f)));
        }
    }
    return out;
}

MonicFactorization factor_poly(const FqPolynomial& f, long long degree_cap) {
    if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
    if (f.degree() > degree_cap) throw ResourceError("factorization degree cap exceeded");
    MonicFactorization out;
    out.unit = f.leading();
    FqPolynomial rest = f.monic();
    const auto& field = f.field();
    for (uint32_t deg = 1; rest.degree() >= 1 && deg <= (uint32_t)rest.degree(); ++deg) {
        if (rest.degree() < 2 * (long long)deg) {
            // remaining cofactor of degree < 2*deg with no factor of degree
            // < deg is irreducible
            break;
        }
        uint64_t count = 1;
        for (uint32_t i = 0; i < deg; ++i) count *= field->q();
        for (uint64_t idx = 0; idx < count && rest.degree() >= (long long)deg; ++idx) {
            FqPolynomial cand = FqPolynomial::monic_from_index(field, deg, idx);
            if (!rest.mod(cand).is_zero()) continue;
            // any degree-deg divisor is irreducible here: smaller factors
            // were already removed
            long long mult = 0;
            while (true) {
                auto [q, r] = rest.divmod(cand);
                if (!r.is_zero()) break;
                rest = q;
                ++mult;
            }
            out.factors.emplace_back(std::move(cand), mult);
        }
    }
    if (rest.degree() >= 1) out.factors.emplace_back(rest, 1);
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace ramlab
