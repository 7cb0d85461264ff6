#include "ramlab/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace ramlab {

namespace {
// exponent arithmetic saturating at kExact ("known forever")
long long sadd(long long a, long long b) {
    if (a == LaurentSeries::kExact || b == LaurentSeries::kExact) return LaurentSeries::kExact;
    return a + b;
}
long long smul(long long a, long long k) {
    if (a == LaurentSeries::kExact) return LaurentSeries::kExact;
    return a * k;
}
} // namespace

LaurentSeries LaurentSeries::exact_zero(FqFieldPtr field) {
    LaurentSeries s;
    s.field_ = std::move(field);
    s.prec_ = kExact;
    return s;
}

LaurentSeries LaurentSeries::zero_to_prec(FqFieldPtr field, long long prec) {
    LaurentSeries s;
    s.field_ = std::move(field);
    s.prec_ = prec;
    return s;
}

LaurentSeries LaurentSeries::monomial(const FqElement& c, long long k) {
    LaurentSeries s;
    s.field_ = c.field();
    if (!c.is_zero()) {
        s.lead_ = k;
        s.coeffs_ = {c};
    }
    s.prec_ = kExact;
    return s;
}

LaurentSeries LaurentSeries::t(FqFieldPtr field) {
    auto one = field->one();
    return monomial(one, 1);
}

LaurentSeries LaurentSeries::make(FqFieldPtr field, long long lead,
                                  std::vector<FqElement> coeffs, long long prec) {
    LaurentSeries s;
    s.field_ = std::move(field);
    s.lead_ = lead;
    s.coeffs_ = std::move(coeffs);
    s.prec_ = prec;
    s.normalize();
    return s;
}

void LaurentSeries::normalize() {
    // clip unknown region
    if (prec_ != kExact && !coeffs_.empty()) {
        long long known = prec_ - lead_;
        if (known <= 0)
            coeffs_.clear();
        else if ((long long)coeffs_.size() > known)
            coeffs_.resize((size_t)known);
    }
    size_t skip = 0;
    while (skip < coeffs_.size() && coeffs_[skip].is_zero()) ++skip;
    if (skip) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + (long long)skip);
        lead_ += (long long)skip;
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.empty()) lead_ = 0;
}

std::optional<long long> LaurentSeries::valuation() const {
    if (!coeffs_.empty()) return lead_;
    if (is_exact()) return std::nullopt;
    throw PrecisionError("series is zero to precision O(t^" + std::to_string(prec_) + ")");
}

long long LaurentSeries::lead() const {
    auto v = valuation();
    if (!v) throw DomainError("exact zero series has no finite valuation");
    return *v;
}

FqElement LaurentSeries::at(long long k) const {
    if (prec_ != kExact && k >= prec_)
        throw PrecisionError("coefficient beyond precision O(t^" + std::to_string(prec_) + ")");
    if (coeffs_.empty() || k < lead_ || k >= lead_ + (long long)coeffs_.size())
        return field_->zero();
    return coeffs_[(size_t)(k - lead_)];
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const auto& F = a.field_ ? a.field_ : b.field_;
    long long prec = std::min(a.prec_, b.prec_);
    if (a.is_exact_zero()) return b.truncated(prec);
    if (b.is_exact_zero()) return a.truncated(prec);
    long long lo = std::min(a.coeffs_.empty() ? b.lead_ : a.lead_,
                            b.coeffs_.empty() ? a.lead_ : b.lead_);
    long long hi_known = std::max(a.coeffs_.empty() ? lo : a.lead_ + (long long)a.coeffs_.size(),
                                  b.coeffs_.empty() ? lo : b.lead_ + (long long)b.coeffs_.size());
    if (prec != LaurentSeries::kExact) hi_known = std::min(hi_known, prec);
    std::vector<FqElement> c;
    c.reserve((size_t)std::max<long long>(0, hi_known - lo));
    for (long long k = lo; k < hi_known; ++k) c.push_back(a.at(k) + b.at(k));
    return LaurentSeries::make(F, lo, std::move(c), prec);
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const auto& F = a.field_ ? a.field_ : b.field_;
    if (a.is_exact_zero() || b.is_exact_zero()) return LaurentSeries::exact_zero(F);
    long long va = a.coeffs_.empty() ? a.prec_ : a.lead_;
    long long vb = b.coeffs_.empty() ? b.prec_ : b.lead_;
    long long prec = std::min(sadd(va, b.prec_), sadd(vb, a.prec_));
    if (a.coeffs_.empty() || b.coeffs_.empty())
        return LaurentSeries::zero_to_prec(F, prec);
    long long lo = a.lead_ + b.lead_;
    long long hi = lo + (long long)a.coeffs_.size() + (long long)b.coeffs_.size() - 1;
    if (prec != LaurentSeries::kExact) hi = std::min(hi, prec);
    if (hi <= lo) return LaurentSeries::zero_to_prec(F, prec);
    std::vector<FqElement> c((size_t)(hi - lo), F->zero());
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        long long base = a.lead_ + (long long)i + b.lead_ - lo;
        for (size_t j = 0; j < b.coeffs_.size(); ++j) {
            long long k = base + (long long)j;
            if (k >= (long long)c.size()) break;
            c[(size_t)k] = c[(size_t)k] + a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return LaurentSeries::make(F, lo, std::move(c), prec);
}

LaurentSeries LaurentSeries::scaled(const FqElement& c) const {
    if (c.is_zero()) return exact_zero(field_);
    LaurentSeries r = *this;
    for (auto& a : r.coeffs_) a = a * c;
    return r;
}

LaurentSeries LaurentSeries::shifted(long long k) const {
    LaurentSeries r = *this;
    r.lead_ += k;
    r.prec_ = sadd(r.prec_, k);
    if (r.coeffs_.empty()) r.lead_ = 0;
    return r;
}

LaurentSeries LaurentSeries::inverse(long long prec_hint) const {
    if (is_exact_zero()) throw DomainError("inversion of the zero series");
    if (coeffs_.empty())
        throw PrecisionError("inversion of a series that is zero to precision");
    if (coeffs_.size() == 1) {
        // monomial: exact inverse
        LaurentSeries r = monomial(coeffs_[0].inverse(), -lead_);
        long long own = prec_ == kExact ? kExact : prec_ - 2 * lead_;
        return r.truncated(std::min(own, prec_hint));
    }
    long long out_prec;
    if (prec_ == kExact) {
        if (prec_hint == kExact)
            throw DomainError("inverse of a non-monomial exact series needs a precision bound");
        out_prec = prec_hint;
    } else {
        out_prec = std::min(prec_ - 2 * lead_, prec_hint);
    }
    long long rel = out_prec + lead_; // number of result coefficients
    if (rel <= 0) throw PrecisionError("inversion target precision is vacuous");
    FqElement c0inv = coeffs_[0].inverse();
    std::vector<FqElement> d((size_t)rel, field_->zero());
    d[0] = c0inv;
    for (long long k = 1; k < rel; ++k) {
        FqElement s = field_->zero();
        long long imax = std::min<long long>(k, (long long)coeffs_.size() - 1);
        for (long long i = 1; i <= imax; ++i) s = s + coeffs_[(size_t)i] * d[(size_t)(k - i)];
        d[(size_t)k] = -(c0inv * s);
    }
    return make(field_, -lead_, std::move(d), out_prec);
}

LaurentSeries LaurentSeries::compose_monomial(const FqElement& c, long long k) const {
    if (k < 1) throw DomainError("monomial substitution needs exponent k >= 1");
    if (c.is_zero()) throw DomainError("monomial substitution needs c != 0");
    if (is_exact_zero()) return *this;
    long long prec = smul(prec_, k);
    if (coeffs_.empty()) return zero_to_prec(field_, prec);
    std::vector<FqElement> out((size_t)((long long)(coeffs_.size() - 1) * k + 1), field_->zero());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        out[(size_t)((long long)i * k)] = coeffs_[i] * c.pow(lead_ + (long long)i);
    }
    return make(field_, lead_ * k, std::move(out), prec);
}

LaurentSeries LaurentSeries::truncated(long long new_prec) const {
    if (new_prec >= prec_) return *this;
    LaurentSeries r = *this;
    r.prec_ = new_prec;
    r.normalize();
    return r;
}

LaurentSeries LaurentSeries::pow(long long k, long long prec_hint) const {
    if (k < 0) return inverse(prec_hint).pow(-k, prec_hint);
    LaurentSeries r = monomial(field_->one(), 0);
    LaurentSeries base = *this;
    unsigned long long e = (unsigned long long)k;
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

bool equal_to_precision(const LaurentSeries& a, const LaurentSeries& b) {
    long long prec = std::min(a.prec_, b.prec_);
    long long lo_a = a.coeffs_.empty() ? prec : a.lead_;
    long long lo_b = b.coeffs_.empty() ? prec : b.lead_;
    long long lo = std::min(lo_a, lo_b);
    long long hi = lo;
    if (!a.coeffs_.empty()) hi = std::max(hi, a.lead_ + (long long)a.coeffs_.size());
    if (!b.coeffs_.empty()) hi = std::max(hi, b.lead_ + (long long)b.coeffs_.size());
    if (prec != LaurentSeries::kExact) hi = std::min(hi, prec);
    for (long long k = lo; k < hi; ++k)
        if (a.at(k) != b.at(k)) return false;
    return true;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.prec_ != b.prec_ || a.coeffs_.size() != b.coeffs_.size()) return false;
    if (!a.coeffs_.empty() && a.lead_ != b.lead_) return false;
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        if (a.coeffs_[i] != b.coeffs_[i]) return false;
    return true;
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        long long e = lead_ + (long long)i;
        if (e == 0 || !coeffs_[i].is_one()) os << coeffs_[i].str();
        if (e != 0) {
            if (!coeffs_[i].is_one()) os << "*";
            os << "t";
            if (e != 1) os << "^" << e;
        }
    }
    if (first) os << "0";
    if (prec_ != kExact) os << " + O(t^" << prec_ << ")";
    return os.str();
}

} // namespace ramlab
