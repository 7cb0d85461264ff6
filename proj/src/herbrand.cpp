#include "ramlab/herbrand.hpp"

#include "ramlab/errors.hpp"

namespace ramlab {

HerbrandFunction HerbrandFunction::identity() { return from_profile({}, 1); }

void HerbrandFunction::append_segment(const Rational& upto, const Rational& slope) {
    if (upto <= xs_.back()) throw DomainError("breakpoints must strictly increase");
    if (slope <= Rational(0)) throw DomainError("slopes must be positive");
    Rational v = vals_.back() + slopes_.back() * (upto - xs_.back());
    xs_.push_back(upto);
    vals_.push_back(v);
    slopes_.push_back(slope);
}

HerbrandFunction HerbrandFunction::from_profile(
    const std::vector<std::pair<long long, long long>>& segments, long long g0) {
    if (g0 < 1) throw DomainError("group order must be positive");
    // validate the profile: sorted breaks, orders form a divisibility chain
    long long prev_break = -1, prev_order = g0;
    for (const auto& [b, n] : segments) {
        if (b < 0 || b <= prev_break) throw DomainError("breaks must be sorted and nonnegative");
        if (n < 2 || n > prev_order || prev_order % n != 0 || g0 % n != 0)
            throw DomainError("subgroup orders must divide and decrease along the filtration");
        if (b == 0 && n != g0)
            throw DomainError("the subgroup at a break at 0 is the full inertia group");
        prev_break = b;
        prev_order = n;
    }
    HerbrandFunction f;
    f.xs_ = {Rational(-1), Rational(0)};
    f.vals_ = {Rational(-1), Rational(0)};
    f.slopes_ = {Rational(1)}; // slope 1 on [-1, 0]
    // On (x_i, b_j] the group is the subgroup at the next break b_j, so the
    // slope there is n_j / g0; past the last break the subgroup is trivial.
    for (const auto& [b, n] : segments) {
        if (b == 0) continue; // a break at 0 adds no segment
        f.slopes_.push_back(Rational(n, g0));
        f.vals_.push_back(f.vals_.back() + f.slopes_.back() * (Rational(b) - f.xs_.back()));
        f.xs_.push_back(Rational(b));
    }
    f.slopes_.push_back(Rational(1, g0));
    return f;
}

Rational HerbrandFunction::eval(const Rational& x) const {
    if (x < xs_.front()) throw DomainError("Herbrand functions live on [-1, oo)");
    size_t i = xs_.size() - 1;
    while (i > 0 && x < xs_[i]) --i;
    return vals_[i] + slopes_[i] * (x - xs_[i]);
}

HerbrandFunction HerbrandFunction::inverse() const {
    HerbrandFunction g;
    g.xs_ = vals_;
    g.vals_ = xs_;
    g.slopes_.reserve(slopes_.size());
    for (const auto& s : slopes_) g.slopes_.push_back(Rational(1) / s);
    return g;
}

bool HerbrandFunction::is_concave_on_nonneg() const {
    for (size_t i = 2; i < slopes_.size(); ++i)
        if (slopes_[i] > slopes_[i - 1]) return false;
    return true;
}

bool HerbrandFunction::is_convex_on_nonneg() const {
    for (size_t i = 2; i < slopes_.size(); ++i)
        if (slopes_[i] < slopes_[i - 1]) return false;
    return true;
}

bool HerbrandFunction::has_unit_slope_before_zero() const {
    return !slopes_.empty() && slopes_[0] == Rational(1) && xs_[0] == Rational(-1);
}

bool operator==(const HerbrandFunction& a, const HerbrandFunction& b) {
    return a.xs_ == b.xs_ && a.vals_ == b.vals_ && a.slopes_ == b.slopes_;
}

} // namespace ramlab
