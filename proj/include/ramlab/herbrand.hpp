#ifndef RAMLAB_HERBRAND_HPP
#define RAMLAB_HERBRAND_HPP

#include <utility>
#include <vector>

#include "ramlab/rational.hpp"

namespace ramlab {

// Exact piecewise-linear strictly increasing function on [-1, oo), the
// shape of a Herbrand phi/psi.  Stored as breakpoints (first is always -1),
// the exact value at each breakpoint, and one slope per segment; the last
// slope continues to +infinity.
class HerbrandFunction {
public:
    // Identity on [-1, oo).
    static HerbrandFunction identity();

    // phi of a filtration profile: `segments` lists (b_j, n_j) with
    // strictly increasing integer breaks b_j >= 0 and n_j = |G_x| for
    // x in (b_{j-1}, b_j]; g0 = |G_0|.  Slope is n_j / g0 on that segment
    // and 1/g0 beyond the last break; slope 1 on [-1, 0].
    static HerbrandFunction from_profile(const std::vector<std::pair<long long, long long>>& segments,
                                         long long g0);

    const std::vector<Rational>& breakpoints() const { return xs_; }
    const std::vector<Rational>& values() const { return vals_; }
    const std::vector<Rational>& slopes() const { return slopes_; }

    Rational eval(const Rational& x) const; // x >= -1
    HerbrandFunction inverse() const;

    bool is_concave_on_nonneg() const; // slopes non-increasing from 0 on
    bool is_convex_on_nonneg() const;
    bool has_unit_slope_before_zero() const;

    friend bool operator==(const HerbrandFunction& a, const HerbrandFunction& b);

private:
    HerbrandFunction() = default;
    void append_segment(const Rational& upto, const Rational& slope);

    std::vector<Rational> xs_;     // xs_[0] = -1
    std::vector<Rational> vals_;   // vals_[i] = f(xs_[i])
    std::vector<Rational> slopes_; // slopes_[i] on [xs_[i], xs_[i+1]] (last: to infinity)
};

} // namespace ramlab

#endif
