#ifndef RAMLAB_GALOIS_DATUM_HPP
#define RAMLAB_GALOIS_DATUM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ramlab/laurent.hpp"

namespace ramlab {

class GaloisDatum;
using GaloisDatumPtr = std::shared_ptr<const GaloisDatum>;

enum class Family { trivial, tame_kummer, artin_schreier, custom };
std::string family_name(Family f);
Family family_from_name(const std::string& s);

// One K-automorphism sigma of L, acting by sigma(theta) = action(theta).
// action holds the coefficients (in K) of a polynomial of degree < e,
// reduced mod the minimal polynomial.
struct GroupElement {
    int id = 0;
    std::vector<LaurentSeries> action;
    long long order = 1;
};

// Abstract finite group data: size, composition table, element orders.
// Extracted from a datum so representation code does not depend on series.
struct GroupView {
    int size = 1;
    int identity = 0;
    std::vector<std::vector<int>> table; // table[i][j] = i after j (action composition)
    std::vector<long long> orders;

    int compose(int i, int j) const { return table[(size_t)i][(size_t)j]; }
    int inverse_of(int i) const;
    bool is_abelian() const;
    // closure of the given ids under composition, as a bitmask (bit id)
    uint64_t subgroup_generated(uint64_t seed_mask) const;
    bool is_subgroup(uint64_t mask) const;
    bool is_normal(uint64_t mask) const;
    static int mask_size(uint64_t mask);
    uint64_t full_mask() const { return size == 64 ? ~0ull : (1ull << size) - 1; }
    uint64_t identity_mask() const { return 1ull << identity; }
};

// An explicit totally ramified Galois extension L / F_q((t)):
//   * theta generates O_L over O_K with f(theta) = 0, v_L(theta) = w,
//     gcd(w, e) = 1;
//   * each sigma acts by an explicit polynomial in theta;
//   * u = t^a theta^b with a e + b w = 1 is the uniformizer used for the
//     ramification filtration.
class GaloisDatum : public std::enable_shared_from_this<GaloisDatum> {
public:
    static constexpr int kMaxGroupSize = 64;

    static GaloisDatumPtr create(FqFieldPtr field, long long e, long long w,
                                 std::vector<LaurentSeries> minpoly,
                                 std::vector<GroupElement> group,
                                 long long unif_a, long long unif_b,
                                 Family label,
                                 std::optional<long long> working_prec = std::nullopt);

    const FqFieldPtr& field() const { return field_; }
    long long e() const { return e_; }
    long long w() const { return w_; }
    const std::vector<LaurentSeries>& minpoly() const { return minpoly_; }
    const std::vector<GroupElement>& group() const { return group_; }
    long long unif_a() const { return unif_a_; }
    long long unif_b() const { return unif_b_; }
    Family label() const { return label_; }
    long long working_prec() const { return working_prec_; }

    const GroupView& group_view() const { return view_; }
    int identity_id() const { return view_.identity; }

    // Same datum with a larger working precision (used by retry loops).
    GaloisDatumPtr with_precision(long long prec) const;

    // Default precision policy: 4 e (1 + |w| e) t-coefficients, overridable
    // through the RAMLAB_PRECISION environment variable.
    static long long default_precision(long long e, long long w);

private:
    GaloisDatum() = default;
    friend class ExtElement;

    FqFieldPtr field_;
    long long e_ = 1;
    long long w_ = 1;
    std::vector<LaurentSeries> minpoly_;
    std::vector<GroupElement> group_;
    long long unif_a_ = 0;
    long long unif_b_ = 1;
    Family label_ = Family::custom;
    long long working_prec_ = 64;
    GroupView view_;
};

// Element of L in the theta-power basis: sum rep[i] * theta^i, 0 <= i < e.
class ExtElement {
public:
    ExtElement() = default;
    ExtElement(GaloisDatumPtr datum, std::vector<LaurentSeries> rep);

    static ExtElement zero(const GaloisDatumPtr& d);
    static ExtElement one(const GaloisDatumPtr& d);
    static ExtElement theta(const GaloisDatumPtr& d);
    static ExtElement from_series(const GaloisDatumPtr& d, LaurentSeries s);
    // t^a theta^b for the datum's unif exponents
    static ExtElement uniformizer(const GaloisDatumPtr& d);

    const GaloisDatumPtr& datum() const { return datum_; }
    const std::vector<LaurentSeries>& rep() const { return rep_; }

    ExtElement operator-() const;
    friend ExtElement operator+(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator-(const ExtElement& a, const ExtElement& b);
    friend ExtElement operator*(const ExtElement& a, const ExtElement& b);

    ExtElement pow(long long k) const; // negative exponents via theta-inverse route
    // theta^{-1} = -(theta^{e-1} + a_{e-1} theta^{e-2} + ... + a_1)/a_0
    static ExtElement theta_inverse(const GaloisDatumPtr& d);

    // sigma applied coefficient-trivially, theta -> action(theta).
    ExtElement apply(const GroupElement& sigma) const;

    bool is_zero_to_prec() const;
    bool is_exact_zero() const;

    // v_L by the distinct-residues rule: min over i of e*v_t(rep[i]) + i*w.
    // nullopt encodes +infinity (the exact zero element).  PrecisionError if
    // some unknown coefficient could undercut the visible minimum.
    std::optional<long long> valuation() const;

    std::string str() const;

private:
    GaloisDatumPtr datum_;
    std::vector<LaurentSeries> rep_;
};

// Evaluate a polynomial with series coefficients at an extension element
// (Horner), reducing mod the minimal polynomial.
ExtElement eval_poly_at_ext(const std::vector<LaurentSeries>& poly, const ExtElement& at);

// --- family builders ------------------------------------------------------

// Degree-1 datum L = K.
GaloisDatumPtr build_trivial(const FqFieldPtr& field);

// theta^e = t with mu_e in F_q; requires e | q - 1.  e = 1 gives the
// trivial datum.
GaloisDatumPtr build_tame_kummer(const FqFieldPtr& field, long long e);

// theta^p - theta = c t^{-m}, gcd(m, p) = 1, c != 0; group x -> x + a.
GaloisDatumPtr build_artin_schreier(const FqFieldPtr& field, long long m, const FqElement& c);

// Datum of L K' / K' for K' = F_q((s)), t = s^{e'}.
GaloisDatumPtr base_change_tame(const GaloisDatumPtr& d, long long eprime);

// Custom datum from generators: the group is closed under composition
// automatically (actions reduced mod minpoly, matched up to precision).
GaloisDatumPtr build_custom(FqFieldPtr field, long long e, long long w,
                            std::vector<LaurentSeries> minpoly,
                            std::vector<std::vector<LaurentSeries>> generator_actions,
                            std::optional<long long> working_prec = std::nullopt);

// --- verification ----------------------------------------------------------

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

// Checks group axioms via action composition, f(sigma(theta)) = 0 to
// precision, gcd(w,e) = 1, a e + b w = 1, v_L(t) = e and v_L(u) = 1.
VerifyReport verify_datum(const GaloisDatumPtr& d);

} // namespace ramlab

#endif
