#include "doctest.h"

#include <random>

#include "ramlab/filtration.hpp"

using namespace ramlab;

TEST_CASE("identity for the trivial filtration") {
    auto F2 = FqField::create_canonical(2, 1);
    auto phi = herbrand_phi(lower_filtration(build_trivial(F2)));
    CHECK(phi == HerbrandFunction::identity());
    CHECK(phi.eval(Rational(7, 2)) == Rational(7, 2));
}

TEST_CASE("tame slope 1/e") {
    auto F3 = FqField::create_canonical(3, 1);
    auto phi = herbrand_phi(lower_filtration(build_tame_kummer(F3, 2)));
    CHECK(phi.eval(Rational(0)) == Rational(0));
    CHECK(phi.eval(Rational(2)) == Rational(1));
    CHECK(phi.eval(Rational(3)) == Rational(3, 2));
    auto psi = herbrand_psi(phi);
    CHECK(psi.eval(Rational(1)) == Rational(2)); // psi(x) = 2x on [0, oo)
}

TEST_CASE("Artin-Schreier kink at the break") {
    auto F2 = FqField::create_canonical(2, 1);
    auto phi = herbrand_phi(lower_filtration(build_artin_schreier(F2, 1, F2->one())));
    CHECK(phi.eval(Rational(1)) == Rational(1));       // phi(m) = m
    CHECK(phi.eval(Rational(1, 2)) == Rational(1, 2)); // identity below the break
    CHECK(phi.eval(Rational(3)) == Rational(2));       // slope 1/2 beyond
    auto psi = herbrand_psi(phi);
    CHECK(psi.eval(Rational(1)) == Rational(1));
    CHECK(psi.eval(Rational(2)) == Rational(3));
}

TEST_CASE("phi and psi are exact inverses across the grid") {
    auto F2 = FqField::create_canonical(2, 1);
    auto F3 = FqField::create_canonical(3, 1);
    auto F4 = FqField::create_canonical(2, 2);
    std::vector<GaloisDatumPtr> grid{build_trivial(F2),
                                     build_tame_kummer(F3, 2),
                                     build_tame_kummer(F4, 3),
                                     build_artin_schreier(F2, 1, F2->one()),
                                     build_artin_schreier(F2, 5, F2->one()),
                                     build_artin_schreier(F3, 4, F3->one())};
    std::vector<Rational> samples{Rational(-1), Rational(-1, 2), Rational(0),  Rational(1, 3),
                                  Rational(1),  Rational(7, 2),  Rational(11), Rational(101, 7)};
    for (const auto& d : grid) {
        auto filt = lower_filtration(d);
        auto phi = herbrand_phi(filt);
        auto psi = herbrand_psi(phi);
        CHECK(phi.has_unit_slope_before_zero());
        CHECK(phi.is_concave_on_nonneg());
        CHECK(psi.is_convex_on_nonneg());
        for (const auto& x : samples) {
            CHECK(psi.eval(phi.eval(x)) == x);
            CHECK(phi.eval(psi.eval(x)) == x);
            if (x >= Rational(0)) {
                // (dagger): phi(mu) >= mu / e
                CHECK(phi.eval(x) >= x / Rational(d->e()));
            }
        }
    }
}

TEST_CASE("random filtration profiles keep all Herbrand properties") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> n_breaks_dist(0, 4), gap_dist(1, 7);
    const std::vector<long long> orders{2, 3, 4, 6, 8, 12, 16, 24, 48};
    std::vector<Rational> samples{Rational(-1),    Rational(-1, 3), Rational(0),
                                  Rational(5, 4),  Rational(3),     Rational(19, 2),
                                  Rational(40, 3), Rational(64)};
    for (int trial = 0; trial < 100; ++trial) {
        // build a random divisibility chain of subgroup orders
        long long g0 = 48;
        int k = n_breaks_dist(rng);
        std::vector<std::pair<long long, long long>> profile;
        long long b = std::uniform_int_distribution<long long>(0, 1)(rng);
        long long cur = g0;
        for (int i = 0; i < k; ++i) {
            if (b == 0 && i == 0) {
                profile.emplace_back(0, g0);
            } else {
                std::vector<long long> divisors;
                for (long long d = 2; d <= cur; ++d)
                    if (cur % d == 0) divisors.push_back(d);
                if (divisors.empty()) break;
                long long next =
                    divisors[std::uniform_int_distribution<size_t>(0, divisors.size() - 1)(rng)];
                profile.emplace_back(b, next);
                cur = next;
            }
            b += gap_dist(rng);
        }
        auto phi = HerbrandFunction::from_profile(profile, g0);
        auto psi = phi.inverse();
        CHECK(phi.has_unit_slope_before_zero());
        CHECK(phi.is_concave_on_nonneg());
        CHECK(psi.is_convex_on_nonneg());
        for (const auto& x : samples) {
            CHECK(psi.eval(phi.eval(x)) == x);
            if (x >= Rational(0)) CHECK(phi.eval(x) >= x / Rational(g0));
        }
    }
}

TEST_CASE("profile validation") {
    CHECK_THROWS_AS(HerbrandFunction::from_profile({{2, 5}}, 6), DomainError); // 5 does not divide 6
    CHECK_THROWS_AS(HerbrandFunction::from_profile({{2, 6}, {1, 3}}, 6), DomainError); // unsorted
    CHECK_THROWS_AS(HerbrandFunction::from_profile({{0, 3}}, 6), DomainError); // break at 0 must be full
}
