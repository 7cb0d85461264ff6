#include "doctest.h"

#include <random>

#include "ramlab/laurent.hpp"

using namespace ramlab;

TEST_CASE("characteristic-2 cancellation with precision") {
    auto F2 = FqField::create_canonical(2, 1);
    auto a = LaurentSeries::make(F2, 1, {F2->one(), F2->one()}, 5); // t + t^2 + O(t^5)
    auto b = LaurentSeries::make(F2, 1, {F2->one()}, 5);            // t + O(t^5)
    auto sum = a + b;
    CHECK(sum.lead() == 2);
    CHECK(sum.prec() == 5);
    CHECK(sum.at(2) == F2->one());
    CHECK(sum.at(3).is_zero());
}

TEST_CASE("inverse of a monomial is exact") {
    auto F2 = FqField::create_canonical(2, 1);
    auto t = LaurentSeries::t(F2);
    auto inv = t.inverse(LaurentSeries::kExact);
    CHECK(inv.is_exact());
    CHECK(inv.lead() == -1);
    CHECK((t * inv).at(0) == F2->one());
}

TEST_CASE("monomial substitution t -> t^3") {
    auto F2 = FqField::create_canonical(2, 1);
    auto tinv = LaurentSeries::t(F2).inverse(LaurentSeries::kExact);
    auto composed = tinv.compose_monomial(F2->one(), 3);
    CHECK(composed.lead() == -3);
    CHECK(composed.is_exact());
}

TEST_CASE("geometric series inverse") {
    auto F3 = FqField::create_canonical(3, 1);
    // 1 - t: inverse = 1 + t + t^2 + ...
    auto s = LaurentSeries::make(F3, 0, {F3->one(), -F3->one()});
    auto inv = s.inverse(6);
    CHECK(inv.prec() == 6);
    for (long long k = 0; k < 6; ++k) CHECK(inv.at(k) == F3->one());
    CHECK_THROWS_AS(s.inverse(LaurentSeries::kExact), DomainError);
}

TEST_CASE("zero handling") {
    auto F2 = FqField::create_canonical(2, 1);
    auto zero = LaurentSeries::exact_zero(F2);
    CHECK_FALSE(zero.valuation().has_value());
    auto fuzzy = LaurentSeries::zero_to_prec(F2, 4);
    CHECK_THROWS_AS(fuzzy.valuation(), PrecisionError);
    CHECK_THROWS_AS(fuzzy.inverse(10), PrecisionError);
    CHECK_THROWS_AS(zero.inverse(10), DomainError);
    CHECK((zero * fuzzy).is_exact_zero());
    auto t = LaurentSeries::t(F2);
    auto prod = fuzzy * t; // O(t^4) * t = O(t^5)
    CHECK(prod.is_zero_to_prec());
    CHECK(prod.prec() == 5);
}

TEST_CASE("product precision is the conservative bound") {
    auto F2 = FqField::create_canonical(2, 1);
    auto a = LaurentSeries::make(F2, 2, {F2->one()}, 7);  // t^2 + O(t^7)
    auto b = LaurentSeries::make(F2, -1, {F2->one()}, 3); // t^-1 + O(t^3)
    auto prod = a * b;
    // min(v(a) + prec(b), v(b) + prec(a)) = min(2+3, -1+7) = 5
    CHECK(prod.prec() == 5);
    CHECK(prod.lead() == 1);
}

TEST_CASE("valuations are additive and subadditive, randomized") {
    auto F3 = FqField::create_canonical(3, 1);
    std::mt19937 rng(1234);
    auto random_series = [&]() {
        std::uniform_int_distribution<long long> lead_dist(-4, 4);
        std::uniform_int_distribution<int> len_dist(1, 5), coef_dist(0, 2);
        long long lead = lead_dist(rng);
        std::vector<FqElement> coeffs;
        coeffs.push_back(F3->from_int(1 + coef_dist(rng) % 2));
        for (int i = 1, len = len_dist(rng); i < len; ++i)
            coeffs.push_back(F3->from_int(coef_dist(rng)));
        return LaurentSeries::make(F3, lead, std::move(coeffs));
    };
    for (int trial = 0; trial < 300; ++trial) {
        auto a = random_series(), b = random_series();
        CHECK(*(a * b).valuation() == *a.valuation() + *b.valuation());
        auto sum = a + b;
        if (!sum.is_exact_zero())
            CHECK(*sum.valuation() >= std::min(*a.valuation(), *b.valuation()));
        if (*a.valuation() != *b.valuation())
            CHECK(*sum.valuation() == std::min(*a.valuation(), *b.valuation()));
    }
}

TEST_CASE("inverse round-trips against multiplication") {
    auto F5 = FqField::create_canonical(5, 1);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> coef(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<FqElement> coeffs{F5->from_int(1 + coef(rng) % 4)};
        for (int i = 0; i < 4; ++i) coeffs.push_back(F5->from_int(coef(rng)));
        auto s = LaurentSeries::make(F5, -2, std::move(coeffs));
        auto inv = s.inverse(8);
        auto prod = s * inv;
        CHECK(prod.at(0) == F5->one());
        for (long long k = 1; k < prod.prec(); ++k) CHECK(prod.at(k).is_zero());
    }
}
