#include "doctest.h"

#include <numeric>

#include "ramlab/fq_poly.hpp"

using namespace ramlab;

namespace {

// independent irreducibility oracle for degree <= 3: root exhaustion
bool irreducible_by_roots(const FqPolynomial& f) {
    REQUIRE(f.degree() >= 2);
    REQUIRE(f.degree() <= 3);
    const auto& field = f.field();
    for (uint64_t i = 0; i < field->q(); ++i)
        if (f.eval(field->from_index(i)).is_zero()) return false;
    return true;
}

int moebius(int n) {
    int result = 1;
    for (int p = 2; p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    return result;
}

// (1/d) sum_{e | d} mu(d/e) q^e
long long irreducible_count_formula(long long q, int d) {
    long long sum = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        long long qe = 1;
        for (int i = 0; i < e; ++i) qe *= q;
        sum += moebius(d / e) * qe;
    }
    return sum / d;
}

} // namespace

TEST_CASE("prime field arithmetic") {
    auto F2 = FqField::create_canonical(2, 1);
    CHECK((F2->one() + F2->one()).is_zero()); // char 2
    auto F3 = FqField::create_canonical(3, 1);
    CHECK(F3->from_int(2).inverse() == F3->from_int(2)); // 2*2 = 4 = 1 mod 3
    CHECK(F3->from_int(2) * F3->from_int(2) == F3->one());
}

TEST_CASE("F4 frobenius in the polynomial basis") {
    auto F4 = FqField::create_canonical(2, 2);
    CHECK(F4->modulus() == std::vector<uint32_t>{1, 1, 1}); // x^2 + x + 1
    FqElement x = F4->generator();
    // x^2 = x + 1 mod the modulus
    FqElement expected = F4->from_coords({1, 1});
    CHECK(x.frobenius() == expected);
    CHECK(x.pth_root() == expected.pth_root().frobenius().pth_root().frobenius()); // sanity
    CHECK(expected.pth_root() == x); // inverse of squaring
}

TEST_CASE("x^q = x for all elements, exhaustive") {
    for (auto [p, n] : {std::pair<uint32_t, uint32_t>{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6},
                        {3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {61, 1}}) {
        auto F = FqField::create_canonical(p, n);
        for (uint64_t i = 0; i < F->q(); ++i) {
            FqElement a = F->from_index(i);
            CHECK(a.pow((long long)F->q()) == a);
            if (!a.is_zero()) CHECK(a * a.inverse() == F->one());
            CHECK(a.frobenius().pth_root() == a);
        }
    }
}

TEST_CASE("field construction guards") {
    CHECK_THROWS_AS(FqField::create_canonical(4, 1), DomainError);    // not prime
    CHECK_THROWS_AS(FqField::create_canonical(2, 17), ResourceError); // q over the cap
    CHECK_THROWS_AS(FqField::create(2, 2, {1, 0, 1}), DomainError);   // x^2+1 = (x+1)^2
    CHECK_NOTHROW(FqField::create(3, 2, {1, 0, 1}));                  // x^2+1 irreducible over F_3
}

TEST_CASE("canonical modulus is the least-index irreducible") {
    auto F8 = FqField::create_canonical(2, 3);
    CHECK(F8->modulus() == std::vector<uint32_t>{1, 1, 0, 1}); // x^3 + x + 1
    auto F9 = FqField::create_canonical(3, 2);
    // indices 0 (x^2), 1 (x^2+1): x^2+1 has no root mod 3 -> irreducible
    CHECK(F9->modulus() == std::vector<uint32_t>{1, 0, 1});
}

TEST_CASE("irreducibility test against root exhaustion") {
    auto F2 = FqField::create_canonical(2, 1);
    FqPolynomial x2x1(F2, {F2->one(), F2->one(), F2->one()});
    CHECK(poly_is_irreducible(x2x1));
    FqPolynomial x21(F2, {F2->one(), F2->zero(), F2->one()});
    CHECK_FALSE(poly_is_irreducible(x21)); // (x+1)^2

    auto F3 = FqField::create_canonical(3, 1);
    FqPolynomial f(F3, {F3->one(), F3->zero(), F3->one()});
    CHECK(poly_is_irreducible(f));
    CHECK(irreducible_by_roots(f));

    // all degree-2 and degree-3 monics over F_2, F_3, F_4 against the oracle
    for (auto [p, n] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
        auto F = FqField::create_canonical(p, n);
        for (uint32_t deg = 2; deg <= 3; ++deg) {
            uint64_t count = 1;
            for (uint32_t i = 0; i < deg; ++i) count *= F->q();
            for (uint64_t idx = 0; idx < count; ++idx) {
                FqPolynomial g = FqPolynomial::monic_from_index(F, deg, idx);
                bool by_roots = irreducible_by_roots(g);
                // degree <= 3: irreducible iff no root
                CHECK(poly_is_irreducible(g) == by_roots);
            }
        }
    }
}

TEST_CASE("places up to degree") {
    auto F2 = FqField::create_canonical(2, 1);
    auto places1 = places_up_to_degree(F2, 1);
    REQUIRE(places1.size() == 3);
    CHECK(places1[0].is_infinity());
    CHECK(places1[1].poly().str() == "t");
    CHECK(places1[2].poly().str() == "t + 1");

    auto places2 = places_up_to_degree(F2, 2);
    REQUIRE(places2.size() == 4);
    CHECK(places2[3].poly().str() == "t^2 + t + 1");

    auto F3 = FqField::create_canonical(3, 1);
    auto p3 = places_up_to_degree(F3, 1);
    REQUIRE(p3.size() == 4);
    CHECK(p3[1].poly().str() == "t");
    CHECK(p3[2].poly().str() == "t + 1");
    CHECK(p3[3].poly().str() == "t + 2");
}

TEST_CASE("irreducible counts match the Moebius formula") {
    for (auto [p, n] : {std::pair<uint32_t, uint32_t>{2, 1}, {3, 1}, {2, 2}}) {
        auto F = FqField::create_canonical(p, n);
        auto places = places_up_to_degree(F, 4);
        for (int d = 1; d <= 4; ++d) {
            long long count = 0;
            for (const auto& place : places)
                if (!place.is_infinity() && place.degree() == d) ++count;
            CHECK(count == irreducible_count_formula((long long)F->q(), d));
        }
    }
}

TEST_CASE("euclidean division reconstructs exactly") {
    auto F4 = FqField::create_canonical(2, 2);
    uint64_t state = 11;
    auto next = [&]() { state = state * 6364136223846793005ull + 1442695040888963407ull; return state >> 33; };
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<FqElement> fc, gc;
        for (int i = 0; i < 7; ++i) fc.push_back(F4->from_index(next() % F4->q()));
        for (int i = 0; i < 4; ++i) gc.push_back(F4->from_index(next() % F4->q()));
        FqPolynomial f(F4, fc), g(F4, gc);
        if (g.is_zero()) continue;
        auto [q, r] = f.divmod(g);
        CHECK(r.degree() < g.degree());
        CHECK(q * g + r == f);
    }
}

TEST_CASE("trace lands in the prime field and is additive") {
    auto F8 = FqField::create_canonical(2, 3);
    for (uint64_t i = 0; i < 8; ++i)
        for (uint64_t j = 0; j < 8; ++j) {
            FqElement a = F8->from_index(i), b = F8->from_index(j);
            CHECK((a + b).trace() == (a.trace() + b.trace()) % 2);
        }
}

TEST_CASE("factor_poly recovers multiplicities") {
    auto F2 = FqField::create_canonical(2, 1);
    FqPolynomial t = FqPolynomial::x(F2);
    FqPolynomial t1 = t + FqPolynomial::constant(F2->one());
    FqPolynomial quad(F2, {F2->one(), F2->one(), F2->one()});
    FqPolynomial f = t.pow(3) * t1 * quad.pow(2);
    auto factorization = factor_poly(f);
    REQUIRE(factorization.factors.size() == 3);
    CHECK(factorization.factors[0].first == t);
    CHECK(factorization.factors[0].second == 3);
    CHECK(factorization.factors[1].first == t1);
    CHECK(factorization.factors[1].second == 1);
    CHECK(factorization.factors[2].first == quad);
    CHECK(factorization.factors[2].second == 2);
}
