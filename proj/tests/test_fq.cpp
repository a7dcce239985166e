#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abl/fq.hpp"

using namespace abl;

TEST_CASE("prime field arithmetic") {
    FqCtx k = FqCtx::prime_field(7);
    Fq a = fq_from_int(k, 3), b = fq_from_int(k, 5);
    CHECK(fq_mul(k, a, b) == fq_from_int(k, 1));
    CHECK(fq_inv(k, a) == fq_from_int(k, 5));
    CHECK(fq_pow(k, a, 6) == fq_one(k));
}

TEST_CASE("extension field arithmetic") {
    FqCtx k = FqCtx::extension(2, 3);  // F_8
    CHECK(k.q() == 8);
    // every nonzero element satisfies a^7 = 1
    for (auto& a : fq_all_elements(k)) {
        if (fq_is_zero(a)) continue;
        CHECK(fq_pow(k, a, 7) == fq_one(k));
        CHECK(fq_mul(k, a, fq_inv(k, a)) == fq_one(k));
    }
}

TEST_CASE("factor x^2+1 over F_5: root-scan oracle") {
    FqCtx k = FqCtx::prime_field(5);
    FqPoly f = fqp_from_ints(k, {1, 0, 1});
    // oracle: brute-force root scan over F_5
    std::vector<Int> roots;
    for (long a = 0; a < 5; ++a)
        if ((a * a + 1) % 5 == 0) roots.push_back(a);
    REQUIRE(roots == std::vector<Int>{2, 3});

    auto fac = fqp_factor(k, f);
    REQUIRE(fac.size() == 2);
    // canonical order: x+2 before x+3 (roots 3 and 2)
    CHECK(fac[0].first == fqp_from_ints(k, {2, 1}));
    CHECK(fac[1].first == fqp_from_ints(k, {3, 1}));
    CHECK(fac[0].second == 1);
}

TEST_CASE("x^2+1 irreducible over F_3") {
    FqCtx k = FqCtx::prime_field(3);
    FqPoly f = fqp_from_ints(k, {1, 0, 1});
    for (long a = 0; a < 3; ++a) CHECK((a * a + 1) % 3 != 0);  // no roots, degree 2
    CHECK(fqp_is_irreducible(k, f));
    auto fac = fqp_factor(k, f);
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == f);
}

TEST_CASE("x over F_2 is already irreducible") {
    FqCtx k = FqCtx::prime_field(2);
    auto fac = fqp_factor(k, fqp_from_ints(k, {0, 1}));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == fqp_from_ints(k, {0, 1}));
    CHECK(fac[0].second == 1);
}

TEST_CASE("repeated factors get multiplicities") {
    FqCtx k = FqCtx::prime_field(2);
    // (x+1)^2 * x
    FqPoly f = fqp_mul(k, fqp_mul(k, fqp_from_ints(k, {1, 1}), fqp_from_ints(k, {1, 1})),
                       fqp_from_ints(k, {0, 1}));
    auto fac = fqp_factor(k, f);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == fqp_from_ints(k, {0, 1}));
    CHECK(fac[0].second == 1);
    CHECK(fac[1].first == fqp_from_ints(k, {1, 1}));
    CHECK(fac[1].second == 2);
}

TEST_CASE("inseparable input: x^4 + 1 = (x+1)^4 over F_2") {
    FqCtx k = FqCtx::prime_field(2);
    auto fac = fqp_factor(k, fqp_from_ints(k, {1, 0, 0, 0, 1}));
    REQUIRE(fac.size() == 1);
    CHECK(fac[0].first == fqp_from_ints(k, {1, 1}));
    CHECK(fac[0].second == 4);
}

TEST_CASE("reconstruction property: random f of degree <= 6, p <= 50") {
    std::mt19937_64 rng(20260809);
    std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (int iter = 0; iter < 200; ++iter) {
        long p = primes[rng() % primes.size()];
        FqCtx k = FqCtx::prime_field(p);
        long deg = 1 + rng() % 6;
        std::vector<Int> c(deg + 1);
        for (long i = 0; i <= deg; ++i) c[i] = Int((long)(rng() % p));
        if (c[deg] == 0) c[deg] = 1;
        FqPoly f = fqp_from_ints(k, c);
        if (fqp_degree(f) < 1) continue;
        auto fac = fqp_factor(k, f);
        FqPoly prod = fqp_one(k);
        for (auto& [g, m] : fac) {
            CHECK(fqp_is_irreducible(k, g));
            for (int i = 0; i < m; ++i) prod = fqp_mul(k, prod, g);
        }
        // product of monic factors equals f up to the unit lc(f)
        FqPoly scaled = prod;
        for (auto& cf : scaled) cf = fq_mul(k, cf, f.back());
        CHECK(fqp_cmp(scaled, f) == 0);
    }
}

TEST_CASE("determinism: same input, same output") {
    FqCtx k = FqCtx::prime_field(13);
    std::vector<Int> c{5, 1, 0, 7, 1, 3, 1};
    auto a = fqp_factor(k, fqp_from_ints(k, c));
    auto b = fqp_factor(k, fqp_from_ints(k, c));
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(fqp_cmp(a[i].first, b[i].first) == 0);
        CHECK(a[i].second == b[i].second);
    }
}
