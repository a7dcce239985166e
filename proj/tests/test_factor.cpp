#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "abl/factor.hpp"

using namespace abl;

static Poly P(std::vector<long> v) {
    std::vector<Rat> c;
    for (auto x : v) c.emplace_back(x);
    return Poly(std::move(c));
}

TEST_CASE("factor_mod_p spec examples") {
    // x^2+1 mod 5 -> (x+2)(x+3); oracle: root scan gives roots {2,3}
    {
        std::vector<long> roots;
        for (long a = 0; a < 5; ++a)
            if ((a * a + 1) % 5 == 0) roots.push_back(a);
        REQUIRE(roots == std::vector<long>{2, 3});
        auto fac = factor_mod_p(P({1, 0, 1}), 5);
        REQUIRE(fac.size() == 2);
        CHECK(fac[0].first.coeff(0) == Rat(2));
        CHECK(fac[1].first.coeff(0) == Rat(3));
    }
    // x^2+1 irreducible mod 3 (no root, degree 2)
    {
        auto fac = factor_mod_p(P({1, 0, 1}), 3);
        REQUIRE(fac.size() == 1);
        CHECK(fac[0].first.degree() == 2);
        CHECK(fac[0].second == 1);
    }
    // x mod 2 already irreducible
    {
        auto fac = factor_mod_p(P({0, 1}), 2);
        REQUIRE(fac.size() == 1);
        CHECK(fac[0].first == Poly(std::vector<Rat>{Rat(0), Rat(1)}, Int(2)));
    }
    CHECK_THROWS_AS(factor_mod_p(P({1, 1}), 6), input_error);
}

TEST_CASE("factor_mod_p reconstruction on random inputs (deg <= 6, p <= 50)") {
    std::mt19937_64 rng(42);
    std::vector<long> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (int iter = 0; iter < 150; ++iter) {
        long p = primes[rng() % primes.size()];
        long deg = 1 + rng() % 6;
        std::vector<Rat> c;
        for (long i = 0; i < deg; ++i) c.emplace_back((long)(rng() % p));
        c.emplace_back(1 + (long)(rng() % (p - 1 > 0 ? p - 1 : 1)));
        Poly f(std::move(c), Int(p));
        if (f.degree() < 1) continue;
        auto fac = factor_mod_p(f, p);
        Poly prod = Poly::constant(f.lc()).with_modulus(p);
        for (auto& [g, m] : fac)
            for (int i = 0; i < m; ++i) prod = prod * g;
        CHECK(prod == f);
    }
}

TEST_CASE("factor_over_Q basics") {
    auto fac = factor_over_Q(P({-1, 0, 1}));
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == P({-1, 1}));
    CHECK(fac[1].first == P({1, 1}));

    CHECK(is_irreducible_over_Q(P({1, 0, 1})));
    CHECK(is_irreducible_over_Q(P({8, 1, 0, 1})));
    for (long n : {5, 8, 12, 15}) CHECK(is_irreducible_over_Q(Poly::cyclotomic(n)));

    auto f2 = factor_over_Q(P({-1, 1}) * P({-1, 1}) * P({2, 1}));
    REQUIRE(f2.size() == 2);
    CHECK(f2[0].first == P({-1, 1}));
    CHECK(f2[0].second == 2);
    CHECK(f2[1].first == P({2, 1}));
    CHECK(f2[1].second == 1);
}

TEST_CASE("factor_over_Q: recombination cases") {
    Poly f = P({-2, 0, 1}) * P({-3, 0, 1});
    auto fac = factor_over_Q(f);
    REQUIRE(fac.size() == 2);
    CHECK(fac[0].first == P({-3, 0, 1}));
    CHECK(fac[1].first == P({-2, 0, 1}));

    // x^4+1 is irreducible over Q but splits mod every prime
    CHECK(is_irreducible_over_Q(P({1, 0, 0, 0, 1})));
}

TEST_CASE("factor_over_Q: non-monic input") {
    Poly f = P({-1, 2}) * P({3, 2, 5});
    auto fac = factor_over_Q(f);
    REQUIRE(fac.size() == 2);
    Poly prod = Poly::one();
    for (auto& [g, m] : fac)
        for (int i = 0; i < m; ++i) prod = prod * g;
    CHECK(prod.primitive() == f.primitive());
}

TEST_CASE("factor_over_Q random reconstruction") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 30; ++iter) {
        int nf = 1 + rng() % 3;
        Poly f = Poly::one();
        for (int i = 0; i < nf; ++i) {
            int d = 1 + rng() % 3;
            std::vector<Rat> c;
            for (int j = 0; j < d; ++j) c.emplace_back((long)(rng() % 11) - 5);
            c.emplace_back(1);
            f = f * Poly(std::move(c));
        }
        auto fac = factor_over_Q(f);
        Poly prod = Poly::one();
        for (auto& [g, m] : fac) {
            CHECK(is_irreducible_over_Q(g));
            for (int i = 0; i < m; ++i) prod = prod * g;
        }
        CHECK(prod.primitive() == f.primitive());
    }
}

TEST_CASE("factor_over_field: spec examples") {
    // Phi_8 over Q(sqrt 2): two quadratics ([Q(sqrt2)(zeta_8):Q(sqrt2)] = 2)
    {
        NfCtx K(P({-2, 0, 1}));
        auto fac = factor_over_field(Poly::cyclotomic(8), K);
        REQUIRE(fac.size() == 2);
        for (auto& [g, m] : fac) {
            CHECK(g.degree() == 2);
            CHECK(m == 1);
        }
        NfPoly prod = nfp_one(K);
        for (auto& [g, m] : fac) prod = nfp_mul(K, prod, g);
        CHECK(nfp_eq(prod, nfp_from_rational(K, Poly::cyclotomic(8))));
    }
    // x^2+1 over Q: irreducible
    {
        NfCtx Q(P({0, 1}));
        auto fac = factor_over_field(P({1, 0, 1}), Q);
        REQUIRE(fac.size() == 1);
        CHECK(fac[0].first.degree() == 2);
    }
    // Phi_4 over Q(i): (x - i)(x + i)
    {
        NfCtx K(P({1, 0, 1}));
        auto fac = factor_over_field(Poly::cyclotomic(4), K);
        REQUIRE(fac.size() == 2);
        for (auto& [g, m] : fac) CHECK(g.degree() == 1);
        auto roots = roots_in_field(Poly::cyclotomic(4), K);
        REQUIRE(roots.size() == 2);
        NfElem t = nf_gen(K);
        bool found_t = false, found_mt = false;
        for (auto& r : roots) {
            if (r == t) found_t = true;
            if (r == nf_neg(K, t)) found_mt = true;
        }
        CHECK(found_t);
        CHECK(found_mt);
    }
}

TEST_CASE("factor_over_field: membership triples") {
    NfCtx K(P({8, 1, 0, 1}));  // Q(theta), theta^3+theta+8 = 0
    CHECK_FALSE(has_root_in_field(P({-2, 0, 1}), K));
    CHECK_FALSE(has_root_in_field(P({1, 0, 1}), K));
    CHECK_FALSE(has_root_in_field(P({2, 0, 1}), K));
    CHECK(has_root_in_field(P({8, 1, 0, 1}), K));

    NfCtx K2(P({-2, 0, 1}));  // Q(sqrt 2)
    CHECK(has_root_in_field(P({-2, 0, 1}), K2));
    CHECK(has_root_in_field(Poly::eta_min_poly(3), K2));
    CHECK_FALSE(has_root_in_field(Poly::eta_min_poly(4), K2));
    CHECK_FALSE(has_root_in_field(P({1, 0, 1}), K2));
}

TEST_CASE("factor_over_field degrees sum and reconstruction") {
    std::mt19937_64 rng(77);
    NfCtx K(P({-2, 0, 1}));
    for (int iter = 0; iter < 10; ++iter) {
        int d = 2 + rng() % 3;
        std::vector<Rat> c;
        for (int j = 0; j < d; ++j) c.emplace_back((long)(rng() % 7) - 3);
        c.emplace_back(1);
        Poly f(std::move(c));
        if (f.degree() < 1 || gcd(f, f.derivative()).degree() > 0) continue;
        auto fac = factor_over_field(f, K);
        long degsum = 0;
        NfPoly prod = nfp_one(K);
        for (auto& [g, m] : fac) {
            degsum += g.degree() * m;
            for (int i = 0; i < m; ++i) prod = nfp_mul(K, prod, g);
        }
        CHECK(degsum == f.degree());
        CHECK(nfp_eq(prod, nfp_from_rational(K, f.monic())));
    }
}

TEST_CASE("degree bound enforced") {
    NfCtx K(P({-2, 0, 1}));
    std::vector<Rat> big(40, Rat(1));
    big.push_back(Rat(1));
    CHECK_THROWS_AS(factor_over_field(Poly(std::move(big)), K), size_error);
}
