#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "abl/numfield.hpp"

using namespace abl;

static Poly P(std::vector<long> v) {
    std::vector<Rat> c;
    for (auto x : v) c.emplace_back(x);
    return Poly(std::move(c));
}

static NumberField wang_field() { return NumberField(P({8, 1, 0, 1})); }

TEST_CASE("field construction") {
    CHECK(NumberField::rationals().degree() == 1);
    CHECK(wang_field().degree() == 3);
    CHECK_THROWS_AS(NumberField(P({-1, 0, 1})), input_error);  // reducible
    CHECK_THROWS_AS(NumberField(P({1, 2})), input_error);      // not monic
}

TEST_CASE("decompose_prime: the flagship field at 2") {
    auto K = wang_field();
    auto places = K.decompose(2);
    REQUIRE(places.size() == 2);
    CHECK(places[0].e == 1);
    CHECK(places[0].f == 1);
    CHECK(places[1].e == 2);
    CHECK(places[1].f == 1);
    CHECK(places[0].label == "2a");
    CHECK(places[1].label == "2b");
    long total = 0;
    for (auto& v : places) total += v.local_degree();
    CHECK(total == 3);
}

TEST_CASE("decompose_prime: Q(i) at 5 and Q at any p") {
    NumberField Qi(P({1, 0, 1}));
    auto p5 = Qi.decompose(5);
    REQUIRE(p5.size() == 2);
    for (auto& v : p5) CHECK((v.e == 1 && v.f == 1));

    auto Q = NumberField::rationals();
    for (long p : {2, 3, 7}) {
        auto ps = Q.decompose(p);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].e == 1);
        CHECK(ps[0].f == 1);
    }
}

TEST_CASE("fundamental identity across a small corpus") {
    std::vector<Poly> polys{P({0, 1}),     P({1, 0, 1}),    P({-2, 0, 1}),
                            P({-5, 0, 1}), P({8, 1, 0, 1}), P({1, 1, 1}),
                            P({-6, 0, 1}), P({1, 0, 0, 0, 1})};
    for (auto& f : polys) {
        NumberField K(f);
        for (long p : {2, 3, 5, 7, 13}) {
            long total = 0;
            for (auto& v : K.decompose(p)) total += v.local_degree();
            CHECK(total == K.degree());
        }
    }
}

TEST_CASE("local invariants: acceptance criterion values") {
    auto Q = NumberField::rationals();
    auto v2 = Q.decompose(2)[0];
    auto [n2, q2] = local_invariants(v2);
    CHECK(n2 == 3);
    CHECK(q2 == 2);

    NumberField Qi(P({1, 0, 1}));
    auto w = Qi.decompose(2);
    REQUIRE(w.size() == 1);
    auto [n4, q4] = local_invariants(w[0]);
    CHECK(n4 == 4);
    CHECK(q4 == 4);

    for (long p : {3, 5, 7}) {
        auto vp = Q.decompose(p)[0];
        auto [np, qp] = local_invariants(vp);
        CHECK(np == 3);
        CHECK(qp == 1);
    }

    NumberField K3(Poly::cyclotomic(3));
    auto v3 = K3.decompose(3);
    REQUIRE(v3.size() == 1);
    auto [n3, q3] = local_invariants(v3[0]);
    CHECK(n3 == 4);
    CHECK(q3 == 3);
}

TEST_CASE("wang data: Q has t = 2 and 2 oddly even") {
    auto wd = NumberField::rationals().wang_data();
    CHECK(wd.totally_real_intersection);
    REQUIRE(wd.t.has_value());
    CHECK(*wd.t == 2);
    REQUIRE(wd.even_places.size() == 1);
    CHECK(wd.even_places[0].second == EvenClass::oddly);
}

TEST_CASE("wang data: the flagship field") {
    auto wd = wang_field().wang_data();
    CHECK(wd.totally_real_intersection);
    REQUIRE(wd.t.has_value());
    CHECK(*wd.t == 2);
    REQUIRE(wd.even_places.size() == 2);
    CHECK(wd.even_places[0].first == "2a");
    CHECK(wd.even_places[0].second == EvenClass::oddly);
    CHECK(wd.even_places[1].first == "2b");
    CHECK(wd.even_places[1].second == EvenClass::evenly);
    CHECK(wd.oddly_even_places() == std::vector<std::string>{"2a"});
}

TEST_CASE("wang data: Q(i) is not totally real, Q(sqrt 2) has t = 3") {
    CHECK_FALSE(NumberField(P({1, 0, 1})).wang_data().totally_real_intersection);
    CHECK_FALSE(NumberField(P({2, 0, 1})).wang_data().totally_real_intersection);

    auto wd = NumberField(P({-2, 0, 1})).wang_data();
    CHECK(wd.totally_real_intersection);
    CHECK(*wd.t == 3);
}

TEST_CASE("cyclotomic intersection examples") {
    {
        auto ci = NumberField(P({-2, 0, 1})).cyclotomic_intersection(8);
        CHECK(ci.H == std::vector<Int>{1, 7});
        CHECK(ci.d == 2);
    }
    {
        auto Q = NumberField::rationals();
        for (long n : {4, 8, 12}) {
            auto ci = Q.cyclotomic_intersection(n);
            CHECK(ci.H == units_mod(n));
            CHECK((ci.d == 1 || ci.d == 2));
        }
    }
    {
        auto ci = NumberField(P({1, 0, 1})).cyclotomic_intersection(4);
        CHECK(ci.H == std::vector<Int>{1});
        CHECK(ci.d == 4);
    }
    {
        auto ci = NumberField(Poly::cyclotomic(8)).cyclotomic_intersection(8);
        CHECK(ci.H == std::vector<Int>{1});
        CHECK(ci.d == 8);
    }
    {
        auto ci = NumberField(P({2, 0, 1})).cyclotomic_intersection(8);
        CHECK(ci.H == std::vector<Int>{1, 3});
        CHECK(ci.d == 2);
    }
}

TEST_CASE("cyclotomic intersection properties") {
    std::vector<Poly> polys{P({0, 1}), P({1, 0, 1}), P({-2, 0, 1}), P({-3, 0, 1})};
    for (auto& f : polys) {
        NumberField K(f);
        for (long n : {3, 4, 5, 8, 12}) {
            auto ci = K.cyclotomic_intersection(n);
            CHECK(std::find(ci.H.begin(), ci.H.end(), Int(1)) != ci.H.end());
            for (auto& a : ci.H)
                for (auto& b : ci.H) {
                    Int c = mod(a * b, Int(n));
                    CHECK(std::find(ci.H.begin(), ci.H.end(), c) != ci.H.end());
                }
            for (auto& h : ci.H) CHECK((ci.d <= 2 || mod(h - 1, ci.d) == 0));
        }
    }
}

TEST_CASE("splits_completely sieve") {
    NumberField K(P({-2, 0, 1}));  // split iff q = +-1 mod 8
    CHECK(K.splits_completely_mod(7));
    CHECK(K.splits_completely_mod(17));
    CHECK_FALSE(K.splits_completely_mod(3));
    CHECK_FALSE(K.splits_completely_mod(5));
    CHECK_FALSE(K.splits_completely_mod(2));
    CHECK(NumberField::rationals().splits_completely_mod(11));
}

TEST_CASE("norm obstruction catalog") {
    auto Q = NumberField::rationals();
    auto v2 = Q.decompose(2)[0];
    LocalExtQuery full{8, 8, true, true};
    CHECK(norm_obstruction(v2, full, Rat(16)) == NormAnswer::not_norm);
    CHECK(norm_obstruction(v2, full, Rat(256)) == NormAnswer::norm);
    CHECK(norm_obstruction(v2, full, Rat(3)) == NormAnswer::norm);
    LocalExtQuery small{8, 2, false, true};
    CHECK(norm_obstruction(v2, small, Rat(16)) == NormAnswer::norm);
    LocalExtQuery triv{8, 1, true, true};
    CHECK(norm_obstruction(v2, triv, Rat(7)) == NormAnswer::norm);
    LocalExtQuery ram{8, 8, false, true};
    CHECK(norm_obstruction(v2, ram, Rat(16)) == NormAnswer::undecided);
    NumberField Qi(P({1, 0, 1}));
    auto w = Qi.decompose(2)[0];
    CHECK(norm_obstruction(w, full, Rat(16)) == NormAnswer::undecided);
}

TEST_CASE("wang data re-verification invariant") {
    for (auto f : {P({0, 1}), P({-2, 0, 1}), P({8, 1, 0, 1})}) {
        NumberField K(f);
        auto wd = K.wang_data();
        if (!wd.totally_real_intersection) continue;
        long t = *wd.t;
        if (t > 2) CHECK(K.contains_root_of(Poly::eta_min_poly(t)));
        CHECK_FALSE(K.contains_root_of(P({1, 0, 1})));
        CHECK_FALSE(K.contains_root_of(Poly::eta_min_poly(t + 1)));
        CHECK_FALSE(K.contains_root_of(Poly::i_eta_min_poly(t + 1)));
    }
}

TEST_CASE("oddly-even consistency at small s") {
    auto K = wang_field();
    auto wd = K.wang_data();
    for (auto& v : K.decompose(2)) {
        bool oddly = false;
        for (auto& [l, c] : wd.even_places)
            if (l == v.label) oddly = (c == EvenClass::oddly);
        bool has_i_locally = place_has_root(v, P({1, 0, 1})) == TriBool::yes;
        if (oddly) CHECK_FALSE(has_i_locally);
    }
}
