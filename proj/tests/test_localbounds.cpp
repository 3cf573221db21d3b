#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "torsioncap/localbounds.hpp"

using namespace torsioncap;

TEST_CASE("weil_cap pinned values") {
    CHECK(weil_cap(Int(2), 1) == 5);
    CHECK(weil_cap(Int(3), 1) == 7);
    CHECK(weil_cap(Int(5), 1) == 10);
    CHECK(weil_cap(Int(2), 2) == 33);
    CHECK(weil_cap(Int(3), 2) == 55);
    CHECK(weil_cap(Int(4), 1) == 9);  // (1+2)^2 exactly
    CHECK_THROWS_AS(weil_cap(Int(6), 1), std::domain_error);
}

TEST_CASE("weil_cap floor contract") {
    // res = A + isqrt(B^2 q) must satisfy (res-A)^2 <= B^2 q < (res-A+1)^2
    for (long q : {2, 3, 5, 7, 9, 11, 13, 25, 27}) {
        for (unsigned d = 1; d <= 3; ++d) {
            Int res = weil_cap(Int(q), d);
            Int A = 0, B = 0;
            for (unsigned long k = 0; k <= 2 * d; ++k) {
                Int term = binomial(2 * d, k) * pow_int(Int(q), k / 2);
                if (k % 2 == 0) A += term;
                else B += term;
            }
            Int s = res - A;
            CHECK(s * s <= B * B * q);
            CHECK(B * B * q < (s + 1) * (s + 1));
        }
    }
}

TEST_CASE("p_power_floor examples") {
    CHECK(p_power_floor(Int(2), 1, Int(2)) == 4);
    CHECK(p_power_floor(Int(7), 1, Int(7)) == 7);
    CHECK(p_power_floor(Int(2), 2, Int(2)) == 32);
}

TEST_CASE("gl_order examples and oracle") {
    CHECK(gl_order(2, Int(3)) == 48);
    CHECK(gl_order(2, Int(3)) == gl_order_bruteforce(2, 3));
    CHECK(gl_order(2, Int(4)) == 96);
    CHECK(gl_order(2, Int(4)) == gl_order_bruteforce(2, 4));
    for (unsigned N = 2; N <= 30; ++N) {
        CHECK(gl_order(1, Int(N)) == euler_phi(Int(N)));
    }
}

TEST_CASE("gl_order multiplicativity and brute force") {
    for (unsigned D = 1; D <= 3; ++D) {
        for (unsigned M = 2; M <= 20; ++M) {
            for (unsigned N = 2; N <= 20; ++N) {
                if (std::gcd(M, N) != 1) continue;
                CHECK(gl_order(D, Int(M * N)) == gl_order(D, Int(M)) * gl_order(D, Int(N)));
            }
        }
    }
    for (unsigned N = 2; N <= 8; ++N) {
        CHECK(gl_order(2, Int(N)) == gl_order_bruteforce(2, N));
    }
    CHECK(gl_order(3, Int(3)) == gl_order_bruteforce(3, 3));
    CHECK(gl_order(3, Int(4)) == gl_order_bruteforce(3, 4));
}

TEST_CASE("m_p examples") {
    CHECK(m_p(Int(7), 2) == 0);  // p > 2d+1 forces 0
    CHECK(m_p(Int(2), 2) == 4);
    CHECK(m_p(Int(3), 2) == 1);
}

TEST_CASE("m_p closed-form search equals brute force (small slice)") {
    for (long p : {2l, 3l, 5l, 7l, 11l, 13l}) {
        for (unsigned D = 1; D <= 4; ++D) {
            CHECK(m_p(Int(p), D) == m_p_bruteforce(Int(p), D, 200));
        }
    }
}

TEST_CASE("m_p vanishes for p > 2d+1") {
    for (long p : {5l, 7l, 11l, 13l, 17l}) {
        for (unsigned d = 1; 2 * d + 1 < static_cast<unsigned>(p) && d <= 5; ++d) {
            CHECK(m_p(Int(p), 2 * d) == 0);
        }
    }
}

TEST_CASE("local_bound examples") {
    {
        BoundReport r = local_bound({Int(7), 1, 1, 1});
        CHECK(r.prime_to_p_bound == 13);
        CHECK(r.total == 91);  // 13 * 7 * 7^0
    }
    {
        BoundReport r = local_bound({Int(2), 1, 1, 1});
        CHECK(r.total == 10240);  // 5 * 4 * 2^(1+8)
    }
    {
        // recomputed exactly: [(1+sqrt 13)^2] = [14 + 2 sqrt 13] = 21
        BoundReport r = local_bound({Int(13), 1, 1, 1});
        CHECK(r.prime_to_p_bound == 21);
        CHECK(r.mp_value == 0);
        CHECK(r.formal_group_factor == 1);
        CHECK(r.total == 21 * 13);
    }
}

TEST_CASE("local_bound factor structure") {
    for (long p : {2l, 3l, 5l, 7l}) {
        for (unsigned d = 1; d <= 2; ++d) {
            BoundReport r = local_bound({Int(p), 1, 2, d});
            CHECK(r.prime_to_p_bound >= 1);
            CHECK(r.formal_group_factor >= 1);
            CHECK(r.component_factor >= 1);
            CHECK(r.special_fibre_factor >= 1);
            CHECK(r.total == r.prime_to_p_bound * r.formal_group_factor * r.component_factor *
                                 r.special_fibre_factor);
            CHECK(r.total / (r.formal_group_factor * r.component_factor * r.special_fibre_factor) ==
                  r.prime_to_p_bound);
        }
    }
}

TEST_CASE("additive prime support") {
    CHECK(additive_prime_support(1) == std::set<Int>{Int(2), Int(3)});
    CHECK(additive_prime_support(2) == std::set<Int>{Int(2), Int(3), Int(5)});
    CHECK(additive_prime_support(3) == std::set<Int>{Int(2), Int(3), Int(5), Int(7)});
}

TEST_CASE("global collation bound") {
    CHECK(global_collation_bound(2, 1) == 1815);
    CHECK(global_collation_bound(1, 1) == 35);  // 5 * 7
    // first factor for n = 3, d = 1: [(1+2^(3/2))^2] = 14
    CHECK(floor_pow_one_plus_sqrt(pow_int(Int(2), 3), 2) == 14);
}

TEST_CASE("max prime order bound") {
    CHECK(max_prime_order_bound(1, 5) == 43);
}

TEST_CASE("silverberg comparison bound") {
    SilverbergBound b = silverberg_bound_log10(2, 1);
    CHECK(b.mantissa == "4.0262");
    CHECK(b.exponent == 1275357349);
    // exponent grows linearly in n at fixed d (up to floor effects)
    SilverbergBound s1 = silverberg_bound_log10(1, 1);
    SilverbergBound s2 = silverberg_bound_log10(1, 2);
    SilverbergBound s3 = silverberg_bound_log10(1, 3);
    Int d21 = s2.exponent - s1.exponent;
    Int d32 = s3.exponent - s2.exponent;
    Int diff = d32 - d21;
    if (diff < 0) diff = -diff;
    CHECK(diff <= 1);
}

TEST_CASE("cm exponent bound") {
    CHECK(cm_exponent_bound(1, 6, false) == 18);  // phi(18) = 6; phi(e) > 6 for e > 18
    CHECK(cm_max_prime_order(5, 6, false) == 31);
    CHECK(cm_exponent_bound(1, 2, true) == 2);
    CHECK_THROWS_AS(cm_exponent_bound(1, 5, false), std::domain_error);
}
