#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torsioncap/collate.hpp"
#include "torsioncap/hondatate.hpp"
#include "torsioncap/localbounds.hpp"

using namespace torsioncap;

namespace {

std::set<Int> to_set(const std::vector<Int>& v) { return std::set<Int>(v.begin(), v.end()); }

std::set<Int> range(long lo, long hi) {
    std::set<Int> s;
    for (long i = lo; i <= hi; ++i) s.emplace(i);
    return s;
}

std::set<Int> ints(std::vector<long> v) { return std::set<Int>(v.begin(), v.end()); }

std::set<Int> unite(std::initializer_list<std::set<Int>> parts) {
    std::set<Int> s;
    for (const auto& p : parts) s.insert(p.begin(), p.end());
    return s;
}

} // namespace

TEST_CASE("prime_to_p_part examples") {
    CHECK(prime_to_p_part(Int(24), Int(2)) == 3);
    CHECK(prime_to_p_part(Int(24), Int(3)) == 8);
    CHECK(prime_to_p_part(Int(7), Int(7)) == 1);
}

TEST_CASE("dimension-1 collation over p = 2, 3, 5") {
    CollationInput in;
    in.dimension = 1;
    for (long p : {2l, 3l, 5l}) {
        auto counts = elliptic_counts(Int(p));
        in.per_prime[Int(p)] = std::set<Int>(counts.begin(), counts.end());
    }
    auto out = admissible_orders(in, global_collation_bound(1, 1));
    CHECK(to_set(out.admissible) == range(1, 6));
}

TEST_CASE("dimension-2 collation over p = 2, 3, 5 gives the surface order list") {
    CollationInput in;
    in.dimension = 2;
    for (long p : {2l, 3l, 5l}) {
        auto census = surface_counts(Int(p));
        in.per_prime[Int(p)] = std::set<Int>(census.counts.begin(), census.counts.end());
    }
    auto out = admissible_orders(in, global_collation_bound(2, 1));
    std::set<Int> expected = unite({range(1, 16), ints({18, 19, 20, 22, 24, 25, 28, 30, 36, 48, 60, 72})});
    CHECK(to_set(out.admissible) == expected);
}

TEST_CASE("dimension-2 collation over p = 2, 3 alone: 2^a * y parameterization") {
    // cap-only inputs: odd torsion bounded by 33 over F_2, prime-to-3 part by 55
    CollationInput in;
    in.dimension = 2;
    Int cap2 = weil_cap(Int(2), 2);  // 33
    Int cap3 = weil_cap(Int(3), 2);  // 55
    std::set<Int> d2, d3;
    for (Int i = 1; i <= cap2; ++i) d2.insert(i);
    for (Int i = 1; i <= cap3; ++i) d3.insert(i);
    in.per_prime[Int(2)] = d2;
    in.per_prime[Int(3)] = d3;
    auto out = admissible_orders(in, global_collation_bound(2, 1));

    // every admissible N has odd part in the 17-element list and 2-power <= 32
    std::set<Int> odd_list = ints({1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27, 29, 31, 33});
    std::set<Int> odd_parts;
    unsigned max_a = 0;
    for (const auto& n : out.admissible) {
        Int odd = prime_to_p_part(n, Int(2));
        odd_parts.insert(odd);
        unsigned a = n % 2 == 0 ? ord_p(n / odd, Int(2)) : 0;
        max_a = std::max(max_a, a);
        CHECK(odd_list.count(odd) == 1);
        CHECK(a <= 5);
    }
    CHECK(odd_parts == odd_list);
    CHECK(max_a == 5);
}

TEST_CASE("witness soundness") {
    CollationInput in;
    in.dimension = 2;
    for (long p : {2l, 3l, 5l}) {
        auto census = surface_counts(Int(p));
        in.per_prime[Int(p)] = std::set<Int>(census.counts.begin(), census.counts.end());
    }
    auto out = admissible_orders(in, Int(100));
    for (const auto& n : out.admissible) {
        REQUIRE(out.witnesses.count(n) == 1);
        for (const auto& [p, w] : out.witnesses.at(n)) {
            CHECK(in.per_prime.at(p).count(w) == 1);
            CHECK(w % prime_to_p_part(n, p) == 0);
        }
    }
}

TEST_CASE("monotonicity and divisor closure") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<long> dist(1, 40);
    for (int trial = 0; trial < 20; ++trial) {
        CollationInput in;
        in.dimension = 1;
        std::set<Int> d2, d3;
        for (int i = 0; i < 6; ++i) d2.insert(Int(dist(gen)));
        for (int i = 0; i < 6; ++i) d3.insert(Int(dist(gen)));
        in.per_prime[Int(2)] = d2;
        in.per_prime[Int(3)] = d3;
        auto base = admissible_orders(in, Int(60));
        auto base_set = to_set(base.admissible);

        for (const auto& n : base.admissible) {
            for (Int d = 1; d <= n; ++d) {
                if (n % d == 0) CHECK(base_set.count(d) == 1);
            }
        }
        CollationInput bigger = in;
        bigger.per_prime[Int(2)].insert(Int(dist(gen) + 40));
        auto grown = admissible_orders(bigger, Int(60));
        auto grown_set = to_set(grown.admissible);
        for (const auto& n : base.admissible) CHECK(grown_set.count(n) == 1);
        CollationInput constrained = in;
        constrained.per_prime[Int(5)] = {Int(dist(gen))};
        auto shrunk = admissible_orders(constrained, Int(60));
        for (const auto& n : shrunk.admissible) CHECK(base_set.count(n) == 1);
    }
}

TEST_CASE("degenerate no-constraint input admits everything") {
    CollationInput in;
    in.dimension = 2;
    Int f33 = 1;
    for (int i = 2; i <= 33; ++i) f33 *= i;
    in.per_prime[Int(2)] = {f33};
    Int f55 = 1;
    for (int i = 2; i <= 55; ++i) f55 *= i;
    in.per_prime[Int(3)] = {f55};
    auto out = admissible_orders(in, Int(30));
    CHECK(out.admissible.size() == 30);
}

TEST_CASE("undecided_report") {
    CandidateList list;
    for (long n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 19, 20, 22,
                   24, 25, 28, 30, 36, 48, 60, 72})
        list.admissible.emplace_back(n);
    std::set<Int> attained;
    for (long n : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12, 16, 18, 19, 20, 24, 36}) attained.emplace(n);
    auto undecided = undecided_report(list, attained);
    std::vector<Int> expected;
    for (long n : {11, 13, 14, 15, 22, 25, 28, 30, 48, 60, 72}) expected.emplace_back(n);
    CHECK(undecided == expected);
    CHECK(undecided.size() == 11);

    std::set<Int> all(list.admissible.begin(), list.admissible.end());
    CHECK(undecided_report(list, all).empty());
    CHECK(undecided_report(list, {}).size() == list.admissible.size());
    CHECK_THROWS_AS(undecided_report(list, {Int(17)}), std::domain_error);
}
