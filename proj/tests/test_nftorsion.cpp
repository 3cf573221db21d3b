#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "torsioncap/errors.hpp"
#include "torsioncap/modcurves.hpp"
#include "torsioncap/nftorsion.hpp"

using namespace torsioncap;

namespace {

std::mt19937_64& rng() {
    static std::mt19937_64 gen(777);
    return gen;
}

ZPoly zp(std::vector<long> cs) {
    std::vector<Int> v(cs.begin(), cs.end());
    return ZPoly(std::move(v));
}

NFElem elem(const NumberFieldPtr& K, std::vector<long> cs) {
    std::vector<Rat> v(cs.begin(), cs.end());
    return NFElem(K, QPoly(std::move(v)));
}

// find an affine point on the curve over F_q by sweeping x
std::optional<CurvePoint<FqElem>> find_point(const WeierstrassCurve<FqElem>& C, const FqContextPtr& F,
                                             std::uint64_t start) {
    std::uint64_t q = F->q();
    for (std::uint64_t i = 0; i < q; ++i) {
        FqElem x = FqElem::by_index(F, (start + i) % q);
        for (std::uint64_t yi = 0; yi < q; ++yi) {
            FqElem y = FqElem::by_index(F, yi);
            auto P = CurvePoint<FqElem>::affine(x, y);
            if (on_curve(C, P)) return P;
        }
    }
    return std::nullopt;
}

} // namespace

TEST_CASE("group law identity, inverse, associativity on random curves") {
    auto F = FqContext::create(101, 1);
    std::uniform_int_distribution<std::uint64_t> dist(0, 100);
    int curves = 0;
    while (curves < 20) {
        WeierstrassCurve<FqElem> C{FqElem::from_int(F, dist(rng())), FqElem::from_int(F, dist(rng())),
                                   FqElem::from_int(F, dist(rng())), FqElem::from_int(F, dist(rng())),
                                   FqElem::from_int(F, dist(rng()))};
        if (C.discriminant().is_zero()) continue;
        ++curves;
        auto P = find_point(C, F, dist(rng()));
        auto Q = find_point(C, F, dist(rng()));
        auto R = find_point(C, F, dist(rng()));
        REQUIRE(P);
        REQUIRE(Q);
        REQUIRE(R);
        auto O = CurvePoint<FqElem>::at_infinity(C.a1);
        CHECK(point_add(C, *P, O) == *P);
        CHECK(point_add(C, *P, point_neg(C, *P)).infinity);
        auto lhs = point_add(C, point_add(C, *P, *Q), *R);
        auto rhs = point_add(C, *P, point_add(C, *Q, *R));
        CHECK(lhs == rhs);
        CHECK(on_curve(C, lhs));
    }
}

TEST_CASE("count_points examples and Hasse envelope") {
    // y^2 + y = x^3 over F_2 has exactly 3 points
    auto F2 = FqContext::create(2, 1);
    FiniteFieldCurve E{F2, FqElem::zero(F2), FqElem::zero(F2), FqElem::one(F2),
                       FqElem::zero(F2), FqElem::zero(F2)};
    CHECK(count_points(E) == 3);

    for (std::uint64_t p : {3ull, 5ull, 7ull, 9ull, 11ull, 13ull, 25ull, 27ull}) {
        std::uint64_t q = p;
        unsigned k = 1;
        std::uint64_t base = p;
        if (p == 9) { base = 3; k = 2; }
        if (p == 25) { base = 5; k = 2; }
        if (p == 27) { base = 3; k = 3; }
        auto F = FqContext::create(base, k);
        std::uniform_int_distribution<std::uint64_t> dist(0, q - 1);
        int tried = 0;
        while (tried < 5) {
            FiniteFieldCurve C{F, FqElem::by_index(F, dist(rng())), FqElem::by_index(F, dist(rng())),
                               FqElem::by_index(F, dist(rng())), FqElem::by_index(F, dist(rng())),
                               FqElem::by_index(F, dist(rng()))};
            WeierstrassCurve<FqElem> W{C.a1, C.a2, C.a3, C.a4, C.a6};
            if (W.discriminant().is_zero()) continue;
            ++tried;
            Int n = count_points(C);
            Int qq(static_cast<unsigned long>(q));
            // |n - (q+1)| <= 2 sqrt(q), squared comparison
            Int diff = n - (qq + 1);
            CHECK(diff * diff <= 4 * qq);
        }
    }
    // singular model rejected
    FiniteFieldCurve S{F2, FqElem::zero(F2), FqElem::zero(F2), FqElem::zero(F2),
                       FqElem::zero(F2), FqElem::zero(F2)};
    CHECK_THROWS_AS(count_points(S), std::domain_error);
}

TEST_CASE("base change count follows the Weil trace recursion") {
    // for E/F_2, #E(F_4) = 4 + 1 - (a^2 - 2*2) with a = 2 + 1 - #E(F_2)
    auto F2 = FqContext::create(2, 1);
    auto F4 = FqContext::create(2, 2);
    std::uniform_int_distribution<std::uint64_t> dist(0, 1);
    int tried = 0;
    while (tried < 8) {
        std::uint64_t c1 = dist(rng()), c2 = dist(rng()), c3 = dist(rng()), c4 = dist(rng()),
                      c6 = dist(rng());
        FiniteFieldCurve E2{F2, FqElem::from_int(F2, c1), FqElem::from_int(F2, c2),
                            FqElem::from_int(F2, c3), FqElem::from_int(F2, c4),
                            FqElem::from_int(F2, c6)};
        WeierstrassCurve<FqElem> W{E2.a1, E2.a2, E2.a3, E2.a4, E2.a6};
        if (W.discriminant().is_zero()) continue;
        ++tried;
        Int n2 = count_points(E2);
        FiniteFieldCurve E4{F4, FqElem::from_int(F4, c1), FqElem::from_int(F4, c2),
                            FqElem::from_int(F4, c3), FqElem::from_int(F4, c4),
                            FqElem::from_int(F4, c6)};
        Int n4 = count_points(E4);
        Int a = 2 + 1 - n2;
        CHECK(n4 == 4 + 1 - (a * a - 4));
    }
}

TEST_CASE("torsion subgroups of the three cubic curves") {
    {
        auto K = NumberField::create(zp({1, -2, -1, 1}), "d");
        auto g = torsion_subgroup(K, elem(K, {-1, 2}), elem(K, {0, -1, 1}));
        CHECK(g.n1 == 14);
        CHECK(g.n2 == 1);
    }
    {
        auto K = NumberField::create(zp({1, 12, -15, 1}), "d");
        auto g = torsion_subgroup(K, elem(K, {-1, -12, 14}), elem(K, {0, -1, 1}));
        CHECK(g.n1 == 14);
        CHECK(g.n2 == 1);
    }
    {
        auto K = NumberField::create(zp({1, 0, -3, 1}), "f");
        auto g = torsion_subgroup(K, elem(K, {-5, -1, 13}), elem(K, {-1, 0, 2}));
        CHECK(g.n1 == 9);
        CHECK(g.n2 == 1);
        CHECK(g.marked_point_order == 9);
    }
}

TEST_CASE("on the 14-torsion curve, (0,0) has order 7 and a 2-torsion point exists") {
    auto K = NumberField::create(zp({1, -2, -1, 1}), "d");
    NFElem b = elem(K, {-1, 2}), c = elem(K, {0, -1, 1});
    WeierstrassCurve<NFElem> C = kubert_curve(b, c);
    auto P0 = CurvePoint<NFElem>::affine(NFElem::from_rat(K, Rat(0)), NFElem::from_rat(K, Rat(0)));
    CHECK(point_order(C, P0, 20) == 7);
    CHECK(scalar_mul(C, 7, P0).infinity);
    // the missing factor of 2 comes from a rational 2-division root
    std::vector<NFElem> cubic{C.b6(), C.b4() + C.b4(), C.b2(), NFElem::from_rat(K, Rat(4))};
    auto roots = nf_roots(KPoly(K, std::move(cubic)));
    CHECK(roots.size() == 1);
    NFElem x = roots[0];
    NFElem y = -(C.a1 * x + C.a3) * NFElem::from_rat(K, make_rat(Int(1), Int(2)));
    auto Q = CurvePoint<NFElem>::affine(x, y);
    CHECK(on_curve(C, Q));
    CHECK(point_add(C, Q, Q).infinity);
}

TEST_CASE("reduction compatibility: the marked point order divides every good count") {
    auto K = NumberField::create(zp({1, -2, -1, 1}), "d");
    NFElem b = elem(K, {-1, 2}), c = elem(K, {0, -1, 1});
    WeierstrassCurve<NFElem> C = kubert_curve(b, c);
    auto P0 = CurvePoint<NFElem>::affine(NFElem::from_rat(K, Rat(0)), NFElem::from_rat(K, Rat(0)));
    long ord = point_order(C, P0, 50);
    REQUIRE(ord == 7);
    for (const auto& rc : reduction_counts(K, b, c, 60, 4)) {
        if (rc.p % 7 == 0) continue;  // the 7-part is only constrained away from 7
        CHECK(rc.count % 7 == 0);
    }
}

TEST_CASE("order-5 locus ties into the group law over Q") {
    // F_5(b,c) = b - c vanishes at (1,1); over Q the curve y^2 - y = x^3 - x^2
    // has (0,0) of exact order 5 and torsion Z/5
    auto K = NumberField::create(zp({-1, 1}), "t");  // degree-1 field
    NFElem b = elem(K, {1}), c = elem(K, {1});
    CHECK(primitive_order_relation(5).eval(Rat(1), Rat(1)) == 0);
    auto g = torsion_subgroup(K, b, c);
    CHECK(g.n1 == 5);
    CHECK(g.n2 == 1);
    CHECK(g.marked_point_order == 5);
}

TEST_CASE("non-torsion marked point yields an undecided error") {
    // (b,c) = (1,3) gives a curve where (0,0) is not torsion
    auto K = NumberField::create(zp({-1, 1}), "t");
    NFElem b = elem(K, {1}), c = elem(K, {3});
    CHECK_THROWS_AS(torsion_subgroup(K, b, c), undecided_error);
}
