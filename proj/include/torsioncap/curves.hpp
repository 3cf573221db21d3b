#pragma once

#include <array>
#include <stdexcept>

#include "torsioncap/finitefield.hpp"
#include "torsioncap/intmath.hpp"
#include "torsioncap/numberfield.hpp"

namespace torsioncap {

// zero/one with the right field handle, per coefficient type
inline Rat field_zero(const Rat&) { return Rat(0); }
inline Rat field_one(const Rat&) { return Rat(1); }
inline NFElem field_zero(const NFElem& e) { return NFElem::from_rat(e.field(), Rat(0)); }
inline NFElem field_one(const NFElem& e) { return NFElem::from_rat(e.field(), Rat(1)); }
inline FqElem field_zero(const FqElem& e) { return FqElem::zero(e.context()); }
inline FqElem field_one(const FqElem& e) { return FqElem::one(e.context()); }

inline bool field_is_zero(const Rat& e) { return e == 0; }
inline bool field_is_zero(const NFElem& e) { return e.is_zero(); }
inline bool field_is_zero(const FqElem& e) { return e.is_zero(); }

inline Rat field_inverse(const Rat& e) { return 1 / e; }
inline NFElem field_inverse(const NFElem& e) { return e.inverse(); }
inline FqElem field_inverse(const FqElem& e) { return e.inverse(); }

// long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
template <class E>
struct WeierstrassCurve {
    E a1, a2, a3, a4, a6;

    E b2() const { return a1 * a1 + scaled(a2, 4); }
    E b4() const { return scaled(a4, 2) + a1 * a3; }
    E b6() const { return a3 * a3 + scaled(a6, 4); }
    E b8() const {
        return a1 * a1 * a6 + scaled(a2 * a6, 4) - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    }
    E c4() const { return b2() * b2() - scaled(b4(), 24); }
    E c6() const { return -(b2() * b2() * b2()) + scaled(b2() * b4(), 36) - scaled(b6(), 216); }
    E discriminant() const {
        E B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2 * B8) - scaled(B4 * B4 * B4, 8) - scaled(B6 * B6, 27) +
               scaled(B2 * B4 * B6, 9);
    }

    static E scaled(const E& v, long n) {
        // n*v via repeated doubling (works in any characteristic)
        E acc = field_zero(v);
        E base = n < 0 ? -v : v;
        unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
        while (m) {
            if (m & 1) acc = acc + base;
            base = base + base;
            m >>= 1;
        }
        return acc;
    }
};

// Kubert normal form y^2 + (1-c)xy - by = x^3 - bx^2 with marked point (0,0)
template <class E>
WeierstrassCurve<E> kubert_curve(const E& b, const E& c) {
    E one = field_one(b);
    E zero = field_zero(b);
    return WeierstrassCurve<E>{one - c, -b, -b, zero, zero};
}

template <class E>
struct CurvePoint {
    bool infinity = true;
    E x, y;

    static CurvePoint at_infinity(const E& like) {
        CurvePoint P;
        P.infinity = true;
        P.x = field_zero(like);
        P.y = field_zero(like);
        return P;
    }
    static CurvePoint affine(const E& x, const E& y) {
        CurvePoint P;
        P.infinity = false;
        P.x = x;
        P.y = y;
        return P;
    }
    bool operator==(const CurvePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
};

template <class E>
bool on_curve(const WeierstrassCurve<E>& C, const CurvePoint<E>& P) {
    if (P.infinity) return true;
    E lhs = P.y * P.y + C.a1 * P.x * P.y + C.a3 * P.y;
    E rhs = P.x * P.x * P.x + C.a2 * P.x * P.x + C.a4 * P.x + C.a6;
    return field_is_zero(lhs - rhs);
}

template <class E>
CurvePoint<E> point_neg(const WeierstrassCurve<E>& C, const CurvePoint<E>& P) {
    if (P.infinity) return P;
    return CurvePoint<E>::affine(P.x, -P.y - C.a1 * P.x - C.a3);
}

template <class E>
CurvePoint<E> point_add(const WeierstrassCurve<E>& C, const CurvePoint<E>& P,
                        const CurvePoint<E>& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    E lambda = field_zero(P.x);
    if (P.x == Q.x) {
        // either inverse points or a doubling
        CurvePoint<E> negQ = point_neg(C, Q);
        if (P == negQ) return CurvePoint<E>::at_infinity(P.x);
        E denom = P.y + P.y + C.a1 * P.x + C.a3;
        if (field_is_zero(denom)) return CurvePoint<E>::at_infinity(P.x);
        E num = WeierstrassCurve<E>::scaled(P.x * P.x, 3) +
                WeierstrassCurve<E>::scaled(C.a2 * P.x, 2) + C.a4 - C.a1 * P.y;
        lambda = num * field_inverse(denom);
    } else {
        lambda = (Q.y - P.y) * field_inverse(Q.x - P.x);
    }
    E nu = P.y - lambda * P.x;
    E x3 = lambda * lambda + C.a1 * lambda - C.a2 - P.x - Q.x;
    E y3 = -(lambda + C.a1) * x3 - nu - C.a3;
    return CurvePoint<E>::affine(x3, y3);
}

template <class E>
CurvePoint<E> scalar_mul(const WeierstrassCurve<E>& C, long n, const CurvePoint<E>& P) {
    if (n == 0) return CurvePoint<E>::at_infinity(C.a1);
    CurvePoint<E> base = n < 0 ? point_neg(C, P) : P;
    unsigned long m = static_cast<unsigned long>(n < 0 ? -n : n);
    CurvePoint<E> acc = CurvePoint<E>::at_infinity(C.a1);
    while (m) {
        if (m & 1) acc = point_add(C, acc, base);
        base = point_add(C, base, base);
        m >>= 1;
    }
    return acc;
}

// exact order of a point, assuming it is torsion with order <= cap;
// returns 0 if no order <= cap is found
template <class E>
long point_order(const WeierstrassCurve<E>& C, const CurvePoint<E>& P, long cap) {
    CurvePoint<E> acc = P;
    for (long n = 1; n <= cap; ++n) {
        if (acc.infinity) return n;
        acc = point_add(C, acc, P);
    }
    return 0;
}

} // namespace torsioncap
