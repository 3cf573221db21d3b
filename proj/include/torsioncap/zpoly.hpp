#pragma once

#include <string>
#include <vector>

#include "torsioncap/intmath.hpp"

namespace torsioncap {

// Dense univariate polynomial over Z. Zero polynomial has empty coefficient
// vector and degree -1. Coefficients are stored constant-term first.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(const Int& c) { if (c != 0) coeffs_ = {c}; }
    explicit ZPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static ZPoly monomial(const Int& c, size_t e);
    static ZPoly x() { return monomial(1, 1); }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Int& operator[](size_t i) const;  // 0 beyond degree
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& lc() const;

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    ZPoly operator*(const Int& s) const;
    bool operator==(const ZPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const ZPoly& o) const { return coeffs_ != o.coeffs_; }

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;

    ZPoly derivative() const;
    // gcd of all coefficients, sign matching the leading coefficient; 0 for zero poly
    Int content() const;
    ZPoly primitive_part() const;  // content removed; leading coefficient > 0

    // f(x + a)
    ZPoly shift(const Int& a) const;
    // f(a*x)
    ZPoly scale_arg(const Int& a) const;

    // Exact division: returns true and sets q if divisor*q == *this over Z.
    bool exact_divide(const ZPoly& divisor, ZPoly& q) const;

    // Pseudo remainder: lc(divisor)^(deg-deg_d+1) * this ≡ rem (mod divisor).
    ZPoly pseudo_rem(const ZPoly& divisor) const;

    std::string to_string(const std::string& var = "x") const;

    void normalize();

private:
    std::vector<Int> coeffs_;
};

// Modular gcd with CRT and exact-division verification. Result is primitive
// with positive leading coefficient (content of inputs folded back in).
ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b);

// Resultant via subresultant PRS (Cohen alg. 3.3.7 bookkeeping).
Int zpoly_resultant(const ZPoly& a, const ZPoly& b);

// f / gcd(f, f'), primitive, positive leading coefficient.
ZPoly zpoly_squarefree_part(const ZPoly& f);

// Squarefree decomposition (Yun): list of (part, multiplicity) with parts
// primitive, pairwise coprime, multiplicities increasing.
std::vector<std::pair<ZPoly, unsigned>> zpoly_squarefree_decomposition(const ZPoly& f);

} // namespace torsioncap
