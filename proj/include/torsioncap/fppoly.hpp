#pragma once

#include <cstdint>
#include <vector>

#include "torsioncap/intmath.hpp"

namespace torsioncap {

class ZPoly;

// Dense univariate polynomial over F_p, p an odd prime < 2^62.
class FpPoly {
public:
    FpPoly() : p_(3) {}
    explicit FpPoly(std::uint64_t p) : p_(p) {}
    FpPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) { normalize(); }

    static FpPoly from_zpoly(const ZPoly& f, std::uint64_t p);
    static FpPoly x(std::uint64_t p);

    std::uint64_t p() const { return p_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::uint64_t operator[](size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    std::uint64_t lc() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    const std::vector<std::uint64_t>& coeffs() const { return coeffs_; }

    FpPoly operator+(const FpPoly& o) const;
    FpPoly operator-(const FpPoly& o) const;
    FpPoly operator*(const FpPoly& o) const;
    FpPoly operator*(std::uint64_t s) const;
    bool operator==(const FpPoly& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }

    FpPoly monic() const;
    FpPoly derivative() const;
    std::uint64_t eval(std::uint64_t x) const;

    void normalize();

private:
    std::uint64_t p_;
    std::vector<std::uint64_t> coeffs_;
};

// division with remainder: a = q*b + r
void fp_divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fp_rem(const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(FpPoly a, FpPoly b);  // monic gcd
FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod);
bool fp_is_squarefree(const FpPoly& f);

// Full factorization into monic irreducibles (with multiplicity), deterministic:
// the equal-degree splitting uses an RNG seeded from (p, f).
std::vector<std::pair<FpPoly, unsigned>> fp_factor(const FpPoly& f);

// Distinct roots of f in F_p.
std::vector<std::uint64_t> fp_roots(const FpPoly& f);

bool fp_is_irreducible(const FpPoly& f);

} // namespace torsioncap
