#pragma once

#include <string>
#include <vector>

#include "torsioncap/intmath.hpp"
#include "torsioncap/zpoly.hpp"

namespace torsioncap {

// Dense univariate polynomial over Q, constant term first.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(const Rat& c) { if (c != 0) coeffs_ = {c}; }
    explicit QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
    explicit QPoly(const ZPoly& f);

    static QPoly monomial(const Rat& c, size_t e);
    static QPoly x() { return monomial(Rat(1), 1); }

    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const Rat& operator[](size_t i) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& lc() const;
    bool is_monic() const { return !is_zero() && lc() == 1; }

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly operator*(const Rat& s) const;
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return coeffs_ != o.coeffs_; }

    Rat eval(const Rat& x) const;
    QPoly derivative() const;
    QPoly monic() const;

    // Clear denominators: returns primitive ZPoly g and unit u in Q* with *this == u*g.
    std::pair<ZPoly, Rat> to_primitive() const;

    std::string to_string(const std::string& var = "x") const;

    void normalize();

private:
    std::vector<Rat> coeffs_;
};

void qpoly_divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
QPoly qpoly_gcd(const QPoly& a, const QPoly& b);  // monic

// deterministic total order: by degree, then coefficients from the leading end
bool qpoly_less(const QPoly& a, const QPoly& b);

struct RationalFactorization {
    Rat unit;  // leading unit: product of factors^mult times unit == input
    std::vector<std::pair<QPoly, unsigned>> factors;  // monic irreducible, sorted
};

// Factorization over Q: squarefree decomposition, factorization mod a chosen
// odd prime, Hensel lifting to a Mignotte-style bound, subset recombination.
// Throws std::domain_error on the zero polynomial.
RationalFactorization factor_rational_poly(const QPoly& f);

// Convenience: irreducible factors of a primitive integer polynomial (no unit),
// each primitive with positive leading coefficient, with multiplicity.
std::vector<std::pair<ZPoly, unsigned>> factor_zpoly(const ZPoly& f);

bool is_irreducible_over_q(const ZPoly& f);

QPoly qpoly_squarefree_part(const QPoly& f);

} // namespace torsioncap
