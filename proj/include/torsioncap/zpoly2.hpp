#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "torsioncap/intmath.hpp"
#include "torsioncap/zpoly.hpp"

namespace torsioncap {

// Sparse polynomial in two fixed variables over Z, keyed by exponent pair.
// Variable names are cosmetic (rendering only); arithmetic assumes operands
// share the same variable pair.
class ZPoly2 {
public:
    using Key = std::pair<unsigned, unsigned>;  // (exponent of first var, of second)

    ZPoly2() = default;
    explicit ZPoly2(const Int& c) { if (c != 0) terms_[{0, 0}] = c; }

    static ZPoly2 variable(int which);  // 0 -> first, 1 -> second
    static ZPoly2 monomial(const Int& c, unsigned e0, unsigned e1);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, Int>& terms() const { return terms_; }
    long degree(int var) const;      // -1 for zero
    long total_degree() const;

    ZPoly2 operator-() const;
    ZPoly2 operator+(const ZPoly2& o) const;
    ZPoly2 operator-(const ZPoly2& o) const;
    ZPoly2 operator*(const ZPoly2& o) const;
    ZPoly2 operator*(const Int& s) const;
    bool operator==(const ZPoly2& o) const { return terms_ == o.terms_; }
    bool operator!=(const ZPoly2& o) const { return terms_ != o.terms_; }

    ZPoly2 pow(unsigned e) const;

    Int content() const;
    ZPoly2 primitive_part() const;  // content and sign removed (leading term positive in lex order)

    // substitute var -> value, giving a univariate ZPoly in the other variable
    ZPoly eval_var(int var, const Int& value) const;
    Int eval(const Int& v0, const Int& v1) const;
    Rat eval(const Rat& v0, const Rat& v1) const;

    // coefficients as polynomials in the other variable, indexed by var-exponent
    std::vector<ZPoly> coeffs_in(int var) const;
    static ZPoly2 from_coeffs_in(int var, const std::vector<ZPoly>& cs);

    // substitute first variable -> (u - lambda * second variable), u becoming
    // the new first variable (shear used for elimination retries)
    ZPoly2 shear_first(const Int& lambda) const;

    // exact division by a bivariate divisor; false if not divisible
    bool exact_divide(const ZPoly2& divisor, ZPoly2& q) const;

    // divide out the largest power of the first/second variable
    ZPoly2 strip_var_power(int var, unsigned* removed = nullptr) const;

    std::string to_string(const std::string& v0, const std::string& v1) const;

private:
    std::map<Key, Int> terms_;
    void prune();
};

// resultant eliminating the given variable; result univariate in the other.
ZPoly resultant_bivariate(const ZPoly2& f, const ZPoly2& g, int eliminate_var);

// the full subresultant chain element of degree 1 (if present) when
// eliminating `eliminate_var`: returns s1, s0 with chain element s1*x + s0,
// where s1, s0 are polynomials in the surviving variable. Returns false if
// the chain skips degree 1.
bool subresultant_degree1(const ZPoly2& f, const ZPoly2& g, int eliminate_var,
                          ZPoly& s1, ZPoly& s0);

// gcd of bivariate polynomials (used for excision bookkeeping); computed via
// primitive-part/content split in the chosen main variable.
ZPoly2 zpoly2_gcd(const ZPoly2& f, const ZPoly2& g);

// certified squarefree test: a squarefree specialization along a random line
// certifies bivariate squarefreeness (repeated factors survive every line)
bool zpoly2_is_squarefree(const ZPoly2& f);

} // namespace torsioncap
