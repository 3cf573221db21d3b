#pragma once

#include <memory>
#include <string>
#include <vector>

#include "torsioncap/qpoly.hpp"

namespace torsioncap {

// Q[t]/(f) for monic irreducible integer f. Irreducibility is certified at
// construction by full factorization; reducible moduli are rejected.
class NumberField {
public:
    static std::shared_ptr<const NumberField> create(const ZPoly& minpoly,
                                                     const std::string& gen_name = "t");
    // for moduli that are fresh outputs of the factorizer
    static std::shared_ptr<const NumberField> create_certified(const ZPoly& minpoly,
                                                               const std::string& gen_name = "t");

    const ZPoly& minpoly() const { return minpoly_; }
    const QPoly& minpoly_q() const { return minpoly_q_; }
    const std::string& gen_name() const { return gen_name_; }
    unsigned degree() const { return degree_; }

private:
    NumberField(ZPoly mp, std::string gen);
    ZPoly minpoly_;
    QPoly minpoly_q_;
    std::string gen_name_;
    unsigned degree_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

class NFElem {
public:
    NFElem() = default;
    NFElem(NumberFieldPtr K, QPoly rep);
    static NFElem from_rat(NumberFieldPtr K, const Rat& r) { return NFElem(std::move(K), QPoly(r)); }
    static NFElem generator(NumberFieldPtr K) { return NFElem(std::move(K), QPoly::x()); }

    const NumberFieldPtr& field() const { return K_; }
    const QPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    NFElem operator-() const;
    NFElem operator+(const NFElem& o) const;
    NFElem operator-(const NFElem& o) const;
    NFElem operator*(const NFElem& o) const;
    NFElem inverse() const;  // throws std::domain_error on zero
    NFElem operator/(const NFElem& o) const { return *this * o.inverse(); }
    bool operator==(const NFElem& o) const { return rep_ == o.rep_; }
    bool operator!=(const NFElem& o) const { return rep_ != o.rep_; }

    NFElem pow(unsigned long e) const;

    std::string to_string() const;

private:
    NumberFieldPtr K_;
    QPoly rep_;
};

// Univariate polynomial over a number field, dense, constant term first.
class KPoly {
public:
    KPoly() = default;
    KPoly(NumberFieldPtr K, std::vector<NFElem> coeffs);
    static KPoly from_qpoly(NumberFieldPtr K, const QPoly& f);

    const NumberFieldPtr& field() const { return K_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    NFElem operator[](size_t i) const;  // by value; zero beyond the degree
    const std::vector<NFElem>& coeffs() const { return coeffs_; }
    const NFElem& lc() const;

    KPoly operator-() const;
    KPoly operator+(const KPoly& o) const;
    KPoly operator-(const KPoly& o) const;
    KPoly operator*(const KPoly& o) const;
    KPoly operator*(const NFElem& s) const;
    bool operator==(const KPoly& o) const;

    NFElem eval(const NFElem& x) const;
    KPoly derivative() const;
    KPoly monic() const;

    // substitute x -> x + a (a in K)
    KPoly shift(const NFElem& a) const;

    void normalize();

private:
    NumberFieldPtr K_;
    std::vector<NFElem> coeffs_;
};

void kpoly_divrem(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r);
KPoly kpoly_gcd(const KPoly& a, const KPoly& b);  // monic

// Trager: factorization into monic irreducibles over K with multiplicity.
std::vector<std::pair<KPoly, unsigned>> factor_over_K(const KPoly& g);

// Roots of g lying in K, with multiplicity, verified by exact substitution.
// Deterministic order (by degree/lex of the representative).
std::vector<NFElem> nf_roots(const KPoly& g);

bool nfelem_less(const NFElem& a, const NFElem& b);

} // namespace torsioncap
