#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "torsioncap/fppoly.hpp"

namespace torsioncap {

// F_{p^k} as F_p[t]/(modulus); supports char 2 as well (FpPoly arithmetic only
// uses generic mod-p operations).
class FqContext {
public:
    // deterministic modulus: lexicographically smallest monic irreducible of degree k
    static std::shared_ptr<const FqContext> create(std::uint64_t p, unsigned k);
    // residue field cut out by an explicit irreducible factor (e.g. of a number
    // field's minimal polynomial mod p)
    static std::shared_ptr<const FqContext> with_modulus(FpPoly modulus);

    std::uint64_t p() const { return p_; }
    unsigned k() const { return k_; }
    std::uint64_t q() const { return q_; }
    const FpPoly& modulus() const { return modulus_; }

private:
    FqContext(std::uint64_t p, unsigned k, FpPoly m);
    std::uint64_t p_;
    unsigned k_;
    std::uint64_t q_;
    FpPoly modulus_;
};

using FqContextPtr = std::shared_ptr<const FqContext>;

class FqElem {
public:
    FqElem() = default;
    FqElem(FqContextPtr F, FpPoly rep);

    static FqElem zero(FqContextPtr F) {
        std::uint64_t p = F->p();
        return FqElem(std::move(F), FpPoly(p));
    }
    static FqElem one(FqContextPtr F);
    static FqElem from_int(FqContextPtr F, std::uint64_t v);
    static FqElem generator(FqContextPtr F);
    // element with index i in [0, q): base-p digits of i are the coefficients
    static FqElem by_index(FqContextPtr F, std::uint64_t i);

    const FqContextPtr& context() const { return F_; }
    const FpPoly& rep() const { return rep_; }
    bool is_zero() const { return rep_.is_zero(); }

    FqElem operator-() const;
    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem inverse() const;
    FqElem operator/(const FqElem& o) const { return *this * o.inverse(); }
    bool operator==(const FqElem& o) const { return rep_ == o.rep_; }
    bool operator!=(const FqElem& o) const { return !(rep_ == o.rep_); }

    FqElem pow(const Int& e) const;
    std::uint64_t trace_to_f2() const;  // char 2 only: absolute trace in {0,1}

private:
    FqContextPtr F_;
    FpPoly rep_;
};

} // namespace torsioncap
