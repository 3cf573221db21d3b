#pragma once

#include <optional>
#include <vector>

#include "torsioncap/curves.hpp"
#include "torsioncap/finitefield.hpp"
#include "torsioncap/numberfield.hpp"

namespace torsioncap {

struct FiniteFieldCurve {
    FqContextPtr field;
    FqElem a1, a2, a3, a4, a6;
};

// exact point count (including the point at infinity) by x-sweep with the
// quadratic character (trace test in characteristic 2); q <= 10^4
Int count_points(const FiniteFieldCurve& E);

struct TorsionGroup {
    unsigned long n1 = 1;  // structure Z/n1 x Z/n2 with n2 | n1
    unsigned long n2 = 1;
    unsigned long marked_point_order = 1;  // observed order of (0,0)
    Int upper_bound;                       // from reduction point counts
    Int lower_bound;                       // order of the subgroup exhibited
};

// torsion subgroup of the Kubert curve y^2+(1-c)xy-by = x^3-bx^2 over K:
// upper bound from point counts at good primes of at least two distinct
// residue characteristics; lower bound from (0,0) and the 2-division cubic
// roots; throws undecided_error when the bounds fail to meet within the
// prime budget (primes < 200)
TorsionGroup torsion_subgroup(const NumberFieldPtr& K, const NFElem& b, const NFElem& c);

// reductions used by the bound: residue fields F_{p^k} obtained by factoring
// the minimal polynomial mod p, with the curve coefficients pushed through
struct ReductionCount {
    Int p;
    unsigned k = 1;
    Int count;
};
std::vector<ReductionCount> reduction_counts(const NumberFieldPtr& K, const NFElem& b,
                                             const NFElem& c, unsigned long max_prime,
                                             size_t max_usable);

} // namespace torsioncap
