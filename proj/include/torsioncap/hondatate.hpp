#pragma once

#include <string>
#include <vector>

#include "torsioncap/intmath.hpp"
#include "torsioncap/zpoly.hpp"

namespace torsioncap {

// An abelian-surface isogeny class over F_p. Type III stores 2a and 2b so the
// half-integer cases are exact; the invariants require 2a == 2b (mod 2) and,
// when both are odd, d == 1 (mod 4).
struct WeilDatum {
    enum class Kind { I, II, III };
    Int p;
    Kind kind = Kind::II;
    // Type I
    Int a1, a2;
    // Type III
    Int d, twoA, twoB;

    std::string kind_name() const;
};

struct CountCensus {
    Int p;
    unsigned dimension = 2;
    std::vector<Int> counts;  // sorted, deduplicated
    // provenance: for each count, the data achieving it (indices into data)
    std::vector<WeilDatum> data;
    std::vector<std::pair<Int, std::vector<size_t>>> provenance;
};

// characteristic polynomial of Frobenius, monic quartic in T
ZPoly frobenius_poly(const WeilDatum& w);

Int point_count(const WeilDatum& w);

// admissible elliptic Frobenius traces over F_p (prime field); Design note:
// |a| <= 2 sqrt(p) with gcd(a,p)=1, a=0, or the char-2/3 supersingular traces
// a^2 = 2p (p=2), a^2 = 3p (p=3); cross-checked against exhaustive curve
// enumeration for p <= 7
std::vector<Int> admissible_elliptic_traces(const Int& p);

// attainable #E(F_p) for elliptic curves, sorted
std::vector<Int> elliptic_counts(const Int& p);

// exhaustive oracle: counts from all nonsingular long Weierstrass models over
// F_p (p small)
std::vector<Int> elliptic_counts_exhaustive(const Int& p);

// complete enumeration of abelian-surface isogeny classes over F_p in a
// deterministic order (Type I with a1 <= a2, Type II, Type III by (d,2a,2b))
std::vector<WeilDatum> surface_isogeny_classes(const Int& p);

CountCensus surface_counts(const Int& p);

bool weil_datum_valid(const WeilDatum& w);

} // namespace torsioncap
