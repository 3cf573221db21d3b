#pragma once

#include <set>
#include <string>
#include <vector>

#include "torsioncap/intmath.hpp"

namespace torsioncap {

// Context for the local bound: residue characteristic p, inertial degree f,
// absolute ramification index e, abelian variety dimension d; q = p^f.
struct LocalContext {
    Int p;
    unsigned f = 1;
    unsigned e = 1;
    unsigned d = 1;
    Int q() const { return pow_int(p, f); }
};

struct BoundReport {
    Int prime_to_p_bound;      // [(1+sqrt q)^(2d)]
    Int formal_group_factor;   // p^(f d [e/(p-1)])
    Int component_factor;      // p^(2d m_p(2d))
    Int special_fibre_factor;  // [(1+sqrt q)^(2d)]_p
    Int total;                 // product of the four factors
    unsigned mp_value = 0;     // m_p(2d)
    std::set<Int> additive_support;  // primes l <= 2d+1
};

// floor((1+sqrt q)^(2d)); q must be a prime power
Int weil_cap(const Int& q, unsigned d);

// largest power of p at most (1+sqrt q)^(2d)
Int p_power_floor(const Int& q, unsigned d, const Int& p);

// #GL_D(Z/NZ)
Int gl_order(unsigned D, const Int& N);

// brute-force matrix count over Z/N (tiny N only; test oracle)
Int gl_order_bruteforce(unsigned D, unsigned N);

// m_p(D) = min over N >= 3 coprime to p of ord_p(#GL_D(Z/NZ)); computed over
// prime-power moduli (plus N = 4 when p odd), prime search capped at
// max(200, 4D^2+1)
unsigned m_p(const Int& p, unsigned D);

// brute-force minimum over all moduli 3 <= N <= cap coprime to p
unsigned m_p_bruteforce(const Int& p, unsigned D, unsigned cap);

BoundReport local_bound(const LocalContext& ctx);

std::set<Int> additive_prime_support(unsigned d);

// floor((1+2^(n/2))^(2d)) * floor((1+3^(n/2))^(2d))
Int global_collation_bound(unsigned d, unsigned n);

// largest prime at most floor((1+2^(n/2))^(2d))
Int max_prime_order_bound(unsigned d, unsigned n);

struct SilverbergBound {
    std::string mantissa;  // 5 significant figures, e.g. "4.0262"
    Int exponent;          // base-10 exponent
};

// [(1+2^(#GL_{2d}(Z/3) n/2))(1+3^(#GL_{2d}(Z/4) n/2))]^(2d), as certified
// 5-figure base-10 mantissa and exponent
SilverbergBound silverberg_bound_log10(unsigned d, unsigned n);

// largest e with phi(e) <= delta * muO * n, delta = 1/2 when the field
// contains the CM field and 1 otherwise; muO in {2, 4, 6}
Int cm_exponent_bound(unsigned n, unsigned muO, bool contains_cm_field);

// largest prime l with phi(l) = l-1 within the same bound
Int cm_max_prime_order(unsigned n, unsigned muO, bool contains_cm_field);

} // namespace torsioncap
