#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace torsioncap {

using Int = mpz_class;
using Rat = mpq_class;

// Canonicalized rational (gcd(num,den) = 1, den >= 1).
Rat make_rat(const Int& num, const Int& den);

// Floor of the square root; throws std::domain_error for negative input.
Int isqrt(const Int& n);

// Deterministic primality (Miller-Rabin with proven base sets for 64-bit,
// mpz_probab_prime_p beyond).
bool is_prime(const Int& n);
bool is_prime_u64(std::uint64_t n);

// q = p^f with p prime, f >= 1; throws std::domain_error otherwise.
std::pair<Int, unsigned> prime_power_split(const Int& q);

Int pow_int(const Int& base, unsigned long e);

// p-adic valuation of n (n != 0).
unsigned ord_p(Int n, const Int& p);

Int euler_phi(Int n);

std::vector<long> primes_up_to(long n);

// Trial-division factorization for moderate integers (used for phi, GL orders).
std::vector<std::pair<Int, unsigned>> factor_integer(Int n);

Int binomial(unsigned long n, unsigned long k);

// floor((1 + sqrt(m))^e) computed exactly: expand (1+sqrt(m))^e = A + B*sqrt(m)
// with A, B integers and return A + isqrt(B^2 m). Works for perfect squares too.
Int floor_pow_one_plus_sqrt(const Int& m, unsigned long e);

// Exact comparison u + v*sqrt(d) < w*sqrt(p) for nonnegative integers u,v,w
// and nonnegative d,p, by repeated squaring. No floating point.
bool lt_sum_sqrt(const Int& u, const Int& v, const Int& d, const Int& w, const Int& p);

// Largest divisor of n coprime to p.
Int prime_to_p_part(const Int& n, const Int& p);

// 64-bit modular helpers (moduli < 2^62).
std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m);

} // namespace torsioncap
