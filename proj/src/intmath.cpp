#include "torsioncap/intmath.hpp"

#include <stdexcept>

namespace torsioncap {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative input");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n.fits_ulong_p()) {
        return is_prime_u64(n.get_ui());
    }
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::pair<Int, unsigned> prime_power_split(const Int& q) {
    if (q < 2) throw std::domain_error("prime_power_split: input < 2");
    // p is the unique prime divisor if q is a prime power.
    Int m = q;
    Int p = 0;
    if (is_prime(m)) return {m, 1u};
    for (long d = 2; Int(d) * d <= m; ++d) {
        if (m % d == 0) { p = d; break; }
    }
    if (p == 0) throw std::domain_error("prime_power_split: not a prime power");
    unsigned f = 0;
    while (m % p == 0) { m /= p; ++f; }
    if (m != 1) throw std::domain_error("prime_power_split: not a prime power");
    return {p, f};
}

Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

unsigned ord_p(Int n, const Int& p) {
    if (n == 0) throw std::domain_error("ord_p: zero input");
    if (p < 2) throw std::domain_error("ord_p: modulus < 2");
    unsigned v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

std::vector<std::pair<Int, unsigned>> factor_integer(Int n) {
    if (n < 0) n = -n;
    if (n < 2) return {};
    std::vector<std::pair<Int, unsigned>> out;
    for (Int d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) { n /= d; ++e; }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1u);
    return out;
}

Int euler_phi(Int n) {
    if (n < 1) throw std::domain_error("euler_phi: input < 1");
    Int r = 1;
    for (const auto& [p, e] : factor_integer(n)) {
        r *= pow_int(p, e - 1) * (p - 1);
    }
    return r;
}

std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(n) + 1, true);
    sieve[0] = sieve[1] = false;
    for (long i = 2; i <= n; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * 2; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int floor_pow_one_plus_sqrt(const Int& m, unsigned long e) {
    if (m < 0) throw std::domain_error("floor_pow_one_plus_sqrt: negative radicand");
    Int a = 0, b = 0;
    for (unsigned long k = 0; k <= e; ++k) {
        Int term = binomial(e, k) * pow_int(m, k / 2);
        if (k % 2 == 0) a += term;
        else b += term;
    }
    return a + isqrt(b * b * m);
}

bool lt_sum_sqrt(const Int& u, const Int& v, const Int& d, const Int& w, const Int& p) {
    if (u < 0 || v < 0 || w < 0 || d < 0 || p < 0) throw std::domain_error("lt_sum_sqrt: negative input");
    // u + v*sqrt(d) < w*sqrt(p)
    // First square once: u^2 + v^2 d + 2uv sqrt(d) < w^2 p.
    Int lhs_rat = u * u + v * v * d;
    Int rhs = w * w * p;
    Int cross = 2 * u * v;
    if (cross == 0) {
        // pure comparison of squares: need (u + v sqrt d)^2 < w^2 p, and values are
        // nonnegative so squaring is monotone. Equality of squares -> not <.
        return lhs_rat < rhs;
    }
    Int diff = rhs - lhs_rat;
    if (diff <= 0) return false; // lhs already >= rhs even before the sqrt term
    // Now need cross*sqrt(d) < diff with both sides positive: square again.
    return cross * cross * d < diff * diff;
}

Int prime_to_p_part(const Int& n, const Int& p) {
    if (n < 1) throw std::domain_error("prime_to_p_part: n < 1");
    Int m = n;
    while (m % p == 0) m /= p;
    return m;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t m) {
    // extended Euclid on signed 128-bit to stay safe for m near 2^62
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        __int128 tmp = t - q * newt; t = newt; newt = tmp;
        tmp = r - q * newr; r = newr; newr = tmp;
    }
    if (r != 1) throw std::domain_error("invmod_u64: not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

} // namespace torsioncap
