#include "torsioncap/localbounds.hpp"

#include <mpfr.h>

#include <numeric>
#include <stdexcept>

namespace torsioncap {

Int weil_cap(const Int& q, unsigned d) {
    prime_power_split(q);  // validates; throws std::domain_error otherwise
    return floor_pow_one_plus_sqrt(q, 2ul * d);
}

Int p_power_floor(const Int& q, unsigned d, const Int& p) {
    if (!is_prime(p)) throw std::domain_error("p_power_floor: p not prime");
    Int cap = weil_cap(q, d);
    Int r = 1;
    while (r * p <= cap) r *= p;
    return r;
}

Int gl_order(unsigned D, const Int& N) {
    if (D < 1) throw std::domain_error("gl_order: D < 1");
    if (N < 2) throw std::domain_error("gl_order: N < 2");
    Int result = 1;
    for (const auto& [l, k] : factor_integer(N)) {
        // #GL_D(Z/l^k) = l^((k-1)D^2) * prod_{i=0}^{D-1} (l^D - l^i)
        Int part = pow_int(l, (k - 1) * D * D);
        Int lD = pow_int(l, D);
        for (unsigned i = 0; i < D; ++i) {
            part *= lD - pow_int(l, i);
        }
        result *= part;
    }
    return result;
}

Int gl_order_bruteforce(unsigned D, unsigned N) {
    // count invertible D x D matrices over Z/N by enumeration; invertible
    // over Z/N iff det is a unit
    unsigned long total = 1;
    for (unsigned i = 0; i < D * D; ++i) {
        total *= N;
        if (total > 400000000ul) throw std::domain_error("gl_order_bruteforce: too large");
    }
    auto det_mod = [&](const std::vector<unsigned>& m) -> unsigned {
        // expansion by minors for D <= 3
        if (D == 1) return m[0] % N;
        if (D == 2) return ((m[0] * m[3]) % N + (N * N - (m[1] * m[2]) % N)) % N;
        if (D == 3) {
            long a = m[0], b = m[1], c = m[2], d = m[3], e = m[4], f = m[5], g = m[6], h = m[7], i = m[8];
            long det = a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
            long r = det % static_cast<long>(N);
            if (r < 0) r += N;
            return static_cast<unsigned>(r);
        }
        throw std::domain_error("gl_order_bruteforce: D > 3 unsupported");
    };
    Int count = 0;
    std::vector<unsigned> m(D * D, 0);
    for (unsigned long idx = 0; idx < total; ++idx) {
        unsigned long v = idx;
        for (unsigned i = 0; i < D * D; ++i) {
            m[i] = static_cast<unsigned>(v % N);
            v /= N;
        }
        unsigned det = det_mod(m);
        unsigned g = std::gcd(det, N);
        if (g == 1) ++count;
    }
    return count;
}

unsigned m_p(const Int& p, unsigned D) {
    if (!is_prime(p)) throw std::domain_error("m_p: p not prime");
    if (D < 1) throw std::domain_error("m_p: D < 1");
    long cap = std::max(200l, 4l * D * D + 1);
    unsigned best = ~0u;
    for (long l : primes_up_to(cap)) {
        if (Int(l) == p) continue;
        Int modulus = l == 2 ? Int(4) : Int(l);  // N >= 3: use 4 for the prime 2
        unsigned v = ord_p(gl_order(D, modulus), p);
        if (v < best) best = v;
        if (best == 0) break;
    }
    if (best == ~0u) throw std::runtime_error("m_p: empty search set");
    return best;
}

unsigned m_p_bruteforce(const Int& p, unsigned D, unsigned cap) {
    unsigned best = ~0u;
    for (unsigned N = 3; N <= cap; ++N) {
        if (Int(N) % p == 0) continue;
        unsigned v = ord_p(gl_order(D, N), p);
        if (v < best) best = v;
    }
    return best;
}

BoundReport local_bound(const LocalContext& ctx) {
    if (!is_prime(ctx.p)) throw std::domain_error("local_bound: p not prime");
    if (ctx.f < 1 || ctx.e < 1 || ctx.d < 1) throw std::domain_error("local_bound: bad context");
    BoundReport r;
    Int q = ctx.q();
    r.prime_to_p_bound = weil_cap(q, ctx.d);
    r.special_fibre_factor = p_power_floor(q, ctx.d, ctx.p);
    unsigned long pm1 = mpz_get_ui(Int(ctx.p - 1).get_mpz_t());
    unsigned long floor_e = ctx.e / pm1;
    r.formal_group_factor = pow_int(ctx.p, ctx.f * ctx.d * floor_e);
    r.mp_value = m_p(ctx.p, 2 * ctx.d);
    r.component_factor = pow_int(ctx.p, 2ul * ctx.d * r.mp_value);
    r.total = r.prime_to_p_bound * r.special_fibre_factor * r.formal_group_factor *
              r.component_factor;
    r.additive_support = additive_prime_support(ctx.d);
    return r;
}

std::set<Int> additive_prime_support(unsigned d) {
    if (d < 1) throw std::domain_error("additive_prime_support: d < 1");
    std::set<Int> out;
    for (long l : primes_up_to(2l * d + 1)) out.insert(Int(l));
    return out;
}

namespace {

// floor((1 + m^(n/2))^(2d)) for m in {2,3}: exact via (1+sqrt(m^n))^(2d)
Int floor_one_plus_halfpow(unsigned m, unsigned n, unsigned d) {
    return floor_pow_one_plus_sqrt(pow_int(Int(m), n), 2ul * d);
}

} // namespace

Int global_collation_bound(unsigned d, unsigned n) {
    if (d < 1 || n < 1) throw std::domain_error("global_collation_bound: d,n >= 1 required");
    return floor_one_plus_halfpow(2, n, d) * floor_one_plus_halfpow(3, n, d);
}

Int max_prime_order_bound(unsigned d, unsigned n) {
    Int cap = floor_one_plus_halfpow(2, n, d);
    Int p = cap;
    while (p >= 2 && !is_prime(p)) --p;
    if (p < 2) throw std::domain_error("max_prime_order_bound: no prime in range");
    return p;
}

SilverbergBound silverberg_bound_log10(unsigned d, unsigned n) {
    if (d < 1 || n < 1) throw std::domain_error("silverberg_bound_log10: d,n >= 1 required");
    // S = 2d * ( log10(1 + 2^(A/2)) + log10(1 + 3^(B/2)) ),
    // A = #GL_{2d}(Z/3) * n, B = #GL_{2d}(Z/4) * n.
    // log10(1 + m^(x/2)) = (x/2) log10(m) + log10(1 + m^(-x/2)); the correction
    // is far below the 5-figure target but is included via interval bounds.
    Int A = gl_order(2 * d, Int(3)) * n;
    Int B = gl_order(2 * d, Int(4)) * n;

    auto eval = [&](mpfr_rnd_t rnd) {
        mpfr_t log2_, log3_, sum, t;
        mpfr_inits2(256, log2_, log3_, sum, t, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_ui(t, 2, rnd);
        mpfr_log10(log2_, t, rnd);
        mpfr_set_ui(t, 3, rnd);
        mpfr_log10(log3_, t, rnd);
        // sum = (A/2) log10(2) + (B/2) log10(3)
        mpfr_t az, bz;
        mpfr_inits2(256, az, bz, static_cast<mpfr_ptr>(nullptr));
        mpfr_set_z(az, A.get_mpz_t(), rnd);
        mpfr_set_z(bz, B.get_mpz_t(), rnd);
        mpfr_div_ui(az, az, 2, rnd);
        mpfr_div_ui(bz, bz, 2, rnd);
        mpfr_mul(az, az, log2_, rnd);
        mpfr_mul(bz, bz, log3_, rnd);
        mpfr_add(sum, az, bz, rnd);
        // corrections for the +1 terms: 0 < c < 2^(1 - A/2) + 3^(-B/2); at the
        // upper endpoint add a bound safely above the true correction
        if (rnd == MPFR_RNDU) {
            mpfr_set_ui(t, 10, rnd);
            mpfr_pow_si(t, t, -60, rnd);
            mpfr_add(sum, sum, t, rnd);
        }
        mpfr_mul_ui(sum, sum, 2 * d, rnd);
        // split into exponent and mantissa
        mpfr_t fl;
        mpfr_init2(fl, 256);
        mpfr_floor(fl, sum);
        mpz_class expo;
        mpfr_get_z(expo.get_mpz_t(), fl, MPFR_RNDN);
        mpfr_sub(t, sum, fl, rnd);
        mpfr_ui_pow(t, 10, t, rnd);  // mantissa in [1, 10)
        char buf[64];
        mpfr_sprintf(buf, "%.4Rf", t);
        std::string mant(buf);
        mpfr_clears(log2_, log3_, sum, t, az, bz, fl, static_cast<mpfr_ptr>(nullptr));
        return std::pair<std::string, Int>(mant, Int(expo));
    };

    auto lo = eval(MPFR_RNDD);
    auto hi = eval(MPFR_RNDU);
    if (lo.first != hi.first || lo.second != hi.second) {
        throw std::runtime_error("silverberg_bound_log10: rounding not certified");
    }
    return {lo.first, lo.second};
}

Int cm_exponent_bound(unsigned n, unsigned muO, bool contains_cm_field) {
    if (n < 1) throw std::domain_error("cm_exponent_bound: n < 1");
    if (muO != 2 && muO != 4 && muO != 6) throw std::domain_error("cm_exponent_bound: muO not in {2,4,6}");
    // bound: phi(e) <= B with B = muO*n or muO*n/2; phi(e) >= sqrt(e/2) gives
    // e <= 2B^2
    Int B = Int(muO) * n;
    if (contains_cm_field) B /= 2;
    Int limit = 2 * B * B + 2;
    Int best = 1;
    for (Int e = 1; e <= limit; ++e) {
        if (euler_phi(e) <= B) best = e;
    }
    return best;
}

Int cm_max_prime_order(unsigned n, unsigned muO, bool contains_cm_field) {
    if (n < 1) throw std::domain_error("cm_max_prime_order: n < 1");
    if (muO != 2 && muO != 4 && muO != 6) throw std::domain_error("cm_max_prime_order: muO not in {2,4,6}");
    Int B = Int(muO) * n;
    if (contains_cm_field) B /= 2;
    Int p = B + 1;  // phi(p) = p - 1 <= B
    while (p >= 2 && !is_prime(p)) --p;
    if (p < 2) throw std::domain_error("cm_max_prime_order: no prime in range");
    return p;
}

} // namespace torsioncap
