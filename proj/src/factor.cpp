#include <algorithm>
#include <stdexcept>

#include "torsioncap/qpoly.hpp"
#include "torsioncap/fppoly.hpp"

namespace torsioncap {

namespace {

ZPoly reduce_mod(const ZPoly& f, const Int& m) {
    std::vector<Int> v = f.coeffs();
    for (auto& c : v) {
        c %= m;
        if (c < 0) c += m;
    }
    return ZPoly(std::move(v));
}

ZPoly balanced_mod(const ZPoly& f, const Int& m) {
    std::vector<Int> v = f.coeffs();
    for (auto& c : v) {
        c %= m;
        if (c < 0) c += m;
        if (2 * c > m) c -= m;
    }
    return ZPoly(std::move(v));
}

ZPoly mul_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
    return reduce_mod(a * b, m);
}

// divrem by a monic divisor, coefficients mod m
void divrem_monic_mod(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q, ZPoly& r) {
    if (b.is_zero() || b.lc() != 1) throw std::invalid_argument("divrem_monic_mod: divisor not monic");
    if (a.degree() < b.degree()) {
        q = ZPoly();
        r = a;
        return;
    }
    std::vector<Int> rem = a.coeffs();
    std::vector<Int> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
    size_t db = static_cast<size_t>(b.degree());
    for (size_t k = quot.size(); k-- > 0;) {
        Int lead = rem[k + db] % m;
        if (lead < 0) lead += m;
        if (lead == 0) { rem[k + db] = 0; continue; }
        quot[k] = lead;
        rem[k + db] = 0;
        for (size_t j = 0; j < db; ++j) {
            rem[k + j] = (rem[k + j] - lead * b[j]) % m;
        }
    }
    for (auto& c : rem) { c %= m; if (c < 0) c += m; }
    rem.resize(db);
    q = ZPoly(std::move(quot));
    r = ZPoly(std::move(rem));
}

ZPoly zpoly_from_fp(const FpPoly& f) {
    std::vector<Int> v(f.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = Int(static_cast<unsigned long>(f.coeffs()[i]));
    return ZPoly(std::move(v));
}

// extended Euclid over F_p: s*a + t*b == 1 (a, b coprime mod p)
void fp_bezout(const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) {
    std::uint64_t p = a.p();
    FpPoly r0 = a, r1 = b;
    FpPoly s0(p, {1}), s1(p);
    FpPoly t0(p), t1(p, {1});
    while (!r1.is_zero()) {
        FpPoly q, r;
        fp_divrem(r0, r1, q, r);
        FpPoly ns = s0 - q * s1;
        FpPoly nt = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = ns;
        t0 = t1; t1 = nt;
    }
    if (r0.degree() != 0) throw std::runtime_error("fp_bezout: inputs not coprime");
    std::uint64_t inv = invmod_u64(r0.lc(), p);
    s = s0 * inv;
    t = t0 * inv;
}

struct HenselPair {
    ZPoly g, h, s, t;  // f == g*h, s*g + t*h == 1 (mod m)
};

// one quadratic Hensel step: from modulus m to m^2 (von zur Gathen 15.10)
void hensel_step(const ZPoly& f, HenselPair& P, const Int& m) {
    Int m2 = m * m;
    ZPoly e = reduce_mod(f - P.g * P.h, m2);
    ZPoly q, r;
    divrem_monic_mod(mul_mod(P.s, e, m2), P.h, m2, q, r);
    ZPoly gstar = reduce_mod(P.g + P.t * e + q * P.g, m2);
    ZPoly hstar = reduce_mod(P.h + r, m2);
    ZPoly b = reduce_mod(P.s * gstar + P.t * hstar - ZPoly(Int(1)), m2);
    ZPoly c, d;
    divrem_monic_mod(mul_mod(P.s, b, m2), hstar, m2, c, d);
    ZPoly sstar = reduce_mod(P.s - d, m2);
    ZPoly tstar = reduce_mod(P.t - P.t * b - c * gstar, m2);
    P = {gstar, hstar, sstar, tstar};
}

// Lift f == ell * prod(monic factors) (mod p) to (mod target), recursively.
// Output: monic-mod-target lifted factors, same order.
void hensel_tree(const ZPoly& f, const std::vector<FpPoly>& factors, std::uint64_t p,
                 const Int& target, std::vector<ZPoly>& out) {
    if (factors.size() == 1) {
        // leaf: monic normalization happens at the top level
        out.push_back(f);
        return;
    }
    size_t mid = factors.size() / 2;
    FpPoly left(p, {1}), right(p, {1});
    for (size_t i = 0; i < mid; ++i) left = left * factors[i];
    for (size_t i = mid; i < factors.size(); ++i) right = right * factors[i];
    // fold leading coefficient of f into the left branch
    std::uint64_t ell = mpz_fdiv_ui(f.lc().get_mpz_t(), p);
    FpPoly g0 = left * ell;
    FpPoly h0 = right;  // monic
    FpPoly s0, t0;
    fp_bezout(g0, h0, s0, t0);
    HenselPair P{zpoly_from_fp(g0), zpoly_from_fp(h0), zpoly_from_fp(s0), zpoly_from_fp(t0)};
    Int m(static_cast<unsigned long>(p));
    while (m < target) {
        hensel_step(f, P, m);
        m = m * m;
    }
    ZPoly g = P.g, h = P.h;
    std::vector<FpPoly> lf(factors.begin(), factors.begin() + static_cast<long>(mid));
    std::vector<FpPoly> rf(factors.begin() + static_cast<long>(mid), factors.end());
    hensel_tree(g, lf, p, target, out);
    hensel_tree(h, rf, p, target, out);
}

Int mignotte_bound(const ZPoly& f) {
    Int maxabs = 0;
    for (const auto& c : f.coeffs()) {
        Int a = c >= 0 ? c : Int(-c);
        if (a > maxabs) maxabs = a;
    }
    unsigned long n = static_cast<unsigned long>(f.degree());
    Int lc = f.lc() >= 0 ? f.lc() : Int(-f.lc());
    return (isqrt(Int(static_cast<unsigned long>(n + 1))) + 1) * pow_int(Int(2), n) * maxabs * lc;
}

struct ModularSample {
    std::uint64_t p;
    std::vector<FpPoly> factors;  // monic irreducible, f == lc * prod (mod p)
};

std::vector<bool> degree_sums(const std::vector<FpPoly>& factors, size_t n) {
    std::vector<bool> can(n + 1, false);
    can[0] = true;
    for (const auto& g : factors) {
        size_t d = static_cast<size_t>(g.degree());
        for (size_t i = n + 1; i-- > d;) {
            if (can[i - d]) can[i] = true;
        }
    }
    return can;
}

std::uint64_t next_prime_u64(std::uint64_t n) {
    std::uint64_t c = n + 1;
    if (c % 2 == 0) ++c;
    while (!is_prime_u64(c)) c += 2;
    return c;
}

// core: factor a primitive squarefree polynomial with positive leading coeff
std::vector<ZPoly> factor_squarefree(const ZPoly& f) {
    long n = f.degree();
    if (n <= 0) return {};
    if (n == 1) return {f};

    std::vector<ModularSample> samples;
    std::vector<bool> possible(static_cast<size_t>(n) + 1, true);
    size_t want = 7;
    std::uint64_t p = 1009;
    size_t examined = 0;
    auto collect = [&](size_t up_to) -> bool {
        while (samples.size() < up_to && examined < 4000) {
            p = next_prime_u64(p);
            ++examined;
            if (mpz_fdiv_ui(f.lc().get_mpz_t(), p) == 0) continue;
            FpPoly fp = FpPoly::from_zpoly(f, p);
            if (fp.degree() != n) continue;
            if (!fp_is_squarefree(fp)) continue;
            auto fac = fp_factor(fp);
            std::vector<FpPoly> fs;
            for (auto& [g, m] : fac) {
                if (m != 1) throw std::runtime_error("factor_squarefree: inconsistent multiplicity");
                fs.push_back(g);
            }
            if (fs.size() == 1) return true;  // irreducible
            auto sums = degree_sums(fs, static_cast<size_t>(n));
            for (size_t i = 0; i <= static_cast<size_t>(n); ++i) {
                possible[i] = possible[i] && sums[i];
            }
            samples.push_back({p, std::move(fs)});
            bool any_proper = false;
            for (size_t i = 1; i < static_cast<size_t>(n); ++i) any_proper = any_proper || possible[i];
            if (!any_proper) return true;  // degree sieve proves irreducibility
        }
        return false;
    };

    if (collect(want)) return {f};
    if (samples.empty()) throw std::runtime_error("factor_squarefree: no usable primes");

    for (int attempt = 0; attempt < 3; ++attempt) {
        // best sample: fewest modular factors
        size_t best = 0;
        for (size_t i = 1; i < samples.size(); ++i) {
            if (samples[i].factors.size() < samples[best].factors.size()) best = i;
        }
        const ModularSample& S = samples[best];
        size_t r = S.factors.size();

        const unsigned long long kSubsetCap = attempt == 0 ? 3'000'000ull : 200'000'000ull;
        // quick feasibility estimate: number of subsets of size <= r/2
        long double est = 0, binom = 1;
        for (size_t m = 1; m <= r / 2; ++m) {
            binom = binom * static_cast<long double>(r - m + 1) / static_cast<long double>(m);
            est += binom;
        }
        if (est > static_cast<long double>(kSubsetCap) && attempt < 2) {
            // escalate the prime set hoping for a thinner factorization
            want = want * 3 + 8;
            if (collect(want)) return {f};
            continue;
        }

        Int bound = mignotte_bound(f);
        Int target = 2 * bound + 1;
        Int modulus(static_cast<unsigned long>(S.p));
        while (modulus < target) modulus *= modulus;
        std::vector<ZPoly> lifted;
        hensel_tree(reduce_mod(f, modulus), S.factors, S.p, modulus, lifted);
        // normalize every lifted factor to monic mod modulus
        for (auto& w : lifted) {
            Int linv;
            Int wl = w.lc() % modulus;
            if (mpz_invert(linv.get_mpz_t(), wl.get_mpz_t(), modulus.get_mpz_t()) == 0) {
                throw std::runtime_error("factor_squarefree: lift normalization failed");
            }
            std::vector<Int> v = w.coeffs();
            for (auto& c : v) { c = c * linv % modulus; if (c < 0) c += modulus; }
            w = ZPoly(std::move(v));
        }
        // sanity: f == lc * prod(lifted) mod modulus
        {
            ZPoly prod(Int(1));
            for (const auto& w : lifted) prod = mul_mod(prod, w, modulus);
            if (balanced_mod(prod * f.lc() - f, modulus) != ZPoly()) {
                throw std::runtime_error("factor_squarefree: Hensel verification failed");
            }
        }

        // recombination over subsets of increasing cardinality
        std::vector<ZPoly> result;
        std::vector<ZPoly> rem = lifted;
        ZPoly fcur = f;
        unsigned long long steps = 0;
        bool overflow = false;
        size_t m = 1;
        while (2 * m <= rem.size() && !overflow) {
            std::vector<size_t> idx(m);
            for (size_t i = 0; i < m; ++i) idx[i] = i;
            bool advanced_m = true;
            while (true) {
                ++steps;
                if (steps > kSubsetCap) { overflow = true; break; }
                long degsum = 0;
                for (size_t i : idx) degsum += rem[i].degree();
                bool try_subset = degsum < fcur.degree() && possible[static_cast<size_t>(degsum)];
                if (try_subset) {
                    // cheap constant-coefficient divisibility test
                    Int c0 = fcur.lc();
                    for (size_t i : idx) c0 = c0 * rem[i][0] % modulus;
                    if (c0 < 0) c0 += modulus;
                    if (2 * c0 > modulus) c0 -= modulus;
                    Int rhs = fcur.lc() * fcur[0];
                    if (c0 == 0) {
                        try_subset = (rhs == 0);
                    } else if (rhs % c0 != 0) {
                        try_subset = false;
                    }
                }
                if (try_subset) {
                    ZPoly g(Int(1));
                    for (size_t i : idx) g = mul_mod(g, rem[i], modulus);
                    g = balanced_mod(g * fcur.lc(), modulus).primitive_part();
                    ZPoly q;
                    if (!g.is_zero() && fcur.exact_divide(g, q)) {
                        result.push_back(g.lc() > 0 ? g : -g);
                        fcur = q.lc() > 0 ? q.primitive_part() : (-q).primitive_part();
                        std::vector<ZPoly> nrem;
                        for (size_t i = 0, j = 0; i < rem.size(); ++i) {
                            if (j < idx.size() && idx[j] == i) { ++j; continue; }
                            nrem.push_back(rem[i]);
                        }
                        rem = std::move(nrem);
                        advanced_m = false;
                        break;  // restart subsets at same cardinality
                    }
                }
                // next m-subset
                long pos = static_cast<long>(m) - 1;
                while (pos >= 0 && idx[static_cast<size_t>(pos)] == rem.size() - m + static_cast<size_t>(pos)) --pos;
                if (pos < 0) break;
                ++idx[static_cast<size_t>(pos)];
                for (size_t i = static_cast<size_t>(pos) + 1; i < m; ++i) idx[i] = idx[i - 1] + 1;
            }
            if (advanced_m) ++m;
            if (2 * m > rem.size()) break;
        }
        if (overflow) {
            want = want * 3 + 8;
            if (collect(want)) return {f};
            continue;
        }
        if (fcur.degree() > 0) result.push_back(fcur);
        return result;
    }
    throw std::runtime_error("factor_squarefree: recombination budget exhausted");
}

} // namespace

std::vector<std::pair<ZPoly, unsigned>> factor_zpoly(const ZPoly& f0) {
    if (f0.is_zero()) throw std::domain_error("factor_zpoly: zero polynomial");
    ZPoly f = f0.primitive_part();
    std::vector<std::pair<ZPoly, unsigned>> out;
    if (f.degree() <= 0) return out;
    // strip powers of x first so constant-term tests apply
    size_t xpow = 0;
    while (f[0] == 0 && f.degree() > 0) {
        std::vector<Int> v(f.coeffs().begin() + 1, f.coeffs().end());
        f = ZPoly(std::move(v));
        ++xpow;
    }
    if (xpow > 0) out.emplace_back(ZPoly::x(), static_cast<unsigned>(xpow));
    if (f.degree() > 0) {
        for (auto& [part, mult] : zpoly_squarefree_decomposition(f)) {
            for (auto& irr : factor_squarefree(part)) {
                out.emplace_back(irr, mult);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return qpoly_less(QPoly(a.first), QPoly(b.first));
    });
    return out;
}

bool is_irreducible_over_q(const ZPoly& f) {
    ZPoly p = f.primitive_part();
    if (p.degree() <= 0) return false;
    auto fac = factor_zpoly(p);
    return fac.size() == 1 && fac[0].second == 1;
}

} // namespace torsioncap
