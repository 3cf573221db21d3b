#include "torsioncap/finitefield.hpp"

#include <stdexcept>

namespace torsioncap {

namespace {

// irreducibility over F_p valid in any characteristic (including 2):
// x^(p^k) == x (mod f) and gcd(x^(p^(k/l)) - x, f) = 1 for prime l | k
bool irreducible_modulus(const FpPoly& f) {
    long k = f.degree();
    if (k <= 0) return false;
    if (k == 1) return true;
    std::uint64_t p = f.p();
    Int pz(static_cast<unsigned long>(p));
    FpPoly x = FpPoly::x(p);
    FpPoly xq = x;
    for (long i = 0; i < k; ++i) xq = fp_powmod(xq, pz, f);
    if (!(fp_rem(xq - x, f).is_zero())) return false;
    for (long l = 2; l <= k; ++l) {
        if (k % l != 0) continue;
        bool is_p = true;
        for (long d = 2; d * d <= l; ++d) {
            if (l % d == 0) { is_p = false; break; }
        }
        if (!is_p) continue;
        FpPoly xe = x;
        for (long i = 0; i < k / l; ++i) xe = fp_powmod(xe, pz, f);
        if (fp_gcd(f, xe - x).degree() != 0) return false;
    }
    return true;
}

} // namespace

FqContext::FqContext(std::uint64_t p, unsigned k, FpPoly m)
    : p_(p), k_(k), modulus_(std::move(m)) {
    q_ = 1;
    for (unsigned i = 0; i < k; ++i) q_ *= p;
}

std::shared_ptr<const FqContext> FqContext::create(std::uint64_t p, unsigned k) {
    if (k == 0) throw std::domain_error("FqContext: k must be positive");
    if (!is_prime_u64(p)) throw std::domain_error("FqContext: p not prime");
    if (k == 1) {
        return std::shared_ptr<const FqContext>(new FqContext(p, 1, FpPoly::x(p)));
    }
    // smallest monic irreducible by coefficient index
    std::uint64_t qk = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (qk > (1ull << 40)) throw std::domain_error("FqContext: field too large");
        qk *= p;
    }
    for (std::uint64_t idx = 0; idx < qk; ++idx) {
        std::vector<std::uint64_t> cs(k + 1, 0);
        std::uint64_t v = idx;
        for (unsigned i = 0; i < k; ++i) {
            cs[i] = v % p;
            v /= p;
        }
        cs[k] = 1;
        FpPoly f(p, std::move(cs));
        if (irreducible_modulus(f)) {
            return std::shared_ptr<const FqContext>(new FqContext(p, k, f));
        }
    }
    throw std::runtime_error("FqContext: no irreducible modulus found");
}

std::shared_ptr<const FqContext> FqContext::with_modulus(FpPoly modulus) {
    if (modulus.degree() < 1) throw std::domain_error("FqContext: constant modulus");
    FpPoly m = modulus.monic();
    if (!irreducible_modulus(m)) throw std::domain_error("FqContext: reducible modulus");
    return std::shared_ptr<const FqContext>(
        new FqContext(m.p(), static_cast<unsigned>(m.degree()), m));
}

FqElem::FqElem(FqContextPtr F, FpPoly rep) : F_(std::move(F)) {
    // rebuild under the context's modulus so a rep with a mismatched prime
    // (e.g. a default-constructed FpPoly) cannot poison later arithmetic
    std::uint64_t p = F_->p();
    std::vector<std::uint64_t> cs(rep.coeffs().size());
    for (size_t i = 0; i < cs.size(); ++i) cs[i] = rep.coeffs()[i] % p;
    rep_ = fp_rem(FpPoly(p, std::move(cs)), F_->modulus());
}

FqElem FqElem::one(FqContextPtr F) {
    std::uint64_t p = F->p();
    return FqElem(std::move(F), FpPoly(p, {1}));
}

FqElem FqElem::from_int(FqContextPtr F, std::uint64_t v) {
    std::uint64_t p = F->p();
    return FqElem(std::move(F), FpPoly(p, {v % p}));
}

FqElem FqElem::generator(FqContextPtr F) {
    std::uint64_t p = F->p();
    return FqElem(std::move(F), FpPoly::x(p));
}

FqElem FqElem::by_index(FqContextPtr F, std::uint64_t i) {
    std::uint64_t p = F->p();
    std::vector<std::uint64_t> cs(F->k(), 0);
    for (unsigned d = 0; d < F->k(); ++d) {
        cs[d] = i % p;
        i /= p;
    }
    return FqElem(std::move(F), FpPoly(p, std::move(cs)));
}

FqElem FqElem::operator-() const {
    FpPoly z(F_->p());
    return FqElem(F_, z - rep_);
}

FqElem FqElem::operator+(const FqElem& o) const { return FqElem(F_, rep_ + o.rep_); }

FqElem FqElem::operator-(const FqElem& o) const { return FqElem(F_, rep_ - o.rep_); }

FqElem FqElem::operator*(const FqElem& o) const { return FqElem(F_, rep_ * o.rep_); }

FqElem FqElem::inverse() const {
    if (is_zero()) throw std::domain_error("FqElem: inverse of zero");
    // extended Euclid over F_p[t]
    std::uint64_t p = F_->p();
    FpPoly r0 = F_->modulus(), r1 = rep_;
    FpPoly t0(p), t1(p, {1});
    while (!r1.is_zero()) {
        FpPoly q, r;
        fp_divrem(r0, r1, q, r);
        FpPoly nt = t0 - q * t1;
        r0 = r1; r1 = r;
        t0 = t1; t1 = nt;
    }
    if (r0.degree() != 0) throw std::domain_error("FqElem: modulus not irreducible?");
    std::uint64_t inv = invmod_u64(r0.lc(), p);
    return FqElem(F_, t0 * inv);
}

FqElem FqElem::pow(const Int& e) const {
    if (e < 0) return inverse().pow(-e);
    FqElem r = FqElem::one(F_);
    FqElem b = *this;
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t i = bits; i-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), i)) r = r * b;
    }
    return r;
}

std::uint64_t FqElem::trace_to_f2() const {
    if (F_->p() != 2) throw std::domain_error("trace_to_f2: characteristic 2 only");
    FqElem acc = *this;
    FqElem term = *this;
    for (unsigned i = 1; i < F_->k(); ++i) {
        term = term * term;
        acc = acc + term;
    }
    if (acc.is_zero()) return 0;
    return 1;
}

} // namespace torsioncap
