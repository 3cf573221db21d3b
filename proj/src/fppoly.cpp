#include "torsioncap/fppoly.hpp"

#include <random>
#include <stdexcept>

#include "torsioncap/zpoly.hpp"

namespace torsioncap {

FpPoly FpPoly::from_zpoly(const ZPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> v(f.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] = mpz_fdiv_ui(f.coeffs()[i].get_mpz_t(), p);
    }
    return FpPoly(p, std::move(v));
}

FpPoly FpPoly::x(std::uint64_t p) { return FpPoly(p, {0, 1}); }

void FpPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    std::vector<std::uint64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) {
        std::uint64_t s = (*this)[i] + o[i];
        if (s >= p_) s -= p_;
        v[i] = s;
    }
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    std::vector<std::uint64_t> v(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (size_t i = 0; i < v.size(); ++i) {
        std::uint64_t a = (*this)[i], b = o[i];
        v[i] = a >= b ? a - b : a + p_ - b;
    }
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    if (is_zero() || o.is_zero()) return FpPoly(p_);
    std::vector<std::uint64_t> v(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            std::uint64_t t = mulmod_u64(coeffs_[i], o.coeffs_[j], p_);
            std::uint64_t s = v[i + j] + t;
            if (s >= p_) s -= p_;
            v[i + j] = s;
        }
    }
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::operator*(std::uint64_t s) const {
    s %= p_;
    std::vector<std::uint64_t> v(coeffs_.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = mulmod_u64(coeffs_[i], s, p_);
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    return (*this) * invmod_u64(lc(), p_);
}

FpPoly FpPoly::derivative() const {
    if (coeffs_.size() <= 1) return FpPoly(p_);
    std::vector<std::uint64_t> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = mulmod_u64(coeffs_[i], i % p_, p_);
    return FpPoly(p_, std::move(v));
}

std::uint64_t FpPoly::eval(std::uint64_t x) const {
    std::uint64_t r = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        r = mulmod_u64(r, x, p_);
        r += coeffs_[i];
        if (r >= p_) r -= p_;
    }
    return r;
}

void fp_divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    if (b.is_zero()) throw std::domain_error("fp_divrem: zero divisor");
    std::uint64_t p = a.p();
    if (a.degree() < b.degree()) {
        q = FpPoly(p);
        r = a;
        return;
    }
    std::vector<std::uint64_t> rem = a.coeffs();
    std::vector<std::uint64_t> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, 0);
    std::uint64_t inv = invmod_u64(b.lc(), p);
    size_t db = static_cast<size_t>(b.degree());
    for (size_t k = quot.size(); k-- > 0;) {
        std::uint64_t lead = rem[k + db];
        if (lead == 0) continue;
        std::uint64_t c = mulmod_u64(lead, inv, p);
        quot[k] = c;
        for (size_t j = 0; j <= db; ++j) {
            std::uint64_t t = mulmod_u64(c, b[j], p);
            std::uint64_t& slot = rem[k + j];
            slot = slot >= t ? slot - t : slot + p - t;
        }
    }
    rem.resize(db);
    q = FpPoly(p, std::move(quot));
    r = FpPoly(p, std::move(rem));
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    fp_divrem(a, b, q, r);
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_rem(a, b);
        a = b;
        b = r;
    }
    return a.monic();
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod) {
    FpPoly result(base.p(), {1});
    FpPoly b = fp_rem(base, mod);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        result = fp_rem(result * result, mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) result = fp_rem(result * b, mod);
    }
    return result;
}

bool fp_is_squarefree(const FpPoly& f) {
    if (f.is_zero()) return false;
    FpPoly d = f.derivative();
    if (d.is_zero()) return f.degree() == 0;
    return fp_gcd(f, d).degree() == 0;
}

namespace {

// equal-degree splitting (Cantor-Zassenhaus, odd p), deterministic seeding
void edf(const FpPoly& f, long d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    std::uint64_t p = f.p();
    Int exponent = (pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d)) - 1) / 2;
    while (true) {
        std::vector<std::uint64_t> rc(static_cast<size_t>(f.degree()), 0);
        for (auto& c : rc) c = rng() % p;
        FpPoly r(p, std::move(rc));
        if (r.degree() < 1) continue;
        FpPoly g = fp_gcd(f, r);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            FpPoly q, rem;
            fp_divrem(f, g, q, rem);
            edf(q.monic(), d, rng, out);
            return;
        }
        FpPoly h = fp_powmod(r, exponent, f);
        h = h - FpPoly(p, {1});
        g = fp_gcd(f, h);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, rng, out);
            FpPoly q, rem;
            fp_divrem(f, g, q, rem);
            edf(q.monic(), d, rng, out);
            return;
        }
    }
}

std::uint64_t poly_hash(const FpPoly& f) {
    std::uint64_t h = 1469598103934665603ull ^ f.p();
    for (auto c : f.coeffs()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

} // namespace

std::vector<std::pair<FpPoly, unsigned>> fp_factor(const FpPoly& f0) {
    if (f0.is_zero()) throw std::domain_error("fp_factor: zero polynomial");
    std::vector<std::pair<FpPoly, unsigned>> out;
    std::uint64_t p = f0.p();
    FpPoly f = f0.monic();
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(poly_hash(f0));

    // square-free reduction: since our callers only factor squarefree inputs or
    // small polynomials, handle multiplicities by repeated gcd stripping.
    std::vector<std::pair<FpPoly, unsigned>> stack{{f, 1}};
    while (!stack.empty()) {
        auto [g, mult] = stack.back();
        stack.pop_back();
        if (g.degree() == 0) continue;
        FpPoly d = g.derivative();
        if (d.is_zero()) {
            // g = h(x^p); over F_p this is h(x)^p
            std::vector<std::uint64_t> hc(static_cast<size_t>(g.degree() / static_cast<long>(p)) + 1, 0);
            for (size_t i = 0; i < hc.size(); ++i) hc[i] = g[i * static_cast<size_t>(p)];
            stack.push_back({FpPoly(p, std::move(hc)), mult * static_cast<unsigned>(p)});
            continue;
        }
        FpPoly sq = fp_gcd(g, d);
        if (sq.degree() > 0) {
            FpPoly q, r;
            fp_divrem(g, sq, q, r);
            stack.push_back({q.monic(), mult});
            // leftover multiplicities: divide g by the squarefree part repeatedly
            FpPoly rest = sq;
            stack.push_back({rest.monic(), mult});
            // note: this peels one layer; the loop converges since degrees drop
            // and duplicate factors are merged below.
            continue;
        }
        // g squarefree: distinct-degree then equal-degree
        FpPoly h = FpPoly::x(p);
        FpPoly rem_poly = g;
        Int pz(static_cast<unsigned long>(p));
        for (long d1 = 1; rem_poly.degree() >= 2 * d1; ++d1) {
            h = fp_powmod(h, pz, rem_poly);
            FpPoly gd = fp_gcd(rem_poly, h - FpPoly::x(p));
            if (gd.degree() > 0) {
                std::vector<FpPoly> pieces;
                edf(gd, d1, rng, pieces);
                for (auto& piece : pieces) out.emplace_back(piece, mult);
                FpPoly q, r;
                fp_divrem(rem_poly, gd, q, r);
                rem_poly = q.monic();
                h = fp_rem(h, rem_poly);
            }
        }
        if (rem_poly.degree() > 0) out.emplace_back(rem_poly.monic(), mult);
    }
    // merge duplicates
    std::vector<std::pair<FpPoly, unsigned>> merged;
    for (auto& [g, m] : out) {
        bool found = false;
        for (auto& [h, n] : merged) {
            if (h == g) { n += m; found = true; break; }
        }
        if (!found) merged.emplace_back(g, m);
    }
    // deterministic order: degree, then coefficients from the top
    std::sort(merged.begin(), merged.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        const auto& ca = a.first.coeffs();
        const auto& cb = b.first.coeffs();
        for (size_t i = ca.size(); i-- > 0;) {
            if (ca[i] != cb[i]) return ca[i] < cb[i];
        }
        return false;
    });
    return merged;
}

std::vector<std::uint64_t> fp_roots(const FpPoly& f) {
    if (f.is_zero()) throw std::domain_error("fp_roots: zero polynomial");
    std::uint64_t p = f.p();
    // roots of gcd(f, x^p - x)
    FpPoly xp = fp_powmod(FpPoly::x(p), Int(static_cast<unsigned long>(p)), f);
    FpPoly g = fp_gcd(f, xp - FpPoly::x(p));
    std::vector<std::uint64_t> roots;
    if (g.degree() <= 0) return roots;
    for (auto& [fac, mult] : fp_factor(g)) {
        if (fac.degree() == 1) {
            // x + c -> root -c
            std::uint64_t c = fac[0];
            roots.push_back(c == 0 ? 0 : p - c);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool fp_is_irreducible(const FpPoly& f) {
    if (f.degree() <= 0) return false;
    if (f.degree() == 1) return true;
    auto fac = fp_factor(f);
    return fac.size() == 1 && fac[0].second == 1;
}

} // namespace torsioncap
