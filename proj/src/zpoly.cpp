#include "torsioncap/zpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "torsioncap/fppoly.hpp"

namespace torsioncap {

namespace {
const Int kZero = 0;
}

ZPoly ZPoly::monomial(const Int& c, size_t e) {
    if (c == 0) return ZPoly();
    std::vector<Int> v(e + 1, Int(0));
    v[e] = c;
    return ZPoly(std::move(v));
}

void ZPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& ZPoly::operator[](size_t i) const {
    if (i >= coeffs_.size()) return kZero;
    return coeffs_[i];
}

const Int& ZPoly::lc() const {
    if (coeffs_.empty()) return kZero;
    return coeffs_.back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator-(const ZPoly& o) const {
    std::vector<Int> v(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] - o[i];
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    std::vector<Int> v(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            v[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return ZPoly(std::move(v));
}

ZPoly ZPoly::operator*(const Int& s) const {
    if (s == 0) return ZPoly();
    ZPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Int ZPoly::eval(const Int& x) const {
    Int r = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

Rat ZPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + Rat(coeffs_[i]);
    return r;
}

ZPoly ZPoly::derivative() const {
    if (coeffs_.size() <= 1) return ZPoly();
    std::vector<Int> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Int(static_cast<unsigned long>(i));
    return ZPoly(std::move(v));
}

Int ZPoly::content() const {
    Int g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (!coeffs_.empty() && coeffs_.back() < 0) g = -g;
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return ZPoly();
    Int c = content();
    ZPoly r = *this;
    for (auto& a : r.coeffs_) a /= c;
    return r;
}

ZPoly ZPoly::shift(const Int& a) const {
    ZPoly r;
    ZPoly xa(std::vector<Int>{a, 1});
    for (size_t i = coeffs_.size(); i-- > 0;) {
        r = r * xa + ZPoly(coeffs_[i]);
    }
    return r;
}

ZPoly ZPoly::scale_arg(const Int& a) const {
    ZPoly r = *this;
    Int p = 1;
    for (size_t i = 0; i < r.coeffs_.size(); ++i) {
        r.coeffs_[i] *= p;
        p *= a;
    }
    r.normalize();
    return r;
}

bool ZPoly::exact_divide(const ZPoly& divisor, ZPoly& q) const {
    if (divisor.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (is_zero()) { q = ZPoly(); return true; }
    if (degree() < divisor.degree()) return false;
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(static_cast<size_t>(degree() - divisor.degree()) + 1, Int(0));
    const Int& dl = divisor.lc();
    for (size_t k = quot.size(); k-- > 0;) {
        Int& lead = rem[k + divisor.coeffs_.size() - 1];
        if (lead == 0) continue;
        if (lead % dl != 0) return false;
        Int c = lead / dl;
        quot[k] = c;
        for (size_t j = 0; j < divisor.coeffs_.size(); ++j) {
            rem[k + j] -= c * divisor.coeffs_[j];
        }
    }
    for (const auto& c : rem) {
        if (c != 0) return false;
    }
    q = ZPoly(std::move(quot));
    return true;
}

ZPoly ZPoly::pseudo_rem(const ZPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("pseudo_rem: zero divisor");
    long dd = divisor.degree();
    ZPoly r = *this;
    if (r.degree() < dd) return r;
    const Int& dl = divisor.lc();
    long e = r.degree() - dd + 1;
    while (!r.is_zero() && r.degree() >= dd) {
        Int lead = r.lc();
        long shift_e = r.degree() - dd;
        ZPoly t = r * dl;
        std::vector<Int> v = t.coeffs();
        for (size_t j = 0; j < divisor.coeffs_.size(); ++j) {
            v[static_cast<size_t>(shift_e) + j] -= lead * divisor.coeffs_[j];
        }
        r = ZPoly(std::move(v));
        --e;
    }
    // keep the convention rem = lc^(deg f - deg g + 1) f mod g
    for (long k = 0; k < e; ++k) r = r * dl;
    return r;
}

std::string ZPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int a = c > 0 ? c : Int(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

std::uint64_t nth_crt_prime(size_t idx) {
    static std::vector<std::uint64_t> cache;
    while (cache.size() <= idx) {
        std::uint64_t candidate = cache.empty() ? ((1ull << 62) - 57) : cache.back() - 2;
        while (!is_prime_u64(candidate)) candidate -= 2;
        cache.push_back(candidate);
    }
    return cache[idx];
}

Int balanced(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

ZPoly abs_content_times_primitive(const ZPoly& f) {
    Int c = f.content();
    if (c < 0) c = -c;
    return f.primitive_part() * c;
}

} // namespace

ZPoly zpoly_gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() && b.is_zero()) return ZPoly();
    if (a.is_zero()) return abs_content_times_primitive(b);
    if (b.is_zero()) return abs_content_times_primitive(a);
    Int ca = a.content(); if (ca < 0) ca = -ca;
    Int cb = b.content(); if (cb < 0) cb = -cb;
    Int cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    ZPoly pa = a.primitive_part();
    ZPoly pb = b.primitive_part();
    if (pa.degree() < pb.degree()) std::swap(pa, pb);
    if (pb.degree() == 0) return ZPoly(cg);

    Int lg;
    mpz_gcd(lg.get_mpz_t(), pa.lc().get_mpz_t(), pb.lc().get_mpz_t());

    long best_deg = pb.degree() + 1;
    Int modulus = 1;
    std::vector<Int> acc;
    ZPoly last_candidate;
    for (size_t pi = 0; pi < 256; ++pi) {
        std::uint64_t p = nth_crt_prime(pi);
        if (mpz_fdiv_ui(pa.lc().get_mpz_t(), p) == 0) continue;
        if (mpz_fdiv_ui(pb.lc().get_mpz_t(), p) == 0) continue;
        FpPoly fa = FpPoly::from_zpoly(pa, p);
        FpPoly fb = FpPoly::from_zpoly(pb, p);
        FpPoly g = fp_gcd(fa, fb);
        if (g.degree() == 0) return ZPoly(cg);
        if (g.degree() > best_deg) continue;
        g = g.monic();
        FpPoly sg = g * mpz_fdiv_ui(lg.get_mpz_t(), p);
        if (g.degree() < best_deg) {
            best_deg = g.degree();
            modulus = 1;
            acc.assign(static_cast<size_t>(best_deg) + 1, Int(0));
            last_candidate = ZPoly();
        }
        Int P(static_cast<unsigned long>(p));
        if (modulus == 1) {
            for (size_t i = 0; i < acc.size(); ++i) acc[i] = Int(static_cast<unsigned long>(sg[i]));
            modulus = P;
        } else {
            std::uint64_t minv = invmod_u64(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
            for (size_t i = 0; i < acc.size(); ++i) {
                std::uint64_t cur = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
                std::uint64_t delta = (sg[i] + p - cur) % p;
                acc[i] += modulus * Int(static_cast<unsigned long>(mulmod_u64(delta, minv, p)));
            }
            modulus *= P;
        }
        std::vector<Int> bal(acc.size());
        for (size_t i = 0; i < acc.size(); ++i) bal[i] = balanced(acc[i], modulus);
        ZPoly candidate = ZPoly(std::move(bal)).primitive_part();
        if (!candidate.is_zero() && candidate == last_candidate) {
            ZPoly q1, q2;
            if (pa.exact_divide(candidate, q1) && pb.exact_divide(candidate, q2)) {
                if (candidate.lc() < 0) candidate = -candidate;
                return candidate * cg;
            }
        }
        last_candidate = candidate;
    }
    throw std::runtime_error("zpoly_gcd: CRT failed to stabilize");
}

Int zpoly_resultant(const ZPoly& A0, const ZPoly& B0) {
    if (A0.is_zero() || B0.is_zero()) throw std::domain_error("zpoly_resultant: zero input");
    ZPoly A = A0, B = B0;
    Int sign = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) sign = -sign;
        std::swap(A, B);
    }
    if (B.degree() == 0) {
        return sign * pow_int(B.lc(), static_cast<unsigned long>(A.degree()));
    }
    Int ca = A.content();
    Int cb = B.content();
    // Res(ca*A', B) = ca^{deg B} * Res(A', B); contents keep their signs here.
    Int t = pow_int(ca, static_cast<unsigned long>(B.degree())) *
            pow_int(cb, static_cast<unsigned long>(A.degree()));
    A = A.primitive_part();
    B = B.primitive_part();
    Int g = 1, h = 1;
    while (true) {
        long delta = A.degree() - B.degree();
        if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) sign = -sign;
        ZPoly R = A.pseudo_rem(B);
        A = B;
        if (R.is_zero()) return Int(0);
        Int denom = g * pow_int(h, static_cast<unsigned long>(delta));
        std::vector<Int> v = R.coeffs();
        for (auto& c : v) {
            if (c % denom != 0) throw std::runtime_error("zpoly_resultant: non-exact division");
            c /= denom;
        }
        B = ZPoly(std::move(v));
        g = A.lc();
        if (delta >= 1) {
            Int num = pow_int(g, static_cast<unsigned long>(delta));
            Int den = pow_int(h, static_cast<unsigned long>(delta - 1));
            if (num % den != 0) throw std::runtime_error("zpoly_resultant: h update failed");
            h = num / den;
        }
        if (B.degree() <= 0) break;
    }
    unsigned long dA = static_cast<unsigned long>(A.degree());
    Int num = pow_int(B.lc(), dA);
    Int den = dA >= 1 ? pow_int(h, dA - 1) : Int(1);
    if (num % den != 0) throw std::runtime_error("zpoly_resultant: final division failed");
    return sign * t * (num / den);
}

ZPoly zpoly_squarefree_part(const ZPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    ZPoly p = f.primitive_part();
    if (p.degree() == 0) return ZPoly(Int(1));
    ZPoly g = zpoly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    ZPoly q;
    if (!p.exact_divide(g, q)) throw std::runtime_error("squarefree_part: division failed");
    return q.primitive_part();
}

std::vector<std::pair<ZPoly, unsigned>> zpoly_squarefree_decomposition(const ZPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree decomposition: zero polynomial");
    std::vector<std::pair<ZPoly, unsigned>> out;
    ZPoly p = f.primitive_part();
    if (p.degree() == 0) return out;
    ZPoly d = p.derivative();
    ZPoly a = zpoly_gcd(p, d);
    ZPoly b, c;
    p.exact_divide(a, b);
    d.exact_divide(a, c);
    unsigned i = 1;
    while (true) {
        ZPoly z = c - b.derivative();
        if (z.is_zero()) {
            if (b.degree() > 0) out.emplace_back(b.primitive_part(), i);
            break;
        }
        ZPoly g = zpoly_gcd(b, z);
        if (g.degree() > 0) out.emplace_back(g.primitive_part(), i);
        ZPoly nb, nc;
        b.exact_divide(g, nb);
        z.exact_divide(g, nc);
        b = nb;
        c = nc;
        ++i;
        if (b.degree() == 0) break;
    }
    return out;
}

} // namespace torsioncap
