#include "torsioncap/numberfield.hpp"

#include <sstream>
#include <stdexcept>

#include "torsioncap/zpoly2.hpp"

namespace torsioncap {

NumberField::NumberField(ZPoly mp, std::string gen)
    : minpoly_(std::move(mp)), minpoly_q_(QPoly(minpoly_)), gen_name_(std::move(gen)),
      degree_(static_cast<unsigned>(minpoly_.degree())) {}

std::shared_ptr<const NumberField> NumberField::create(const ZPoly& minpoly,
                                                       const std::string& gen_name) {
    if (minpoly.degree() < 1) throw std::domain_error("NumberField: constant modulus");
    if (minpoly.lc() != 1) throw std::domain_error("NumberField: modulus not monic");
    if (!is_irreducible_over_q(minpoly)) {
        throw std::domain_error("NumberField: reducible modulus");
    }
    return std::shared_ptr<const NumberField>(new NumberField(minpoly, gen_name));
}

std::shared_ptr<const NumberField> NumberField::create_certified(const ZPoly& minpoly,
                                                                 const std::string& gen_name) {
    if (minpoly.degree() < 1) throw std::domain_error("NumberField: constant modulus");
    if (minpoly.lc() != 1) throw std::domain_error("NumberField: modulus not monic");
    return std::shared_ptr<const NumberField>(new NumberField(minpoly, gen_name));
}

NFElem::NFElem(NumberFieldPtr K, QPoly rep) : K_(std::move(K)) {
    if (!K_) throw std::invalid_argument("NFElem: null field");
    if (rep.degree() >= static_cast<long>(K_->degree())) {
        QPoly q, r;
        qpoly_divrem(rep, K_->minpoly_q(), q, r);
        rep_ = r;
    } else {
        rep_ = std::move(rep);
    }
}

NFElem NFElem::operator-() const { return NFElem(K_, -rep_); }

NFElem NFElem::operator+(const NFElem& o) const { return NFElem(K_, rep_ + o.rep_); }

NFElem NFElem::operator-(const NFElem& o) const { return NFElem(K_, rep_ - o.rep_); }

NFElem NFElem::operator*(const NFElem& o) const { return NFElem(K_, rep_ * o.rep_); }

NFElem NFElem::inverse() const {
    if (rep_.is_zero()) throw std::domain_error("NFElem: inverse of zero");
    // extended Euclid: s*rep + t*minpoly = g (constant)
    QPoly r0 = K_->minpoly_q(), r1 = rep_;
    QPoly t0, t1(Rat(1));
    while (!r1.is_zero()) {
        QPoly q, r;
        qpoly_divrem(r0, r1, q, r);
        QPoly nt = t0 - q * t1;
        r0 = r1; r1 = r;
        t0 = t1; t1 = nt;
    }
    if (r0.degree() != 0) throw std::domain_error("NFElem: modulus not irreducible?");
    Rat inv = 1 / r0[0];
    return NFElem(K_, t0 * inv);
}

NFElem NFElem::pow(unsigned long e) const {
    NFElem r = NFElem::from_rat(K_, Rat(1));
    NFElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string NFElem::to_string() const {
    return rep_.to_string(K_ ? K_->gen_name() : "t");
}

bool nfelem_less(const NFElem& a, const NFElem& b) {
    return qpoly_less(a.rep(), b.rep());
}

KPoly::KPoly(NumberFieldPtr K, std::vector<NFElem> coeffs)
    : K_(std::move(K)), coeffs_(std::move(coeffs)) {
    normalize();
}

KPoly KPoly::from_qpoly(NumberFieldPtr K, const QPoly& f) {
    std::vector<NFElem> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.push_back(NFElem::from_rat(K, c));
    return KPoly(K, std::move(v));
}

void KPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

NFElem KPoly::operator[](size_t i) const {
    if (i >= coeffs_.size()) return NFElem::from_rat(K_, Rat(0));
    return coeffs_[i];
}

const NFElem& KPoly::lc() const {
    if (coeffs_.empty()) throw std::domain_error("KPoly::lc on zero polynomial");
    return coeffs_.back();
}

KPoly KPoly::operator-() const {
    KPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

KPoly KPoly::operator+(const KPoly& o) const {
    std::vector<NFElem> v;
    size_t n = std::max(coeffs_.size(), o.coeffs_.size());
    v.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        NFElem a = i < coeffs_.size() ? coeffs_[i] : NFElem::from_rat(K_, Rat(0));
        NFElem b = i < o.coeffs_.size() ? o.coeffs_[i] : NFElem::from_rat(K_, Rat(0));
        v.push_back(a + b);
    }
    return KPoly(K_, std::move(v));
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator*(const KPoly& o) const {
    if (is_zero() || o.is_zero()) return KPoly(K_, {});
    std::vector<NFElem> v(coeffs_.size() + o.coeffs_.size() - 1, NFElem::from_rat(K_, Rat(0)));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            v[i + j] = v[i + j] + coeffs_[i] * o.coeffs_[j];
        }
    }
    return KPoly(K_, std::move(v));
}

KPoly KPoly::operator*(const NFElem& s) const {
    KPoly r = *this;
    for (auto& c : r.coeffs_) c = c * s;
    r.normalize();
    return r;
}

bool KPoly::operator==(const KPoly& o) const {
    if (coeffs_.size() != o.coeffs_.size()) return false;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (!(coeffs_[i] == o.coeffs_[i])) return false;
    }
    return true;
}

NFElem KPoly::eval(const NFElem& x) const {
    NFElem r = NFElem::from_rat(K_, Rat(0));
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

KPoly KPoly::derivative() const {
    if (coeffs_.size() <= 1) return KPoly(K_, {});
    std::vector<NFElem> v;
    v.reserve(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        v.push_back(coeffs_[i] * NFElem::from_rat(K_, Rat(static_cast<unsigned long>(i))));
    }
    return KPoly(K_, std::move(v));
}

KPoly KPoly::monic() const {
    if (is_zero()) return *this;
    NFElem inv = lc().inverse();
    return (*this) * inv;
}

KPoly KPoly::shift(const NFElem& a) const {
    KPoly r(K_, {});
    KPoly xa(K_, {a, NFElem::from_rat(K_, Rat(1))});
    for (size_t i = coeffs_.size(); i-- > 0;) {
        r = r * xa + KPoly(K_, {coeffs_[i]});
    }
    return r;
}

void kpoly_divrem(const KPoly& a, const KPoly& b, KPoly& q, KPoly& r) {
    if (b.is_zero()) throw std::domain_error("kpoly_divrem: zero divisor");
    auto K = a.field();
    if (a.degree() < b.degree()) {
        q = KPoly(K, {});
        r = a;
        return;
    }
    std::vector<NFElem> rem = a.coeffs();
    std::vector<NFElem> quot(static_cast<size_t>(a.degree() - b.degree()) + 1,
                             NFElem::from_rat(K, Rat(0)));
    NFElem inv = b.lc().inverse();
    size_t db = static_cast<size_t>(b.degree());
    for (size_t k = quot.size(); k-- > 0;) {
        NFElem lead = rem[k + db];
        if (lead.is_zero()) continue;
        NFElem c = lead * inv;
        quot[k] = c;
        for (size_t j = 0; j <= db; ++j) {
            rem[k + j] = rem[k + j] - c * b[j];
        }
    }
    rem.resize(db, NFElem::from_rat(K, Rat(0)));
    q = KPoly(K, std::move(quot));
    r = KPoly(K, std::move(rem));
}

KPoly kpoly_gcd(const KPoly& a, const KPoly& b) {
    KPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        KPoly q, r;
        kpoly_divrem(r0, r1, q, r);
        r0 = r1;
        r1 = r;
    }
    if (r0.is_zero()) return r0;
    return r0.monic();
}

namespace {

// norm of g(x) over K: Res_t(minpoly(t), g(x; t)) in Q[x], computed over Z
// after clearing denominators (scalar factors are irrelevant to the callers).
ZPoly norm_poly(const KPoly& g) {
    auto K = g.field();
    // clear denominators across all coefficients
    Int den = 1;
    for (const auto& c : g.coeffs()) {
        for (const auto& q : c.rep().coeffs()) {
            Int d = q.get_den();
            Int gg;
            mpz_gcd(gg.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            den = den / gg * d;
        }
    }
    // bivariate in (x, t)
    ZPoly2 G;
    for (size_t i = 0; i < g.coeffs().size(); ++i) {
        const QPoly& rep = g.coeffs()[i].rep();
        for (size_t j = 0; j < rep.coeffs().size(); ++j) {
            Rat scaled = rep.coeffs()[j] * Rat(den);
            G = G + ZPoly2::monomial(scaled.get_num(), static_cast<unsigned>(i),
                                     static_cast<unsigned>(j));
        }
    }
    ZPoly2 F;
    for (size_t j = 0; j < K->minpoly().coeffs().size(); ++j) {
        F = F + ZPoly2::monomial(K->minpoly().coeffs()[j], 0, static_cast<unsigned>(j));
    }
    return resultant_bivariate(F, G, 1);
}

} // namespace

std::vector<std::pair<KPoly, unsigned>> factor_over_K(const KPoly& g0) {
    if (g0.is_zero()) throw std::domain_error("factor_over_K: zero polynomial");
    auto K = g0.field();
    std::vector<std::pair<KPoly, unsigned>> out;
    KPoly g = g0.monic();
    if (g.degree() == 0) return out;

    // distinct irreducible factors via the squarefree part; multiplicities are
    // recovered afterwards by trial division
    KPoly w = g;
    {
        KPoly d = g.derivative();
        KPoly s = kpoly_gcd(g, d);
        if (s.degree() > 0) {
            KPoly q, r;
            kpoly_divrem(g, s, q, r);
            w = q.monic();
        }
    }
    std::vector<KPoly> distinct;
    for (int shift = 0;; ++shift) {
        if (shift > 40) throw std::runtime_error("factor_over_K: no squarefree norm found");
        NFElem s = NFElem::generator(K) * NFElem::from_rat(K, Rat(shift));
        KPoly shifted_poly = shift == 0 ? w : w.shift(-s);
        ZPoly norm = norm_poly(shifted_poly);
        if (norm.degree() != static_cast<long>(w.degree() * K->degree())) continue;
        if (zpoly_gcd(norm, norm.derivative()).degree() != 0) continue;
        for (auto& [nf, nm] : factor_zpoly(norm)) {
            KPoly cand = KPoly::from_qpoly(K, QPoly(nf));
            if (shift != 0) cand = cand.shift(s);
            KPoly fac = kpoly_gcd(w, cand);
            if (fac.degree() >= 1) distinct.push_back(fac);
        }
        break;
    }
    for (auto& fac : distinct) {
        unsigned mult = 0;
        KPoly cur = g;
        while (cur.degree() >= fac.degree()) {
            KPoly q, r;
            kpoly_divrem(cur, fac, q, r);
            if (!r.is_zero()) break;
            ++mult;
            cur = q;
        }
        if (mult > 0) out.emplace_back(fac, mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (size_t i = static_cast<size_t>(a.first.degree()) + 1; i-- > 0;) {
            if (!(a.first[i] == b.first[i])) return nfelem_less(a.first[i], b.first[i]);
        }
        return false;
    });
    return out;
}

std::vector<NFElem> nf_roots(const KPoly& g) {
    if (g.is_zero()) throw std::domain_error("nf_roots: zero polynomial");
    auto K = g.field();
    std::vector<NFElem> roots;
    for (auto& [fac, mult] : factor_over_K(g)) {
        if (fac.degree() == 1) {
            NFElem root = -fac[0];  // monic x + a
            // verified by exact substitution
            if (!g.eval(root).is_zero()) {
                throw std::runtime_error("nf_roots: substitution check failed");
            }
            for (unsigned i = 0; i < mult; ++i) roots.push_back(root);
        }
    }
    std::sort(roots.begin(), roots.end(), nfelem_less);
    return roots;
}

} // namespace torsioncap
