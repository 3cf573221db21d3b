#include "torsioncap/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace torsioncap {

namespace {
const Rat kZeroQ = 0;
}

QPoly::QPoly(const ZPoly& f) {
    coeffs_.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) coeffs_.emplace_back(c);
    normalize();
}

QPoly QPoly::monomial(const Rat& c, size_t e) {
    if (c == 0) return QPoly();
    std::vector<Rat> v(e + 1, Rat(0));
    v[e] = c;
    return QPoly(std::move(v));
}

void QPoly::normalize() {
    for (auto& c : coeffs_) c.canonicalize();
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rat& QPoly::operator[](size_t i) const {
    if (i >= coeffs_.size()) return kZeroQ;
    return coeffs_[i];
}

const Rat& QPoly::lc() const {
    if (coeffs_.empty()) return kZeroQ;
    return coeffs_.back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] + o[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const {
    std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < v.size(); ++i) v[i] = (*this)[i] - o[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            v[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& s) const {
    if (s == 0) return QPoly();
    QPoly r = *this;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) r = r * x + coeffs_[i];
    return r;
}

QPoly QPoly::derivative() const {
    if (coeffs_.size() <= 1) return QPoly();
    std::vector<Rat> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rat(static_cast<unsigned long>(i));
    return QPoly(std::move(v));
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    Rat inv = 1 / lc();
    return (*this) * inv;
}

std::pair<ZPoly, Rat> QPoly::to_primitive() const {
    if (is_zero()) return {ZPoly(), Rat(0)};
    Int den = 1;
    for (const auto& c : coeffs_) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<Int> v(coeffs_.size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = coeffs_[i] * Rat(den);
        v[i] = scaled.get_num();
    }
    ZPoly z(std::move(v));
    Int cont = z.content();
    ZPoly prim = z.primitive_part();
    return {prim, make_rat(cont, den)};
}

std::string QPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c == 0) continue;
        Rat a = c > 0 ? c : Rat(-c);
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

void qpoly_divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw std::domain_error("qpoly_divrem: zero divisor");
    if (a.degree() < b.degree()) {
        q = QPoly();
        r = a;
        return;
    }
    std::vector<Rat> rem(a.coeffs());
    std::vector<Rat> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat inv = 1 / b.lc();
    size_t db = static_cast<size_t>(b.degree());
    for (size_t k = quot.size(); k-- > 0;) {
        Rat lead = rem[k + db];
        if (lead == 0) continue;
        Rat c = lead * inv;
        quot[k] = c;
        for (size_t j = 0; j <= db; ++j) {
            rem[k + j] -= c * b[j];
        }
    }
    rem.resize(db);
    q = QPoly(std::move(quot));
    r = QPoly(std::move(rem));
}

QPoly qpoly_gcd(const QPoly& a, const QPoly& b) {
    if (a.is_zero() && b.is_zero()) return QPoly();
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly za = a.to_primitive().first;
    ZPoly zb = b.to_primitive().first;
    return QPoly(zpoly_gcd(za, zb)).monic();
}

bool qpoly_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = static_cast<size_t>(a.degree() + 1); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

QPoly qpoly_squarefree_part(const QPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    auto [z, unit] = f.to_primitive();
    (void)unit;
    return QPoly(zpoly_squarefree_part(z)).monic();
}

RationalFactorization factor_rational_poly(const QPoly& f) {
    if (f.is_zero()) throw std::domain_error("factor_rational_poly: zero polynomial");
    RationalFactorization out;
    auto [z, unit] = f.to_primitive();
    out.unit = unit;
    if (z.degree() == 0) {
        out.unit = out.unit * Rat(z.lc());
        return out;
    }
    // make each reported factor monic; fold leading coefficients into the unit
    for (auto& [fac, mult] : factor_zpoly(z)) {
        QPoly qf(fac);
        Rat l = qf.lc();
        for (unsigned i = 0; i < mult; ++i) out.unit *= l;
        out.factors.emplace_back(qf.monic(), mult);
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
        return qpoly_less(x.first, y.first);
    });
    return out;
}

} // namespace torsioncap
