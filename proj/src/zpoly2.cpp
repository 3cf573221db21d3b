#include "torsioncap/zpoly2.hpp"

#include <sstream>
#include <stdexcept>

#include "torsioncap/prs.hpp"

namespace torsioncap {

ZPoly2 ZPoly2::variable(int which) {
    ZPoly2 r;
    if (which == 0) r.terms_[{1, 0}] = 1;
    else r.terms_[{0, 1}] = 1;
    return r;
}

ZPoly2 ZPoly2::monomial(const Int& c, unsigned e0, unsigned e1) {
    ZPoly2 r;
    if (c != 0) r.terms_[{e0, e1}] = c;
    return r;
}

void ZPoly2::prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

long ZPoly2::degree(int var) const {
    long d = -1;
    for (const auto& [k, c] : terms_) {
        long e = var == 0 ? k.first : k.second;
        if (e > d) d = e;
    }
    return d;
}

long ZPoly2::total_degree() const {
    long d = -1;
    for (const auto& [k, c] : terms_) {
        long e = static_cast<long>(k.first) + k.second;
        if (e > d) d = e;
    }
    return d;
}

ZPoly2 ZPoly2::operator-() const {
    ZPoly2 r = *this;
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

ZPoly2 ZPoly2::operator+(const ZPoly2& o) const {
    ZPoly2 r = *this;
    for (const auto& [k, c] : o.terms_) r.terms_[k] += c;
    r.prune();
    return r;
}

ZPoly2 ZPoly2::operator-(const ZPoly2& o) const {
    ZPoly2 r = *this;
    for (const auto& [k, c] : o.terms_) r.terms_[k] -= c;
    r.prune();
    return r;
}

ZPoly2 ZPoly2::operator*(const ZPoly2& o) const {
    ZPoly2 r;
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            Key k{ka.first + kb.first, ka.second + kb.second};
            r.terms_[k] += ca * cb;
        }
    }
    r.prune();
    return r;
}

ZPoly2 ZPoly2::operator*(const Int& s) const {
    if (s == 0) return ZPoly2();
    ZPoly2 r = *this;
    for (auto& [k, c] : r.terms_) c *= s;
    return r;
}

ZPoly2 ZPoly2::pow(unsigned e) const {
    ZPoly2 r(Int(1));
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
}

Int ZPoly2::content() const {
    Int g = 0;
    for (const auto& [k, c] : terms_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly2 ZPoly2::primitive_part() const {
    if (is_zero()) return ZPoly2();
    Int g = content();
    // sign: make the lexicographically largest term positive
    const auto& last = std::prev(terms_.end());
    if (last->second < 0) g = -g;
    ZPoly2 r = *this;
    for (auto& [k, c] : r.terms_) c /= g;
    return r;
}

ZPoly ZPoly2::eval_var(int var, const Int& value) const {
    std::map<unsigned, Int> acc;
    for (const auto& [k, c] : terms_) {
        unsigned keep = var == 0 ? k.second : k.first;
        unsigned drop = var == 0 ? k.first : k.second;
        acc[keep] += c * pow_int(value, drop);
    }
    std::vector<Int> v;
    for (const auto& [e, c] : acc) {
        if (v.size() <= e) v.resize(e + 1, Int(0));
        v[e] = c;
    }
    return ZPoly(std::move(v));
}

Int ZPoly2::eval(const Int& v0, const Int& v1) const {
    Int r = 0;
    for (const auto& [k, c] : terms_) {
        r += c * pow_int(v0, k.first) * pow_int(v1, k.second);
    }
    return r;
}

Rat ZPoly2::eval(const Rat& v0, const Rat& v1) const {
    Rat r = 0;
    for (const auto& [k, c] : terms_) {
        Rat t(c);
        for (unsigned i = 0; i < k.first; ++i) t *= v0;
        for (unsigned i = 0; i < k.second; ++i) t *= v1;
        r += t;
    }
    return r;
}

std::vector<ZPoly> ZPoly2::coeffs_in(int var) const {
    long d = degree(var);
    std::vector<std::vector<Int>> tmp(static_cast<size_t>(d + 1));
    for (const auto& [k, c] : terms_) {
        unsigned main_e = var == 0 ? k.first : k.second;
        unsigned other_e = var == 0 ? k.second : k.first;
        auto& row = tmp[main_e];
        if (row.size() <= other_e) row.resize(other_e + 1, Int(0));
        row[other_e] = c;
    }
    std::vector<ZPoly> out;
    out.reserve(tmp.size());
    for (auto& row : tmp) out.emplace_back(std::move(row));
    return out;
}

ZPoly2 ZPoly2::from_coeffs_in(int var, const std::vector<ZPoly>& cs) {
    ZPoly2 r;
    for (size_t e = 0; e < cs.size(); ++e) {
        for (size_t j = 0; j < cs[e].coeffs().size(); ++j) {
            const Int& c = cs[e].coeffs()[j];
            if (c == 0) continue;
            Key k = var == 0 ? Key{static_cast<unsigned>(e), static_cast<unsigned>(j)}
                             : Key{static_cast<unsigned>(j), static_cast<unsigned>(e)};
            r.terms_[k] = c;
        }
    }
    return r;
}

ZPoly2 ZPoly2::shear_first(const Int& lambda) const {
    // first variable b -> (u - lambda * c); u takes the first slot
    ZPoly2 u = ZPoly2::variable(0);
    ZPoly2 c = ZPoly2::variable(1);
    ZPoly2 repl = u - c * lambda;
    ZPoly2 r;
    for (const auto& [k, coef] : terms_) {
        ZPoly2 t = repl.pow(k.first) * ZPoly2::monomial(coef, 0, k.second);
        r = r + t;
    }
    return r;
}

bool ZPoly2::exact_divide(const ZPoly2& divisor, ZPoly2& q) const {
    if (divisor.is_zero()) throw std::domain_error("ZPoly2::exact_divide: zero divisor");
    // division in lex order on (e0, e1) with leading term of the divisor
    ZPoly2 rem = *this;
    ZPoly2 quot;
    const auto& dl = *std::prev(divisor.terms_.end());
    while (!rem.is_zero()) {
        const auto& rl = *std::prev(rem.terms_.end());
        if (rl.first.first < dl.first.first || rl.first.second < dl.first.second) return false;
        if (rl.second % dl.second != 0) return false;
        Key k{rl.first.first - dl.first.first, rl.first.second - dl.first.second};
        Int c = rl.second / dl.second;
        ZPoly2 t = ZPoly2::monomial(c, k.first, k.second);
        quot = quot + t;
        rem = rem - t * divisor;
    }
    q = quot;
    return true;
}

ZPoly2 ZPoly2::strip_var_power(int var, unsigned* removed) const {
    if (is_zero()) {
        if (removed) *removed = 0;
        return *this;
    }
    unsigned minexp = ~0u;
    for (const auto& [k, c] : terms_) {
        unsigned e = var == 0 ? k.first : k.second;
        if (e < minexp) minexp = e;
    }
    if (removed) *removed = minexp;
    if (minexp == 0) return *this;
    ZPoly2 r;
    for (const auto& [k, c] : terms_) {
        Key nk = var == 0 ? Key{k.first - minexp, k.second} : Key{k.first, k.second - minexp};
        r.terms_[nk] = c;
    }
    return r;
}

std::string ZPoly2::to_string(const std::string& v0, const std::string& v1) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // render highest lex term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        Int a = c > 0 ? c : Int(-c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool need_coeff = (a != 1) || (k.first == 0 && k.second == 0);
        if (need_coeff) os << a.get_str();
        bool star = need_coeff;
        if (k.first > 0) {
            if (star) os << "*";
            os << v0;
            if (k.first > 1) os << "^" << k.first;
            star = true;
        }
        if (k.second > 0) {
            if (star) os << "*";
            os << v1;
            if (k.second > 1) os << "^" << k.second;
        }
    }
    return os.str();
}

namespace {

struct ZPolyOps {
    static ZPoly zero() { return ZPoly(); }
    static ZPoly one() { return ZPoly(Int(1)); }
    static bool is_zero(const ZPoly& a) { return a.is_zero(); }
    static ZPoly neg(const ZPoly& a) { return -a; }
    static ZPoly add(const ZPoly& a, const ZPoly& b) { return a + b; }
    static ZPoly sub(const ZPoly& a, const ZPoly& b) { return a - b; }
    static ZPoly mul(const ZPoly& a, const ZPoly& b) { return a * b; }
    static ZPoly exact_div(const ZPoly& a, const ZPoly& b) {
        ZPoly q;
        if (!a.exact_divide(b, q)) throw std::runtime_error("prs: non-exact ZPoly division");
        return q;
    }
};

} // namespace

ZPoly resultant_bivariate(const ZPoly2& f, const ZPoly2& g, int eliminate_var) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant: zero input");
    if (f.degree(eliminate_var) <= 0 && g.degree(eliminate_var) <= 0) {
        throw std::domain_error("resultant: variable absent from both inputs");
    }
    auto A = f.coeffs_in(eliminate_var);
    auto B = g.coeffs_in(eliminate_var);
    auto chain = subresultant_prs<ZPoly, ZPolyOps>(A, B);
    return chain.resultant;
}

bool subresultant_degree1(const ZPoly2& f, const ZPoly2& g, int eliminate_var,
                          ZPoly& s1, ZPoly& s0) {
    auto A = f.coeffs_in(eliminate_var);
    auto B = g.coeffs_in(eliminate_var);
    auto chain = subresultant_prs<ZPoly, ZPolyOps>(A, B);
    for (const auto& elem : chain.chain) {
        long d = static_cast<long>(elem.size()) - 1;
        while (d >= 0 && elem[static_cast<size_t>(d)].is_zero()) --d;
        if (d == 1) {
            s1 = elem[1];
            s0 = elem[0];
            return true;
        }
    }
    return false;
}

ZPoly2 zpoly2_gcd(const ZPoly2& f, const ZPoly2& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    // gcd in (Z[c])[b]: content gcd times primitive gcd via PRS; the primitive
    // gcd is recovered as the last nonzero chain element when the resultant
    // vanishes, made primitive over its coefficient ring.
    auto A = f.coeffs_in(0);
    auto B = g.coeffs_in(0);
    // content in Z[c] of a (Z[c])[b] polynomial
    auto content_c = [](const std::vector<ZPoly>& v) {
        ZPoly acc;
        for (const auto& c : v) acc = zpoly_gcd(acc, c);
        return acc;
    };
    ZPoly contA = content_c(A), contB = content_c(B);
    ZPoly contG = zpoly_gcd(contA, contB);
    // primitive parts
    std::vector<ZPoly> pA, pB;
    for (const auto& c : A) { ZPoly q; c.exact_divide(contA, q); pA.push_back(q); }
    for (const auto& c : B) { ZPoly q; c.exact_divide(contB, q); pB.push_back(q); }
    auto chain = subresultant_prs<ZPoly, ZPolyOps>(pA, pB);
    if (!chain.resultant.is_zero()) {
        // coprime primitive parts: gcd is the content gcd alone
        return ZPoly2::from_coeffs_in(1, {contG});
    }
    // last chain element of positive degree before the zero remainder
    const std::vector<ZPoly>* lastp = nullptr;
    for (const auto& elem : chain.chain) {
        long d = static_cast<long>(elem.size()) - 1;
        while (d >= 0 && elem[static_cast<size_t>(d)].is_zero()) --d;
        if (d >= 1) lastp = &elem;
    }
    if (!lastp) {
        return ZPoly2::from_coeffs_in(1, {contG});
    }
    // make primitive in Z[c]
    ZPoly cc = content_c(*lastp);
    std::vector<ZPoly> prim;
    for (const auto& c : *lastp) { ZPoly q; c.exact_divide(cc, q); prim.push_back(q); }
    ZPoly2 gb = ZPoly2::from_coeffs_in(0, prim);
    ZPoly2 cg2 = ZPoly2::from_coeffs_in(1, {contG});
    return (gb * cg2).primitive_part();
}

bool zpoly2_is_squarefree(const ZPoly2& f) {
    if (f.is_zero()) return false;
    // specialize along lines (b, c) = (a1*t + a0, b1*t + b0); a squarefree
    // specialization certifies the bivariate polynomial squarefree
    const long lines[][4] = {{1, 0, 1, 1}, {1, 2, 1, 0}, {2, 1, 1, 3}, {1, 5, 3, 2}, {3, 1, 1, 7}};
    for (const auto& L : lines) {
        ZPoly t = ZPoly(std::vector<Int>{Int(L[1]), Int(L[0])});
        ZPoly u = ZPoly(std::vector<Int>{Int(L[3]), Int(L[2])});
        // substitute: sum c_{ij} t^i u^j
        ZPoly spec;
        for (const auto& [k, c] : f.terms()) {
            ZPoly term(c);
            for (unsigned i = 0; i < k.first; ++i) term = term * t;
            for (unsigned i = 0; i < k.second; ++i) term = term * u;
            spec = spec + term;
        }
        if (spec.degree() != f.total_degree()) continue;  // line lowered the degree
        if (spec.is_zero()) continue;
        ZPoly gg = zpoly_gcd(spec, spec.derivative());
        if (gg.degree() == 0) return true;
    }
    return false;
}

} // namespace torsioncap
