#include "torsioncap/nftorsion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "torsioncap/errors.hpp"

namespace torsioncap {

Int count_points(const FiniteFieldCurve& E) {
    auto F = E.field;
    std::uint64_t q = F->q();
    if (q > 10000) throw std::domain_error("count_points: field too large");
    WeierstrassCurve<FqElem> C{E.a1, E.a2, E.a3, E.a4, E.a6};
    if (C.discriminant().is_zero()) throw std::domain_error("count_points: singular model");
    Int count = 1;  // point at infinity
    bool char2 = (F->p() == 2);
    Int half((q - 1) / 2);
    FqElem one = FqElem::one(F);
    for (std::uint64_t i = 0; i < q; ++i) {
        FqElem x = FqElem::by_index(F, i);
        FqElem alpha = C.a1 * x + C.a3;
        FqElem beta = x * x * x + C.a2 * x * x + C.a4 * x + C.a6;
        if (char2) {
            if (alpha.is_zero()) {
                count += 1;  // y^2 = beta has a unique root
            } else {
                FqElem t = beta * (alpha * alpha).inverse();
                count += (t.trace_to_f2() == 0) ? 2 : 0;
            }
        } else {
            FqElem disc = alpha * alpha + WeierstrassCurve<FqElem>::scaled(beta, 4);
            if (disc.is_zero()) {
                count += 1;
            } else {
                count += (disc.pow(half) == one) ? 2 : 0;
            }
        }
    }
    return count;
}

namespace {

// integer whose prime support contains every prime of bad reduction coming
// from this element (numerator content included)
Int nf_norm_support(const NFElem& a) {
    auto K = a.field();
    if (a.is_zero()) return Int(0);
    Int den = 1;
    for (const auto& q : a.rep().coeffs()) {
        Int d = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    std::vector<Int> v(a.rep().coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) {
        Rat scaled = a.rep().coeffs()[i] * Rat(den);
        v[i] = scaled.get_num();
    }
    return zpoly_resultant(K->minpoly(), ZPoly(std::move(v)));
}

Int rep_denominator(const NFElem& a) {
    Int den = 1;
    for (const auto& q : a.rep().coeffs()) {
        Int d = q.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
        den = den / g * d;
    }
    return den;
}

} // namespace

std::vector<ReductionCount> reduction_counts(const NumberFieldPtr& K, const NFElem& b,
                                             const NFElem& c, unsigned long max_prime,
                                             size_t max_usable) {
    std::vector<ReductionCount> out;
    // bad data for reduction: primes dividing the minpoly discriminant, the
    // coefficient denominators, or the discriminant norm of the model
    Int mp_disc = zpoly_resultant(K->minpoly(), K->minpoly().derivative());
    Int dens = rep_denominator(b) * rep_denominator(c);
    WeierstrassCurve<NFElem> C = kubert_curve(b, c);
    NFElem disc_elem = C.discriminant();
    if (disc_elem.is_zero()) throw std::domain_error("reduction_counts: singular model");
    Int disc_norm = nf_norm_support(disc_elem);

    for (long p : primes_up_to(static_cast<long>(max_prime))) {
        if (p < 5) continue;
        if (mp_disc % p == 0 || dens % p == 0 || disc_norm % p == 0) continue;
        std::uint64_t pu = static_cast<std::uint64_t>(p);
        FpPoly f = FpPoly::from_zpoly(K->minpoly(), pu);
        if (static_cast<unsigned>(f.degree()) != K->degree()) continue;
        for (auto& [g, mult] : fp_factor(f)) {
            if (mult != 1) throw std::logic_error("reduction_counts: non-squarefree split");
            unsigned k = static_cast<unsigned>(g.degree());
            std::uint64_t q = 1;
            bool fits = true;
            for (unsigned i = 0; i < k; ++i) {
                q *= pu;
                if (q > 10000) { fits = false; break; }
            }
            if (!fits) continue;
            auto Fq = FqContext::with_modulus(g);
            // push a coefficient through t -> tbar
            auto push = [&](const NFElem& a) {
                FqElem acc = FqElem::zero(Fq);
                FqElem tbar = FqElem::generator(Fq);
                const auto& rep = a.rep();
                for (size_t i = rep.coeffs().size(); i-- > 0;) {
                    const Rat& co = rep.coeffs()[i];
                    Int num = co.get_num() % p;
                    if (num < 0) num += p;
                    Int den = co.get_den() % p;
                    std::uint64_t nu = mpz_get_ui(num.get_mpz_t());
                    std::uint64_t de = mpz_get_ui(den.get_mpz_t());
                    std::uint64_t v = mulmod_u64(nu, invmod_u64(de, pu), pu);
                    acc = acc * tbar + FqElem::from_int(Fq, v);
                }
                return acc;
            };
            FiniteFieldCurve E;
            E.field = Fq;
            E.a1 = push(C.a1);
            E.a2 = push(C.a2);
            E.a3 = push(C.a3);
            E.a4 = push(C.a4);
            E.a6 = push(C.a6);
            out.push_back({Int(p), k, count_points(E)});
        }
        std::map<Int, int> chars;
        for (const auto& rc : out) chars[rc.p] = 1;
        if (chars.size() >= max_usable) break;
    }
    return out;
}

TorsionGroup torsion_subgroup(const NumberFieldPtr& K, const NFElem& b, const NFElem& c) {
    if (K->degree() > 6) throw unsupported_error("torsion_subgroup: field degree > 6");
    WeierstrassCurve<NFElem> C = kubert_curve(b, c);
    if (C.discriminant().is_zero()) throw std::domain_error("torsion_subgroup: singular model");

    auto counts = reduction_counts(K, b, c, 200, 6);
    {
        std::map<Int, int> chars;
        for (const auto& rc : counts) chars[rc.p] = 1;
        if (chars.size() < 2) {
            throw undecided_error("torsion_subgroup: fewer than two usable residue characteristics", 1, 0);
        }
    }
    // upper bound: for each small prime l, v_l = min over counts at residue
    // characteristic p != l of ord_l(count)
    Int upper = 1;
    {
        // candidate primes l: every prime factor of any reduction count
        std::set<Int> ls;
        for (const auto& rc : counts) {
            for (const auto& [l, e] : factor_integer(rc.count)) ls.insert(l);
        }
        for (const auto& l : ls) {
            unsigned best = ~0u;
            for (const auto& rc : counts) {
                if (rc.p == l) continue;
                best = std::min(best, ord_p(rc.count, l));
            }
            if (best != ~0u && best > 0) upper *= pow_int(l, best);
        }
    }

    // lower bound: the subgroup generated by (0,0) and the 2-division cubic roots
    NFElem zero = NFElem::from_rat(K, Rat(0));
    CurvePoint<NFElem> P0 = CurvePoint<NFElem>::affine(zero, zero);
    if (!on_curve(C, P0)) throw std::domain_error("torsion_subgroup: (0,0) not on the model");
    long cap = 200;
    if (upper < cap) cap = static_cast<long>(mpz_get_ui(Int(upper).get_mpz_t()));
    long n0 = point_order(C, P0, cap);
    if (n0 <= 0) {
        throw undecided_error("torsion_subgroup: marked point order exceeds the bound", 1, 0);
    }
    // 2-torsion points: roots of the 2-division cubic 4x^3 + b2x^2 + 2b4x + b6
    std::vector<NFElem> cubic{C.b6(), C.b4() + C.b4(), C.b2(), NFElem::from_rat(K, Rat(4))};
    KPoly W(K, std::move(cubic));
    auto roots = nf_roots(W);
    size_t two_pts = 0;
    {
        std::vector<NFElem> distinct;
        for (const auto& r : roots) {
            bool seen = false;
            for (const auto& d : distinct) {
                if (d == r) seen = true;
            }
            if (!seen) distinct.push_back(r);
        }
        two_pts = distinct.size();
    }
    unsigned long t = two_pts == 3 ? 4 : (two_pts >= 1 ? 2 : 1);

    unsigned long n1 = static_cast<unsigned long>(n0), n2 = 1;
    if (t == 2) {
        if (n0 % 2 == 0) {
            // the single 2-torsion point is [n0/2](0,0); nothing new
        } else {
            n1 = 2 * static_cast<unsigned long>(n0);
        }
    } else if (t == 4) {
        if (n0 % 2 == 0) {
            n2 = 2;
        } else {
            n1 = 2 * static_cast<unsigned long>(n0);
            n2 = 2;
        }
    }
    Int lower = Int(static_cast<unsigned long>(n1)) * n2;

    // verify the exhibited points exactly: [n0](0,0) = O with n0 minimal is
    // point_order's contract; each 2-division root gives an order-2 point
    {
        std::vector<NFElem> seen;
        for (const auto& x : roots) {
            bool dup = false;
            for (const auto& s : seen) {
                if (s == x) dup = true;
            }
            if (dup) continue;
            seen.push_back(x);
            NFElem y = -(C.a1 * x + C.a3) * NFElem::from_rat(K, make_rat(Int(1), Int(2)));
            CurvePoint<NFElem> Q = CurvePoint<NFElem>::affine(x, y);
            if (!on_curve(C, Q)) throw std::logic_error("torsion_subgroup: 2-torsion point off curve");
            if (!point_add(C, Q, Q).infinity) throw std::logic_error("torsion_subgroup: claimed point not 2-torsion");
        }
    }

    TorsionGroup g;
    g.n1 = n1;
    g.n2 = n2;
    g.marked_point_order = static_cast<unsigned long>(n0);
    g.upper_bound = upper;
    g.lower_bound = lower;
    if (lower != upper) {
        unsigned long lo = static_cast<unsigned long>(mpz_get_ui(lower.get_mpz_t()));
        unsigned long hi = upper.fits_ulong_p() ? mpz_get_ui(upper.get_mpz_t()) : 0;
        throw undecided_error("torsion_subgroup: bounds do not meet", lo, hi);
    }
    return g;
}

} // namespace torsioncap
