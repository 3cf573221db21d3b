#include "torsioncap/modcurves.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "torsioncap/curves.hpp"
#include "torsioncap/errors.hpp"
#include "torsioncap/qpoly.hpp"

namespace torsioncap {

namespace {

ZPoly2 var_b() { return ZPoly2::variable(0); }
ZPoly2 var_c() { return ZPoly2::variable(1); }

} // namespace

const KubertInvariants& kubert_invariants() {
    static const KubertInvariants inv = [] {
        KubertInvariants k;
        ZPoly2 b = var_b(), c = var_c();
        ZPoly2 one(Int(1));
        ZPoly2 a1 = one - c;
        // a2 = a3 = -b, a4 = a6 = 0
        k.b2 = a1 * a1 - b * Int(4);
        k.b4 = -(b * a1);
        k.b6 = b * b;
        k.b8 = -(b * b * b);
        k.c4 = k.b2 * k.b2 - k.b4 * Int(24);
        k.c6 = -(k.b2 * k.b2 * k.b2) + k.b2 * k.b4 * Int(36) - k.b6 * Int(216);
        k.disc = -(k.b2 * k.b2 * k.b8) - k.b4 * k.b4 * k.b4 * Int(8) - k.b6 * k.b6 * Int(27) +
                 k.b2 * k.b4 * k.b6 * Int(9);
        ZPoly2 b3 = b * b * b;
        if (!k.disc.exact_divide(b3, k.disc_cofactor)) {
            throw std::logic_error("kubert invariants: disc not divisible by b^3");
        }
        return k;
    }();
    return inv;
}

namespace {

void xp_trim(XPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

XPoly xp_from(const ZPoly2& c0) {
    if (c0.is_zero()) return {};
    return {c0};
}

XPoly xp_sub(const XPoly& a, const XPoly& b) {
    XPoly r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = r[i] + a[i];
        if (i < b.size()) r[i] = r[i] - b[i];
    }
    xp_trim(r);
    return r;
}

XPoly xp_mul(const XPoly& a, const XPoly& b) {
    if (a.empty() || b.empty()) return {};
    XPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    xp_trim(r);
    return r;
}

XPoly xp_pow(const XPoly& a, unsigned e) {
    XPoly r = xp_from(ZPoly2(Int(1)));
    for (unsigned i = 0; i < e; ++i) r = xp_mul(r, a);
    return r;
}

XPoly two_division_cubic() {
    const auto& k = kubert_invariants();
    XPoly w(4);
    w[0] = k.b6;
    w[1] = k.b4 * Int(2);
    w[2] = k.b2;
    w[3] = ZPoly2(Int(4));
    return w;
}

// P_n with psi_n = P_n (n odd) and psi_n = P_n * psi_2 (n even); products of
// even-index entries use psi_2^2 = W
std::vector<XPoly> build_p_table(unsigned upto) {
    const auto& k = kubert_invariants();
    XPoly W = two_division_cubic();
    std::vector<XPoly> table(5);
    table[0] = {};
    table[1] = xp_from(ZPoly2(Int(1)));
    table[2] = xp_from(ZPoly2(Int(1)));
    XPoly p3(5);
    p3[0] = k.b8;
    p3[1] = k.b6 * Int(3);
    p3[2] = k.b4 * Int(3);
    p3[3] = k.b2;
    p3[4] = ZPoly2(Int(3));
    table[3] = p3;
    XPoly p4(7);
    p4[0] = k.b4 * k.b8 - k.b6 * k.b6;
    p4[1] = k.b2 * k.b8 - k.b4 * k.b6;
    p4[2] = k.b8 * Int(10);
    p4[3] = k.b6 * Int(10);
    p4[4] = k.b4 * Int(5);
    p4[5] = k.b2;
    p4[6] = ZPoly2(Int(2));
    table[4] = p4;
    for (unsigned n = 5; n <= upto; ++n) {
        unsigned m = n / 2;
        XPoly next;
        if (n % 2 == 1) {
            XPoly lhs = xp_mul(table[m + 2], xp_pow(table[m], 3));
            XPoly rhs = xp_mul(table[m - 1], xp_pow(table[m + 1], 3));
            if (m % 2 == 0) lhs = xp_mul(lhs, xp_mul(W, W));
            else rhs = xp_mul(rhs, xp_mul(W, W));
            next = xp_sub(lhs, rhs);
        } else {
            XPoly lhs = xp_mul(table[m + 2], xp_pow(table[m - 1], 2));
            XPoly rhs = xp_mul(table[m - 2], xp_pow(table[m + 1], 2));
            next = xp_mul(table[m], xp_sub(lhs, rhs));
        }
        table.push_back(std::move(next));
    }
    return table;
}

const XPoly& p_table_entry(unsigned n) {
    static std::vector<XPoly> table;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (table.size() <= n) table = build_p_table(std::max(n, 13u));
    return table[n];
}

} // namespace

XPoly division_polynomial_x(unsigned N) {
    if (N < 1) throw std::domain_error("division_polynomial_x: N >= 1 required");
    XPoly p = p_table_entry(N);
    if (N % 2 == 1) return p;
    return xp_mul(p, two_division_cubic());
}

XPoly division_polynomial_reduced(unsigned N) {
    if (N < 1) throw std::domain_error("division_polynomial_reduced: N >= 1 required");
    return p_table_entry(N);
}

ZPoly2 division_poly_at_origin(unsigned N) {
    if (N < 1) throw std::domain_error("division_poly_at_origin: N >= 1 required");
    static std::vector<ZPoly2> E;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (E.empty()) {
        const auto& k = kubert_invariants();
        E.resize(5);
        E[0] = ZPoly2();
        E[1] = ZPoly2(Int(1));
        E[2] = -var_b();
        E[3] = k.b8;
        E[4] = -(var_b() * (k.b4 * k.b8 - k.b6 * k.b6));  // psi_2(0,0) * P_4(0)
    }
    for (unsigned n = static_cast<unsigned>(E.size()); n <= N; ++n) {
        unsigned m = n / 2;
        if (n % 2 == 1) {
            E.push_back(E[m + 2] * E[m] * E[m] * E[m] - E[m - 1] * E[m + 1] * E[m + 1] * E[m + 1]);
        } else {
            ZPoly2 num = E[m] * (E[m + 2] * E[m - 1] * E[m - 1] - E[m - 2] * E[m + 1] * E[m + 1]);
            ZPoly2 q;
            if (!num.exact_divide(E[2], q)) {
                throw std::logic_error("division_poly_at_origin: even-index division failed");
            }
            E.push_back(q);
        }
    }
    return E[N];
}

ZPoly2 primitive_order_relation(unsigned N) {
    if (N < 4 || N > 13) throw unsupported_error("primitive_order_relation: N outside 4..13");
    static std::map<unsigned, ZPoly2> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(N);
        if (it != cache.end()) return it->second;
    }
    // dependencies first, without holding the lock
    std::vector<ZPoly2> lower;
    for (unsigned d = 4; d < N; ++d) {
        if (N % d == 0) lower.push_back(primitive_order_relation(d));
    }
    ZPoly2 g = division_poly_at_origin(N);
    for (const auto& fd : lower) {
        ZPoly2 q;
        while (g.exact_divide(fd, q)) g = q;
    }
    g = g.strip_var_power(0);
    {
        const auto& k = kubert_invariants();
        // remove any components supported on the discriminant locus
        ZPoly2 q;
        while (g.exact_divide(k.disc_cofactor, q)) g = q;
        while (true) {
            ZPoly2 shared = zpoly2_gcd(g, k.disc);
            if (shared.total_degree() < 1) break;
            if (!g.exact_divide(shared, q)) break;
            g = q;
        }
    }
    g = g.primitive_part();
    {
        std::lock_guard<std::mutex> lock(mu);
        cache[N] = g;
    }
    return g;
}

std::vector<Int> cm_j_invariants() {
    // the 13 rational integers that are j-invariants of CM elliptic curves
    auto val = [](long s, int e2, int e3, long f) {
        Int v = pow_int(Int(2), e2) * pow_int(Int(3), e3) * f;
        return s < 0 ? Int(-v) : v;
    };
    return {
        Int(0),
        Int(1728),
        val(+1, 4, 3, 125),                   // 2^4 3^3 5^3
        val(-1, 15, 1, 125),                  // -2^15 3 5^3
        val(+1, 3, 3, 1331),                  // 2^3 3^3 11^3
        val(-1, 0, 3, 125),                   // -3^3 5^3
        val(+1, 0, 3, 125l * 4913),           // 3^3 5^3 17^3
        val(+1, 6, 0, 125),                   // 2^6 5^3
        val(-1, 15, 0, 1),                    // -2^15
        val(-1, 15, 3, 1),                    // -2^15 3^3
        val(-1, 18, 3, 125),                  // -2^18 3^3 5^3
        val(-1, 15, 3, 125l * 1331),          // -2^15 3^3 5^3 11^3
        val(-1, 18, 3, 125l * 12167 * 24389), // -2^18 3^3 5^3 23^3 29^3
    };
}

Rat j_kubert(const Rat& b, const Rat& c) {
    const auto& k = kubert_invariants();
    Rat disc = k.disc.eval(b, c);
    if (disc == 0) throw singular_curve_error("j_kubert: singular model");
    Rat c4 = k.c4.eval(b, c);
    return c4 * c4 * c4 / disc;
}

std::pair<ZPoly2, ZPoly2> j_kubert_formal() {
    const auto& k = kubert_invariants();
    return {k.c4 * k.c4 * k.c4, k.disc};
}

unsigned expected_fiber_degree(unsigned N) {
    if (N < 2) throw std::domain_error("expected_fiber_degree: N >= 2");
    Int count = 1;
    for (const auto& [p, e] : factor_integer(Int(N))) {
        count *= pow_int(p, 2 * e) - pow_int(p, 2 * e - 2);
    }
    Int half = count / 2;
    return static_cast<unsigned>(mpz_get_ui(half.get_mpz_t()));
}

unsigned expected_two_torsion_fiber_degree(unsigned M) {
    return 2 * expected_fiber_degree(2 * M);
}

unsigned expected_fiber_degree_at(unsigned N, const Rat& j) {
    unsigned d = expected_fiber_degree(N);
    if (j == 0) {
        if (d % 3 != 0) throw std::logic_error("fiber degree not divisible by 3 at j=0");
        return d / 3;
    }
    if (j == 1728) {
        if (d % 2 != 0) throw std::logic_error("fiber degree not divisible by 2 at j=1728");
        return d / 2;
    }
    return d;
}

namespace {

NFElem eval_z_at(const ZPoly& f, const NFElem& x) {
    auto K = x.field();
    NFElem acc = NFElem::from_rat(K, Rat(0));
    for (size_t i = f.coeffs().size(); i-- > 0;) {
        acc = acc * x + NFElem::from_rat(K, Rat(f.coeffs()[i]));
    }
    return acc;
}

NFElem eval2_nf(const ZPoly2& f, const NFElem& b, const NFElem& c) {
    auto K = b.field();
    NFElem acc = NFElem::from_rat(K, Rat(0));
    std::vector<NFElem> bp{NFElem::from_rat(K, Rat(1))};
    std::vector<NFElem> cp{NFElem::from_rat(K, Rat(1))};
    for (const auto& [key, coef] : f.terms()) {
        while (bp.size() <= key.first) bp.push_back(bp.back() * b);
        while (cp.size() <= key.second) cp.push_back(cp.back() * c);
        acc = acc + NFElem::from_rat(K, Rat(coef)) * bp[key.first] * cp[key.second];
    }
    return acc;
}

ZPoly lc_in(const ZPoly2& f, int elim_var) {
    auto cs = f.coeffs_in(elim_var);
    return cs.empty() ? ZPoly() : cs.back();
}

// monic integer minimal polynomial of lc(h) * theta for a root theta of h
ZPoly monicize(const ZPoly& h, Int& scale_out) {
    Int L = h.lc();
    scale_out = L;
    if (L == 1) return h;
    size_t n = static_cast<size_t>(h.degree());
    std::vector<Int> v(n + 1);
    v[n] = 1;
    Int pw = 1;
    for (size_t i = n; i-- > 0;) {
        // coefficient of x^i is h_i * L^(n-1-i)
        v[i] = h[i] * pw;
        pw *= L;
    }
    return ZPoly(std::move(v));
}

ZPoly2 fiber_generator(const Rat& j) {
    const auto& k = kubert_invariants();
    if (j == 0) return k.c4;
    if (j == 1728) return k.c6;
    ZPoly2 c43 = k.c4 * k.c4 * k.c4;
    return c43 * Int(j.get_den()) - k.disc * Int(j.get_num());
}

constexpr long kMaxShear = 8;
constexpr long kPointFieldCap = 36;

} // namespace

FiberDecomposition fiber_decomposition(unsigned N, const Rat& j, bool want_points) {
    if (N < 4 || N > 13) throw unsupported_error("fiber_decomposition: N outside 4..13");
    const auto& kub = kubert_invariants();
    ZPoly2 F0 = primitive_order_relation(N);
    ZPoly2 G0 = fiber_generator(j);
    std::vector<ZPoly2> lower0;
    for (unsigned d = 4; d < N; ++d) {
        if (N % d == 0) lower0.push_back(primitive_order_relation(d));
    }
    unsigned expected = expected_fiber_degree_at(N, j);

    for (long lambda = 0; lambda <= kMaxShear; ++lambda) {
        ZPoly2 F = F0, G = G0, Delta = kub.disc;
        std::vector<ZPoly2> lower = lower0;
        int elim = 0;  // eliminate b, survivor c
        if (lambda != 0) {
            Int lam(lambda);
            F = F0.shear_first(lam);
            G = G0.shear_first(lam);
            Delta = kub.disc.shear_first(lam);
            for (auto& fd : lower) fd = fd.shear_first(lam);
            elim = 1;  // eliminate c, survivor u = b + lambda*c
        }
        if (F.degree(elim) < 1 || G.degree(elim) < 1) continue;
        ZPoly R = resultant_bivariate(F, G, elim);
        if (R.is_zero()) continue;
        R = R.primitive_part();
        // squarefree certificate: distinct transversal points with distinct
        // survivor values; otherwise use a different shear
        if (zpoly_gcd(R, R.derivative()).degree() != 0) continue;

        ZPoly Rclean = R;
        auto excise = [&](const ZPoly& X) {
            if (X.is_zero() || Rclean.degree() < 1) return;
            ZPoly g = zpoly_gcd(Rclean, X);
            if (g.degree() >= 1) {
                ZPoly q;
                if (!Rclean.exact_divide(g, q)) throw std::logic_error("fiber excision failed");
                Rclean = q.primitive_part();
            }
        };
        excise(zpoly_gcd(lc_in(F, elim), lc_in(G, elim)));     // branches at infinity
        excise(resultant_bivariate(F, Delta, elim));           // singular locus
        for (const auto& fd : lower) {
            ZPoly J = resultant_bivariate(F, fd, elim);        // lower-order crossings
            excise(J);
        }
        if (Rclean.degree() < 1) continue;

        FiberDecomposition out;
        out.N = N;
        out.j = j;
        out.lambda = lambda;
        long total = 0;
        for (auto& [h, mult] : factor_zpoly(Rclean)) {
            if (mult != 1) { total = -1; break; }
            out.components.push_back(h);
            out.degrees.push_back(static_cast<unsigned>(h.degree()));
            total += h.degree();
        }
        if (total != static_cast<long>(expected)) continue;
        std::sort(out.degrees.begin(), out.degrees.end());

        if (want_points) {
            ZPoly s1, s0;
            bool have_sres = subresultant_degree1(F, G, elim, s1, s0);
            for (const auto& h : out.components) {
                if (h.degree() > kPointFieldCap) {
                    out.points.emplace_back(std::nullopt);
                    continue;
                }
                Int scale;
                ZPoly hm = monicize(h, scale);
                auto K = NumberField::create_certified(hm, "w");
                // root of h itself: theta / lc(h)
                NFElem x0 = NFElem::generator(K) * NFElem::from_rat(K, make_rat(Int(1), scale));
                NFElem velim = NFElem::from_rat(K, Rat(0));
                bool got = false;
                if (have_sres) {
                    NFElem s1K = eval_z_at(s1, x0);
                    if (!s1K.is_zero()) {
                        velim = -(eval_z_at(s0, x0) * s1K.inverse());
                        got = true;
                    }
                }
                if (!got) {
                    auto to_kpoly = [&](const ZPoly2& f) {
                        auto cs = f.coeffs_in(elim);
                        std::vector<NFElem> v;
                        for (const auto& cpoly : cs) v.push_back(eval_z_at(cpoly, x0));
                        return KPoly(K, std::move(v));
                    };
                    KPoly g = kpoly_gcd(to_kpoly(F), to_kpoly(G));
                    if (g.degree() != 1) throw elimination_error("fiber point: gcd not linear");
                    velim = -(g[0] * g[1].inverse());
                }
                NFElem bbar = velim, cbar = x0;
                if (elim == 1) {
                    cbar = velim;
                    bbar = x0 - NFElem::from_rat(K, Rat(lambda)) * cbar;
                }
                // exact substitution checks against the unsheared generators
                if (!eval2_nf(F0, bbar, cbar).is_zero()) throw elimination_error("fiber point: order relation fails");
                if (!eval2_nf(G0, bbar, cbar).is_zero()) throw elimination_error("fiber point: j condition fails");
                if (eval2_nf(kub.disc, bbar, cbar).is_zero()) throw elimination_error("fiber point: singular model");
                for (const auto& fd : lower0) {
                    if (eval2_nf(fd, bbar, cbar).is_zero()) throw elimination_error("fiber point: lower order");
                }
                out.points.emplace_back(FiberPoint{K, bbar, cbar});
            }
        }
        return out;
    }
    throw elimination_error("fiber_decomposition: no usable shear found");
}

std::vector<unsigned> degree_sequence(unsigned N, const Rat& j) {
    return fiber_decomposition(N, j, false).degrees;
}

std::vector<unsigned> full_two_torsion_degree_sequence(unsigned M, const Rat& j) {
    if (M < 2 || M > 4) throw unsupported_error("full_two_torsion_degree_sequence: M outside 2..4");
    FiberDecomposition base = fiber_decomposition(2 * M, j, true);
    std::vector<unsigned> out;
    for (size_t i = 0; i < base.components.size(); ++i) {
        if (i >= base.points.size() || !base.points[i].has_value()) {
            throw elimination_error("two-torsion row: base point unavailable");
        }
        const FiberPoint& pt = *base.points[i];
        auto K = pt.K;
        // (0,0) has exact order 2M, so [M](0,0) is an affine 2-torsion point;
        // its x-coordinate is the forced root of the 2-division cubic
        WeierstrassCurve<NFElem> C = kubert_curve(pt.b, pt.c);
        CurvePoint<NFElem> P0 = CurvePoint<NFElem>::affine(NFElem::from_rat(K, Rat(0)),
                                                           NFElem::from_rat(K, Rat(0)));
        CurvePoint<NFElem> T = scalar_mul(C, static_cast<long>(M), P0);
        if (T.infinity) throw elimination_error("two-torsion row: [M](0,0) at infinity");
        NFElem one = NFElem::from_rat(K, Rat(1));
        std::vector<NFElem> cubic{C.b6(), C.b4() + C.b4(), C.b2(), NFElem::from_rat(K, Rat(4))};
        KPoly W(K, std::move(cubic));
        KPoly lin(K, {-T.x, one});
        KPoly q, r;
        kpoly_divrem(W, lin, q, r);
        if (!r.is_zero()) throw elimination_error("two-torsion row: forced root fails");
        auto roots = nf_roots(q);
        unsigned deg = static_cast<unsigned>(base.components[i].degree());
        if (roots.size() == 2 && !(roots[0] == roots[1])) {
            out.push_back(deg);
            out.push_back(deg);
        } else if (roots.empty()) {
            out.push_back(2 * deg);
        } else {
            throw elimination_error("two-torsion row: degenerate quadratic cofactor");
        }
    }
    std::sort(out.begin(), out.end());
    unsigned total = 0;
    for (unsigned d : out) total += d;
    unsigned expected = expected_two_torsion_fiber_degree(M);
    if (j == 0) expected /= 3;
    else if (j == 1728) expected /= 2;
    if (total != expected) throw elimination_error("two-torsion row: degree sum check failed");
    return out;
}

Rat hesse_j(const Rat& lambda) {
    auto [num, den] = hesse_j_rational_function();
    Rat d = den.eval(lambda);
    if (d == 0) throw std::domain_error("hesse_j: pole");
    return num.eval(lambda) / d;
}

std::pair<ZPoly, ZPoly> hesse_j_rational_function() {
    std::vector<Int> num(13, Int(0));
    num[12] = 1;
    num[9] = -648;
    num[6] = 139968;
    num[3] = -10077696;
    std::vector<Int> den(10, Int(0));
    den[9] = -1;
    den[6] = -81;
    den[3] = -2187;
    den[0] = -19683;
    return {ZPoly(std::move(num)), ZPoly(std::move(den))};
}

std::vector<unsigned> hesse_fiber_degrees(const Rat& j) {
    auto [num, den] = hesse_j_rational_function();
    ZPoly fiber = num * Int(j.get_den()) - den * Int(j.get_num());
    if (fiber.is_zero()) throw std::domain_error("hesse_fiber_degrees: degenerate fiber");
    ZPoly sf = zpoly_squarefree_part(fiber);
    std::vector<unsigned> out;
    for (auto& [h, mult] : factor_zpoly(sf)) {
        out.push_back(static_cast<unsigned>(h.degree()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace torsioncap
