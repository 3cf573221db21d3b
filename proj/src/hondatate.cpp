#include "torsioncap/hondatate.hpp"

#include <algorithm>
#include <stdexcept>

#include "torsioncap/curves.hpp"
#include "torsioncap/finitefield.hpp"

namespace torsioncap {

std::string WeilDatum::kind_name() const {
    switch (kind) {
        case Kind::I: return "I";
        case Kind::II: return "II";
        case Kind::III: return "III";
    }
    return "?";
}

namespace {

bool squarefree_int(const Int& n) {
    if (n < 1) return false;
    for (const auto& [p, e] : factor_integer(n)) {
        if (e >= 2) return false;
    }
    return true;
}

bool admissible_trace(const Int& a, const Int& p) {
    if (a * a > 4 * p) return false;
    if (a == 0) return true;
    if (a % p != 0) return true;
    if (p == 2 && a * a == 2 * p) return true;  // a = +-2 over F_2
    if (p == 3 && a * a == 3 * p) return true;  // a = +-3 over F_3
    return false;
}

} // namespace

bool weil_datum_valid(const WeilDatum& w) {
    if (!is_prime(w.p)) return false;
    switch (w.kind) {
        case WeilDatum::Kind::I:
            return admissible_trace(w.a1, w.p) && admissible_trace(w.a2, w.p) && w.a1 <= w.a2;
        case WeilDatum::Kind::II:
            return true;
        case WeilDatum::Kind::III: {
            if (w.d <= 1 || !squarefree_int(w.d)) return false;
            if (w.twoB == 0) return false;
            if ((w.twoA - w.twoB) % 2 != 0) return false;
            bool both_odd = (w.twoA % 2 != 0);
            if (both_odd && w.d % 4 != 1) return false;
            // |a| + |b| sqrt(d) < 2 sqrt(p), i.e. |2a| + |2b| sqrt(d) < 4 sqrt(p)
            Int u = w.twoA >= 0 ? w.twoA : Int(-w.twoA);
            Int v = w.twoB >= 0 ? w.twoB : Int(-w.twoB);
            return lt_sum_sqrt(u, v, w.d, Int(4), w.p);
        }
    }
    return false;
}

ZPoly frobenius_poly(const WeilDatum& w) {
    if (!weil_datum_valid(w)) throw std::domain_error("frobenius_poly: invalid datum");
    const Int& p = w.p;
    switch (w.kind) {
        case WeilDatum::Kind::I: {
            ZPoly f1(std::vector<Int>{p, -w.a1, 1});
            ZPoly f2(std::vector<Int>{p, -w.a2, 1});
            return f1 * f2;
        }
        case WeilDatum::Kind::II: {
            ZPoly f(std::vector<Int>{-p, 0, 1});
            return f * f;
        }
        case WeilDatum::Kind::III: {
            // (T^2 - beta T + p)(T^2 - beta' T + p) with beta = a + b sqrt(d):
            // T^4 - 2a T^3 + (a^2 + 2p - d b^2) T^2 - 2ap T + p^2; the middle
            // coefficient equals (4p^2? no) exactly ( (2a)^2 - d (2b)^2 )/4 + 2p
            Int mid4 = w.twoA * w.twoA - w.d * w.twoB * w.twoB;
            if (mid4 % 4 != 0) throw std::runtime_error("frobenius_poly: non-integral middle");
            Int mid = mid4 / 4 + 2 * p;
            return ZPoly(std::vector<Int>{p * p, -w.twoA * p, mid, -w.twoA, 1});
        }
    }
    throw std::domain_error("frobenius_poly: unknown kind");
}

Int point_count(const WeilDatum& w) {
    switch (w.kind) {
        case WeilDatum::Kind::I:
            return (w.p + 1 - w.a1) * (w.p + 1 - w.a2);
        case WeilDatum::Kind::II:
            return (w.p - 1) * (w.p - 1);
        case WeilDatum::Kind::III:
            return frobenius_poly(w).eval(Int(1));
    }
    throw std::domain_error("point_count: unknown kind");
}

std::vector<Int> admissible_elliptic_traces(const Int& p) {
    if (!is_prime(p)) throw std::domain_error("admissible_elliptic_traces: p not prime");
    std::vector<Int> out;
    Int cap = isqrt(4 * p);
    for (Int a = -cap; a <= cap; ++a) {
        if (admissible_trace(a, p)) out.push_back(a);
    }
    return out;
}

std::vector<Int> elliptic_counts(const Int& p) {
    std::vector<Int> out;
    for (const Int& a : admissible_elliptic_traces(p)) {
        out.push_back(p + 1 - a);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Int> elliptic_counts_exhaustive(const Int& p) {
    if (p > 17) throw std::domain_error("elliptic_counts_exhaustive: p too large");
    std::uint64_t pu = mpz_get_ui(p.get_mpz_t());
    auto F = FqContext::create(pu, 1);
    std::vector<Int> out;
    std::vector<FqElem> elems;
    for (std::uint64_t i = 0; i < pu; ++i) elems.push_back(FqElem::by_index(F, i));
    for (std::uint64_t i1 = 0; i1 < pu; ++i1)
    for (std::uint64_t i2 = 0; i2 < pu; ++i2)
    for (std::uint64_t i3 = 0; i3 < pu; ++i3)
    for (std::uint64_t i4 = 0; i4 < pu; ++i4)
    for (std::uint64_t i6 = 0; i6 < pu; ++i6) {
        WeierstrassCurve<FqElem> C{elems[i1], elems[i2], elems[i3], elems[i4], elems[i6]};
        if (C.discriminant().is_zero()) continue;
        // count points by x-sweep
        Int count = 1;
        for (std::uint64_t xi = 0; xi < pu; ++xi) {
            const FqElem& x = elems[xi];
            FqElem alpha = C.a1 * x + C.a3;
            FqElem beta = x * x * x + C.a2 * x * x + C.a4 * x + C.a6;
            if (pu == 2) {
                if (alpha.is_zero()) count += 1;
                else {
                    FqElem c = beta * (alpha * alpha).inverse();
                    count += (c.trace_to_f2() == 0) ? 2 : 0;
                }
            } else {
                // y^2 + alpha y - beta = 0; discriminant alpha^2 + 4 beta
                FqElem disc = alpha * alpha + WeierstrassCurve<FqElem>::scaled(beta, 4);
                if (disc.is_zero()) count += 1;
                else {
                    FqElem chi = disc.pow(Int((pu - 1) / 2));
                    count += (chi == FqElem::one(F)) ? 2 : 0;
                }
            }
        }
        out.push_back(count);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<WeilDatum> surface_isogeny_classes(const Int& p) {
    if (!is_prime(p)) throw std::domain_error("surface_isogeny_classes: p not prime");
    std::vector<WeilDatum> out;
    // Type I: unordered pairs of admissible traces
    auto traces = admissible_elliptic_traces(p);
    for (size_t i = 0; i < traces.size(); ++i) {
        for (size_t j = i; j < traces.size(); ++j) {
            WeilDatum w;
            w.p = p;
            w.kind = WeilDatum::Kind::I;
            w.a1 = traces[i];
            w.a2 = traces[j];
            out.push_back(w);
        }
    }
    // Type II
    {
        WeilDatum w;
        w.p = p;
        w.kind = WeilDatum::Kind::II;
        out.push_back(w);
    }
    // Type III: squarefree d > 1; |2b| sqrt(d) < 4 sqrt(p) forces d < 16p
    for (Int d = 2; d < 16 * p; ++d) {
        if (!squarefree_int(d)) continue;
        // |2a| < 4 sqrt p
        Int amax = isqrt(16 * p);
        for (Int twoA = -amax; twoA <= amax; ++twoA) {
            // |2b| <= sqrt(16p/d)
            Int bmax = isqrt(16 * p / d) + 1;
            for (Int twoB = -bmax; twoB <= bmax; ++twoB) {
                if (twoB == 0) continue;
                WeilDatum w;
                w.p = p;
                w.kind = WeilDatum::Kind::III;
                w.d = d;
                w.twoA = twoA;
                w.twoB = twoB;
                if (weil_datum_valid(w)) out.push_back(w);
            }
        }
    }
    return out;
}

CountCensus surface_counts(const Int& p) {
    CountCensus census;
    census.p = p;
    census.dimension = 2;
    census.data = surface_isogeny_classes(p);
    std::vector<std::pair<Int, size_t>> pairs;
    for (size_t i = 0; i < census.data.size(); ++i) {
        pairs.emplace_back(point_count(census.data[i]), i);
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [count, idx] : pairs) {
        if (census.counts.empty() || census.counts.back() != count) {
            census.counts.push_back(count);
            census.provenance.emplace_back(count, std::vector<size_t>{});
        }
        census.provenance.back().second.push_back(idx);
    }
    return census;
}

} // namespace torsioncap
