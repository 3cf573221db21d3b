#pragma once

#include <stdexcept>
#include <vector>

namespace torsioncap {

// Subresultant PRS over an arbitrary UFD R (Cohen alg. 3.3.7 bookkeeping).
// Ops must provide: R zero(), R one(), bool is_zero(R), R neg(R),
// R add(R,R), R sub(R,R), R mul(R,R), R exact_div(R,R) (throws on failure).
//
// Polynomials are dense coefficient vectors in the eliminated variable,
// constant term first, over R.

template <class R, class Ops>
struct PrsChain {
    R resultant;                       // Res(A, B); Ops::zero() if common factor
    std::vector<std::vector<R>> chain; // remainder sequence incl. inputs, decreasing degree
};

namespace prs_detail {

template <class R, class Ops>
long deg(const std::vector<R>& f) {
    long d = static_cast<long>(f.size()) - 1;
    while (d >= 0 && Ops::is_zero(f[static_cast<size_t>(d)])) --d;
    return d;
}

template <class R, class Ops>
std::vector<R> trim(std::vector<R> f) {
    long d = deg<R, Ops>(f);
    f.resize(static_cast<size_t>(d + 1));
    return f;
}

template <class R, class Ops>
R pow_r(const R& b, unsigned long e) {
    R r = Ops::one();
    for (unsigned long i = 0; i < e; ++i) r = Ops::mul(r, b);
    return r;
}

// pseudo remainder: lc(B)^(deg A - deg B + 1) * A mod B
template <class R, class Ops>
std::vector<R> prem(std::vector<R> A, const std::vector<R>& B) {
    long dB = deg<R, Ops>(B);
    if (dB < 0) throw std::domain_error("prem: zero divisor");
    const R& lcB = B[static_cast<size_t>(dB)];
    long dA = deg<R, Ops>(A);
    long e = dA - dB + 1;
    while (dA >= dB) {
        R lead = A[static_cast<size_t>(dA)];
        // A = lcB*A - lead * x^(dA-dB) * B
        for (auto& c : A) c = Ops::mul(c, lcB);
        for (long j = 0; j <= dB; ++j) {
            size_t k = static_cast<size_t>(dA - dB + j);
            A[k] = Ops::sub(A[k], Ops::mul(lead, B[static_cast<size_t>(j)]));
        }
        A = trim<R, Ops>(std::move(A));
        --e;
        dA = deg<R, Ops>(A);
    }
    R scale = pow_r<R, Ops>(lcB, static_cast<unsigned long>(e > 0 ? e : 0));
    for (auto& c : A) c = Ops::mul(c, scale);
    return A;
}

} // namespace prs_detail

template <class R, class Ops>
PrsChain<R, Ops> subresultant_prs(std::vector<R> A, std::vector<R> B) {
    using namespace prs_detail;
    PrsChain<R, Ops> out;
    long dA = deg<R, Ops>(A), dB = deg<R, Ops>(B);
    if (dA < 0 || dB < 0) throw std::domain_error("subresultant_prs: zero input");
    bool negate = false;
    if (dA < dB) {
        if ((dA % 2 == 1) && (dB % 2 == 1)) negate = !negate;
        std::swap(A, B);
        std::swap(dA, dB);
    }
    A = trim<R, Ops>(std::move(A));
    B = trim<R, Ops>(std::move(B));
    out.chain.push_back(A);
    out.chain.push_back(B);
    if (dB == 0) {
        out.resultant = pow_r<R, Ops>(B[0], static_cast<unsigned long>(dA));
        if (negate) out.resultant = Ops::neg(out.resultant);
        return out;
    }
    R g = Ops::one(), h = Ops::one();
    while (true) {
        dA = deg<R, Ops>(A);
        dB = deg<R, Ops>(B);
        long delta = dA - dB;
        if ((dA % 2 == 1) && (dB % 2 == 1)) negate = !negate;
        std::vector<R> Rm = prem<R, Ops>(A, B);
        A = B;
        if (deg<R, Ops>(Rm) < 0) {
            out.resultant = Ops::zero();
            return out;
        }
        R denom = Ops::mul(g, pow_r<R, Ops>(h, static_cast<unsigned long>(delta)));
        for (auto& c : Rm) c = Ops::exact_div(c, denom);
        B = trim<R, Ops>(std::move(Rm));
        out.chain.push_back(B);
        g = A[A.size() - 1];
        if (delta >= 1) {
            R num = pow_r<R, Ops>(g, static_cast<unsigned long>(delta));
            R den = pow_r<R, Ops>(h, static_cast<unsigned long>(delta - 1));
            h = Ops::exact_div(num, den);
        }
        if (deg<R, Ops>(B) <= 0) break;
    }
    long dLast = deg<R, Ops>(A);
    R num = pow_r<R, Ops>(B[0], static_cast<unsigned long>(dLast));
    R den = dLast >= 1 ? pow_r<R, Ops>(h, static_cast<unsigned long>(dLast - 1)) : Ops::one();
    out.resultant = Ops::exact_div(num, den);
    if (negate) out.resultant = Ops::neg(out.resultant);
    return out;
}

} // namespace torsioncap
