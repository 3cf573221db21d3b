#pragma once

#include <optional>
#include <vector>

#include "torsioncap/intmath.hpp"
#include "torsioncap/numberfield.hpp"
#include "torsioncap/zpoly2.hpp"

namespace torsioncap {

// Standard invariants of the Kubert model y^2 + (1-c)xy - by = x^3 - bx^2,
// as polynomials in (b, c).
struct KubertInvariants {
    ZPoly2 b2, b4, b6, b8;
    ZPoly2 c4, c6, disc;
    ZPoly2 disc_cofactor;  // disc / b^3
};

const KubertInvariants& kubert_invariants();

// x-dense polynomial over Z[b,c]; index = power of x
using XPoly = std::vector<ZPoly2>;

// N-division polynomial as a polynomial in x alone: psi_N for N odd,
// psi_N * psi_2 for N even (so N = 2 gives the 2-division cubic). Vanishing
// at an affine point is equivalent to [N]P = O.
XPoly division_polynomial_x(unsigned N);

// the x-part alone: psi_N for N odd, psi_N / psi_2 for N even
XPoly division_polynomial_reduced(unsigned N);

// psi_N evaluated at the marked point (0, 0), as a polynomial in (b, c)
ZPoly2 division_poly_at_origin(unsigned N);

// primitive order-N relation F_N(b,c): all lower-order and degenerate factors
// removed, content removed, sign normalized; supported for 4 <= N <= 13
ZPoly2 primitive_order_relation(unsigned N);

std::vector<Int> cm_j_invariants();

// j = c4^3 / disc for scalar (b, c); throws singular_curve_error when disc = 0
Rat j_kubert(const Rat& b, const Rat& c);
// the same j as a formal rational function (numerator, denominator)
std::pair<ZPoly2, ZPoly2> j_kubert_formal();

struct FiberPoint {
    NumberFieldPtr K;
    NFElem b, c;
};

struct FiberDecomposition {
    unsigned N = 0;
    Rat j;
    long lambda = 0;                  // shear parameter used (0 = none)
    std::vector<ZPoly> components;    // irreducible minimal polynomials (survivor variable)
    std::vector<unsigned> degrees;    // sorted ascending, with multiplicity
    std::vector<std::optional<FiberPoint>> points;  // filled when requested and field degree small
};

// the j-fiber of the order-N locus: eliminate, take the squarefree part,
// excise degenerate loci, factor, verify; throws elimination_error when no
// shear yields a usable shape
FiberDecomposition fiber_decomposition(unsigned N, const Rat& j, bool want_points);

std::vector<unsigned> degree_sequence(unsigned N, const Rat& j);

// torsion structures Z/2 x Z/2M (M = 2, 3, 4): degree sequence of the locus
// where (0,0) has exact order 2M and the 2-division cubic splits completely
std::vector<unsigned> full_two_torsion_degree_sequence(unsigned M, const Rat& j);

Rat hesse_j(const Rat& lambda);
// numerator and denominator of the Hesse j-function in lambda
std::pair<ZPoly, ZPoly> hesse_j_rational_function();
// degrees of the reduced lambda-fiber over a rational j
std::vector<unsigned> hesse_fiber_degrees(const Rat& j);

// degree of the fiber of the order-N locus over a generic j: half the number
// of exact order-N elements of (Z/N)^2
unsigned expected_fiber_degree(unsigned N);
unsigned expected_two_torsion_fiber_degree(unsigned M);

// expected fiber degree at a specific j (accounts for the ramification at
// j = 0 and j = 1728)
unsigned expected_fiber_degree_at(unsigned N, const Rat& j);

} // namespace torsioncap
