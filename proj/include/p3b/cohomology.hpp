#pragma once

#include "p3b/lattice.hpp"

#include <utility>
#include <vector>

namespace p3b {

struct CohomologyDims {
    Int h0 = 0;
    Int h1 = 0;
    Int h2 = 0;
    Int chi = 0;

    bool operator==(const CohomologyDims& o) const = default;
};

// h^0(S; O_S(j)) = C(j+3,3) - C(j-k+3,3).  Valid for every k >= 1.
Int h0_surface_twist(Int j, const SurfaceClass& s);

// h^0(C; O_C(j)) = C(j+2,2) - C(j-k+3,2) on the degree-(k-1) plane curve C.
Int h0_curve_twist(Int j, const SurfaceClass& s);

// Total section count h^0(S; O_S(aL + bC)) over all integers a, b.
// Dispatches between the piecewise closed forms; on regime overlaps every
// applicable formula is evaluated and any disagreement is an arithmetic_fault.
Int h0_master(Int a, Int b, const SurfaceClass& s);

// Full (h0, h1, h2, chi): h0 and h2 = h0(K - D) from h0_master, chi from
// Riemann-Roch, h1 by chi-completion (asserted non-negative).
CohomologyDims cohomology(const DivisorClass& d, const SurfaceClass& s);

// H^0(S; O_S(-aL)(j)) = 0 iff a > j (a, j >= 0).
bool vanish_h0_neg_aL(Int a, Int j, const SurfaceClass& s);

// H^0(S; O_S(-bC)(j)) = 0 iff b > j (b, j >= 0).
bool vanish_h0_neg_bC(Int b, Int j, const SurfaceClass& s);

// H^1(S; O_S(-aL)(-j)) = 0 iff j > (a-1)(k-2), or j = 0 and a = 1, or a = 0.
bool vanish_h1_neg_aL(Int a, Int j, const SurfaceClass& s);

// H^1(S; O_S(-bC)(-j)) = 0 iff j > 0, or j = 0 and b <= 1.
bool vanish_h1_neg_bC(Int b, Int j, const SurfaceClass& s);

// For j > k-4, b >= 0: h^0(S; O_S(bC)(j)) = h^0(S; O_S(j)) + b h^0(C; O_C(j)).
Int h0_bC_twist(Int b, Int j, const SurfaceClass& s);

// Splitting type of the pushforward of O_S((b-a)C)(a) to P^1 for b >= a >= 0,
// a <= k-2: summands O(b-i) with multiplicity i+1, i = 0..a.
std::vector<std::pair<Int, Int>> direct_image_degrees(Int a, Int b, const SurfaceClass& s);

} // namespace p3b
