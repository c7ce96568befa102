#pragma once

#include "p3b/arith.hpp"

namespace p3b {

// Smooth degree-k surface in P^3 containing a line L, with residual curve C of
// degree k-1 so that L + C is a hyperplane section.  k = 1 is representable
// (needed by the rank-3 hyperplane-power family) but has no L/C lattice.
struct SurfaceClass {
    Int k = 2;

    explicit SurfaceClass(Int degree) : k(degree)
    {
        if (k < 1)
            throw domain_fault("SurfaceClass: k must be >= 1");
    }

    void require_lattice(const char* op) const
    {
        if (k < 2)
            throw domain_fault(std::string(op) + ": the L/C lattice is undefined on a plane (k = 1)");
    }
};

// Integer divisor class x_L*L + x_C*C.  A twist by O_S(j) adds j*(L + C), so the
// canonical form of aL + bC + jH is (a+j, b+j).
struct DivisorClass {
    Int x_l = 0;
    Int x_c = 0;

    DivisorClass() = default;
    DivisorClass(Int xl, Int xc) : x_l(xl), x_c(xc) {}

    // aL + bC twisted by O_S(j).
    static DivisorClass from_twisted(Int a, Int b, Int j) { return {a + j, b + j}; }

    DivisorClass twisted(Int j) const { return {x_l + j, x_c + j}; }
    DivisorClass operator+(const DivisorClass& o) const { return {x_l + o.x_l, x_c + o.x_c}; }
    DivisorClass operator-(const DivisorClass& o) const { return {x_l - o.x_l, x_c - o.x_c}; }
    bool operator==(const DivisorClass& o) const = default;
};

inline DivisorClass line_class() { return {1, 0}; }
inline DivisorClass curve_class() { return {0, 1}; }
inline DivisorClass hyperplane_class() { return {1, 1}; }

// Chern data of a rank-r sheaf on P^3 against the standard generators.
struct ChernData {
    Int rank = 1;
    Int c1 = 0;
    Int c2 = 0;
    Int c3 = 0;

    bool operator==(const ChernData& o) const = default;
};

// Bilinear extension of L^2 = 2-k, L.C = k-1, C^2 = 0.
Int pair(const DivisorClass& d1, const DivisorClass& d2, const SurfaceClass& s);

// D.H = x_L + x_C*(k-1).
Int degree(const DivisorClass& d, const SurfaceClass& s);

// K_S = (k-4)H, i.e. (k-4, k-4).
DivisorClass canonical_class(const SurfaceClass& s);

// Arithmetic genus 1 + (D^2 + K.D)/2, returned without validation: classes
// that are not honest curves may yield negative values.
Rat genus(const DivisorClass& d, const SurfaceClass& s);

// chi(O_S) = 1 + C(k-1,3).
Int chi_structure(const SurfaceClass& s);

// Surface Riemann-Roch: chi(O_S) + D.(D - K_S)/2.
Int chi_divisor(const DivisorClass& d, const SurfaceClass& s);

// chi(P^3; E) = r + 11/6 c1 + (c1^2 - c2) + 1/6 (c1^3 - 3 c1 c2 + 3 c3).
Rat riemann_roch_p3(const ChernData& c);

// Chern classes of E(t) for rank 2 and 3.
ChernData twist_chern(const ChernData& c, Int t);

} // namespace p3b
