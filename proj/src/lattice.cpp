#include "p3b/lattice.hpp"

namespace p3b {

Int pair(const DivisorClass& d1, const DivisorClass& d2, const SurfaceClass& s)
{
    s.require_lattice("pair");
    // L^2 = 2-k, L.C = k-1, C^2 = 0.
    Int ll = checked_mul(d1.x_l, d2.x_l);
    Int lc = checked_add(checked_mul(d1.x_l, d2.x_c), checked_mul(d1.x_c, d2.x_l));
    return checked_add(checked_mul(ll, 2 - s.k), checked_mul(lc, s.k - 1));
}

Int degree(const DivisorClass& d, const SurfaceClass& s)
{
    s.require_lattice("degree");
    return checked_add(d.x_l, checked_mul(d.x_c, s.k - 1));
}

DivisorClass canonical_class(const SurfaceClass& s)
{
    s.require_lattice("canonical_class");
    return {s.k - 4, s.k - 4};
}

Rat genus(const DivisorClass& d, const SurfaceClass& s)
{
    Int self = pair(d, d, s);
    Int kd = pair(canonical_class(s), d, s);
    return Rat(1) + Rat(checked_add(self, kd), 2);
}

Int chi_structure(const SurfaceClass& s)
{
    s.require_lattice("chi_structure");
    return 1 + count_binom(s.k - 1, 3);
}

Int chi_divisor(const DivisorClass& d, const SurfaceClass& s)
{
    Int dd = pair(d, d - canonical_class(s), s);
    if (dd % 2 != 0)
        throw arithmetic_fault("chi_divisor: D.(D-K) is odd");
    return checked_add(chi_structure(s), dd / 2);
}

Rat riemann_roch_p3(const ChernData& c)
{
    Int c1 = c.c1, c2 = c.c2, c3 = c.c3;
    Int c1sq = checked_mul(c1, c1);
    Int c1cube = checked_mul(c1sq, c1);
    Rat chi(c.rank);
    chi += Rat(11 * c1, 6);
    chi += Rat(checked_sub(c1sq, c2));
    chi += Rat(checked_sub(c1cube, checked_mul(3, checked_mul(c1, c2))) + checked_mul(3, c3), 6);
    return chi;
}

ChernData twist_chern(const ChernData& c, Int t)
{
    Int t2 = checked_mul(t, t);
    Int t3 = checked_mul(t2, t);
    if (c.rank == 2) {
        return {2, c.c1 + 2 * t, checked_add(c.c2, checked_add(checked_mul(c.c1, t), t2)), 0};
    }
    if (c.rank == 3) {
        Int c2t = checked_add(c.c2, checked_add(checked_mul(2 * c.c1, t), 3 * t2));
        Int c3t = c.c3;
        c3t = checked_add(c3t, checked_mul(c.c2, t));
        c3t = checked_add(c3t, checked_mul(c.c1, t2));
        c3t = checked_add(c3t, t3);
        return {3, c.c1 + 3 * t, c2t, c3t};
    }
    throw domain_fault("twist_chern: rank must be 2 or 3");
}

} // namespace p3b
