#include "p3b/moduli.hpp"

#include <algorithm>

namespace p3b {

namespace {

Int max0(Int v) { return v > 0 ? v : 0; }

void require_rank2_stable(Int k, Int b, const char* op)
{
    auto [nu, c1] = rank2_params_from_k(k);
    StabilityVerdict v = classify_rank2(BundleSpec::rank2(nu, c1, 0, b));
    if (v.status != Stability::Stable)
        throw domain_fault(std::string(op) + ": (k,b) is not a stable rank-2 spec (" + v.code + ")");
}

StabilityVerdict classify_from_k(Int k, Int a, Int b)
{
    auto [nu, c1] = rank3_params_from_k(k);
    return classify_rank3(BundleSpec::rank3_line(nu, c1, a, b));
}

// Common head of the first two regimes: 3 x closed-form section count plus
// the surface/line parameter count.
Rat dimY_head(Int k, Int a, Int b)
{
    Rat t(checked_mul(3, checked_mul(checked_mul(k - 1, a), b)));
    t -= Rat(checked_mul(3 * (k - 2), checked_mul(a, a)), 2);
    t -= Rat(checked_mul(3 * (k - 4), checked_add(a, checked_mul(k - 1, b))), 2);
    t += Rat(3 * count_binom(k - 1, 3) + count_binom(k + 3, 3) - max0(k - 3) - 7);
    return t;
}

} // namespace

const char* to_string(Tri t)
{
    switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
    }
    return "?";
}

std::pair<Int, Int> rank2_params_from_k(Int k)
{
    if (k < 2)
        throw domain_fault("rank2_params_from_k: k >= 2 required");
    return k % 2 == 0 ? std::pair<Int, Int>{k / 2, 0} : std::pair<Int, Int>{(k + 1) / 2, -1};
}

std::pair<Int, Int> rank3_params_from_k(Int k)
{
    if (k < 1)
        throw domain_fault("rank3_params_from_k: k >= 1 required");
    switch (k % 3) {
    case 0: return {k / 3, 0};
    case 2: return {(k + 1) / 3, -1};
    default: return {(k + 2) / 3, -2};
    }
}

Int rank2_dimY(Int k, Int b)
{
    require_rank2_stable(k, b, "rank2_dimY");
    if (k == 2)
        return b == 2 ? 5 : 2 * b + 7;
    if (k == 3) {
        if (b == 2)
            return 11;
        if (b == 3)
            return 21;
        return count_binom(k + 3, 3) + 2 * b - k;
    }
    if (b > k)
        return count_binom(k + 3, 3) + 2 * b - k;
    return count_binom(k + 3, 3) + 2 * b - k - checked_mul(2, count_binom(k - b + 3, 3));
}

Int rank2_ed(Int c1, Int c2)
{
    return checked_mul(8, c2) + 2 * c1 - 3;
}

ModuliReport rank2_exact_dim(Int k, Int b)
{
    if (k != 2 && k != 3)
        throw domain_fault("rank2_exact_dim: only k = 2, 3 have exact dimensions");
    require_rank2_stable(k, b, "rank2_exact_dim");
    Int dim = k == 2 ? 8 * b - 11 : 16 * b - 21;
    Int ed = checked_mul(8, checked_mul(b, k - 1)) - 2 * k * k - 3;
    if (dim != ed)
        throw arithmetic_fault("rank2_exact_dim: dimension and Riemann-Roch routes disagree");

    ModuliReport r;
    r.dim_Y = rank2_dimY(k, b);
    r.ed = ed;
    r.h1_end = dim;
    r.h2_end = 0;
    r.dim_M = dim;
    r.smooth_at_E = Tri::Yes;
    r.codim_bound = dim - r.dim_Y;
    r.dim_equals_Y = (r.dim_Y == dim);
    return r;
}

ModuliReport rank2_dim_bounds(Int k, Int b)
{
    if (k < 4)
        throw domain_fault("rank2_dim_bounds: stated for k >= 4");
    if (b < k - 4)
        throw domain_fault("rank2_dim_bounds: stated for b >= k-4");
    require_rank2_stable(k, b, "rank2_dim_bounds");

    Int lo = checked_mul(8, checked_mul(k - 1, b)) - 2 * k * k - 3;
    Int spread = checked_mul(k * k - 5 * k + 6, b) - count_binom(k - 1, 3);
    Int hi = checked_add(lo, spread);

    ModuliReport r;
    r.dim_Y = rank2_dimY(k, b);
    r.ed = lo;
    r.h1_end = {lo, hi};
    r.h2_end = {0, spread};
    r.dim_M = {lo, hi};
    r.smooth_at_E = Tri::Unknown;
    r.codim_bound = hi - r.dim_Y;
    r.notes.push_back("upper bound is the term-by-term sum 8(k-1)b-2k^2-3 + (k^2-5k+6)b - C(k-1,3); "
                      "its single-fraction constant is (k^3+6k^2+11k+12)/6");
    if (b == k - 4)
        r.notes.push_back("boundary case b = k-4");
    return r;
}

ModuliReport rank3I_report(Int k, Int nu, Int c1, Int l)
{
    BundleSpec spec = BundleSpec::rank3_hyperplane(nu, c1, l);
    if (spec.k() != k)
        throw domain_fault("rank3I_report: k must equal 3*nu + c1");
    Int big = checked_mul(3, count_binom(l + k - nu + 3, 3)) + count_binom(k + 3, 3);
    Int aut = l != nu ? 10 + checked_mul(3, count_binom((l > nu ? l - nu : nu - l) + 3, 3)) : 16;
    Int dim = checked_sub(big, aut);
    Int h2 = checked_sub(big, checked_mul(4 * k, k + c1 + 3 * l)) - (l != nu ? aut - 8 : 8);
    if (h2 < 0)
        throw arithmetic_fault("rank3I_report: negative h2(End E)");

    ChernData c = rank3_hyperplane(spec).second;
    Int ed = rank3_ed(c1, c.c2);
    if (dim - h2 != ed)
        throw arithmetic_fault("rank3I_report: h1 - h2 does not match Riemann-Roch");

    ModuliReport r;
    r.dim_Y = dim;
    r.ed = ed;
    r.h1_end = dim;
    r.h2_end = h2;
    r.dim_M = dim;
    r.smooth_at_E = Tri::Yes;
    r.codim_bound = 0;
    r.dim_equals_Y = true;
    return r;
}

Int rank3_ed(Int c1, Int c2)
{
    return checked_mul(12, c2) - 4 * c1 * c1 - 8;
}

Int rank3II_dimY(Int k, Int a, Int b)
{
    if (k < 2)
        throw domain_fault("rank3II_dimY: line-divisor family needs k >= 2");
    StabilityVerdict v = classify_from_k(k, a, b);
    if (!v.admits_chern())
        throw domain_fault("rank3II_dimY: (a,b) not admissible (" + v.code + ")");

    if (a > b) {
        Rat t = dimY_head(k, a, b);
        if (a <= k) {
            if (k == 2) {
                // Quadric mirror of the b <= k correction; the -6/-21 values
                // are the k >= 3 specializations and do not apply here.
                t += Rat(3 * b - 9);
            } else if (a == k) {
                t += Rat(-6);
            } else if (a == k - 1) {
                t += Rat(-21);
            } else {
                throw arithmetic_fault("rank3II_dimY: a <= k admissible points are a = k, k-1");
            }
        }
        return to_integer(t, "rank3II_dimY a > b");
    }

    // b >= a.
    std::optional<Int> first, third;
    Int corr = 0;
    if (b <= k)
        corr = k >= 3 ? -checked_mul(3, count_binom(k - b + 3, 3)) : 0; // k = 2 handled per regime
    if (a >= k - 3) {
        Rat t = dimY_head(k, a, b);
        if (b <= k)
            t += Rat(k >= 3 ? corr : 3 * a - 9);
        first = to_integer(t, "rank3II_dimY first regime");
    }
    if (a <= k - 2) {
        Int t = checked_mul(count_binom(a + 2, 2), 3 * b - 2 * a + 3) + count_binom(k + 3, 3) -
                max0(k - 3) - 10;
        if (b <= k)
            t += k >= 3 ? corr : -9;
        third = t;
    }
    if (first && third && *first != *third)
        throw arithmetic_fault("rank3II_dimY: regime overlap disagreement");
    return first ? *first : *third;
}

ModuliReport rank3II_h1_klarge(Int k, Int nu, Int c1, Int a, Int b)
{
    BundleSpec spec = BundleSpec::rank3_line(nu, c1, a, b);
    if (spec.k() != k)
        throw domain_fault("rank3II_h1_klarge: k must equal 3*nu + c1");
    StabilityVerdict v = classify_rank3(spec);
    if (v.status != Stability::Stable)
        throw domain_fault("rank3II_h1_klarge: spec is not stable (" + v.code + ")");

    bool hyp;
    if (a > b)
        hyp = (b >= k && checked_mul(b, k - 1) - checked_mul(a, k - 2) > 2) || (a == k + 1 && b == k);
    else
        hyp = a > k || (a == k && b == k + 1);
    if (!hyp)
        throw domain_fault("rank3II_h1_klarge: vanishing hypothesis not satisfied");

    SurfaceClass s(k);
    Int value = count_binom(k + 3, 3) - 10 + checked_mul(3, h0_master(a, b, s));
    Int slack = max0(k - 3);

    ModuliReport r;
    r.dim_Y = rank3II_dimY(k, a, b);
    r.ed = rank3_ed(c1, rank3_chern(spec).c2);
    r.h1_end = k <= 3 ? IntInterval(value) : IntInterval(value - slack, value);
    r.h2_end = {r.h1_end.lo - r.ed, r.h1_end.hi - r.ed};
    r.codim_bound = slack;
    r.delta_assumption = k >= 4;
    if (k <= 3) {
        r.dim_M = value;
        r.smooth_at_E = Tri::Yes;
    } else {
        r.dim_M = {std::max(r.ed, r.dim_Y), value};
        r.smooth_at_E = Tri::Unknown;
    }
    r.dim_equals_Y = r.dim_M.exact() && r.dim_Y == r.dim_M.lo;
    if (value - r.dim_Y != slack)
        throw arithmetic_fault("rank3II_h1_klarge: h1 upper end minus dim Y must equal max(k-3,0)");
    return r;
}

ModuliReport rank3II_report_k2(Int a, Int b)
{
    StabilityVerdict v = classify_from_k(2, a, b);
    if (v.status != Stability::Stable)
        throw domain_fault("rank3II_report_k2: (a,b) not stable on the quadric (" + v.code + ")");
    const Int mx = std::max(a, b), mn = std::min(a, b);
    Int linear = checked_mul(12, checked_add(a, b)) - 24;
    Int product = checked_mul(3, checked_mul(a + 1, b + 1));

    ModuliReport r;
    r.dim_Y = mx >= 3 ? product : linear;
    r.h1_end = mn >= 3 ? product : linear;
    r.h2_end = mn >= 3 ? checked_mul(3, checked_mul(a - 3, b - 3)) : 0;
    r.ed = rank3_ed(-1, checked_add(a, b) - 1);
    if (r.h1_end.lo - r.h2_end.lo != r.ed)
        throw arithmetic_fault("rank3II_report_k2: h1 - h2 does not match Riemann-Roch");
    r.dim_M = r.h1_end;
    r.smooth_at_E = Tri::Yes;
    r.dim_equals_Y = (r.dim_Y == r.dim_M.lo);
    if (mx >= 4 && mn <= 2)
        r.notes.push_back("dim Y < dim M for max(a,b) >= 4, min(a,b) <= 2");
    if (r.dim_Y > r.dim_M.hi)
        throw arithmetic_fault("rank3II_report_k2: dim Y exceeds dim M");
    return r;
}

ModuliReport rank3II_report_k3(Int a, Int b)
{
    StabilityVerdict v = classify_from_k(3, a, b);
    if (v.status != Stability::Stable)
        throw domain_fault("rank3II_report_k3: (a,b) not stable on the cubic (" + v.code + ")");
    const Int mx = std::max(a, b), mn = std::min(a, b);

    Int dim_y;
    if (mx >= 4)
        dim_y = checked_mul(6, checked_mul(a, b)) + 3 * b - checked_mul(3, count_binom(a, 2)) + 13;
    else if (a >= b)
        dim_y = 12 * a + 24 * b - 44;
    else if (b == 3 && a == 2)
        dim_y = 52;
    else if (b == 3 && a == 1)
        dim_y = 37;
    else
        throw arithmetic_fault("rank3II_report_k3: unreachable stable point");

    const bool wide = b >= a || 2 * b >= a + 4; // complement is the 2b < a+4 sub-branch
    Int h1, h2;
    if (mn <= 3) {
        h1 = 12 * a + 24 * b - 44;
        h2 = 0;
    } else if (wide) {
        Rat q = Rat(checked_mul(2, checked_mul(a, b))) - Rat(checked_mul(a, a), 2) -
                Rat(7 * a, 2) - Rat(7 * b) + Rat(19);
        h2 = to_integer(Rat(3) * q, "rank3II_report_k3 h2");
        h1 = checked_mul(6, checked_mul(a, b)) + 3 * b - checked_mul(3, count_binom(a, 2)) + 13;
    } else {
        h2 = checked_mul(3, checked_mul(2, checked_mul(b, b)) - 14 * b + 25);
        h1 = 12 * a + checked_mul(6, checked_mul(b, b)) - 18 * b + 31;
    }

    ModuliReport r;
    r.dim_Y = dim_y;
    r.ed = rank3_ed(0, checked_add(a, 2 * b) - 3);
    r.h1_end = h1;
    r.h2_end = h2;
    if (h1 - h2 != r.ed)
        throw arithmetic_fault("rank3II_report_k3: h1 - h2 does not match Riemann-Roch");

    bool smooth = mn <= 3 || wide || (a % 2 == 1 && 2 * b == a + 3);
    r.smooth_at_E = smooth ? Tri::Yes : Tri::Unknown;
    r.dim_M = smooth ? IntInterval(h1) : IntInterval(h1 - h2, h1);
    r.dim_equals_Y = r.dim_M.exact() && r.dim_Y == r.dim_M.lo;
    if (r.dim_Y > r.dim_M.hi)
        throw arithmetic_fault("rank3II_report_k3: dim Y exceeds dim M");
    return r;
}

} // namespace p3b
