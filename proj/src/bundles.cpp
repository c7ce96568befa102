#include "p3b/bundles.hpp"

namespace p3b {

namespace {

void validate(const BundleSpec& spec)
{
    if (spec.nu < 1)
        throw domain_fault("BundleSpec: nu must be >= 1");
    if (spec.family == Family::Rank2) {
        if (spec.c1 != 0 && spec.c1 != -1)
            throw domain_fault("BundleSpec: rank-2 c1 must be 0 or -1");
    } else {
        if (spec.c1 != 0 && spec.c1 != -1 && spec.c1 != -2)
            throw domain_fault("BundleSpec: rank-3 c1 must be 0, -1 or -2");
    }
    if (spec.family == Family::Rank3HyperplanePower && spec.l < 1)
        throw domain_fault("BundleSpec: hyperplane-power family needs l >= 1");
    if (spec.k() < 1)
        throw domain_fault("BundleSpec: k must be >= 1");
}

// c1(L) for the line-divisor families: -aL - bC + jH.
DivisorClass line_bundle_class(Int a, Int b, Int j)
{
    return DivisorClass::from_twisted(-a, -b, j);
}

// O_S(aL+bC) is globally generated iff a, b >= 0 and its restriction to L has
// non-negative degree (automatic for b >= a).
bool divisor_globally_generated(Int a, Int b, Int k)
{
    if (a < 0 || b < 0)
        return false;
    if (a <= b)
        return true;
    return checked_mul(b, k - 1) - checked_mul(a, k - 2) >= 0;
}

} // namespace

BundleSpec BundleSpec::rank2(Int nu, Int c1, Int a, Int b)
{
    BundleSpec s{Family::Rank2, nu, c1, a, b, 0};
    validate(s);
    return s;
}

BundleSpec BundleSpec::rank3_line(Int nu, Int c1, Int a, Int b)
{
    BundleSpec s{Family::Rank3LineDivisor, nu, c1, a, b, 0};
    validate(s);
    return s;
}

BundleSpec BundleSpec::rank3_hyperplane(Int nu, Int c1, Int l)
{
    BundleSpec s{Family::Rank3HyperplanePower, nu, c1, 0, 0, l};
    validate(s);
    return s;
}

const char* to_string(Stability s)
{
    switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::SemistableOnly: return "SemistableOnly";
    case Stability::NotLocallyFreeGeneric: return "NotLocallyFreeGeneric";
    case Stability::NotStable: return "NotStable";
    case Stability::Unknown: return "Unknown";
    case Stability::Invalid: return "Invalid";
    }
    return "?";
}

StabilityVerdict classify_rank2(const BundleSpec& spec)
{
    validate(spec);
    if (spec.family != Family::Rank2)
        throw domain_fault("classify_rank2: not a rank-2 spec");
    const Int k = spec.k(), a = spec.a, b = spec.b;
    if (k == 1)
        return {Stability::Invalid, "r2.k1", "k = 1 cannot occur for the rank-2 construction"};

    if (a < 0 || b < 0)
        return {Stability::NotLocallyFreeGeneric, "r2.negative",
                "O_S(aL+bC) has no sections, so no pair of sections can generate"};
    if (!divisor_globally_generated(a, b, k))
        return {Stability::NotLocallyFreeGeneric, "r2.not-gg",
                "O_S(aL+bC) restricted to L has negative degree b(k-1)-a(k-2)"};

    SurfaceClass s(k);
    DivisorClass d(a, b);
    if (pair(d, d, s) != 0)
        return {Stability::NotStable, "r2.self-intersection",
                "D^2 != 0: two generic sections of O_S(D) share zeros, so the "
                "generic extension is not locally free"};

    // h0(L) with L = O_S(-aL-bC)(nu+c1).
    DivisorClass cl = line_bundle_class(a, b, spec.nu + spec.c1);
    if (h0_master(cl.x_l, cl.x_c, s) > 0) {
        if (spec.c1 == 0 && rank2_semistable(spec))
            return {Stability::SemistableOnly, "r2.semistable-only",
                    "h0(L) != 0 but h0(L(-1)) = 0: semistable, not stable"};
        return {Stability::NotStable, "r2.sections",
                k >= 3 ? "stability needs a = 0 and b > nu + c1"
                       : "stability on the quadric needs max(a,b) >= 2"};
    }
    if (k == 2)
        return {Stability::Stable, "r2.case1", "quadric: one of a, b is 0, the other >= 2"};
    return {Stability::Stable, "r2.case2", "a = 0 and b > nu + c1"};
}

bool rank2_semistable(const BundleSpec& spec)
{
    validate(spec);
    if (spec.family != Family::Rank2 || spec.c1 != 0)
        throw domain_fault("rank2_semistable: defined for the rank-2 c1 = 0 family");
    SurfaceClass s(spec.k());
    DivisorClass cl = line_bundle_class(spec.a, spec.b, spec.nu - 1);
    return spec.nu >= 0 && h0_master(cl.x_l, cl.x_c, s) == 0;
}

ChernData rank2_chern(const BundleSpec& spec)
{
    StabilityVerdict v = classify_rank2(spec);
    if (v.status != Stability::Stable)
        throw domain_fault("rank2_chern: spec is not stable (" + v.code + ")");
    const Int k = spec.k();
    // On the quadric the roles of a and b are symmetric; normalize to a = 0.
    const Int b = (k == 2 && spec.b == 0) ? spec.a : spec.b;
    Int c2 = checked_mul(b, k - 1) -
             exact_div(checked_mul(k, k) - checked_mul(spec.c1, spec.c1), 4, "rank2_chern c2");
    Int alt = checked_mul(b, 2 * spec.nu + spec.c1 - 1) -
              checked_mul(spec.nu, spec.nu + spec.c1);
    if (c2 != alt)
        throw arithmetic_fault("rank2_chern: the two printed c2 forms disagree");
    return {2, spec.c1, c2, 0};
}

ChernData rank2_chern_grr(const BundleSpec& spec)
{
    validate(spec);
    SurfaceClass s(spec.k());
    DivisorClass cl = line_bundle_class(spec.a, spec.b, spec.nu + spec.c1);
    Int m = spec.nu + spec.c1;
    Int c2 = checked_mul(m, m) - degree(cl, s);
    return {2, spec.c1, c2, 0};
}

bool check_rank2_c3(const BundleSpec& spec)
{
    validate(spec);
    SurfaceClass s(spec.k());
    DivisorClass cl = line_bundle_class(spec.a, spec.b, spec.nu + spec.c1);
    DivisorClass v = DivisorClass{0, 0}.twisted(spec.nu + spec.c1) - cl;
    return pair(v, v, s) == 0;
}

Rank2Thresholds rank2_thresholds(const BundleSpec& spec)
{
    StabilityVerdict v = classify_rank2(spec);
    if (v.status != Stability::Stable)
        throw domain_fault("rank2_thresholds: spec is not stable (" + v.code + ")");
    const Int k = spec.k();
    const Int b = (k == 2 && spec.b == 0) ? spec.a : spec.b;
    Rank2Thresholds t;
    t.h3_zero_from = -spec.c1 - 4;
    t.h2_zero_above = spec.nu - 4;
    t.h1_zero_above = checked_mul(b, k - 1) - spec.nu - spec.c1 - 2;
    t.globally_generated_from = checked_mul(b, k - 1) - spec.nu - spec.c1;
    t.jump_size = checked_mul(b, k - 1) - spec.nu;
    return t;
}

StabilityVerdict classify_rank3(const BundleSpec& spec)
{
    validate(spec);
    if (spec.family != Family::Rank3LineDivisor)
        throw domain_fault("classify_rank3: not a rank-3 line-divisor spec");
    const Int k = spec.k(), a = spec.a, b = spec.b, nu = spec.nu, c1 = spec.c1;

    if (k == 1) {
        // No curve C on a plane: the construction collapses to the
        // hyperplane-power family with l = a.
        if (a >= 1)
            return {Stability::Stable, "r3.case1",
                    "plane case: hyperplane-power family with l = a (b ignored)"};
        return {Stability::NotStable, "r3.sections",
                "plane case needs a > 0, otherwise L = O_H(-a) has sections"};
    }

    if (a < 0 || b < 0)
        return {Stability::NotLocallyFreeGeneric, "r3.negative",
                "O_S(aL+bC) has no sections, so no triple of sections can generate"};
    if (!divisor_globally_generated(a, b, k))
        return {Stability::NotLocallyFreeGeneric, "r3.not-gg",
                "O_S(aL+bC) restricted to L has negative degree b(k-1)-a(k-2)"};

    // h0(L) = 0 iff max(a,b) > 2nu + c1.
    const Int max_ab = a > b ? a : b;
    if (max_ab <= 2 * nu + c1) {
        if (k == 3 && a == 2 && b == 1)
            return {Stability::NotStable, "r3.excluded-k3-a2-b1",
                    "max(a,b) = 2nu+c1, so L has sections (the one excluded point of the a > b case)"};
        return {Stability::NotStable, "r3.sections", "stability needs max(a,b) > 2nu + c1"};
    }

    if (k == 2)
        return {Stability::Stable, "r3.case2", "quadric: a, b >= 0 with max(a,b) >= 2"};

    if (a > b) {
        StabilityVerdict v{Stability::Stable, "r3.case3",
                           "a > b >= (k-2)a/(k-1) > 0"};
        if (!(a >= k - 1 && b >= k - 2))
            throw arithmetic_fault("classify_rank3: case 3 must force a >= k-1, b >= k-2");
        return v;
    }

    // b >= a, b > 2nu + c1.  Strict a > nu/2 (c1 = 0) resp. a > (nu-1)/2 is
    // what the injectivity argument covers.
    const Int twice_thr = (c1 == 0) ? nu : nu - 1;
    if (2 * a > twice_thr)
        return {Stability::Stable, "r3.case4", "b >= a, b > 2nu + c1, a above the injectivity threshold"};
    if (2 * a == twice_thr)
        return {Stability::Unknown, "r3.unknown-boundary",
                "boundary a equal to the injectivity threshold: locally free, stability open"};
    return {Stability::Unknown, "r3.unknown",
            "b >= a, b > 2nu + c1 with small a: locally free, stability open"};
}

ChernData rank3_chern(const BundleSpec& spec)
{
    StabilityVerdict v = classify_rank3(spec);
    if (!v.admits_chern())
        throw domain_fault("rank3_chern: spec is not admissible (" + v.code + ")");
    const Int k = spec.k(), a = spec.a, b = spec.b, c1 = spec.c1;
    Int c2 = checked_add(a, checked_mul(b, k - 1)) -
             exact_div(checked_mul(k, k) - checked_mul(c1, c1), 3, "rank3_chern c2");
    Int c3 = checked_mul(2, checked_mul(checked_mul(a, b), k - 1));
    c3 = checked_sub(c3, checked_mul(checked_mul(a, a), k - 2));
    c3 = checked_sub(c3, exact_div(checked_mul(checked_add(a, checked_mul(k - 1, b)), k - c1), 3,
                                   "rank3_chern c3 linear term"));
    c3 = checked_add(c3, exact_div(checked_mul(checked_mul(k - c1, k - c1), 2 * k + c1), 27,
                                   "rank3_chern c3 constant term"));
    return {3, c1, c2, c3};
}

ChernData rank3_chern_grr(const BundleSpec& spec)
{
    validate(spec);
    SurfaceClass s(spec.k());
    const Int k = spec.k(), nu = spec.nu, c1 = spec.c1;
    DivisorClass cl = line_bundle_class(spec.a, spec.b, 2 * nu + c1);
    Int deg_cl = degree(cl, s);
    Int c2 = checked_mul(3, checked_mul(nu, nu)) + checked_mul(3, checked_mul(nu, c1)) +
             checked_mul(c1, c1) - deg_cl;
    Int m = 2 * nu + c1;
    Int c3 = checked_mul(checked_mul(m, m), m) - checked_mul(3 * nu + 2 * c1, deg_cl) +
             pair(cl, cl, s);
    (void)k;
    return {3, c1, c2, c3};
}

std::pair<StabilityVerdict, ChernData> rank3_hyperplane(const BundleSpec& spec)
{
    validate(spec);
    if (spec.family != Family::Rank3HyperplanePower)
        throw domain_fault("rank3_hyperplane: not a hyperplane-power spec");
    const Int k = spec.k(), l = spec.l, nu = spec.nu, c1 = spec.c1;
    Int c2 = exact_div(checked_mul(k, k) + checked_mul(c1, k) + checked_mul(c1, c1), 3,
                       "rank3_hyperplane c2") +
             checked_mul(l, k);
    // c3 from the degree form with c1(L).w0 = -lk and c1(L)^2 = l^2 k.
    Int m = 2 * nu + c1;
    Int c3 = checked_mul(checked_mul(m, m), m) + checked_mul(3 * nu + 2 * c1, checked_mul(l, k)) +
             checked_mul(checked_mul(l, l), k);
    StabilityVerdict v{Stability::Stable, "r3.case1",
                       "hyperplane-power family: stable for every nu, l >= 1"};
    return {v, ChernData{3, c1, c2, c3}};
}

Rank3Thresholds rank3_thresholds(const BundleSpec& spec)
{
    StabilityVerdict v = classify_rank3(spec);
    if (v.status != Stability::Stable)
        throw domain_fault("rank3_thresholds: spec is not stable (" + v.code + ")");
    if (spec.k() < 3)
        throw domain_fault("rank3_thresholds: stated for k >= 3");
    const Int a = spec.a, b = spec.b, k = spec.k(), nu = spec.nu;
    Rank3Thresholds t;
    t.h3_zero_from = spec.c1 == 0 ? -4 : -3;
    t.h2_validity_floor = nu - 4;
    t.h2_zero_above = (a < b ? a : b) + nu - 4;
    t.h1_cases = {
        {"b = a", true}, // quantifier on l left open in the source statement
        {"b > a: l > b + nu - 4 + (k-2)(b-a-1)", false},
        {"b = a+1: l = b + nu - 4", false},
        {"a > b: l > a + nu - 4", false},
        {"l = a + nu - 4: a = b+1", false},
    };
    t.globally_generated_from = a >= b
        ? std::max(a - k + nu, nu)
        : checked_mul(b, k - 1) - checked_mul(a, k - 2) - k + nu;
    return t;
}

DegeneracyCurve degeneracy_curve(const BundleSpec& spec)
{
    ChernData c;
    if (spec.family == Family::Rank3HyperplanePower)
        c = rank3_hyperplane(spec).second;
    else if (spec.family == Family::Rank3LineDivisor)
        c = rank3_chern(spec);
    else
        throw domain_fault("degeneracy_curve: rank-3 spec required");
    ChernData tw = twist_chern(c, spec.nu);
    DegeneracyCurve y;
    y.degree = tw.c2;
    y.self_intersection = tw.c3;
    y.genus = Rat(1) + Rat(checked_add(tw.c3, checked_mul(tw.c2, spec.k() - 4)), 2);
    return y;
}

} // namespace p3b
