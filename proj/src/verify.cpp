#include "p3b/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace p3b {

namespace {

class Checker {
  public:
    explicit Checker(SuiteResult& out) : out_(out) {}

    void operator()(bool ok, const std::string& inputs, const std::string& expected,
                    const std::string& actual)
    {
        if (ok) {
            ++out_.passed;
            return;
        }
        ++out_.failed;
        out_.failures.push_back({out_.name, inputs, expected, actual});
    }

    void equal(Int expected, Int actual, const std::string& inputs)
    {
        (*this)(expected == actual, inputs, std::to_string(expected), std::to_string(actual));
    }

    void is_true(bool cond, const std::string& inputs)
    {
        (*this)(cond, inputs, "true", "false");
    }

    // Grid sweeps where the point of the check is "the call does not fault":
    // internal cross-checks throw arithmetic_fault on disagreement.
    template <typename F>
    void no_fault(F&& f, const std::string& inputs)
    {
        try {
            f();
            ++out_.passed;
        } catch (const std::exception& e) {
            (*this)(false, inputs, "no fault", e.what());
        }
    }

  private:
    SuiteResult& out_;
};

std::string tup(std::initializer_list<Int> vs)
{
    std::ostringstream out;
    out << '(';
    bool first = true;
    for (Int v : vs) {
        if (!first)
            out << ',';
        out << v;
        first = false;
    }
    out << ')';
    return out.str();
}

void suite_lattice(Checker& check)
{
    for (Int k = 2; k <= 12; ++k) {
        SurfaceClass s(k);
        DivisorClass h = hyperplane_class(), c = curve_class(), l = line_class();
        check.equal(k, pair(h, h, s), "H.H " + tup({k}));
        check.equal(k - 1, pair(h, c, s), "H.C " + tup({k}));
        check.equal(2 - k, pair(l, l, s), "L.L " + tup({k}));
        check.equal(k - 1, pair(l, c, s), "L.C " + tup({k}));
        check.equal(0, pair(c, c, s), "C.C " + tup({k}));
        check.is_true(canonical_class(s) == DivisorClass(k - 4, k - 4), "K_S " + tup({k}));
        check.is_true(genus(l, s) == Rat(0), "genus(L) " + tup({k}));
        check.is_true(genus(c, s) == Rat(1) + Rat((k - 4) * (k - 1), 2), "genus(C) " + tup({k}));

        // Bilinearity and symmetry against basis decomposition.
        for (Int x = -20; x <= 20; ++x)
            for (Int y = -20; y <= 20; ++y) {
                DivisorClass d(x, y);
                Int via_basis_l = x * (2 - k) + y * (k - 1);
                Int via_basis_c = x * (k - 1);
                bool ok = pair(d, l, s) == via_basis_l && pair(d, c, s) == via_basis_c &&
                          pair(l, d, s) == via_basis_l && pair(c, d, s) == via_basis_c &&
                          pair(d, d, s) == x * via_basis_l + y * via_basis_c &&
                          degree(d, s) == pair(d, h, s);
                check.is_true(ok, "pair bilinearity " + tup({k, x, y}));
            }

        // chi(O_S(bC)) closed form.
        for (Int b = 0; b <= 30; ++b) {
            Int expect = 1 + count_binom(k - 1, 3) - exact_div((k - 4) * (k - 1) * b, 2, "chi(bC)");
            check.equal(expect, chi_divisor(DivisorClass(0, b), s), "chi(bC) " + tup({k, b}));
        }
    }
}

void suite_riemann_roch_twist(Checker& check)
{
    // chi(P^3; O(j)) piecewise.
    for (Int j = -30; j <= 30; ++j) {
        Rat chi = riemann_roch_p3({1, j, 0, 0});
        Rat expect;
        if (j >= 0)
            expect = Rat(count_binom(j + 3, 3));
        else if (j <= -4)
            expect = Rat(-count_binom(-j - 1, 3));
        else
            expect = Rat(0);
        check.is_true(chi == expect, "rr O(j) " + tup({j}));
    }
    check.is_true(riemann_roch_p3({1, 0, 0, 0}) == Rat(1), "rr O");
    check.is_true(riemann_roch_p3({1, 1, 0, 0}) == Rat(4), "rr O(1)");
    check.is_true(riemann_roch_p3({1, -4, 0, 0}) == Rat(-1), "rr O(-4)");

    // Twist composition on random data.
    std::mt19937 rng(20240915);
    std::uniform_int_distribution<Int> coef(-40, 40), step(-6, 6);
    for (int iter = 0; iter < 500; ++iter) {
        for (Int rank : {Int(2), Int(3)}) {
            ChernData c{rank, coef(rng), coef(rng), rank == 2 ? 0 : coef(rng)};
            Int u = step(rng), t = step(rng);
            bool ok = twist_chern(twist_chern(c, u), t) == twist_chern(c, u + t) &&
                      twist_chern(c, 0) == c;
            check.is_true(ok, "twist comp " + tup({rank, c.c1, c.c2, c.c3, u, t}));
        }
    }
    // Euler-sequence tangent data twisted to the normalized range.
    check.is_true(twist_chern({3, 4, 6, 4}, -2) == ChernData{3, -2, 2, 0}, "tangent twist");
    check.is_true(twist_chern({2, 0, 1, 0}, 1) == ChernData{2, 2, 2, 0}, "rank2 twist");
}

void suite_euler_serre(Checker& check)
{
    for (Int k = 2; k <= 12; ++k) {
        SurfaceClass s(k);
        DivisorClass ks = canonical_class(s);
        for (Int x = -25; x <= 25; ++x)
            for (Int y = -25; y <= 25; ++y) {
                DivisorClass d(x, y);
                try {
                    CohomologyDims co = cohomology(d, s);
                    CohomologyDims dual = cohomology(ks - d, s);
                    bool ok = co.h0 - co.h1 + co.h2 == co.chi && co.h0 >= 0 && co.h1 >= 0 &&
                              co.h2 >= 0 && dual.h0 == co.h2 && dual.h2 == co.h0 &&
                              dual.h1 == co.h1 && co.chi == chi_divisor(d, s);
                    check.is_true(ok, "euler-serre " + tup({k, x, y}));
                } catch (const std::exception& e) {
                    check(false, "euler-serre " + tup({k, x, y}), "no fault", e.what());
                }
            }
    }
}

void suite_main_lemma(Checker& check)
{
    for (Int k = 2; k <= 12; ++k) {
        SurfaceClass s(k);
        for (Int a = 0; a <= 25; ++a)
            for (Int j = 0; j <= 25; ++j) {
                bool p_i = vanish_h0_neg_aL(a, j, s);
                bool e_i = cohomology(DivisorClass(j - a, j), s).h0 == 0;
                check.is_true(p_i == e_i, "lemma-i " + tup({k, a, j}));

                bool p_ii = vanish_h0_neg_bC(a, j, s);
                bool e_ii = cohomology(DivisorClass(j, j - a), s).h0 == 0;
                check.is_true(p_ii == e_ii, "lemma-ii " + tup({k, a, j}));

                bool p_iv = vanish_h1_neg_aL(a, j, s);
                bool e_iv = cohomology(DivisorClass(-a - j, -j), s).h1 == 0;
                check.is_true(p_iv == e_iv, "lemma-iv " + tup({k, a, j}));

                bool p_v = vanish_h1_neg_bC(a, j, s);
                bool e_v = cohomology(DivisorClass(-j, -a - j), s).h1 == 0;
                check.is_true(p_v == e_v, "lemma-v " + tup({k, a, j}));
            }
        // iii: h0(bC) = b+1.
        for (Int b = 0; b <= 30; ++b)
            check.equal(b + 1, h0_master(0, b, s), "lemma-iii " + tup({k, b}));
        // vi against the master dispatch.
        for (Int j = k - 3; j <= 20; ++j)
            for (Int b = 0; b <= 20; ++b)
                check.equal(h0_master(j, b + j, s), h0_bC_twist(b, j, s),
                            "lemma-vi " + tup({k, b, j}));
    }
}

void suite_sections_regimes(Checker& check)
{
    for (Int k = 2; k <= 12; ++k) {
        SurfaceClass s(k);
        // The dispatcher cross-checks every applicable closed form internally;
        // a disagreement anywhere in the grid surfaces as a fault here.
        for (Int a = -5; a <= 30; ++a)
            for (Int b = -5; b <= 30; ++b)
                check.no_fault([&] { (void)h0_master(a, b, s); }, "sections " + tup({k, a, b}));

        // Diagonal equals the plain surface twist.
        for (Int a = 0; a <= 30; ++a)
            check.equal(h0_surface_twist(a, s), h0_master(a, a, s), "diagonal " + tup({k, a}));

        // Third regime: termwise sum, closed product form, direct image.
        for (Int a = 0; a <= std::min<Int>(k - 2, 30); ++a)
            for (Int b = a; b <= 30; ++b) {
                Int sum = 0;
                for (auto [deg, mult] : direct_image_degrees(a, b, s))
                    sum += mult * std::max<Int>(deg + 1, 0);
                check.equal(h0_master(a, b, s), sum, "direct-image " + tup({k, a, b}));
                check.equal(3 * h0_master(a, b, s), count_binom(a + 2, 2) * (3 * b - 2 * a + 3),
                            "third-closed " + tup({k, a, b}));
            }
    }
    // Quadric bidegree count.
    SurfaceClass q(2);
    for (Int a = 0; a <= 30; ++a)
        for (Int b = 0; b <= 30; ++b)
            check.equal((a + 1) * (b + 1), h0_master(a, b, q), "bidegree " + tup({a, b}));
}

void suite_chern_coherence(Checker& check)
{
    // Rank 2: printed c2 forms agree and match the pushforward route.
    for (Int nu = 1; nu <= 6; ++nu)
        for (Int c1 : {Int(0), Int(-1)}) {
            if (2 * nu + c1 < 2)
                continue;
            for (Int b = 0; b <= 30; ++b) {
                BundleSpec spec = BundleSpec::rank2(nu, c1, 0, b);
                if (classify_rank2(spec).status != Stability::Stable)
                    continue;
                ChernData c = rank2_chern(spec);
                check.equal(c.c2, rank2_chern_grr(spec).c2, "r2 c2 routes " + tup({nu, c1, b}));
                check.is_true(check_rank2_c3(spec), "r2 c3 sanity " + tup({nu, c1, b}));
                Int m = rank2_thresholds(spec).jump_size;
                check.is_true(m >= 1, "r2 jump " + tup({nu, c1, b}));
            }
        }

    // Rank 3: general c3 specializes on the quadric.
    for (Int a = 0; a <= 30; ++a)
        for (Int b = 0; b <= 30; ++b) {
            if (std::max(a, b) < 2)
                continue;
            BundleSpec spec = BundleSpec::rank3_line(1, -1, a, b);
            ChernData c = rank3_chern(spec);
            check.equal(2 * a * b - a - b + 1, c.c3, "r3 k2 c3 " + tup({a, b}));
            check.equal(a + b - 1, c.c2, "r3 k2 c2 " + tup({a, b}));
        }

    // Rank 3 closed forms against the lattice route for every admissible spec.
    for (Int nu = 1; nu <= 4; ++nu)
        for (Int c1 : {Int(0), Int(-1), Int(-2)}) {
            Int k = 3 * nu + c1;
            if (k < 2)
                continue;
            for (Int a = 0; a <= 30; ++a)
                for (Int b = 0; b <= 30; ++b) {
                    BundleSpec spec = BundleSpec::rank3_line(nu, c1, a, b);
                    if (!classify_rank3(spec).admits_chern())
                        continue;
                    ChernData lhs = rank3_chern(spec);
                    ChernData rhs = rank3_chern_grr(spec);
                    check.is_true(lhs == rhs, "r3 chern routes " + tup({nu, c1, a, b}));
                }
        }

    // Hyperplane-power family against the lattice route with c1(L) = -lH.
    for (Int nu = 1; nu <= 4; ++nu)
        for (Int c1 : {Int(0), Int(-1), Int(-2)})
            for (Int l = 1; l <= 10; ++l) {
                BundleSpec spec = BundleSpec::rank3_hyperplane(nu, c1, l);
                Int k = spec.k();
                ChernData c = rank3_hyperplane(spec).second;
                Int m = 2 * nu + c1;
                Int c2 = 3 * nu * nu + 3 * nu * c1 + c1 * c1 + l * k;
                Int c3 = m * m * m + (3 * nu + 2 * c1) * l * k + l * l * k;
                check.is_true(c == ChernData{3, c1, c2, c3}, "hyperplane chern " + tup({nu, c1, l}));
            }

    // The k = nu = l = 1 bundle is the twisted tangent bundle.
    ChernData fixed = rank3_hyperplane(BundleSpec::rank3_hyperplane(1, -2, 1)).second;
    check.is_true(fixed == twist_chern({3, 4, 6, 4}, -2), "tangent fixed point");
}

void suite_classifier(Checker& check)
{
    // Rank 2: every grid point maps to exactly one status; stable set matches
    // the explicit case list.
    for (Int nu = 1; nu <= 6; ++nu)
        for (Int c1 : {Int(0), Int(-1)}) {
            Int k = 2 * nu + c1;
            for (Int a = -3; a <= 30; ++a)
                for (Int b = -3; b <= 30; ++b) {
                    StabilityVerdict v = classify_rank2(BundleSpec::rank2(nu, c1, a, b));
                    bool expect_stable =
                        k == 1 ? false
                        : (k == 2 ? ((a == 0 && b >= 2) || (b == 0 && a >= 2))
                                  : (a == 0 && b > nu + c1));
                    bool expect_invalid = k == 1;
                    check.is_true((v.status == Stability::Stable) == expect_stable &&
                                      (v.status == Stability::Invalid) == expect_invalid,
                                  "r2 classify " + tup({nu, c1, a, b}));
                }
        }

    // Rank 3 case list, including the excluded point and the unknown wedge.
    for (Int nu = 1; nu <= 4; ++nu)
        for (Int c1 : {Int(0), Int(-1), Int(-2)}) {
            Int k = 3 * nu + c1;
            for (Int a = -3; a <= 30; ++a)
                for (Int b = -3; b <= 30; ++b) {
                    StabilityVerdict v = classify_rank3(BundleSpec::rank3_line(nu, c1, a, b));
                    Stability expect;
                    if (k == 1)
                        expect = a >= 1 ? Stability::Stable : Stability::NotStable;
                    else if (a < 0 || b < 0 ||
                             (a > b && b * (k - 1) - a * (k - 2) < 0))
                        expect = Stability::NotLocallyFreeGeneric;
                    else if (std::max(a, b) <= 2 * nu + c1)
                        expect = Stability::NotStable;
                    else if (k == 2 || a > b)
                        expect = Stability::Stable;
                    else
                        expect = 2 * a > (c1 == 0 ? nu : nu - 1) ? Stability::Stable
                                                                 : Stability::Unknown;
                    check.is_true(v.status == expect, "r3 classify " + tup({nu, c1, a, b}));
                    if (v.status == Stability::Stable && k >= 3 && a > b)
                        check.is_true(a >= k - 1 && b >= k - 2, "case3 bounds " + tup({nu, c1, a, b}));
                }
        }

    check.is_true(classify_rank3(BundleSpec::rank3_line(1, 0, 2, 1)).status == Stability::NotStable,
                  "excluded point k=3,a=2,b=1");
    check.is_true(classify_rank2(BundleSpec::rank2(1, -1, 0, 5)).status == Stability::Invalid,
                  "rank2 k=1 invalid");
}

void suite_moduli_rank2(Checker& check)
{
    // Exact dimensions and the expected-dimension identity.
    for (Int k : {Int(2), Int(3)}) {
        auto [nu, c1] = rank2_params_from_k(k);
        for (Int b = 2; b <= 30; ++b) {
            ModuliReport r = rank2_exact_dim(k, b);
            ChernData c = rank2_chern(BundleSpec::rank2(nu, c1, 0, b));
            check.equal(rank2_ed(c.c1, c.c2), r.dim_M.lo, "r2 exact ed " + tup({k, b}));
            check.is_true(r.dim_Y <= r.dim_M.hi, "r2 dimY<=dimM " + tup({k, b}));
        }
    }
    check.equal(5, rank2_dimY(2, 2), "dimY(2,2)");
    check.equal(13, rank2_dimY(2, 3), "dimY(2,3)");
    check.equal(11, rank2_dimY(3, 2), "dimY(3,2)");
    check.equal(21, rank2_dimY(3, 3), "dimY(3,3)");
    check.equal(5, rank2_exact_dim(2, 2).dim_M.lo, "dimM(2,2)");
    check.equal(13, rank2_exact_dim(2, 3).dim_M.lo, "dimM(2,3)");
    check.equal(11, rank2_exact_dim(3, 2).dim_M.lo, "dimM(3,2)");

    // Parameter-count route: dim Y = dim{S} + dim{tau} - dim{sigma} with
    // engine section counts.
    for (Int k = 2; k <= 8; ++k) {
        auto [nu, c1] = rank2_params_from_k(k);
        for (Int b = 2; b <= 20; ++b) {
            if (classify_rank2(BundleSpec::rank2(nu, c1, 0, b)).status != Stability::Stable)
                continue;
            SurfaceClass s(k);
            Int expect;
            if (k == 2)
                expect = 9 + 2 * (b + 1) - 2 * (2 + h0_master(2, 2 - b, s));
            else
                expect = count_binom(k + 3, 3) - 1 - std::max<Int>(k - 3, 0) + 2 * (b + 1) -
                         2 * (2 + h0_master(k, k - b, s));
            check.equal(expect, rank2_dimY(k, b), "r2 dimY param-count " + tup({k, b}));
        }
    }

    // Interval reports for k >= 4.
    for (Int k = 4; k <= 8; ++k) {
        auto [nu, c1] = rank2_params_from_k(k);
        for (Int b = nu + c1 + 1; b <= 20; ++b) {
            if (b < k - 4)
                continue;
            ModuliReport r = rank2_dim_bounds(k, b);
            Int lo = 8 * (k - 1) * b - 2 * k * k - 3;
            Int hi = lo + (k * k - 5 * k + 6) * b - count_binom(k - 1, 3);
            bool ok = r.dim_M.lo == lo && r.dim_M.hi == hi && r.dim_Y <= hi &&
                      r.h1_end.lo - r.h2_end.lo == r.ed && r.h1_end.hi - r.h2_end.hi == r.ed;
            check.is_true(ok, "r2 bounds " + tup({k, b}));
        }
    }
    check.is_true(rank2_dim_bounds(4, 5).dim_M == IntInterval(85, 94), "bounds(4,5)");
    check.is_true(rank2_dim_bounds(5, 5).dim_M == IntInterval(107, 133), "bounds(5,5)");
}

void suite_moduli_quadric(Checker& check)
{
    for (Int a = 0; a <= 30; ++a)
        for (Int b = 0; b <= 30; ++b) {
            if (classify_rank3(BundleSpec::rank3_line(1, -1, a, b)).status != Stability::Stable)
                continue;
            ModuliReport r = rank3II_report_k2(a, b);
            Int ed = 12 * (a + b) - 24;
            bool ok = r.h1_end.lo - r.h2_end.lo == ed && r.ed == ed && r.dim_Y <= r.dim_M.hi &&
                      r.dim_Y == rank3II_dimY(2, a, b);
            check.is_true(ok, "k2 report " + tup({a, b}));
            if (std::max(a, b) == 3)
                check.equal(3 * (a + 1) * (b + 1), 12 * (a + b) - 24, "k2 dimY overlap " + tup({a, b}));
            if (std::min(a, b) == 3)
                check.equal(3 * (a + 1) * (b + 1), 12 * (a + b) - 24, "k2 h1 overlap " + tup({a, b}));
        }
    check.equal(75, rank3II_report_k2(4, 4).h1_end.lo, "k2 (4,4) h1");
    check.equal(3, rank3II_report_k2(4, 4).h2_end.lo, "k2 (4,4) h2");
    check.equal(24, rank3II_report_k2(2, 2).dim_Y, "k2 (2,2) dimY");
    check.equal(48, rank3II_report_k2(3, 3).dim_Y, "k2 (3,3) dimY");
}

void suite_moduli_cubic(Checker& check)
{
    for (Int a = 0; a <= 30; ++a)
        for (Int b = 0; b <= 30; ++b) {
            if (classify_rank3(BundleSpec::rank3_line(1, 0, a, b)).status != Stability::Stable)
                continue;
            ModuliReport r = rank3II_report_k3(a, b);
            Int ed = 12 * a + 24 * b - 44;
            bool ok = r.h1_end.lo - r.h2_end.lo == ed && r.ed == ed && r.dim_Y <= r.h1_end.hi &&
                      r.dim_Y == rank3II_dimY(3, a, b);
            check.is_true(ok, "k3 report " + tup({a, b}));
        }
    check.equal(52, rank3II_report_k3(2, 3).dim_Y, "k3 (2,3) dimY");
    check.equal(37, rank3II_report_k3(1, 3).dim_Y, "k3 (1,3) dimY");
    check.equal(103, rank3II_report_k3(4, 4).dim_Y, "k3 (4,4) dimY");
    check.equal(3, rank3II_report_k3(4, 4).h2_end.lo, "k3 (4,4) h2");
    check.equal(103, rank3II_dimY(3, 4, 4), "rank3II_dimY(3,4,4)");
    check.equal(48, rank3II_dimY(2, 3, 3), "rank3II_dimY(2,3,3)");
    check.equal(162, rank3II_dimY(4, 4, 5), "rank3II_dimY(4,4,5)");
}

void suite_hyperplane_family(Checker& check)
{
    for (Int nu = 1; nu <= 4; ++nu)
        for (Int c1 : {Int(0), Int(-1), Int(-2)})
            for (Int l = 1; l <= 10; ++l) {
                Int k = 3 * nu + c1;
                ModuliReport r = rank3I_report(k, nu, c1, l);
                check.is_true(r.h1_end.lo - r.h2_end.lo == r.ed && r.h2_end.lo >= 0 &&
                                  r.dim_Y == r.dim_M.lo,
                              "rank3I identity " + tup({nu, c1, l}));
            }
    ModuliReport fixed = rank3I_report(1, 1, -2, 1);
    ChernData c = rank3_hyperplane(BundleSpec::rank3_hyperplane(1, -2, 1)).second;
    bool ok = fixed.dim_Y == 0 && fixed.ed == 0 && fixed.h2_end == IntInterval(0) && c.c2 == 2 &&
              c.c3 == 0;
    check.is_true(ok, "hyperplane fixed point");
    check.equal(64, rank3I_report(3, 1, 0, 1).dim_Y, "rank3I (3,1,0,1)");
    check.equal(103, rank3I_report(3, 1, 0, 2).dim_Y, "rank3I (3,1,0,2)");
}

void suite_bound_coherence(Checker& check)
{
    for (Int k = 2; k <= 8; ++k) {
        auto [nu, c1] = rank3_params_from_k(k);
        SurfaceClass s(k);
        for (Int a = 0; a <= 20; ++a)
            for (Int b = 0; b <= 20; ++b) {
                BundleSpec spec = BundleSpec::rank3_line(nu, c1, a, b);
                if (classify_rank3(spec).status != Stability::Stable)
                    continue;
                bool hyp = a > b ? ((b >= k && b * (k - 1) - a * (k - 2) > 2) ||
                                    (a == k + 1 && b == k))
                                 : (a > k || (a == k && b == k + 1));
                if (!hyp)
                    continue;
                ModuliReport r = rank3II_h1_klarge(k, nu, c1, a, b);
                Int gap = r.h1_end.hi - r.dim_Y;
                bool ok = r.dim_Y <= r.h1_end.hi && gap == std::max<Int>(k - 3, 0) &&
                          r.h1_end.lo - r.h2_end.lo == r.ed;
                check.is_true(ok, "klarge bound " + tup({k, a, b}));

                // Parameter-count route for the uncorrected region.
                if (std::max(a, b) > k) {
                    Int e7 = count_binom(k + 3, 3) - std::max<Int>(k - 3, 0) - 10 +
                             3 * h0_master(a, b, s) - 3 * h0_master(k - a, k - b, s);
                    check.equal(e7, rank3II_dimY(k, a, b), "e7 route " + tup({k, a, b}));
                }
            }
    }
    check.equal(103, rank3II_h1_klarge(3, 1, 0, 4, 4).h1_end.hi, "klarge (3,4,4)");
    check.equal(75, rank3II_h1_klarge(2, 1, -1, 4, 4).h1_end.hi, "klarge (2,4,4)");
}

struct SuiteEntry {
    const char* name;
    void (*fn)(Checker&);
};

constexpr SuiteEntry kSuites[] = {
    {"lattice", suite_lattice},
    {"riemann-roch-twist", suite_riemann_roch_twist},
    {"euler-serre", suite_euler_serre},
    {"main-lemma", suite_main_lemma},
    {"sections-regimes", suite_sections_regimes},
    {"chern-coherence", suite_chern_coherence},
    {"classifier", suite_classifier},
    {"moduli-rank2", suite_moduli_rank2},
    {"moduli-quadric", suite_moduli_quadric},
    {"moduli-cubic", suite_moduli_cubic},
    {"hyperplane-family", suite_hyperplane_family},
    {"bound-coherence", suite_bound_coherence},
};

} // namespace

Int VerifyReport::checks_passed() const
{
    Int n = 0;
    for (const auto& s : suites)
        n += s.passed;
    return n;
}

Int VerifyReport::checks_failed() const
{
    Int n = 0;
    for (const auto& s : suites)
        n += s.failed;
    return n;
}

std::vector<std::string> verify_suite_names()
{
    std::vector<std::string> names;
    for (const auto& e : kSuites)
        names.emplace_back(e.name);
    return names;
}

VerifyReport run_verify(const std::vector<std::string>& only)
{
    VerifyReport report;
    for (const auto& e : kSuites) {
        if (!only.empty() && std::find(only.begin(), only.end(), e.name) == only.end())
            continue;
        SuiteResult result;
        result.name = e.name;
        Checker check(result);
        try {
            e.fn(check);
        } catch (const std::exception& ex) {
            check(false, "suite aborted", "completion", ex.what());
        }
        report.suites.push_back(std::move(result));
    }
    if (report.suites.empty())
        throw domain_fault("run_verify: no suite matches the requested names");
    return report;
}

Json verify_report_to_json(const VerifyReport& report)
{
    Json j = Json::object();
    Json suites = Json::array();
    for (const auto& s : report.suites)
        suites.push_back(s.name);
    j["suites_run"] = suites;
    j["checks_passed"] = report.checks_passed();
    j["checks_failed"] = report.checks_failed();
    Json failures = Json::array();
    for (const auto& s : report.suites)
        for (const auto& f : s.failures)
            failures.push_back(Json{{"suite", f.suite},
                                    {"inputs", f.inputs},
                                    {"expected", f.expected},
                                    {"actual", f.actual}});
    j["failures"] = failures;
    return j;
}

} // namespace p3b
