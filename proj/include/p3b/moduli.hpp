#pragma once

#include "p3b/bundles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace p3b {

struct IntInterval {
    Int lo = 0;
    Int hi = 0;

    IntInterval() = default;
    IntInterval(Int v) : lo(v), hi(v) {}
    IntInterval(Int l, Int h) : lo(l), hi(h) {}

    bool exact() const { return lo == hi; }
    bool operator==(const IntInterval& o) const = default;
};

enum class Tri { Yes, No, Unknown };

const char* to_string(Tri t);

struct ModuliReport {
    Int dim_Y = 0;
    Int ed = 0;
    IntInterval h1_end;
    IntInterval h2_end;
    IntInterval dim_M;
    Tri smooth_at_E = Tri::Unknown;
    std::optional<Int> codim_bound;
    bool delta_assumption = false; // upper ends assume dim(im delta) = 0
    std::optional<bool> dim_equals_Y;
    std::vector<std::string> notes;
};

// Recover (nu, c1) from k for the normalized families.
std::pair<Int, Int> rank2_params_from_k(Int k);
std::pair<Int, Int> rank3_params_from_k(Int k);

// Parameter count of the rank-2 construction (six-branch piecewise form).
Int rank2_dimY(Int k, Int b);

// 8 c2 + 2 c1 - 3.
Int rank2_ed(Int c1, Int c2);

// Exact moduli dimension for k = 2, 3: 8b-11 resp. 16b-21; smooth, h2 = 0.
ModuliReport rank2_exact_dim(Int k, Int b);

// For k >= 4, b >= k-4: two-sided bounds from the h2 estimate.
ModuliReport rank2_dim_bounds(Int k, Int b);

// Hyperplane-power family: dim Y = dim M = h1(End E), exact.
ModuliReport rank3I_report(Int k, Int nu, Int c1, Int l);

// 12 c2 - 4 c1^2 - 8.
Int rank3_ed(Int c1, Int c2);

// Parameter count of the rank-3 line-divisor construction (three regimes
// with their b <= k / a <= k corrections).
Int rank3II_dimY(Int k, Int a, Int b);

// h1(End E) under the large-k vanishing hypotheses, as an interval whose
// upper end assumes dim(im delta) = 0; exact for k = 2, 3.
ModuliReport rank3II_h1_klarge(Int k, Int nu, Int c1, Int a, Int b);

// Quadric family: exact dim M, h1, h2.
ModuliReport rank3II_report_k2(Int a, Int b);

// Cubic family: exact h1, h2 with the 2b < a+4 sub-branch and the stated
// smoothness cases.
ModuliReport rank3II_report_k3(Int a, Int b);

} // namespace p3b
