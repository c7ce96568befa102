#pragma once

#include "p3b/cohomology.hpp"
#include "p3b/lattice.hpp"

#include <string>
#include <vector>

namespace p3b {

enum class Family {
    Rank2,                // rank-2 extension by O_S(-aL-bC)(nu+c1)
    Rank3LineDivisor,     // rank-3 extension by O_S(-aL-bC)(2nu+c1)
    Rank3HyperplanePower, // rank-3 extension by O_S(-l)
};

struct BundleSpec {
    Family family = Family::Rank2;
    Int nu = 1;
    Int c1 = 0;
    Int a = 0;
    Int b = 0;
    Int l = 0;

    static BundleSpec rank2(Int nu, Int c1, Int a, Int b);
    static BundleSpec rank3_line(Int nu, Int c1, Int a, Int b);
    static BundleSpec rank3_hyperplane(Int nu, Int c1, Int l);

    Int rank() const { return family == Family::Rank2 ? 2 : 3; }
    Int k() const { return family == Family::Rank2 ? 2 * nu + c1 : 3 * nu + c1; }
};

enum class Stability {
    Stable,
    SemistableOnly,
    NotLocallyFreeGeneric,
    NotStable,
    Unknown,
    Invalid,
};

const char* to_string(Stability s);

struct StabilityVerdict {
    Stability status = Stability::Invalid;
    std::string code;   // machine-readable, e.g. "r3.case4"
    std::string reason; // human-readable, cites the governing case

    bool admits_chern() const { return status == Stability::Stable || status == Stability::Unknown; }
};

// Rank-2 classification: stable iff (k=2, one of a,b zero and the other >= 2)
// or (k >= 3, a = 0, b > nu+c1); k = 1 is Invalid.
StabilityVerdict classify_rank2(const BundleSpec& spec);

// Semistability predicate for the c1 = 0 family: nu >= 0 and h0(L(-1)) = 0.
bool rank2_semistable(const BundleSpec& spec);

// c2 = b(k-1) - (k^2 - c1^2)/4 for a stable rank-2 spec; c3 = 0.
ChernData rank2_chern(const BundleSpec& spec);

// Independent route: c2 = (nu+c1)^2 - deg c1(L) from the pushforward computation.
ChernData rank2_chern_grr(const BundleSpec& spec);

// ((nu+c1)H - c1(L))^2 == 0 in the lattice; reduces to (bC)^2 = 0.
bool check_rank2_c3(const BundleSpec& spec);

struct Rank2Thresholds {
    Int h3_zero_from = 0;        // H^3(E(l)) = 0 for l >= this
    Int h2_zero_above = 0;       // H^2(E(l)) = 0 for l >  this
    Int h1_zero_above = 0;       // H^1(E(l)) = 0 for l >  this
    Int globally_generated_from = 0; // E(l) globally generated iff l >= this
    Int jump_size = 0;           // jump of E along L: E_L = O(m) + O(-m+c1)
};

Rank2Thresholds rank2_thresholds(const BundleSpec& spec);

// Rank-3 classification over the line-divisor family; k = 1 specs are
// normalized into the hyperplane-power family (b is ignored, there is no
// curve C on a plane).
StabilityVerdict classify_rank3(const BundleSpec& spec);

// c2 = a + b(k-1) - (k^2-c1^2)/3 and the cubic-in-parameters c3, for specs
// classified Stable or Unknown.
ChernData rank3_chern(const BundleSpec& spec);

// Independent route through deg c1(L) and c1(L)^2 in the lattice (k >= 2).
ChernData rank3_chern_grr(const BundleSpec& spec);

// Hyperplane-power family: always stable; c2 = (k^2+c1*k+c1^2)/3 + l*k.
std::pair<StabilityVerdict, ChernData> rank3_hyperplane(const BundleSpec& spec);

struct Rank3H1Case {
    std::string clause;
    bool ambiguous = false; // quantifier left open in the source statement
};

struct Rank3Thresholds {
    Int h3_zero_from = 0;              // by c1: l >= -4 (c1=0) or l >= -3
    Int h2_validity_floor = 0;         // the h2 criterion applies for l > this
    Int h2_zero_above = 0;             // within validity: H^2(E(l)) = 0 iff l > this
    std::vector<Rank3H1Case> h1_cases; // verbatim case list
    Int globally_generated_from = 0;   // E(l) globally generated iff l >= this
};

Rank3Thresholds rank3_thresholds(const BundleSpec& spec);

struct DegeneracyCurve {
    Int degree = 0;            // c2(E(nu))
    Int self_intersection = 0; // c3(E(nu))
    Rat genus;                 // 1 + (c3(E(nu)) + c2(E(nu))(k-4))/2, unvalidated
};

DegeneracyCurve degeneracy_curve(const BundleSpec& spec);

} // namespace p3b
