// Acceptance suite: one line per criterion, exit 0 iff all pass.
//
// Every criterion is exact (tolerance 0); the stated wall-time budgets are
// enforced alongside the value checks.

#include "p3b/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace p3b;

namespace {

using Clock = std::chrono::steady_clock;

struct Criterion {
    int id = 0;
    std::string name;
    bool pass = true;
    double ms = 0.0;
    std::string detail;

    Criterion(int id_, std::string name_) : id(id_), name(std::move(name_)) {}
};

double ms_since(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Run named verify suites; pass iff zero failed checks and within budget.
void run_suites(Criterion& c, const std::vector<std::string>& names, double budget_ms)
{
    auto start = Clock::now();
    VerifyReport report = run_verify(names);
    c.ms = ms_since(start);
    std::ostringstream detail;
    detail << report.checks_passed() << " checks";
    if (report.checks_failed() != 0) {
        c.pass = false;
        detail << ", " << report.checks_failed() << " FAILED";
        int shown = 0;
        for (const auto& s : report.suites)
            for (const auto& f : s.failures) {
                if (shown == 5) {
                    detail << " ...";
                } else if (shown < 5) {
                    detail << " [" << f.suite << " " << f.inputs << " expected " << f.expected
                           << " got " << f.actual << "]";
                }
                ++shown;
            }
    }
    if (c.ms > budget_ms) {
        c.pass = false;
        detail << ", over budget " << budget_ms << " ms";
    }
    c.detail = detail.str();
}

void check_value(Criterion& c, const std::string& what, Int expected,
                 const std::function<Int()>& compute, double budget_ms)
{
    auto start = Clock::now();
    Int got = compute();
    double ms = ms_since(start);
    c.ms += ms;
    if (got != expected) {
        c.pass = false;
        c.detail += " " + what + ": expected " + std::to_string(expected) + ", got " +
                    std::to_string(got) + ";";
    }
    if (ms > budget_ms) {
        c.pass = false;
        c.detail += " " + what + " over budget;";
    }
}

} // namespace

int main()
{
    std::vector<Criterion> criteria;

    {
        Criterion c{1, "known moduli dimensions reproduce exactly"};
        check_value(c, "rank2 dim(k=2,b=2)", 5, [] { return rank2_exact_dim(2, 2).dim_M.lo; }, 1.0);
        check_value(c, "rank2 dim(k=2,b=3)", 13, [] { return rank2_exact_dim(2, 3).dim_M.lo; }, 1.0);
        check_value(c, "rank2 dim(k=3,b=2)", 11, [] { return rank2_exact_dim(3, 2).dim_M.lo; }, 1.0);
        check_value(c, "rank2 dimY(k=3,b=3)", 21, [] { return rank2_dimY(3, 3); }, 1.0);
        check_value(c, "rank3 dimY(k=3,a=2,b=3)", 52, [] { return rank3II_dimY(3, 2, 3); }, 1.0);
        check_value(c, "rank3 dimY(k=3,a=1,b=3)", 37, [] { return rank3II_dimY(3, 1, 3); }, 1.0);
        criteria.push_back(c);
    }

    {
        Criterion c{2, "hyperplane-family fixed point k=nu=l=1"};
        check_value(c, "dim Y", 0, [] { return rank3I_report(1, 1, -2, 1).dim_Y; }, 1.0);
        check_value(c, "h2(End E)", 0, [] { return rank3I_report(1, 1, -2, 1).h2_end.lo; }, 1.0);
        check_value(c, "ed", 0, [] { return rank3I_report(1, 1, -2, 1).ed; }, 1.0);
        check_value(
            c, "c2", 2, [] { return rank3_hyperplane(BundleSpec::rank3_hyperplane(1, -2, 1)).second.c2; },
            1.0);
        check_value(
            c, "c3", 0, [] { return rank3_hyperplane(BundleSpec::rank3_hyperplane(1, -2, 1)).second.c3; },
            1.0);
        check_value(
            c, "tangent-twist cross-check", 1,
            [] {
                ChernData e = rank3_hyperplane(BundleSpec::rank3_hyperplane(1, -2, 1)).second;
                return Int(e == twist_chern({3, 4, 6, 4}, -2));
            },
            1.0);
        criteria.push_back(c);
    }

    {
        Criterion c{3, "identity suite A: Euler characteristic / Serre duality"};
        run_suites(c, {"euler-serre", "main-lemma"}, 5000.0);
        criteria.push_back(c);
    }

    {
        Criterion c{4, "identity suite B: expected dimension"};
        run_suites(c, {"moduli-quadric", "moduli-cubic", "moduli-rank2"}, 1000.0);
        criteria.push_back(c);
    }

    {
        Criterion c{5, "regime coherence"};
        run_suites(c, {"sections-regimes", "moduli-quadric"}, 1000.0);
        criteria.push_back(c);
    }

    {
        Criterion c{6, "Chern coherence"};
        run_suites(c, {"chern-coherence"}, 1000.0);
        criteria.push_back(c);
    }

    {
        Criterion c{7, "bound coherence"};
        run_suites(c, {"bound-coherence", "hyperplane-family"}, 1000.0);
        criteria.push_back(c);
    }

    bool all = true;
    for (const Criterion& c : criteria) {
        all = all && c.pass;
        std::printf("criterion %d (%s): %s [%.2f ms]%s%s\n", c.id, c.name.c_str(),
                    c.pass ? "PASS" : "FAIL", c.ms, c.detail.empty() ? "" : " ",
                    c.detail.c_str());
    }
    return all ? 0 : 1;
}
