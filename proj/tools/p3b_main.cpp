#include "p3b/verify.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using p3b::Int;
using p3b::Json;
using p3b::Record;

struct Axis {
    Int lo = 0;
    Int hi = 0;
    bool set = false;
};

struct Query {
    std::string op;
    std::string format = "json";
    std::map<std::string, Axis> axes; // keyed by parameter name
};

// "N" or "LO:HI" (inclusive).
Axis parse_axis(const std::string& text)
{
    Axis axis;
    axis.set = true;
    auto colon = text.find(':');
    std::size_t used = 0;
    if (colon == std::string::npos) {
        axis.lo = axis.hi = std::stoll(text, &used);
        if (used != text.size())
            throw CLI::ValidationError("expected an integer, got '" + text + "'");
    } else {
        axis.lo = std::stoll(text.substr(0, colon), &used);
        if (used != colon)
            throw CLI::ValidationError("bad range '" + text + "'");
        axis.hi = std::stoll(text.substr(colon + 1), &used);
        if (used != text.size() - colon - 1)
            throw CLI::ValidationError("bad range '" + text + "'");
        if (axis.hi < axis.lo)
            throw CLI::ValidationError("empty range '" + text + "'");
    }
    return axis;
}

struct Point {
    std::map<std::string, Int> vals;

    std::optional<Int> get(const std::string& key) const
    {
        auto it = vals.find(key);
        if (it == vals.end())
            return std::nullopt;
        return it->second;
    }

    Int need(const std::string& key) const
    {
        auto v = get(key);
        if (!v)
            throw CLI::ValidationError("missing required parameter --" + key);
        return *v;
    }
};

Json rat_to_json(const p3b::Rat& r)
{
    if (r.denominator() == 1)
        return Json(r.numerator());
    return Json(std::to_string(r.numerator()) + "/" + std::to_string(r.denominator()));
}

void put_point(Record& rec, const Point& pt)
{
    rec.k = pt.get("k");
    rec.nu = pt.get("nu");
    rec.c1 = pt.get("c1");
    rec.a = pt.get("a");
    rec.b = pt.get("b");
    rec.l = pt.get("l");
}

p3b::BundleSpec spec_from_point(const Point& pt, Int rank)
{
    Int nu, c1;
    if (pt.get("nu") && pt.get("c1")) {
        nu = pt.need("nu");
        c1 = pt.need("c1");
    } else if (pt.get("k")) {
        auto [n, c] = rank == 2 ? p3b::rank2_params_from_k(pt.need("k"))
                                : p3b::rank3_params_from_k(pt.need("k"));
        nu = n;
        c1 = c;
    } else {
        throw CLI::ValidationError("need either --nu/--c1 or --k");
    }
    if (rank == 2)
        return p3b::BundleSpec::rank2(nu, c1, pt.get("a").value_or(0), pt.need("b"));
    if (pt.get("l"))
        return p3b::BundleSpec::rank3_hyperplane(nu, c1, pt.need("l"));
    return p3b::BundleSpec::rank3_line(nu, c1, pt.need("a"), pt.need("b"));
}

void fill_verdict(Record& rec, const p3b::StabilityVerdict& v)
{
    rec.status = p3b::to_string(v.status);
    rec.reason = v.code + ": " + v.reason;
}

Record run_cohom(const Point& pt)
{
    Record rec;
    put_point(rec, pt);
    p3b::SurfaceClass s(pt.need("k"));
    p3b::DivisorClass d =
        p3b::DivisorClass::from_twisted(pt.need("a"), pt.need("b"), pt.get("j").value_or(0));
    p3b::CohomologyDims co = p3b::cohomology(d, s);
    rec.status = "ok";
    rec.extra["x_L"] = d.x_l;
    rec.extra["x_C"] = d.x_c;
    rec.extra["h0"] = co.h0;
    rec.extra["h1"] = co.h1;
    rec.extra["h2"] = co.h2;
    rec.extra["chi"] = co.chi;
    return rec;
}

Record run_classify(const Point& pt)
{
    Record rec;
    put_point(rec, pt);
    Int rank = pt.need("rank");
    p3b::BundleSpec spec = spec_from_point(pt, rank);
    rec.k = spec.k();
    rec.nu = spec.nu;
    rec.c1 = spec.c1;
    p3b::StabilityVerdict v;
    if (rank == 2) {
        v = p3b::classify_rank2(spec);
        if (spec.c1 == 0 && spec.k() >= 2)
            rec.extra["semistable"] = p3b::rank2_semistable(spec);
    } else if (spec.family == p3b::Family::Rank3HyperplanePower) {
        v = p3b::rank3_hyperplane(spec).first;
    } else {
        v = p3b::classify_rank3(spec);
    }
    fill_verdict(rec, v);
    return rec;
}

Record run_chern(const Point& pt)
{
    Record rec;
    put_point(rec, pt);
    Int rank = pt.need("rank");
    p3b::BundleSpec spec = spec_from_point(pt, rank);
    rec.k = spec.k();
    rec.nu = spec.nu;
    rec.c1 = spec.c1;

    p3b::ChernData c;
    if (rank == 2) {
        p3b::StabilityVerdict v = p3b::classify_rank2(spec);
        fill_verdict(rec, v);
        if (v.status != p3b::Stability::Stable)
            return rec;
        c = p3b::rank2_chern(spec);
        rec.extra["c2_pushforward_route"] = p3b::rank2_chern_grr(spec).c2;
        rec.extra["c3_lattice_check"] = p3b::check_rank2_c3(spec);
    } else if (spec.family == p3b::Family::Rank3HyperplanePower) {
        auto [v, cc] = p3b::rank3_hyperplane(spec);
        fill_verdict(rec, v);
        c = cc;
    } else {
        p3b::StabilityVerdict v = p3b::classify_rank3(spec);
        fill_verdict(rec, v);
        if (!v.admits_chern())
            return rec;
        c = p3b::rank3_chern(spec);
    }
    rec.extra["rank"] = c.rank;
    rec.extra["chern_c1"] = c.c1;
    rec.c2 = c.c2;
    rec.c3 = c.c3;
    if (auto j = pt.get("j")) {
        p3b::ChernData tw = p3b::twist_chern(c, *j);
        rec.extra["twisted"] = Json{{"t", *j}, {"c1", tw.c1}, {"c2", tw.c2}, {"c3", tw.c3}};
    }
    if (rank == 3) {
        p3b::DegeneracyCurve y = p3b::degeneracy_curve(spec);
        rec.extra["degeneracy_curve"] = Json{{"degree", y.degree},
                                             {"self_intersection", y.self_intersection},
                                             {"genus", rat_to_json(y.genus)}};
    }
    return rec;
}

Record run_thresholds(const Point& pt)
{
    Record rec;
    put_point(rec, pt);
    Int rank = pt.need("rank");
    p3b::BundleSpec spec = spec_from_point(pt, rank);
    rec.k = spec.k();
    rec.nu = spec.nu;
    rec.c1 = spec.c1;
    if (rank == 2) {
        p3b::StabilityVerdict v = p3b::classify_rank2(spec);
        fill_verdict(rec, v);
        if (v.status != p3b::Stability::Stable)
            return rec;
        p3b::Rank2Thresholds t = p3b::rank2_thresholds(spec);
        rec.extra["h3_zero_from"] = t.h3_zero_from;
        rec.extra["h2_zero_above"] = t.h2_zero_above;
        rec.extra["h1_zero_above"] = t.h1_zero_above;
        rec.extra["globally_generated_from"] = t.globally_generated_from;
        rec.extra["jump_size"] = t.jump_size;
        return rec;
    }
    p3b::StabilityVerdict v = p3b::classify_rank3(spec);
    fill_verdict(rec, v);
    if (v.status != p3b::Stability::Stable)
        return rec;
    p3b::Rank3Thresholds t = p3b::rank3_thresholds(spec);
    rec.extra["h3_zero_from"] = t.h3_zero_from;
    rec.extra["h2_validity_floor"] = t.h2_validity_floor;
    rec.extra["h2_zero_above"] = t.h2_zero_above;
    Json cases = Json::array();
    for (const auto& c : t.h1_cases)
        cases.push_back(Json{{"clause", c.clause}, {"ambiguous", c.ambiguous}});
    rec.extra["h1_cases"] = cases;
    rec.extra["globally_generated_from"] = t.globally_generated_from;
    return rec;
}

Record run_moduli(const Point& pt)
{
    Record rec;
    put_point(rec, pt);
    Int rank = pt.need("rank");
    p3b::BundleSpec spec = spec_from_point(pt, rank);
    Int k = spec.k();
    rec.k = k;
    rec.nu = spec.nu;
    rec.c1 = spec.c1;

    if (rank == 2) {
        p3b::StabilityVerdict v = p3b::classify_rank2(spec);
        fill_verdict(rec, v);
        if (v.status != p3b::Stability::Stable)
            return rec;
        Int b = spec.b;
        p3b::ModuliReport m = (k <= 3) ? p3b::rank2_exact_dim(k, b) : p3b::rank2_dim_bounds(k, b);
        p3b::put_report(rec, m);
        return rec;
    }

    if (spec.family == p3b::Family::Rank3HyperplanePower) {
        fill_verdict(rec, p3b::rank3_hyperplane(spec).first);
        p3b::put_report(rec, p3b::rank3I_report(k, spec.nu, spec.c1, spec.l));
        return rec;
    }

    p3b::StabilityVerdict v = p3b::classify_rank3(spec);
    fill_verdict(rec, v);
    if (v.status != p3b::Stability::Stable)
        return rec;
    if (k == 2) {
        p3b::put_report(rec, p3b::rank3II_report_k2(spec.a, spec.b));
    } else if (k == 3) {
        p3b::put_report(rec, p3b::rank3II_report_k3(spec.a, spec.b));
    } else {
        try {
            p3b::put_report(rec, p3b::rank3II_h1_klarge(k, spec.nu, spec.c1, spec.a, spec.b));
        } catch (const p3b::domain_fault&) {
            // stable but outside the vanishing hypotheses: the parameter
            // count and the expected dimension are still well-defined
            rec.dim_Y = p3b::rank3II_dimY(k, spec.a, spec.b);
            rec.ed = p3b::rank3_ed(spec.c1, p3b::rank3_chern(spec).c2);
            rec.extra["notes"] =
                std::vector<std::string>{"h1(End E) formula out of scope for these parameters"};
        }
    }
    return rec;
}

Record run_point(const std::string& op, const Point& pt)
{
    if (op == "cohom")
        return run_cohom(pt);
    if (op == "classify")
        return run_classify(pt);
    if (op == "chern")
        return run_chern(pt);
    if (op == "thresholds")
        return run_thresholds(pt);
    if (op == "moduli")
        return run_moduli(pt);
    throw p3b::domain_fault("unknown operation '" + op + "'");
}

// Cartesian sweep in lexicographic order over the fixed axis order.
// Non-admissible points become status records, never silent skips.
std::vector<Record> run_sweep(const Query& q)
{
    static const char* kAxisOrder[] = {"rank", "k", "nu", "c1", "a", "b", "l", "j"};
    std::vector<std::string> axes;
    for (const char* name : kAxisOrder)
        if (q.axes.count(name))
            axes.push_back(name);

    std::vector<Record> records;
    Point pt;
    std::function<void(std::size_t)> walk = [&](std::size_t depth) {
        if (depth == axes.size()) {
            try {
                records.push_back(run_point(q.op, pt));
            } catch (const p3b::domain_fault& e) {
                Record rec;
                put_point(rec, pt);
                rec.status = "inadmissible";
                rec.reason = e.what();
                records.push_back(rec);
            }
            return;
        }
        const Axis& ax = q.axes.at(axes[depth]);
        for (Int v = ax.lo; v <= ax.hi; ++v) {
            pt.vals[axes[depth]] = v;
            walk(depth + 1);
        }
        pt.vals.erase(axes[depth]);
    };
    walk(0);
    return records;
}

int emit(const std::vector<Record>& records, const Query& q)
{
    Json query = Json::object();
    query["command"] = q.op;
    for (const auto& [name, axis] : q.axes) {
        if (axis.lo == axis.hi)
            query[name] = axis.lo;
        else
            query[name] = Json{{"lo", axis.lo}, {"hi", axis.hi}};
    }
    if (q.format == "csv")
        std::cout << p3b::records_to_csv(records);
    else
        std::cout << p3b::records_to_json(records, query);
    return 0;
}

int run_query(const Query& q, bool is_sweep)
{
    std::vector<Record> records;
    if (is_sweep) {
        records = run_sweep(q);
    } else {
        Point pt;
        for (const auto& [name, axis] : q.axes) {
            if (axis.lo != axis.hi)
                throw CLI::ValidationError("ranges are only valid under `sweep`");
            pt.vals[name] = axis.lo;
        }
        try {
            records.push_back(run_point(q.op, pt));
        } catch (const p3b::domain_fault& e) {
            Record rec;
            put_point(rec, pt);
            rec.status = "inadmissible";
            rec.reason = e.what();
            records.push_back(rec);
        }
    }
    return emit(records, q);
}

void add_param_options(CLI::App* cmd, Query& q, bool ranged)
{
    static const char* kParams[] = {"k", "nu", "c1", "a", "b", "l", "j", "rank"};
    for (const char* name : kParams) {
        std::string flag = std::string("--") + name;
        std::string help = ranged ? "integer or inclusive range LO:HI" : "integer";
        cmd->add_option_function<std::string>(
            flag,
            [&q, name, ranged](const std::string& text) {
                Axis axis = parse_axis(text);
                if (!ranged && axis.lo != axis.hi)
                    throw CLI::ValidationError("ranges are only valid under `sweep`");
                q.axes[name] = axis;
            },
            help);
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact calculator for line-bundle cohomology on surfaces with a line "
                 "and for stable rank-2/3 bundle families on projective 3-space"};
    app.require_subcommand(1);

    Query query;
    bool is_sweep = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", query.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    for (const char* op : {"cohom", "classify", "chern", "thresholds", "moduli"}) {
        CLI::App* cmd = app.add_subcommand(op, std::string("single-point ") + op + " query");
        add_param_options(cmd, query, false);
        add_format(cmd);
        cmd->callback([&query, op] { query.op = op; });
    }

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate an operation over a parameter grid");
    std::string sweep_op;
    sweep->add_option("--op", sweep_op, "operation to sweep")
        ->required()
        ->check(CLI::IsMember({"cohom", "classify", "chern", "thresholds", "moduli"}));
    add_param_options(sweep, query, true);
    add_format(sweep);
    sweep->callback([&] {
        query.op = sweep_op;
        is_sweep = true;
    });

    CLI::App* verify = app.add_subcommand("verify", "run the invariant-verification suites");
    std::vector<std::string> suites;
    verify->add_option("--suite", suites, "restrict to named suites (repeatable)");
    bool list_suites = false;
    verify->add_flag("--list", list_suites, "list suite names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify->parsed()) {
            if (list_suites) {
                for (const auto& name : p3b::verify_suite_names())
                    std::cout << name << "\n";
                return 0;
            }
            p3b::VerifyReport report = p3b::run_verify(suites);
            std::cout << p3b::verify_report_to_json(report).dump(2) << "\n";
            return report.ok() ? 0 : 1;
        }
        return run_query(query, is_sweep);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const p3b::arithmetic_fault& e) {
        Json diag{{"status", "arithmetic-fault"}, {"detail", e.what()}};
        std::cout << diag.dump(2) << "\n";
        return 1;
    } catch (const p3b::domain_fault& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
