#include "p3b/records.hpp"

#include <sstream>

namespace p3b {

namespace {

void put(Json& j, const char* key, const std::optional<Int>& v)
{
    if (v)
        j[key] = *v;
}

void put(Json& j, const char* key, const std::optional<std::string>& v)
{
    if (v)
        j[key] = *v;
}

void put_interval(Json& j, const char* key, const std::optional<IntInterval>& v)
{
    if (!v)
        return;
    if (v->exact())
        j[key] = v->lo; // collapsed intervals print as plain integers
    else
        j[key] = Json{{"lo", v->lo}, {"hi", v->hi}};
}

void csv_cell(std::ostringstream& out, const std::optional<Int>& v)
{
    if (v)
        out << *v;
}

} // namespace

Json record_to_json(const Record& r)
{
    Json j = Json::object();
    put(j, "k", r.k);
    put(j, "nu", r.nu);
    put(j, "c1", r.c1);
    put(j, "a", r.a);
    put(j, "b", r.b);
    put(j, "l", r.l);
    put(j, "status", r.status);
    put(j, "reason", r.reason);
    put(j, "c2", r.c2);
    put(j, "c3", r.c3);
    put(j, "dim_Y", r.dim_Y);
    put(j, "ed", r.ed);
    put_interval(j, "h1_end", r.h1_end);
    put_interval(j, "h2_end", r.h2_end);
    put(j, "codim_bound", r.codim_bound);
    for (auto it = r.extra.begin(); it != r.extra.end(); ++it)
        j[it.key()] = it.value();
    return j;
}

std::string records_to_csv(const std::vector<Record>& rs)
{
    std::ostringstream out;
    out << "k,nu,c1,a,b,l,status,c2,c3,dim_Y,ed,h1_end_lo,h1_end_hi,h2_end_lo,h2_end_hi,codim_bound\n";
    for (const Record& r : rs) {
        csv_cell(out, r.k);
        out << ',';
        csv_cell(out, r.nu);
        out << ',';
        csv_cell(out, r.c1);
        out << ',';
        csv_cell(out, r.a);
        out << ',';
        csv_cell(out, r.b);
        out << ',';
        csv_cell(out, r.l);
        out << ',';
        if (r.status)
            out << *r.status;
        out << ',';
        csv_cell(out, r.c2);
        out << ',';
        csv_cell(out, r.c3);
        out << ',';
        csv_cell(out, r.dim_Y);
        out << ',';
        csv_cell(out, r.ed);
        out << ',';
        csv_cell(out, r.h1_end ? std::optional<Int>(r.h1_end->lo) : std::nullopt);
        out << ',';
        csv_cell(out, r.h1_end ? std::optional<Int>(r.h1_end->hi) : std::nullopt);
        out << ',';
        csv_cell(out, r.h2_end ? std::optional<Int>(r.h2_end->lo) : std::nullopt);
        out << ',';
        csv_cell(out, r.h2_end ? std::optional<Int>(r.h2_end->hi) : std::nullopt);
        out << ',';
        csv_cell(out, r.codim_bound);
        out << '\n';
    }
    return out.str();
}

std::string records_to_json(const std::vector<Record>& rs, const Json& query)
{
    Json j = Json::object();
    j["schema_version"] = 1;
    j["query"] = query;
    Json arr = Json::array();
    for (const Record& r : rs)
        arr.push_back(record_to_json(r));
    j["records"] = arr;
    return j.dump(2) + "\n";
}

void put_report(Record& r, const ModuliReport& m)
{
    r.dim_Y = m.dim_Y;
    r.ed = m.ed;
    r.h1_end = m.h1_end;
    r.h2_end = m.h2_end;
    if (m.codim_bound)
        r.codim_bound = *m.codim_bound;
    if (m.dim_M.exact())
        r.extra["dim_M"] = m.dim_M.lo;
    else
        r.extra["dim_M"] = Json{{"lo", m.dim_M.lo}, {"hi", m.dim_M.hi}};
    r.extra["smooth_at_E"] = to_string(m.smooth_at_E);
    r.extra["delta_assumption"] = m.delta_assumption;
    if (m.dim_equals_Y)
        r.extra["dim_M_equals_dim_Y"] = *m.dim_equals_Y;
    if (!m.notes.empty())
        r.extra["notes"] = m.notes;
}

} // namespace p3b
