#pragma once

#include "p3b/moduli.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace p3b {

using Json = nlohmann::ordered_json;

// One output row.  The named fields are the stable CSV columns; everything
// command-specific goes into `extra` and is emitted in JSON only.
struct Record {
    std::optional<Int> k, nu, c1, a, b, l;
    std::optional<std::string> status;
    std::optional<std::string> reason;
    std::optional<Int> c2, c3;
    std::optional<Int> dim_Y, ed;
    std::optional<IntInterval> h1_end, h2_end;
    std::optional<Int> codim_bound;
    Json extra = Json::object();
};

Json record_to_json(const Record& r);

// Fixed header: k,nu,c1,a,b,l,status,c2,c3,dim_Y,ed,h1_end_lo,h1_end_hi,
// h2_end_lo,h2_end_hi,codim_bound.  UTF-8, LF line endings.
std::string records_to_csv(const std::vector<Record>& rs);

std::string records_to_json(const std::vector<Record>& rs, const Json& query);

// Fill a record from a moduli report.
void put_report(Record& r, const ModuliReport& m);

} // namespace p3b
