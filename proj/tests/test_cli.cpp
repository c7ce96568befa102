#include "p3b/records.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

using p3b::Json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args)
{
    CliResult result;
    std::string cmd = std::string(P3B_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), n);
    int rc = pclose(pipe);
    result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return result;
}

Json first_record(const CliResult& r)
{
    Json j = Json::parse(r.out);
    REQUIRE(j.contains("records"));
    REQUIRE(!j["records"].empty());
    return j["records"][0];
}

} // namespace

TEST_CASE("cohom query")
{
    CliResult r = run_cli("cohom --k 4 --a 2 --b 3");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    Json rec = first_record(r);
    CHECK(rec["h0"] == 16);
    CHECK(rec["h1"] == 0);
    CHECK(rec["h2"] == 0);
    CHECK(rec["chi"] == 16);
}

TEST_CASE("classify query reports the excluded point")
{
    CliResult r = run_cli("classify --rank 3 --nu 1 --c1 0 --a 2 --b 1");
    CHECK(r.exit_code == 0);
    Json rec = first_record(r);
    CHECK(rec["status"] == "NotStable");
    CHECK(rec["reason"].get<std::string>().find("excluded") != std::string::npos);
}

TEST_CASE("moduli queries")
{
    Json rec = first_record(run_cli("moduli --rank 2 --k 2 --b 2"));
    CHECK(rec["dim_M"] == 5);
    CHECK(rec["dim_Y"] == 5);

    rec = first_record(run_cli("moduli --rank 3 --k 3 --a 2 --b 3"));
    CHECK(rec["dim_Y"] == 52);

    rec = first_record(run_cli("moduli --rank 3 --nu 1 --c1 -2 --l 1"));
    CHECK(rec["dim_Y"] == 0);
    CHECK(rec["c1"] == -2);
}

TEST_CASE("interval columns flatten into the csv")
{
    CliResult r = run_cli("sweep --op moduli --rank 2 --k 4 --b 5:6 --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header, row5;
    std::getline(lines, header);
    std::getline(lines, row5);
    CHECK(header ==
          "k,nu,c1,a,b,l,status,c2,c3,dim_Y,ed,h1_end_lo,h1_end_hi,h2_end_lo,h2_end_hi,codim_bound");
    // k=4, b=5: h1 interval [85, 94]
    CHECK(row5.find(",85,94,") != std::string::npos);
    CHECK(r.out.back() == '\n');
}

TEST_CASE("sweeps are deterministic and never skip points")
{
    std::string args = "sweep --op chern --rank 3 --nu 1 --c1 0 --a 0:3 --b 1 --format json";
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);

    Json j = Json::parse(first.out);
    REQUIRE(j["records"].size() == 4);
    // every inadmissible point carries a classifier verdict, none has c2
    for (const auto& rec : j["records"]) {
        CHECK(rec.contains("status"));
        CHECK(rec["status"] != "ok");
        CHECK(!rec.contains("c2"));
    }
    CHECK(j["records"][2]["status"] == "NotStable");
    CHECK(j["records"][3]["status"] == "NotLocallyFreeGeneric");
}

TEST_CASE("stable sweep rows carry chern data")
{
    CliResult r = run_cli("sweep --op chern --rank 3 --nu 1 --c1 -1 --a 2 --b 2:3 --format csv");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    CHECK(row == "2,1,-1,2,2,,Stable,3,5,,,,,,,");
}

TEST_CASE("usage errors exit with 2")
{
    CHECK(run_cli("cohom --k 4 --a 2").exit_code == 2);        // missing --b
    CHECK(run_cli("cohom --bogus 3").exit_code == 2);          // unknown flag
    CHECK(run_cli("chern --rank 3 --nu 1 --c1 0 --a 1:4 --b 3").exit_code == 2); // range outside sweep
    CHECK(run_cli("nonsense").exit_code != 0);
}

TEST_CASE("single inadmissible queries are status records, not errors")
{
    CliResult r = run_cli("thresholds --rank 2 --nu 2 --c1 0 --b 1");
    CHECK(r.exit_code == 0);
    Json rec = first_record(r);
    CHECK(rec["status"] == "NotStable");
}

TEST_CASE("verify subcommand")
{
    CliResult r = run_cli("verify --suite lattice --suite riemann-roch-twist");
    CHECK(r.exit_code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["checks_failed"] == 0);
    CHECK(j["suites_run"].size() == 2);
    CHECK(j["failures"].empty());

    CHECK(run_cli("verify --suite no-such-suite").exit_code == 2);
}

TEST_CASE("json emit shape for an empty record set")
{
    std::string text = p3b::records_to_json({}, Json{{"command", "sweep"}});
    Json j = Json::parse(text);
    CHECK(j["schema_version"] == 1);
    CHECK(j["records"].is_array());
    CHECK(j["records"].empty());
}

TEST_CASE("csv emit flattens intervals from reports")
{
    p3b::Record rec;
    rec.k = 4;
    rec.b = 5;
    rec.status = "Stable";
    rec.h1_end = p3b::IntInterval(85, 94);
    std::string csv = p3b::records_to_csv({rec});
    CHECK(csv.find("4,,,,5,,Stable,,,,,85,94,,,\n") != std::string::npos);
}
