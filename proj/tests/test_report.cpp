#include <gtest/gtest.h>

#include <cstdlib>

#include "dirac/report.hpp"
#include "json.hpp"

using namespace dirac;
using nlohmann::json;

namespace {

const VerificationReport& report()
{
    static const VerificationReport rep = [] {
        RunOptions o;
        o.samples = 25;
        return run_all(o);
    }();
    return rep;
}

}  // namespace

TEST(Json, TopLevelKeys)
{
    const json j = json::parse(to_json(report()));
    for (const char* k : {"version", "seed", "samples", "tolerance", "conventions", "checks"})
        EXPECT_TRUE(j.contains(k)) << k;
    EXPECT_EQ(j["seed"].get<std::uint64_t>(), 42u);
    EXPECT_EQ(j["samples"].get<int>(), 25);
    EXPECT_EQ(j["checks"].size(), registry().size());
}

TEST(Json, ConventionsBlock)
{
    const json c = json::parse(to_json(report()))["conventions"];
    for (const char* k : {"metric", "representation", "branch_rule", "spatial_gamma_index", "epsilon",
                          "generalized_pauli_sum", "plane_wave_phase", "mass", "notes"})
        EXPECT_TRUE(c.contains(k)) << k;
    EXPECT_EQ(c["metric"], "diag(+1,-1,-1,-1)");
    EXPECT_NE(c["spatial_gamma_index"].get<std::string>().find("upper"), std::string::npos);
    EXPECT_FALSE(c["notes"].empty());
}

TEST(Json, CheckEntries)
{
    const json j = json::parse(to_json(report()));
    for (const auto& c : j["checks"]) {
        for (const char* k : {"name", "paper_ref", "samples", "tolerance", "max_residual", "worst_point",
                              "expected_status", "status"})
            EXPECT_TRUE(c.contains(k)) << k;
        EXPECT_TRUE(c["worst_point"].contains("domain"));
        const std::string st = c["status"];
        EXPECT_TRUE(st == "pass" || st == "fail" || st == "info") << st;
    }
    const auto& lit = *std::find_if(j["checks"].begin(), j["checks"].end(),
                                    [](const json& c) { return c["name"] == "anticommutator-literal-delta"; });
    EXPECT_EQ(lit["expected_status"], "expected-fail");
    EXPECT_EQ(lit["status"], "info");
    EXPECT_GT(lit["max_residual"].get<double>(), 0.0);
}

TEST(Json, NumbersRoundTrip)
{
    const auto& rep = report();
    const json j = json::parse(to_json(rep));
    for (std::size_t i = 0; i < rep.checks.size(); ++i) {
        const auto& c = rep.checks[i];
        if (!std::isfinite(c.max_residual))
            continue;
        EXPECT_EQ(j["checks"][i]["max_residual"].get<double>(), c.max_residual) << c.name;
        if (c.worst_point.domain == Domain::on_shell) {
            EXPECT_EQ(j["checks"][i]["worst_point"]["p0"].get<double>(), c.worst_point.p0);
        }
    }
    EXPECT_EQ(detail::format_double(0.1, 17), "0.10000000000000001");
    EXPECT_EQ(std::strtod(detail::format_double(1.0 / 3.0, 17).c_str(), nullptr), 1.0 / 3.0);
}

TEST(Json, StringEscaping)
{
    detail::JsonWriter w;
    w.string("a\"b\\c\nd\x01");
    EXPECT_EQ(w.str(), "\"a\\\"b\\\\c\\nd\\u0001\"");
    detail::JsonWriter n;
    n.number(std::numeric_limits<double>::infinity());
    EXPECT_EQ(n.str(), "null");
}

TEST(Json, ByteDeterministic)
{
    RunOptions o;
    o.samples = 25;
    EXPECT_EQ(to_json(report()), to_json(run_all(o)));
}

TEST(Text, Summary)
{
    const std::string t = to_text(report());
    EXPECT_NE(t.find("anticommutator-minkowski"), std::string::npos);
    EXPECT_NE(t.find(" 0 fail"), std::string::npos);
    EXPECT_NE(t.find("note: "), std::string::npos);
}
