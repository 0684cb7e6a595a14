#include "cli.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

using nlohmann::json;

namespace {
const std::string data = DIFFLAT_TEST_DATA;

struct Run {
    int code;
    std::string out, err;
};

auto run(std::vector<std::string> args) -> Run
{
    args.insert(args.begin(), "difflat");
    std::vector<const char *> argv;
    for (auto & a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = difflat::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

auto temp(const std::string & name) -> std::string
{
    return (std::filesystem::temp_directory_path() / ("difflat-cli-" + name)).string();
}
} // namespace

TEST(Cli, NoCommandIsUsageError)
{
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Gen)
{
    auto r = run({"gen", "mn", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["n"], 5);
    EXPECT_EQ(j["covers"].size(), 6U);
    EXPECT_EQ(run({"gen", "mystery", "3"}).code, 2);
    EXPECT_EQ(run({"gen", "chain"}).code, 2);
    EXPECT_EQ(run({"gen", "boolean", "9"}).code, 2);
}

TEST(Cli, Derivations)
{
    auto r = run({"derivations", data + "/c4.json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["count"], 8);
    EXPECT_EQ(j["derivations"].size(), 8U);
    EXPECT_EQ(j["derivations"][0]["image"], json({0, 0, 0, 0}));

    auto c = json::parse(run({"derivations", data + "/m4.json", "--count"}).out);
    EXPECT_EQ(c["count"], 9);
    EXPECT_FALSE(c.contains("derivations"));

    auto iso = json::parse(run({"derivations", data + "/m4.json", "--isotone-only", "--jobs", "2"}).out);
    EXPECT_EQ(iso["count"], 4);

    auto t = run({"derivations", data + "/c4.json", "--format", "table"});
    EXPECT_NE(t.out.find("(0 u v 1)\n(0 u v u)\n"), std::string::npos);
    EXPECT_EQ(run({"derivations", data + "/c4.json", "--format", "xml"}).code, 2);
}

TEST(Cli, InputErrors)
{
    auto r = run({"derivations", data + "/syntax_error.json"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("syntax_error.json:3:"), std::string::npos) << r.err;
    EXPECT_EQ(run({"derivations", data + "/not_a_lattice.json"}).code, 2);
    EXPECT_EQ(run({"derivations", data + "/absent.json"}).code, 2);
}

TEST(Cli, Classify)
{
    auto r = run({"classify", data + "/m4.json", "--witnesses"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["class_count"], 6);
    std::size_t total = 0;
    for (auto & c : j["classes"]) {
        total += c["size"].get<std::size_t>();
        EXPECT_EQ(c["witnesses"].size(), c["members"].size());
    }
    EXPECT_EQ(total, 9U);
}

TEST(Cli, Doposet)
{
    auto dot = temp("do.dot");
    auto r = run({"doposet", data + "/c4.json", "--check-lattice", "--dot", dot});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["size"], 8);
    EXPECT_EQ(j["covers"].size(), 8U);
    EXPECT_EQ(j["is_lattice"], true);
    std::ifstream in(dot);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_NE(text.str().find("digraph"), std::string::npos);
    std::filesystem::remove(dot);
}

TEST(Cli, Catalog)
{
    auto r = run({"catalog", "--order", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line, last;
    std::size_t count = 0;
    while (std::getline(lines, line)) {
        ++count;
        last = line;
    }
    EXPECT_EQ(count, 16U);
    EXPECT_EQ(json::parse(last)["count"], 15);

    auto out = temp("cat.jsonl");
    auto f = run({"catalog", "--order", "6", "--filter", "distributive", "--out", out});
    ASSERT_EQ(f.code, 0) << f.err;
    EXPECT_TRUE(std::filesystem::exists(out));
    std::filesystem::remove(out);
    EXPECT_EQ(run({"catalog", "--order", "12"}).code, 2);
    EXPECT_EQ(run({"catalog", "--order", "4", "--filter", "planar"}).code, 2);
    EXPECT_EQ(run({"catalog"}).code, 2);
}

TEST(Cli, Conjecture)
{
    auto report = temp("conj.json");
    auto r = run({"conjecture", "--max-order", "6", "--report", report});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["lattices"], 1 + 1 + 1 + 2 + 5 + 15);
    EXPECT_EQ(j["verified_up_to"], 6);
    std::ifstream in(report);
    auto full = json::parse(in);
    ASSERT_TRUE(full.contains("lattices"));
    for (auto & l : full["lattices"]) {
        EXPECT_TRUE(l.contains("order"));
        EXPECT_TRUE(l.contains("canonical_key"));
        EXPECT_TRUE(l.contains("do_size"));
        EXPECT_TRUE(l.contains("do_is_lattice"));
        EXPECT_TRUE(l.contains("do_poset_canonical_key"));
    }
    std::filesystem::remove(report);
}

TEST(Cli, Verify)
{
    auto r = run({"verify", "--suite", "quick"});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["max_n"], 5);
    std::set<std::string> ids;
    for (auto & c : j["claims"]) {
        EXPECT_TRUE(ids.insert(c["id"].get<std::string>()).second);
        EXPECT_EQ(c["pass"], true) << c.dump();
        EXPECT_TRUE(c.contains("expected"));
        EXPECT_TRUE(c.contains("computed"));
        EXPECT_TRUE(c.contains("runtime_ms"));
    }
    for (const char * id : {"chain-count", "chain-classes", "mn-count", "mn-classes", "printed-examples", "boolean-cut",
             "operator-counterexamples", "structural-catalog", "conjecture-probe", "catalog-counts", "isotone-lemma"})
        EXPECT_TRUE(ids.count(id)) << id;

    auto bad = run({"verify", "--suite", "nonsense"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("nonsense"), std::string::npos);

    auto table = run({"verify", "--max-n", "4", "--format", "table"});
    EXPECT_EQ(table.code, 0);
    EXPECT_NE(table.out.find("PASS chain-count"), std::string::npos);
}

TEST(Cli, Show)
{
    auto r = run({"show", data + "/c4.json", "--derivation", "0,u,v,u"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "(0 u v 1)\n(0 u v u)\n");

    auto y6 = run({"show", data + "/m4.json", "--derivation", "0,b1,b2,b1"});
    EXPECT_EQ(y6.out, "(0 b1 b2 1)\n(0 b1 b2 b1)\n");

    auto bad = run({"show", data + "/c4.json", "--derivation", "u,u,v,1"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("d(0)"), std::string::npos) << bad.err;

    auto dot = run({"show", data + "/m4.json", "--dot", "-"});
    EXPECT_NE(dot.out.find("rankdir=BT"), std::string::npos);
}
