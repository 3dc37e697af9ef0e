#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "cutcx/errors.hpp"

using json = nlohmann::json;
using namespace cutcx::cli;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
    json doc() const { return json::parse(out); }
};

Outcome cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "cutcx");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("cutcx_test_" + name);
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty()) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("parse_range")
{
    CHECK(parse_range("9..16") == std::pair{9, 16});
    CHECK(parse_range("5..5") == std::pair{5, 5});
    CHECK_THROWS_AS(parse_range("9-16"), cutcx::ParameterError);
    CHECK_THROWS_AS(parse_range("16..9"), cutcx::ParameterError);
    CHECK_THROWS_AS(parse_range("a..9"), cutcx::ParameterError);
}

TEST_CASE("verify: n = 9, p = 2")
{
    const Outcome r = cli({"verify", "--n", "9", "--p", "2", "--homology"});
    CHECK(r.code == kExitOk);
    const json doc = r.doc();
    CHECK(doc["pass"] == true);
    CHECK(doc["spanning"] == json::parse("[[3,7,8]]"));
    CHECK(doc["census"] == json::parse("[[3,7,8]]"));
    CHECK(doc["formula"] == 1);
    CHECK(doc["reduced_euler"] == -1);
    CHECK(doc["reduced_betti"] == json::parse("[0,0,0,0,0,1]"));
    for (const auto& check : doc["checks"]) CHECK(check["status"] == "pass");
}

TEST_CASE("verify: void complex and missing parameters exit 2")
{
    const Outcome r = cli({"verify", "--n", "6", "--p", "2"});
    CHECK(r.code == kExitParameter);
    CHECK(r.err.find("void complex") != std::string::npos);
    CHECK(r.doc()["error"].get<std::string>().find("void complex") != std::string::npos);

    CHECK(cli({"verify", "--n", "9"}).code == kExitParameter);
    CHECK(cli({"census", "--n", "14", "--p", "3"}).code == kExitParameter);
    CHECK(cli({"facets", "--n", "70", "--p", "2"}).code == kExitParameter);
    CHECK(cli({"verify", "--n", "9", "--p", "2", "--format", "yaml"}).code == kExitParameter);
    CHECK(cli({"nonsense"}).code == kExitParameter);
}

TEST_CASE("verify: outside the theorem range is exploratory")
{
    const Outcome r = cli({"verify", "--n", "8", "--p", "2"});
    CHECK(r.code == kExitOk);
    const json doc = r.doc();
    CHECK(doc["params"]["exploratory"] == true);
    CHECK(doc["pass"] == true);
    CHECK(doc["checks"][2]["name"] == "shelling");
    CHECK(doc["checks"][2]["status"] == "exploratory");
    CHECK(cli({"verify", "--n", "7", "--p", "2"}).code == kExitOk);
}

TEST_CASE("census: n = 15, p = 3")
{
    const Outcome r = cli({"census", "--n", "15", "--p", "3"});
    CHECK(r.code == kExitOk);
    const json doc = r.doc();
    CHECK(doc["counts"]["total"] == 16);
    CHECK(doc["formula"]["total"] == 16);
    CHECK(doc["counts"]["sigma1"] == doc["sets"]["sigma1"].size());
}

TEST_CASE("facets: export, import and shell-check of the imported order")
{
    const auto path = temp_file("facets.txt");
    const Outcome exp = cli({"facets", "--n", "9", "--p", "2", "--export", path.string()});
    REQUIRE(exp.code == kExitOk);
    CHECK(exp.doc()["facet_count"] == 48);

    const Outcome imp = cli({"facets", "--import", path.string()});
    CHECK(imp.code == kExitOk);
    CHECK(imp.doc()["facet_count"] == 48);
    CHECK(imp.doc()["facets"] == exp.doc()["facets"]);

    // canonical order starts with two facets that share no ridge
    const Outcome sc = cli({"shell-check", "--import", path.string()});
    CHECK(sc.code == kExitMismatch);
    CHECK(sc.doc()["ok"] == false);
    CHECK(sc.doc()["violation"]["s"].get<int>() >= 2);
    std::filesystem::remove(path);

    const auto bad = temp_file("bad.txt");
    {
        std::ofstream(bad) << "n=9 k=3\n0 1\n";
    }
    CHECK(cli({"facets", "--import", bad.string()}).code == kExitParameter);
    std::filesystem::remove(bad);
    CHECK(cli({"facets", "--import", temp_file("missing.txt").string()}).code == kExitParameter);
}

TEST_CASE("shell-check: class order and search")
{
    const Outcome r = cli({"shell-check", "--n", "10", "--p", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.doc()["ok"] == true);
    CHECK(r.doc()["spanning_count"] == 6);
    CHECK(r.doc()["order_source"] == "class_order");

    const Outcome s = cli({"shell-check", "--n", "9", "--p", "2", "--search"});
    CHECK(s.code == kExitOk);
    CHECK(s.doc()["search"]["outcome"] == "found");
    CHECK(s.doc()["spanning_count"] == 1);

    const Outcome t = cli({"shell-check", "--n", "9", "--p", "2", "--search", "--budget", "3"});
    CHECK(t.code == kExitResource);
    CHECK(t.doc()["search"]["outcome"] == "budget_exhausted");
}

TEST_CASE("homology and euler")
{
    const Outcome h = cli({"homology", "--n", "10", "--p", "2"});
    CHECK(h.code == kExitOk);
    CHECK(h.doc()["reduced_betti"] == json::parse("[0,0,0,0,0,0,6]"));
    CHECK(h.doc()["boundary_squares_zero"] == true);

    const Outcome q = cli({"homology", "--n", "9", "--p", "2", "--rational"});
    CHECK(q.code == kExitOk);
    CHECK(q.doc()["coefficients"] == "Q");
    CHECK(q.doc()["reduced_betti"] == json::parse("[0,0,0,0,0,1]"));

    const Outcome capped = cli({"homology", "--n", "40", "--p", "3"});
    CHECK(capped.code == kExitResource);
    CHECK(cli({"homology", "--n", "9", "--p", "2", "--max-faces", "10"}).code == kExitResource);

    const Outcome e = cli({"euler", "--n", "9", "--p", "2"});
    CHECK(e.code == kExitOk);
    CHECK(e.doc()["reduced_euler"] == -1);
    CHECK(e.doc()["face_counts"] == json::parse("[1,9,36,84,126,117,48]"));
    CHECK(cli({"euler", "--n", "40", "--p", "3"}).code == kExitResource);
}

TEST_CASE("order and classify")
{
    const Outcome o = cli({"order", "--n", "9", "--p", "2"});
    CHECK(o.code == kExitOk);
    const json doc = o.doc();
    CHECK(doc["omega"] == json::parse("[5,4,6,3,7,2,8,1,0]"));
    CHECK(doc["class_histogram"]["M1"] == 3);
    CHECK(doc["order"].size() == 48);
    CHECK(doc["order"][0]["position"] == 1);

    const Outcome c = cli({"classify", "--n", "9", "--p", "2"});
    CHECK(c.code == kExitOk);
    const json classes = c.doc();
    bool found = false;
    for (const auto& entry : classes["facets"]) {
        if (entry["complement"] == json::parse("[3,6,7]")) {
            found = true;
            CHECK(entry["alpha"] == 1);
            CHECK(entry["conditions"] == json::parse("[\"X8\"]"));
        }
    }
    CHECK(found);
}

TEST_CASE("output is byte-identical across runs and thread counts")
{
    const Outcome a = cli({"verify", "--n", "16", "--p", "3", "--threads", "1"});
    const Outcome b = cli({"verify", "--n", "16", "--p", "3", "--threads", "4"});
    const Outcome c = cli({"verify", "--n", "16", "--p", "3"});
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
}

TEST_CASE("sweep emits one JSON document per n")
{
    const Outcome r = cli({"verify", "--p", "2", "--n-range", "6..12"});
    const auto docs = lines(r.out);
    REQUIRE(docs.size() == 7);
    for (std::size_t i = 0; i < docs.size(); ++i) {
        const json doc = json::parse(docs[i]);
        CHECK(doc["params"]["n"] == 6 + static_cast<int>(i));
    }
    CHECK(json::parse(docs[0])["exit_code"] == kExitParameter);  // n = 6 is void
    CHECK(r.code == kExitParameter);

    const Outcome ok = cli({"census", "--p", "2", "--n-range", "9..11"});
    CHECK(ok.code == kExitOk);
    CHECK(lines(ok.out).size() == 3);
}

TEST_CASE("csv and text formats")
{
    const Outcome csv = cli({"census", "--n", "10", "--p", "2", "--format", "csv"});
    CHECK(csv.code == kExitOk);
    const auto rows = lines(csv.out);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0] == "block,complement");

    const Outcome sweep = cli({"census", "--p", "2", "--n-range", "9..10", "--format", "csv"});
    const auto srows = lines(sweep.out);
    REQUIRE(srows.size() == 8);
    CHECK(srows[0] == "n,block,complement");
    CHECK(srows[1] == "9,sigma1,3 7 8");

    const Outcome text = cli({"euler", "--n", "9", "--p", "2", "--format", "text"});
    CHECK(text.out.find("reduced_euler: -1") != std::string::npos);
}
