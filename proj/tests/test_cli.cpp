#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include <immaculata/serialize.hpp>

#include "immaculata_cli.hpp"

using namespace immaculata;

namespace {

struct result {
    int code;
    std::string out;
    std::string err;
};

result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "immaculata");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Serialize, JsonShapeAndRoundTrip)
{
    const auto f = immaculate_to_h(composition{2, 3});
    const auto j = to_json(f);
    EXPECT_EQ(j["basis"], "H");
    ASSERT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(j["terms"][0]["index"], nlohmann::json::array({2, 3}));
    EXPECT_EQ(j["terms"][0]["coeff"], "1");
    EXPECT_EQ(j["terms"][1]["coeff"], "-1");
    EXPECT_EQ(nsym_from_json(j), f);
    EXPECT_EQ(to_json(nsym_from_json(nlohmann::json::parse(j.dump()))).dump(), j.dump());

    const auto g = dual_immaculate_to_monomial({2, 1});
    EXPECT_EQ(qsym_from_json(to_json(g)), g);
    const auto h = schur_to_h(partition{2, 2});
    EXPECT_EQ(sym_from_json(to_json(h)), h);
}

TEST(Serialize, LargeCoefficientsSurvive)
{
    nsym_element f(nsym_basis::S, composition_sum(composition{1}, parse_integer("123456789012345678901234567890")));
    EXPECT_EQ(nsym_from_json(to_json(f)), f);
}

TEST(Serialize, RejectsMalformedInput)
{
    EXPECT_THROW(nsym_from_json(nlohmann::json::parse(R"({"basis":"Q","terms":[]})")), std::invalid_argument);
    EXPECT_ANY_THROW(nsym_from_json(nlohmann::json::parse(R"({"basis":"H","terms":[{"index":[0],"coeff":"1"}]})")));
}

TEST(Serialize, TextAndLatex)
{
    EXPECT_EQ(render_text(immaculate_to_h(composition{2, 3})), "H[2,3] - H[3,2]");
    EXPECT_EQ(render_text(nsym_element(nsym_basis::S)), "0");
    EXPECT_EQ(render_text(nsym_element::monomial(nsym_basis::S, {3, 2, 1}, 2)), "2*S[3,2,1]");
    const auto latex = render_latex(nsym_element::monomial(nsym_basis::S, {2, 3}));
    EXPECT_NE(latex.find("\\mathfrak{S}"), std::string::npos);
    EXPECT_NE(latex.find("_{2,3}"), std::string::npos);
}

TEST(Serialize, Tableaux)
{
    const tableau_rows rows{{1, 1, 1, 3}, {2, 3}, {4, 4, 4}};
    const auto j = to_json(rows);
    EXPECT_EQ(j.dump(), "[[1,1,1,3],[2,3],[4,4,4]]");
    const auto t = tableau_from_json(j);
    EXPECT_EQ(t.shape, (composition{4, 2, 3}));
    EXPECT_EQ(t.rows, rows);
    EXPECT_THROW(tableau_from_json(nlohmann::json::parse("[[2,2],[1]]")), std::invalid_argument);
}

TEST(Cli, ExpandImmaculateInH)
{
    const auto r = invoke({"expand", "S:2,3", "--to", "H"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "H[2,3] - H[3,2]\n");
}

TEST(Cli, ExpandSchurInDualImmaculate)
{
    const auto r = invoke({"expand", "s:2,2,2,1", "--to", "Sstar"});
    EXPECT_EQ(r.code, 0);
    const auto expected = render_text(schur_to_dual_immaculate(partition{2, 2, 2, 1}));
    EXPECT_EQ(r.out, expected + "\n");
}

TEST(Cli, ExpandJsonReport)
{
    const auto r = invoke({"expand", "R:2,2,2", "--to", "S", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "expand");
    EXPECT_EQ(j["target"], "S");
    EXPECT_TRUE(j["elapsed_ms"].is_number_integer());
    EXPECT_EQ(nsym_from_json(j["result"]), ribbon_to_immaculate({2, 2, 2}));
}

TEST(Cli, ProductRules)
{
    auto r = invoke({"product", "S:2,3", "H:3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("rule: pieri"), std::string::npos);
    EXPECT_EQ(r.out, render_text(pieri_multiply({2, 3}, 3)) + "\nrule: pieri\n");

    r = invoke({"product", "S:1,2", "S:2,1", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rule"], "littlewood-richardson");
    EXPECT_EQ(nsym_from_json(j["result"]), lr_multiply({1, 2}, partition{2, 1}));

    r = invoke({"product", "S:1,3,2", "Psi:3", "--no-normalize"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("S[1,3,2,0,0,3]"), std::string::npos);
    EXPECT_NE(r.out.find("rule: murnaghan-nakayama"), std::string::npos);

    r = invoke({"product", "S:1,3,2", "Psi:3"});
    EXPECT_EQ(r.out.find("0,3]"), std::string::npos);

    r = invoke({"product", "H:1", "S:1,3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("rule: h-basis"), std::string::npos);
    EXPECT_FALSE(r.err.empty());

    r = invoke({"product", "M:1", "M:1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "2*M[1,1] + M[2]\nrule: quasi-shuffle\n");
}

TEST(Cli, Tableaux)
{
    auto r = invoke({"tableaux", "--shape", "4,2,3", "--content", "3,1,2,3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("count: 5"), std::string::npos);

    r = invoke({"tableaux", "--shape", "6,5,7", "--standard", "--descents", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    bool found = false;
    for (const auto &t : j["tableaux"]) {
        if (t["rows"].dump() == "[[1,2,4,5,10,11],[3,6,7,8,9],[12,13,14,15,16,17,18]]") {
            found = true;
            EXPECT_EQ(t["descent"], nlohmann::json::array({2, 3, 6, 7}));
        }
    }
    EXPECT_TRUE(found);
    EXPECT_EQ(j["count"], j["tableaux"].size());
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(invoke({"expand", "Q:1", "--to", "H"}).code, 2);
    EXPECT_EQ(invoke({"expand", "H:2", "--to", "Psi"}).code, 2);
    EXPECT_EQ(invoke({"expand", "H:2,0", "--to", "S"}).code, 2);
    EXPECT_EQ(invoke({"verify", "nonsense"}).code, 2);
    EXPECT_EQ(invoke({"tableaux", "--shape", "2,1"}).code, 2);
    EXPECT_EQ(invoke({"tableaux", "--shape", "2,1", "--content", "1,1"}).code, 2);
    EXPECT_EQ(invoke({}).code, 2);
    EXPECT_EQ(invoke({"--help"}).code, 0);
}

TEST(Cli, VerifyHonoursEnvironmentDefault)
{
    ::setenv("IMMACULATA_MAX_N", "3", 1);
    auto r = invoke({"verify", "all", "--format", "json"});
    ::unsetenv("IMMACULATA_MAX_N");
    ASSERT_EQ(r.code, 0) << r.out;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["max_n"], 3);
    EXPECT_EQ(j["suites"].size(), 8u);

    r = invoke({"verify", "pieri", "--max-n", "4"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("pass (max-n 4)"), std::string::npos);
}
