#include <gradlift/gradlift.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace gradlift;

namespace {

std::string error_of(const std::string& text)
{
    try {
        parse_job(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return "";
}

AnalysisReport run(const std::string& text) { return run_analysis(parse_job(text)); }

const std::string kExampleOne = "ring Q[x,y,z,t]; ideal x^3-y^7, x^2*y-x*t^3-z^6; analyze full;";

} // namespace

TEST(ParseJob, Examples)
{
    auto j = parse_job(kExampleOne);
    EXPECT_EQ(j.vars, (std::vector<std::string>{"x", "y", "z", "t"}));
    EXPECT_EQ(j.generators.size(), 2u);
    EXPECT_TRUE(j.wants("gin"));
    EXPECT_EQ(j.field_name(), "Q");

    auto s = parse_job("semigroup 9 17 19 39; analyze full;");
    EXPECT_EQ(s.semigroup, (std::vector<int>{9, 17, 19, 39}));
    EXPECT_EQ(s.vars, (std::vector<std::string>{"x1", "x2", "x3", "x4"}));

    auto m = parse_job("ring Q[x]; ideal x; analyze betti;");
    EXPECT_TRUE(m.wants("betti"));
    EXPECT_FALSE(m.wants("gin"));
}

TEST(ParseJob, OptionalStatements)
{
    auto j = parse_job("# comment\nring F32003[a,b];\nideal a^2, a*b; # trailing\nanalyze betti, ld;\nseed 42;\n"
                       "cap lex 50;\ncap hilbert 30;\ncap reductions 999;\n");
    EXPECT_EQ(j.modulus, 32003u);
    EXPECT_EQ(j.seed, 42u);
    EXPECT_EQ(j.lex_cap, 50);
    EXPECT_EQ(j.hilbert_cap, 30);
    EXPECT_EQ(j.reduction_cap, 999u);
    EXPECT_EQ(j.analyses, (std::set<std::string>{"betti", "ld"}));
    EXPECT_EQ(parse_job("ring ZZ/7[x]; ideal x; analyze betti;").modulus, 7u);
}

TEST(ParseJob, PositionedErrors)
{
    EXPECT_NE(error_of("ring Q[x,y]; ideal x^2, z; analyze betti;").find("column"), std::string::npos);
    EXPECT_NE(error_of("ring Q[x,y];\nideal x^2, y^$;\nanalyze betti;").find("line 2"), std::string::npos);
    EXPECT_NE(error_of("ring F32004[x]; ideal x; analyze betti;").find("not a prime"), std::string::npos);
    EXPECT_NE(error_of("ring Q[x]; ideal x;").find("no analysis"), std::string::npos);
    EXPECT_NE(error_of("ring Q[x]; ideal 1+x; analyze betti;").find("unit"), std::string::npos);
    EXPECT_NE(error_of("ring Q[x]; ideal x; analyze betti; cap lex 0;").find("positive"), std::string::npos);
    EXPECT_NE(error_of("ring Q[x]; ideal x; analyze nonsense;").find("unknown analysis"), std::string::npos);
    EXPECT_NE(error_of("ring Q[x]; ideal x; analyze betti").find("missing ';'"), std::string::npos);
    EXPECT_NE(error_of("ring Q[x]; ideal x,,x^2; analyze betti;").find("empty generator"), std::string::npos);
    EXPECT_NE(error_of("ring Q[a,b,c,d,e,f,g,h,i,j,k,l,m,n,o,p]; ideal a; analyze betti;").find("variables"),
              std::string::npos);
    EXPECT_NE(error_of("ideal x; analyze betti;").find("ring"), std::string::npos);
}

TEST(Report, CompleteIntersection)
{
    auto r = run(kExampleOne);
    EXPECT_EQ(r.betti_local, (std::vector<long>{2, 1}));
    EXPECT_EQ(r.betti_tangent, (std::vector<long>{8, 12, 6, 1}));
    EXPECT_EQ(r.homogeneous_type, false);
    EXPECT_EQ(r.mu_local, 2);
    EXPECT_EQ(r.mu_tangent, 8);
    EXPECT_EQ(r.pd, 2);
    EXPECT_EQ(r.depth, 2);
    ASSERT_TRUE(r.tangent_gin_block && r.lex_block);
    EXPECT_TRUE(r.tangent_gin_block->consistent());
    EXPECT_TRUE(r.lex_block->consistent());
    EXPECT_TRUE(r.capped.empty());
}

TEST(Report, CurveWithSevenTangentGenerators)
{
    auto r = run("semigroup 10 19 21 53; analyze tangent-cone, gin;");
    EXPECT_EQ(r.componentwise_linear, true);
    EXPECT_EQ(r.min_standard_base, false);
    EXPECT_EQ(r.mu_local, 5);
    EXPECT_EQ(r.mu_tangent, 7);
}

TEST(Report, PrincipalEverythingTrue)
{
    auto r = run("ring Q[x,y]; ideal x; analyze full;");
    EXPECT_EQ(r.min_standard_base, true);
    EXPECT_EQ(r.componentwise_linear, true);
    EXPECT_EQ(r.homogeneous_type, true);
    EXPECT_EQ(r.gotzmann, true);
    EXPECT_EQ(r.koszul, true);
    EXPECT_EQ(r.ld, 0);
    EXPECT_TRUE(r.tangent_gin_block->mu_equal && r.lex_block->mu_equal);
    // x is not in n^2, so the symmetric algebra part is skipped with a note
    EXPECT_FALSE(r.sym.has_value());
    EXPECT_FALSE(r.notes.empty());
}

TEST(Report, NonNumericalSemigroup)
{
    // gcd 2: the parser accepts it, the run refuses
    EXPECT_THROW(run("semigroup 4 6; analyze betti;"), InputError);
}

TEST(Report, ExplicitSymNeedsSquare)
{
    EXPECT_THROW(run("ring Q[x,y]; ideal x; analyze sym;"), InputError);
    auto r = run("ring Q[x,y]; ideal x^2, x*y; analyze sym;");
    ASSERT_TRUE(r.sym.has_value());
    EXPECT_EQ(r.sym->depth_bound, 0);
    EXPECT_TRUE(r.sym->exact);
}

TEST(Report, CappedLexIsMarked)
{
    auto r = run("ring Q[x,y,z,t]; ideal x^3-y^7, x^2*y-x*t^3-z^6; analyze lex; cap lex 40;");
    ASSERT_EQ(r.capped.size(), 1u);
    EXPECT_NE(r.capped[0].find("lex"), std::string::npos);
    EXPECT_FALSE(r.mu_lex.has_value());
}

TEST(Report, PrimeFieldSkipsGin)
{
    auto r = run("ring F32003[x,y,z]; ideal x^2-y^3, y^2-z^3; analyze betti, gin;");
    EXPECT_FALSE(r.gin.has_value());
    EXPECT_FALSE(r.notes.empty());
    EXPECT_EQ(r.field, "F32003");
}

TEST(Report, DeterministicAndJsonRoundTrip)
{
    for (const std::string& text : {kExampleOne, std::string("semigroup 9 17 19 39; analyze full;"),
                                   std::string("ring F101[x,y]; ideal x^2-y^5, x*y^2; analyze full; seed 3;")}) {
        auto a = run(text);
        auto b = run(text);
        EXPECT_EQ(a, b);
        auto j = to_json(a);
        EXPECT_EQ(j["schema"], 1);
        EXPECT_EQ(report_from_json(j), a);
        EXPECT_EQ(report_from_json(nlohmann::json::parse(j.dump())), a);
        EXPECT_FALSE(render_text(a).empty());
    }
}

TEST(Report, BettiJsonFormat)
{
    BettiTable B;
    B.add(0, 2, 3);
    B.add(1, 3, 2);
    auto j = betti_to_json(B);
    EXPECT_EQ(j, nlohmann::json::parse("[[0,2,3],[1,3,2]]"));
    EXPECT_EQ(betti_from_json(j), B);
}

TEST(Corpus, EmptyAndSmallRuns)
{
    auto e = corpus_run("monomial", 0, 1);
    EXPECT_EQ(e.count, 0);
    EXPECT_TRUE(e.instances.empty());
    auto b = corpus_run("borel", 20, 9);
    EXPECT_EQ(b.failures, 0);
    EXPECT_EQ(b.componentwise_linear, 20);
    EXPECT_EQ(b.ld_zero, 20);
    auto l = corpus_run("super-regular", 10, 9);
    EXPECT_EQ(l.failures, 0);
    EXPECT_THROW(corpus_run("nope", 1, 1), InputError);
    // threads do not change the outcome
    auto one = corpus_run("binomial", 12, 4, 1);
    auto many = corpus_run("binomial", 12, 4, 3);
    EXPECT_EQ(one.componentwise_linear, many.componentwise_linear);
    EXPECT_EQ(one.findings, many.findings);
}

#ifdef GRADLIFT_CLI
namespace {

int cli(const std::string& args)
{
    std::string cmd = std::string(GRADLIFT_CLI) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string write_job(const std::string& name, const std::string& text)
{
    auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p.string();
}

} // namespace

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(cli("analyze " + write_job("gl_ok.job", "ring Q[x,y]; ideal x^2, x*y; analyze betti, ld;")), 0);
    EXPECT_EQ(cli("analyze " + write_job("gl_bad.job", "ring Q[x]; ideal 1+x; analyze betti;")), 1);
    EXPECT_EQ(cli("analyze /nonexistent/file.job"), 1);
    EXPECT_EQ(cli("analyze " + write_job("gl_cap.job", kExampleOne + " cap lex 30;") + " -q"), 2);
    EXPECT_EQ(cli("semigroup 3 4 5 --analyze betti"), 0);
    EXPECT_EQ(cli("semigroup 4 6"), 1);
    EXPECT_EQ(cli("corpus --recipe borel --count 5 --seed 2"), 0);
    EXPECT_EQ(cli("corpus --recipe nothing --count 5"), 1);
    EXPECT_EQ(cli("frobnicate"), 1);
}

TEST(Cli, JsonOutput)
{
    auto out = (std::filesystem::temp_directory_path() / "gl_out.json").string();
    ASSERT_EQ(cli("semigroup 9 17 19 39 --analyze betti,gin --seed 5 -q --json " + out), 0);
    std::ifstream in(out);
    auto j = nlohmann::json::parse(in);
    EXPECT_EQ(j["schema"], 1);
    EXPECT_EQ(j["seed"], 5);
    auto r = report_from_json(j);
    EXPECT_EQ(r.mu_gin, 6);
}
#endif
