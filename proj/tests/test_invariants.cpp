#include <gradlift/corpus.hpp>
#include <gradlift/invariants.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace gradlift;
using namespace testing_support;

namespace {

FilteredIdeal<Rational> example_one()
{
    auto L = ring({"x", "y", "z", "t"}, RingMode::Local);
    return FilteredIdeal<Rational>(4, polys(L, {"x^3-y^7", "x^2*y-x*t^3-z^6"}));
}

FilteredIdeal<Rational> curve(std::vector<int> a) { return semigroup_defining_ideal(a, RationalField{}); }

// the binomial sum over alpha, computed here without the engine helper
std::vector<long> binomial_sums(const std::vector<long>& alpha)
{
    const long n = static_cast<long>(alpha.size());
    std::vector<long> out;
    for (long i = 1; i <= n; ++i) {
        long s = 0;
        for (long j = 1; j <= n - i + 1; ++j)
            s += choose(n - j, i - 1) * alpha[j - 1];
        out.push_back(s);
    }
    return out;
}

} // namespace

TEST(DepthPd, Examples)
{
    auto a = depth_and_pd(example_one());
    EXPECT_EQ(a.pd, 2);
    EXPECT_EQ(a.depth, 2);
    auto b = depth_and_pd(curve({9, 17, 19, 39}));
    EXPECT_EQ(b.pd, 3);
    EXPECT_EQ(b.depth, 1);
    auto L = ring({"x", "y", "z"}, RingMode::Local);
    auto c = depth_and_pd(FilteredIdeal<Rational>(3, polys(L, {"x", "y", "z"})));
    EXPECT_EQ(c.pd, 3);
    EXPECT_EQ(c.depth, 0);
}

TEST(DepthPd, AuslanderBuchsbaumOnCorpus)
{
    for (const std::string recipe : {"super-regular", "local-binomial", "principal"})
        for (int i = 0; i < 8; ++i) {
            std::mt19937_64 rng(5000 + i);
            auto I = random_local_instance(recipe, rng).ideal;
            auto d = depth_and_pd(I);
            EXPECT_EQ(d.pd + d.depth, I.nvars());
            EXPECT_GE(d.depth, 0);
        }
}

TEST(Alpha, PolynomialRing)
{
    GradedModule<Rational> Z;
    Z.nvars = 3;
    auto a = generic_annihilator_numbers(Z);
    EXPECT_EQ(a.alpha, (std::vector<long>{0, 0, 0}));
}

TEST(Alpha, DualNumbers)
{
    // k[x]/(x^2): (0 : y)/(0) with y a multiple of x is (x)/(x^2), length 1
    auto R = ring({"x"});
    auto a = generic_annihilator_numbers(graded_ideal(polys(R, {"x^2"}), 1));
    EXPECT_EQ(a.alpha, (std::vector<long>{1}));
}

TEST(Alpha, SeedStable)
{
    auto T = tangent_cone_ideal(curve({9, 17, 19, 39}));
    auto a = generic_annihilator_numbers(T, 1);
    for (std::uint64_t s : {2u, 17u, 99u})
        EXPECT_EQ(generic_annihilator_numbers(T, s).alpha, a.alpha);
}

TEST(Alfa, CurveEquality)
{
    auto c = annihilator_bound_check(curve({9, 17, 19, 39}));
    EXPECT_TRUE(c.hypotheses);
    EXPECT_TRUE(c.equality);
    EXPECT_TRUE(c.passed);
    EXPECT_EQ(c.beta, (std::vector<long>{6, 8, 3, 0}));
    EXPECT_EQ(c.bound, binomial_sums(c.alpha.alpha));
}

TEST(Alfa, CompleteIntersectionOnlyBound)
{
    auto c = annihilator_bound_check(example_one());
    EXPECT_FALSE(c.hypotheses);
    EXPECT_TRUE(c.inequality);
    EXPECT_FALSE(c.equality);
    EXPECT_TRUE(c.passed);
    EXPECT_EQ(c.beta, (std::vector<long>{2, 1, 0, 0}));
}

TEST(Alfa, BorelGradedEquality)
{
    auto R = ring(vars(4));
    auto J = graded_ideal(polys(R, {"x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3^2", "x1*x4^3", "x3^4"}), 4);
    auto c = graded_alfa_check(J);
    EXPECT_TRUE(c.hypotheses);
    EXPECT_TRUE(c.equality);
    EXPECT_EQ(c.beta, (std::vector<long>{7, 11, 6, 1}));
    EXPECT_EQ(c.bound, binomial_sums(c.alpha.alpha));
}

TEST(Alfa, BoundOnLocalCorpus)
{
    for (const std::string recipe : {"super-regular", "local-binomial", "principal"})
        for (int i = 0; i < 8; ++i) {
            std::mt19937_64 rng(6000 + i);
            auto c = annihilator_bound_check(random_local_instance(recipe, rng).ideal);
            EXPECT_TRUE(c.inequality);
            if (c.hypotheses) {
                EXPECT_TRUE(c.equality);
            }
        }
}

TEST(Sym, CohenMacaulayCurve)
{
    auto s = symmetric_algebra_report(curve({9, 17, 19, 39}));
    EXPECT_EQ(s.dim, 4);
    ASSERT_TRUE(s.depth_bound.has_value());
    EXPECT_EQ(*s.depth_bound, 2);
    EXPECT_TRUE(s.exact);
    EXPECT_TRUE(s.cohen_macaulay);
    EXPECT_EQ(s.dim_A, 1);
}

TEST(Sym, Hypersurface)
{
    auto L = ring({"x", "y", "z"}, RingMode::Local);
    auto s = symmetric_algebra_report(FilteredIdeal<Rational>(3, polys(L, {"x^2-y^3+z^5"})));
    EXPECT_TRUE(s.cohen_macaulay);
    EXPECT_EQ(s.dim_A, 2);
    ASSERT_TRUE(s.depth_bound.has_value());
    EXPECT_TRUE(s.exact);
    EXPECT_EQ(*s.depth_bound, 3);
    EXPECT_EQ(*s.depth_bound, s.dim);
}

TEST(Sym, DepthZero)
{
    auto L = ring({"x", "y"}, RingMode::Local);
    auto s = symmetric_algebra_report(FilteredIdeal<Rational>(2, polys(L, {"x^2", "x*y"})));
    ASSERT_TRUE(s.depth_bound.has_value());
    EXPECT_EQ(*s.depth_bound, 0);
    EXPECT_TRUE(s.exact);
}

TEST(Sym, NeedsSquareOfMaximalIdeal)
{
    auto L = ring({"x", "y"}, RingMode::Local);
    EXPECT_THROW(symmetric_algebra_report(FilteredIdeal<Rational>(2, polys(L, {"x+y^2", "y^3"}))), InputError);
}

TEST(Sym, BoundNeverAboveDimPlusOne)
{
    for (const std::string recipe : {"local-binomial", "principal"})
        for (int i = 0; i < 8; ++i) {
            std::mt19937_64 rng(7000 + i);
            auto I = random_local_instance(recipe, rng).ideal;
            bool deep = true;
            for (const auto& g : I.generators())
                deep = deep && valuation(g) >= 2;
            if (!deep)
                continue;
            auto s = symmetric_algebra_report(I);
            if (s.depth_bound) {
                EXPECT_LE(*s.depth_bound, s.dim_A + 1);
            }
            EXPECT_EQ(s.dim, I.nvars());
        }
}
