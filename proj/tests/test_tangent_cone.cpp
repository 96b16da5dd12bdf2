#include <gradlift/corpus.hpp>
#include <gradlift/tangent_cone.hpp>

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

// p(t^a1, ..., t^an) == 0, expanded on machine integers
bool vanishes_on_curve(const Poly<Rational>& p, const std::vector<int>& a)
{
    std::map<long, mpq_class> acc;
    for (const auto& t : p.terms) {
        long e = 0;
        for (std::size_t i = 0; i < a.size(); ++i)
            e += long(t.m[int(i)]) * a[i];
        acc[e] += mpq_class(t.c.to_string());
    }
    for (const auto& [e, c] : acc)
        if (c != 0)
            return false;
    return true;
}

} // namespace

TEST(TangentCone, CompleteIntersectionGenerators)
{
    auto T = tangent_cone_ideal(example_one());
    EXPECT_EQ(T.generators.size(), 8u);
    auto G = ring({"x", "y", "z", "t"});
    auto listed = polys(G, {"x^3", "x^2*y", "x^2*t^3", "x*t^6", "x^2*z^6", "x*y^9-x*z^6*t^3", "x*y^8*t^3", "y^7*t^9"});
    std::vector<Poly<Rational>> got;
    for (const auto& g : T.generators)
        got.push_back(resorted(g, G.order()));
    for (const auto& f : listed)
        EXPECT_TRUE(graded_member(f, got, 4, G.order())) << G.format(f);
    for (const auto& f : got)
        EXPECT_TRUE(graded_member(f, listed, 4, G.order())) << G.format(f);
}

TEST(TangentCone, Principal)
{
    auto L = ring({"x", "y"}, RingMode::Local);
    auto T = tangent_cone_ideal(FilteredIdeal<Rational>(2, polys(L, {"x"})));
    ASSERT_EQ(T.generators.size(), 1u);
    EXPECT_EQ(T.generators[0].lead_monomial(), Monomial::variable(0));
}

TEST(TangentCone, CurveGeneratorCount)
{
    auto I = semigroup_defining_ideal(std::vector<int>{9, 17, 19, 39}, RationalField{});
    EXPECT_EQ(tangent_cone_ideal(I).generators.size(), 6u);
    EXPECT_EQ(mu_local(I), 6);
    EXPECT_TRUE(is_min_standard_base(I));
}

TEST(TangentCone, IndependentOfLocalOrder)
{
    std::vector<FilteredIdeal<Rational>> cases{example_one()};
    auto L = ring({"x", "y", "z"}, RingMode::Local);
    cases.emplace_back(3, polys(L, {"x^2-y^3", "y^2-x^3+z^4"}));
    cases.emplace_back(3, polys(L, {"x*y-z^3", "x^2-y^4+z^5", "y*z-x^3"}));
    for (int a : {0, 1})
        cases.push_back(semigroup_defining_ideal(a ? std::vector<int>{3, 4, 5} : std::vector<int>{9, 17, 19, 39},
                                                 RationalField{}));
    for (const auto& I : cases) {
        const int n = I.nvars();
        TermOrder g(OrderKind::DegRevLex, n);
        auto T = tangent_cone_ideal(I);
        BasisOptions o;
        o.product_criterion = true;
        std::vector<Poly<Rational>> other;
        for (const auto& b : standard_basis(I.generators(), TermOrder(OrderKind::NegDegLex, n), o))
            other.push_back(resorted(initial_form(b), g));
        std::vector<Poly<Rational>> mine;
        for (const auto& t : T.generators)
            mine.push_back(resorted(t, g));
        for (const auto& f : other)
            EXPECT_TRUE(ideal_membership(f, mine, 1, g).member);
        for (const auto& f : mine)
            EXPECT_TRUE(ideal_membership(f, other, 1, g).member);
    }
}

TEST(TangentCone, NeedsIntersectionFiltration)
{
    auto L = ring({"x", "y"}, RingMode::Local);
    FilteredIdeal<Rational> I(2, polys(L, {"x^2", "y^3"}), FiltrationKind::Adic);
    EXPECT_EQ(I.kind(), FiltrationKind::Adic);
    EXPECT_THROW(tangent_cone_ideal(I), InputError);
}

TEST(FilteredIdeal, RejectsBadGenerators)
{
    auto L = ring({"x", "y"}, RingMode::Local);
    EXPECT_THROW(FilteredIdeal<Rational>(2, polys(L, {"1+x"})), InputError);
    EXPECT_THROW(FilteredIdeal<Rational>(2, std::vector<Poly<Rational>>{Poly<Rational>{}}), InputError);
    EXPECT_THROW(FilteredIdeal<Rational>(2, std::vector<Poly<Rational>>{}), InputError);
}

TEST(Mu, LocalCounts)
{
    EXPECT_EQ(mu_local(example_one()), 2);
    auto L = ring({"x"}, RingMode::Local);
    EXPECT_EQ(mu_local(FilteredIdeal<Rational>(1, polys(L, {"x", "x+x^2"}))), 1);
    auto I = semigroup_defining_ideal(std::vector<int>{10, 19, 21, 53}, RationalField{});
    EXPECT_EQ(mu_local(I), 5);
    EXPECT_EQ(tangent_cone_ideal(I).generators.size(), 7u);
    EXPECT_FALSE(is_min_standard_base(I));
    EXPECT_FALSE(is_min_standard_base(example_one()));
    auto J = semigroup_defining_ideal(std::vector<int>{19, 26, 34, 40}, RationalField{});
    EXPECT_EQ(mu_local(J), 5);
    EXPECT_TRUE(is_min_standard_base(J));
}

TEST(Mu, RedundantGeneratorsPruned)
{
    auto L = ring({"x", "y"}, RingMode::Local);
    // the third generator is (1 + y) times the first plus x times the second
    FilteredIdeal<Rational> I(2, polys(L, {"x^2-y^3", "x*y", "x^2-y^3+x^2*y-y^4+x^2*y"}));
    EXPECT_EQ(mu_local(I), 2);
    EXPECT_EQ(minimally_generated(I).generators().size(), 2u);
}

TEST(Mu, MonotoneOnLocalCorpus)
{
    for (const std::string recipe : {"super-regular", "local-binomial", "principal"})
        for (int i = 0; i < 10; ++i) {
            std::mt19937_64 rng(40 + i);
            auto I = random_local_instance(recipe, rng).ideal;
            EXPECT_LE(mu_local(I), static_cast<int>(tangent_cone_ideal(I).generators.size()));
        }
}

TEST(LocalMembership, UnitMultiples)
{
    auto L = ring({"x", "y"}, RingMode::Local);
    EXPECT_TRUE(local_ideal_member(L.parse("x"), polys(L, {"x-x^2"}), L.order()));
    EXPECT_FALSE(local_ideal_member(L.parse("y"), polys(L, {"x"}), L.order()));
    EXPECT_TRUE(same_ideal(polys(L, {"x+x*y", "y^2"}), polys(L, {"x", "y^2-x*y^2"}), L.order()));
    EXPECT_FALSE(same_ideal(polys(L, {"x"}), polys(L, {"x", "y^2"}), L.order()));
}

TEST(Semigroup, SmallCurves)
{
    auto I = semigroup_defining_ideal(std::vector<int>{2, 3}, RationalField{});
    ASSERT_EQ(I.generators().size(), 1u);
    auto R = ring({"x1", "x2"});
    EXPECT_EQ(make_monic(resorted(I.generators()[0], R.order())), make_monic(R.parse("x1^3-x2^2")));

    auto J = semigroup_defining_ideal(std::vector<int>{3, 4, 5}, RationalField{});
    ASSERT_EQ(J.generators().size(), 3u);
    auto R3 = ring(vars(3));
    std::vector<Poly<Rational>> got;
    for (const auto& g : J.generators()) {
        EXPECT_TRUE(vanishes_on_curve(g, {3, 4, 5}));
        got.push_back(resorted(g, R3.order()));
    }
    EXPECT_TRUE(same_ideal(got, polys(R3, {"x2^2-x1*x3", "x1^3-x2*x3", "x3^2-x1^2*x2"}), R3.order()));
}

TEST(Semigroup, GeneratorsVanishOnCurve)
{
    for (auto a : std::vector<std::vector<int>>{{9, 17, 19, 39}, {19, 26, 34, 40}, {10, 19, 21, 53}}) {
        auto I = semigroup_defining_ideal(a, RationalField{});
        for (const auto& g : I.generators())
            EXPECT_TRUE(vanishes_on_curve(g, a));
    }
}

TEST(Semigroup, Errors)
{
    EXPECT_THROW(semigroup_defining_ideal(std::vector<int>{0, 3}, RationalField{}), InputError);
    EXPECT_THROW(semigroup_defining_ideal(std::vector<int>{-2, 3}, RationalField{}), InputError);
    EXPECT_THROW(semigroup_defining_ideal(std::vector<int>{4, 6}, RationalField{}), InputError);
    EXPECT_THROW(semigroup_defining_ideal(std::vector<int>{}, RationalField{}), InputError);
}
