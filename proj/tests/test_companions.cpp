#include <gradlift/companions.hpp>
#include <gradlift/corpus.hpp>

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace gradlift;
using namespace testing_support;

namespace {

std::set<Monomial> as_set(const std::vector<Monomial>& v) { return {v.begin(), v.end()}; }

std::set<Monomial> parse_monomials(const QRing& R, std::initializer_list<const char*> texts)
{
    std::set<Monomial> out;
    for (const char* t : texts)
        out.insert(R.parse(t).lead_monomial());
    return out;
}

// Pivot monomials of the RREF of a span, columns sorted largest first: the
// initial monomials of the span under `o`.
std::set<Monomial> initial_monomials(const std::vector<Poly<Rational>>& span, int n, int d, const TermOrder& o)
{
    auto cols = degree_monomials(n, d);
    std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) { return o.compare(a, b) > 0; });
    auto a = rows_over(span, cols);
    std::set<Monomial> piv;
    int rank = 0;
    for (std::size_t c = 0; c < cols.size() && rank < int(a.size()); ++c) {
        int p = -1;
        for (int r = rank; r < int(a.size()); ++r)
            if (a[r][c] != 0) {
                p = r;
                break;
            }
        if (p < 0)
            continue;
        std::swap(a[p], a[rank]);
        for (int r = 0; r < int(a.size()); ++r)
            if (r != rank && a[r][c] != 0) {
                mpq_class f = a[r][c] / a[rank][c];
                for (std::size_t k = c; k < cols.size(); ++k)
                    a[r][k] -= f * a[rank][k];
            }
        piv.insert(cols[c]);
        ++rank;
    }
    return piv;
}

// Degree-d monomials of a monomial ideal.
std::set<Monomial> ideal_piece(const MonomialIdeal& I, int d)
{
    std::set<Monomial> out;
    for (const auto& m : degree_monomials(I.nvars, d))
        if (I.contains(m))
            out.insert(m);
    return out;
}

// HF of P/J in degree d by dense rank.
long quotient_hf(const std::vector<Poly<Rational>>& J, int n, int d, const TermOrder& o)
{
    return choose(d + n - 1, n - 1) - graded_piece_dim(J, n, d, o);
}

} // namespace

TEST(Gin, CurveTangentCone)
{
    auto I = semigroup_defining_ideal(std::vector<int>{9, 17, 19, 39}, RationalField{});
    auto g = generic_initial_ideal(tangent_cone_ideal(I));
    auto R = ring(vars(4));
    EXPECT_EQ(as_set(g.ideal.generators),
              parse_monomials(R, {"x1^2", "x1*x2", "x2^2", "x1*x3^2", "x2*x3^2", "x3^5"}));
    EXPECT_TRUE(is_borel_fixed(g.ideal));
}

TEST(Gin, BorelFixedIdealIsItsOwnGin)
{
    auto R = ring(vars(4));
    auto gens = polys(R, {"x1^2", "x1*x2", "x2^2", "x1*x3", "x2*x3^2", "x1*x4^3", "x3^4"});
    auto g = generic_initial_ideal(graded_ideal(gens, 4));
    std::set<Monomial> want;
    for (const auto& p : gens)
        want.insert(p.lead_monomial());
    EXPECT_EQ(as_set(g.ideal.generators), want);
}

TEST(Gin, TwoSquaresAgainstDenseOracle)
{
    auto R = ring({"x", "y"});
    auto J = polys(R, {"x^2", "y^2"});
    auto g = generic_initial_ideal(graded_ideal(J, 2));
    EXPECT_EQ(as_set(g.ideal.generators), parse_monomials(R, {"x^2", "x*y", "y^3"}));
    // a fixed generic-looking change x -> 3x + 5y, y -> -2x + 7y, then revlex initial
    // monomials of each degree piece by dense elimination
    std::vector<Poly<Rational>> images = polys(R, {"3*x+5*y", "-2*x+7*y"});
    std::vector<Poly<Rational>> moved;
    for (const auto& f : J)
        moved.push_back(substitute(f, images, R.order(), Rational(1)));
    for (int d = 2; d <= 5; ++d) {
        std::vector<Poly<Rational>> span;
        for (const auto& f : moved)
            for (const auto& m : degree_monomials(2, d - 2))
                span.push_back(times(m, f, R.order()));
        EXPECT_EQ(initial_monomials(span, 2, d, R.order()), ideal_piece(g.ideal, d)) << "degree " << d;
    }
}

TEST(Gin, BorelFixedOnCorpus)
{
    for (const std::string recipe : {"monomial", "binomial"})
        for (int i = 0; i < 10; ++i) {
            std::mt19937_64 rng(60 + i);
            auto J = random_graded_instance(recipe, rng).ideal;
            GinOptions o;
            o.seed = 5 + i;
            auto g = generic_initial_ideal(J, o);
            EXPECT_TRUE(is_borel_fixed(g.ideal));
            // another seed gives the same ideal
            o.seed = 1000 + i;
            EXPECT_EQ(generic_initial_ideal(J, o).ideal, g.ideal);
        }
}

TEST(Lex, WholeDegreeTwoPiece)
{
    auto R = ring({"x", "y"});
    auto L = lex_ideal(graded_ideal(polys(R, {"x^2", "x*y", "y^2"}), 2));
    EXPECT_EQ(as_set(L.generators), parse_monomials(R, {"x^2", "x*y", "y^2"}));
}

TEST(Lex, PrincipalProductResolvedByOracle)
{
    // HF(P/(xy)) = 1, 2, 2, 2, ...: the segment of size 1 in degree 2 is {x^2},
    // and (x^2) already has the right size in every higher degree
    auto R = ring({"x", "y"});
    auto J = polys(R, {"x*y"});
    auto L = lex_ideal(graded_ideal(J, 2));
    EXPECT_EQ(as_set(L.generators), parse_monomials(R, {"x^2"}));
    std::vector<Poly<Rational>> Lp;
    for (const auto& m : L.generators)
        Lp.push_back(monomial_poly(m, Rational(1)));
    TermOrder lex(OrderKind::Lex, 2);
    for (int d = 0; d <= 6; ++d) {
        EXPECT_EQ(quotient_hf(J, 2, d, R.order()), quotient_hf(Lp, 2, d, R.order()));
        // the degree-d piece is an initial lex segment
        auto cols = degree_monomials(2, d);
        std::sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) { return lex.compare(a, b) > 0; });
        bool seen_out = false;
        for (const auto& m : cols) {
            if (!L.contains(m))
                seen_out = true;
            else
                EXPECT_FALSE(seen_out);
        }
    }
}

TEST(Lex, ZeroIdeal)
{
    GradedModule<Rational> Z;
    Z.nvars = 2;
    EXPECT_TRUE(lex_ideal(Z).generators.empty());
}

TEST(Lex, CapExceeded)
{
    auto L = ring({"x", "y", "z", "t"}, RingMode::Local);
    auto T = tangent_cone_ideal(FilteredIdeal<Rational>(4, polys(L, {"x^3-y^7", "x^2*y-x*t^3-z^6"})));
    LexOptions o;
    o.cap = 20;
    EXPECT_THROW(lex_ideal(T, o), CapExceeded);
}

TEST(Gotzmann, Examples)
{
    auto R = ring({"x", "y", "z"});
    auto x = graded_ideal(polys(R, {"x"}), 3);
    EXPECT_TRUE(gotzmann_check(x));
    EXPECT_TRUE(is_gotzmann(x));
    auto m2 = graded_ideal(polys(R, {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}), 3);
    EXPECT_TRUE(gotzmann_check(m2));
    EXPECT_TRUE(is_gotzmann(m2));
    // (x^2, y^2): HF = 1, 2, 1, 0, so Lex = (x^2, x*y, y^3) and mu differs
    auto R2 = ring({"x", "y"});
    auto sq = graded_ideal(polys(R2, {"x^2", "y^2"}), 2);
    EXPECT_EQ(as_set(lex_ideal(sq).generators), parse_monomials(R2, {"x^2", "x*y", "y^3"}));
    EXPECT_FALSE(gotzmann_check(sq));
    EXPECT_FALSE(is_gotzmann(sq));
}

TEST(Gotzmann, MacaulayUpperValues)
{
    // hand Macaulay representations
    EXPECT_EQ(macaulay_upper(3, 2), 4);   // 3 = C(3,2)
    EXPECT_EQ(macaulay_upper(5, 2), 7);   // 5 = C(3,2) + C(2,1)
    EXPECT_EQ(macaulay_upper(1, 1), 1);   // 1 = C(1,1)
    EXPECT_EQ(macaulay_upper(4, 1), 10);  // 4 = C(4,1)
    EXPECT_EQ(macaulay_upper(10, 3), 15); // 10 = C(5,3)
    EXPECT_EQ(macaulay_upper(0, 4), 0);
}

TEST(Gotzmann, BothTestsAgreeOnCorpus)
{
    for (const std::string recipe : {"monomial", "binomial", "borel"})
        for (int i = 0; i < 12; ++i) {
            std::mt19937_64 rng(80 + i);
            auto J = random_graded_instance(recipe, rng).ideal;
            try {
                EXPECT_EQ(is_gotzmann(J), gotzmann_check(J)) << recipe << " " << i;
            } catch (const CapExceeded&) {
            }
        }
}

TEST(Chains, LocalExamples)
{
    auto L = ring({"x", "y", "z", "t"}, RingMode::Local);
    auto r = inequality_chain_report(FilteredIdeal<Rational>(4, polys(L, {"x^3-y^7", "x^2*y-x*t^3-z^6"})));
    EXPECT_EQ(r.beta_local, (std::vector<long>{1, 2, 1}));
    EXPECT_EQ(r.beta_tangent, (std::vector<long>{1, 8, 12, 6, 1}));
    EXPECT_TRUE(r.beta_chain && r.mu_chain && r.hf_equal);
    EXPECT_LT(r.mu_local, r.mu_tangent);

    auto c = inequality_chain_report(semigroup_defining_ideal(std::vector<int>{9, 17, 19, 39}, RationalField{}));
    EXPECT_EQ(c.beta_local, c.beta_tangent);
    EXPECT_EQ(c.beta_tangent, c.beta_gin);
    EXPECT_EQ(c.mu_local, 6);
    EXPECT_EQ(c.mu_gin, 6);

    // a lex ideal: all four coincide
    auto M = ring({"x", "y", "z"}, RingMode::Local);
    auto m = inequality_chain_report(FilteredIdeal<Rational>(3, polys(M, {"x^2", "x*y", "x*z", "y^2"})));
    EXPECT_EQ(m.beta_local, m.beta_tangent);
    EXPECT_EQ(m.beta_tangent, m.beta_gin);
    EXPECT_EQ(m.beta_gin, m.beta_lex);
    EXPECT_EQ(m.mu_lex, 4);
}

TEST(Chains, GradedCorpus)
{
    for (const std::string recipe : {"monomial", "binomial", "borel"})
        for (int i = 0; i < 10; ++i) {
            std::mt19937_64 rng(3000 + i);
            auto J = random_graded_instance(recipe, rng).ideal;
            auto f = check_graded_instance(J, 1);
            EXPECT_TRUE(f.oracle_equal);
            EXPECT_TRUE(f.betti_chain);
            EXPECT_TRUE(f.mu_chain);
            EXPECT_TRUE(f.hf_equal);
            EXPECT_TRUE(f.hh_agree);
            EXPECT_TRUE(f.gotzmann_agree);
        }
}
