#pragma once

/**
 * @file companions.hpp
 * @brief Monomial companions of a graded ideal: generic initial ideal (revlex,
 * characteristic 0), lex-segment ideal, Gotzmann test, and the Betti / μ
 * inequality chains.
 */

#include "linalg.hpp"
#include "local_lift.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <sstream>
#include <type_traits>
#include <vector>

namespace gradlift {

/// Monomial ideal by its minimal generators (sorted by degree, then lex-descending).
struct MonomialIdeal {
    int nvars = 0;
    std::vector<Monomial> generators;

    bool contains(const Monomial& m) const
    {
        for (const auto& g : generators)
            if (g.divides(m))
                return true;
        return false;
    }
    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b)
    {
        return a.nvars == b.nvars && a.generators == b.generators;
    }
};

inline MonomialIdeal make_monomial_ideal(std::vector<Monomial> gens, int nvars)
{
    MonomialIdeal I;
    I.nvars = nvars;
    I.generators = detail::minimize_monomials(std::move(gens));
    std::stable_sort(I.generators.begin(), I.generators.end(), [&](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return TermOrder(OrderKind::Lex, nvars).compare(a, b) > 0;
    });
    return I;
}

template <class K>
GradedModule<K> as_graded(const MonomialIdeal& I, const K& one)
{
    GradedModule<K> N;
    N.nvars = I.nvars;
    for (const auto& m : I.generators)
        N.generators.push_back(monomial_poly(m, one));
    return N;
}

/// Strongly stable: x_j | m implies (x_i / x_j) m in I for i < j.
inline bool is_borel_fixed(const MonomialIdeal& I)
{
    for (const auto& m : I.generators)
        for (int j = 0; j < I.nvars; ++j) {
            if (m[j] == 0)
                continue;
            for (int i = 0; i < j; ++i) {
                Monomial q = m;
                q.set(j, m[j] - 1);
                q.set(i, m[i] + 1);
                if (!I.contains(q))
                    return false;
            }
        }
    return true;
}

struct GinOptions {
    std::uint64_t seed = 1;
    int box = 100;
    int max_retries = 4;
    BasisOptions basis;
};

struct GinResult {
    MonomialIdeal ideal;
    std::uint64_t seed = 0;
    int retries = 0;
    int box = 0;
};

/// Deterministic integer in [-box, box] (no distribution objects, so draws are stable across libraries).
inline long draw_int(std::mt19937_64& rng, int box)
{
    return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * box + 1)) - box;
}

namespace detail {

/// Random invertible integer matrix rows, entries in [-box, box].
inline std::vector<std::vector<long>> random_invertible(int n, int box, std::mt19937_64& rng)
{
    while (true) {
        std::vector<std::vector<long>> g(n, std::vector<long>(n));
        RowEchelon<Rational> e;
        for (int i = 0; i < n; ++i) {
            SparseRow<Rational> row;
            for (int j = 0; j < n; ++j) {
                g[i][j] = draw_int(rng, box);
                if (g[i][j] != 0)
                    row.emplace_back(j, Rational(g[i][j]));
            }
            e.insert(row);
        }
        if (static_cast<int>(e.rank()) == n)
            return g;
    }
}

template <class K>
MonomialIdeal initial_after_change(const GradedModule<K>& J, const std::vector<std::vector<long>>& g,
                                   const BasisOptions& opts)
{
    const int n = J.nvars;
    TermOrder o(OrderKind::DegRevLex, n);
    K one;
    for (const auto& f : J.generators)
        if (!f.is_zero()) {
            one = f.lead_coefficient() * f.lead_coefficient().inverse();
            break;
        }
    std::vector<Poly<K>> images;
    for (int i = 0; i < n; ++i) {
        Poly<K> p;
        for (int j = 0; j < n; ++j)
            if (g[i][j] != 0)
                p.terms.push_back(Term<K>{Monomial::variable(j), 0, integer_like(one, g[i][j])});
        normalize_terms(p, o);
        images.push_back(p);
    }
    std::vector<Poly<K>> moved;
    for (const auto& f : J.generators)
        moved.push_back(substitute(f, images, o, one));
    BasisOptions b = opts;
    b.product_criterion = true;
    std::vector<Monomial> lt;
    for (const auto& h : buchberger(moved, o, b))
        lt.push_back(h.lead_monomial());
    return make_monomial_ideal(lt, n);
}

} // namespace detail

/**
 * Gin of a homogeneous ideal over Q: the revlex initial ideal after a random
 * linear change of coordinates. Two independent draws must agree and the
 * result must be Borel-fixed; otherwise retry with a doubled coefficient box.
 */
template <class K>
GinResult generic_initial_ideal(const GradedModule<K>& J, GinOptions opts = {})
{
    static_assert(std::is_same_v<K, Rational>, "generic initial ideals are computed in characteristic 0");
    if (J.rank() != 1)
        throw InputError("generic_initial_ideal needs an ideal");
    GinResult out;
    out.seed = opts.seed;
    std::mt19937_64 rng(opts.seed);
    int box = opts.box;
    std::ostringstream diag;
    for (int attempt = 0; attempt <= opts.max_retries; ++attempt) {
        auto g1 = detail::random_invertible(J.nvars, box, rng);
        auto g2 = detail::random_invertible(J.nvars, box, rng);
        MonomialIdeal a = detail::initial_after_change(J, g1, opts.basis);
        MonomialIdeal b = detail::initial_after_change(J, g2, opts.basis);
        bool agree = a == b;
        bool borel = is_borel_fixed(a);
        if (agree && borel) {
            out.ideal = a;
            out.retries = attempt;
            out.box = box;
            return out;
        }
        diag << " [box " << box << ": " << (agree ? "agree" : "draws disagree") << (borel ? "" : ", not Borel-fixed")
             << "]";
        box *= 2;
    }
    throw InvariantViolation("generic initial ideal did not stabilize:" + diag.str());
}

struct LexOptions {
    int cap = 128;
};

/**
 * Lex-segment ideal with the Hilbert function of P/J. In each degree the
 * first dim J_d monomials in lex order form the segment; generators are the
 * segment monomials not divisible by earlier generators. Stops once two
 * consecutive degrees past the top generator degree of J bring no new
 * generator.
 */
template <class K>
MonomialIdeal lex_ideal(const GradedModule<K>& J, LexOptions opts = {})
{
    if (J.rank() != 1)
        throw InputError("lex_ideal needs an ideal");
    const int n = J.nvars;
    HilbertSeries hs = hilbert_series_of_quotient(J);
    int D = 0;
    for (const auto& g : J.generators)
        D = std::max(D, J.degree_of(g));
    MonomialIdeal L;
    L.nvars = n;
    int quiet = 0;
    for (int d = 0;; ++d) {
        if (d > opts.cap)
            throw CapExceeded("lex ideal: degree cap " + std::to_string(opts.cap) + " exceeded");
        auto mons = monomials_of_degree(n, d);
        mpz_class hf = hs.value(d);
        long c = static_cast<long>(mons.size()) - hf.get_si();
        if (c < 0)
            throw InvariantViolation("Hilbert function exceeds the monomial count");
        bool added = false;
        for (long k = 0; k < static_cast<long>(mons.size()); ++k) {
            bool in_L = L.contains(mons[k]);
            if (k < c) {
                if (!in_L) {
                    L.generators.push_back(mons[k]);
                    added = true;
                }
            } else if (in_L) {
                throw InvariantViolation("lex segment does not contain the previous segment's multiples");
            }
        }
        if (d > D)
            quiet = added ? 0 : quiet + 1;
        if (quiet >= 2)
            break;
    }
    return make_monomial_ideal(L.generators, n);
}

/// a^<d>: shift every binomial of the d-th Macaulay representation of a up by one.
inline mpz_class macaulay_upper(mpz_class a, int d)
{
    mpz_class r = 0;
    for (int l = d; l >= 1 && a > 0; --l) {
        // largest k with C(k, l) <= a
        long k = l;
        while (binomial(k + 1, l) <= a)
            ++k;
        a -= binomial(k, l);
        r += binomial(k + 1, l + 1);
    }
    return r;
}

/**
 * Gotzmann test straight from the definition: for every degree j with a
 * minimal generator, the ideal generated by J_j attains Macaulay's bound,
 * dim (P/J_<j>)_{j+1} = (dim (P/J)_j)^<j>.
 */
template <class K>
bool is_gotzmann(const GradedModule<K>& J)
{
    if (J.rank() != 1)
        throw InputError("Gotzmann test needs an ideal");
    HilbertSeries h = hilbert_series_of_quotient(J);
    std::set<int> degrees;
    for (const auto& g : minimal_generators(J))
        degrees.insert(J.degree_of(g));
    for (int j : degrees) {
        if (j < 1)
            return true; // unit ideal
        HilbertSeries hj = hilbert_series_of_quotient(component_submodule(J, j));
        if (hj.value(j + 1) != macaulay_upper(h.value(j), j))
            return false;
    }
    return true;
}

/// Same property via generator counts: μ(J) = μ(Lex(J)).
template <class K>
bool gotzmann_check(const GradedModule<K>& J, LexOptions opts = {})
{
    return mu_graded(J) == static_cast<int>(lex_ideal(J, opts).generators.size());
}

/// β_i of P/J from the totals of the resolution of J.
inline std::vector<long> quotient_betti(const std::vector<long>& ideal_totals)
{
    std::vector<long> r{1};
    r.insert(r.end(), ideal_totals.begin(), ideal_totals.end());
    return r;
}

struct InequalityChainReport {
    std::vector<long> beta_local; ///< β_i(R/I)
    std::vector<long> beta_tangent; ///< β_i(P/I*)
    std::vector<long> beta_gin;
    std::vector<long> beta_lex;
    int mu_local = 0, mu_tangent = 0, mu_gin = 0, mu_lex = 0;
    bool hf_equal = false;
    bool beta_chain = false;
    bool mu_chain = false;
    GinResult gin;
    MonomialIdeal lex;
};

inline bool elementwise_le(std::vector<long> a, std::vector<long> b)
{
    std::size_t len = std::max(a.size(), b.size());
    a.resize(len, 0);
    b.resize(len, 0);
    for (std::size_t i = 0; i < len; ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

/// β_{i,j}(A) <= β_{i,j}(B) everywhere.
inline bool graded_le(const BettiTable& a, const BettiTable& b)
{
    for (const auto& [k, v] : a.entries())
        if (v > b(k.first, k.second))
            return false;
    return true;
}

inline bool hilbert_functions_agree(const std::vector<HilbertSeries>& hs, int upto)
{
    for (int d = 0; d <= upto; ++d)
        for (std::size_t i = 1; i < hs.size(); ++i)
            if (hs[i].value(d) != hs[0].value(d))
                return false;
    return true;
}

/**
 * β_i(R/I) <= β_i(P/I*) <= β_i(P/Gin) <= β_i(P/Lex), μ(I) <= μ(I*) <= μ(Gin),
 * and equal Hilbert functions of P/I*, P/Gin, P/Lex up to `hf_bound`. A
 * violation is an engine bug.
 */
template <class K>
InequalityChainReport inequality_chain_report(const FilteredIdeal<K>& I, GinOptions gopts = {}, LexOptions lopts = {},
                                              int hf_bound = 20)
{
    InequalityChainReport r;
    auto lift = lift_resolution(I, gopts.basis);
    auto mloc = minimalize_local(lift);
    const GradedModule<K> Istar = tangent_cone_ideal(I, gopts.basis);
    K one = Istar.generators.front().lead_coefficient() * Istar.generators.front().lead_coefficient().inverse();
    r.gin = generic_initial_ideal(Istar, gopts);
    r.lex = lex_ideal(Istar, lopts);
    GradedModule<K> Gin = as_graded(r.gin.ideal, one);
    GradedModule<K> Lex = as_graded(r.lex, one);
    r.beta_local = quotient_betti(mloc.betti);
    r.beta_tangent = quotient_betti(betti_table(lift.graded).totals());
    r.beta_gin = quotient_betti(graded_betti(Gin).totals());
    r.beta_lex = quotient_betti(graded_betti(Lex).totals());
    r.mu_local = static_cast<int>(mloc.betti.empty() ? 0 : mloc.betti[0]);
    r.mu_tangent = static_cast<int>(Istar.generators.size());
    r.mu_gin = static_cast<int>(r.gin.ideal.generators.size());
    r.mu_lex = static_cast<int>(r.lex.generators.size());
    r.hf_equal = hilbert_functions_agree(
        {hilbert_series_of_quotient(Istar), hilbert_series_of_quotient(Gin), hilbert_series_of_quotient(Lex)},
        hf_bound);
    r.beta_chain = elementwise_le(r.beta_local, r.beta_tangent) && elementwise_le(r.beta_tangent, r.beta_gin) &&
                   elementwise_le(r.beta_gin, r.beta_lex);
    r.mu_chain = r.mu_local <= r.mu_tangent && r.mu_tangent <= r.mu_gin && r.mu_gin <= r.mu_lex;
    if (!r.hf_equal)
        throw InvariantViolation("Hilbert functions of P/I*, P/Gin, P/Lex differ");
    if (!r.beta_chain)
        throw InvariantViolation("Betti inequality chain violated");
    if (!r.mu_chain)
        throw InvariantViolation("generator count chain violated");
    return r;
}

} // namespace gradlift
