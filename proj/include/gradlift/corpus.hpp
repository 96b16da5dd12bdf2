#pragma once

/**
 * @file corpus.hpp
 * @brief Seeded random instances (graded and local) and the per-instance
 * property checks run over them.
 */

#include "invariants.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

namespace gradlift {

/// Recipes for graded instances: "monomial", "binomial", "borel".
/// Recipes for local instances: "super-regular", "local-binomial", "principal".
inline const std::vector<std::string>& graded_recipes()
{
    static const std::vector<std::string> r{"monomial", "binomial", "borel"};
    return r;
}
inline const std::vector<std::string>& local_recipes()
{
    static const std::vector<std::string> r{"super-regular", "local-binomial", "principal"};
    return r;
}

namespace detail {

inline int uniform(std::mt19937_64& rng, int lo, int hi)
{
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Monomial random_monomial(std::mt19937_64& rng, int n, int d)
{
    Monomial m;
    for (int k = 0; k < d; ++k) {
        int v = uniform(rng, 0, n - 1);
        m.set(v, m[v] + 1);
    }
    return m;
}

inline long nonzero_coefficient(std::mt19937_64& rng, int box)
{
    long c = 0;
    while (c == 0)
        c = draw_int(rng, box);
    return c;
}

/// Close a set of monomials under the moves x_j -> x_i (i < j).
inline std::vector<Monomial> borel_closure(std::vector<Monomial> gens, int n)
{
    std::set<Monomial> seen(gens.begin(), gens.end());
    std::vector<Monomial> todo = gens;
    while (!todo.empty()) {
        Monomial m = todo.back();
        todo.pop_back();
        for (int j = 0; j < n; ++j) {
            if (m[j] == 0)
                continue;
            for (int i = 0; i < j; ++i) {
                Monomial q = m;
                q.set(j, m[j] - 1);
                q.set(i, m[i] + 1);
                if (seen.insert(q).second)
                    todo.push_back(q);
            }
        }
    }
    return minimize_monomials(std::vector<Monomial>(seen.begin(), seen.end()));
}

} // namespace detail

/// A graded instance over Q.
struct GradedInstance {
    std::string recipe;
    GradedModule<Rational> ideal;
};

/// A local instance over Q.
struct LocalInstance {
    std::string recipe;
    FilteredIdeal<Rational> ideal;
};

inline GradedInstance random_graded_instance(const std::string& recipe, std::mt19937_64& rng)
{
    using detail::uniform;
    const Rational one(1);
    TermOrder o(OrderKind::DegRevLex, 4);
    std::vector<Poly<Rational>> gens;
    int n = 0;
    if (recipe == "monomial") {
        n = uniform(rng, 2, 4);
        int k = uniform(rng, 1, 5);
        for (int i = 0; i < k; ++i)
            gens.push_back(monomial_poly(detail::random_monomial(rng, n, uniform(rng, 1, 5)), one));
    } else if (recipe == "binomial") {
        n = uniform(rng, 2, 4);
        int k = uniform(rng, 1, 3);
        for (int i = 0; i < k; ++i) {
            int d = uniform(rng, 2, 5);
            Monomial a = detail::random_monomial(rng, n, d);
            Monomial b = detail::random_monomial(rng, n, d);
            Poly<Rational> p;
            p.terms.push_back(Term<Rational>{a, 0, one});
            if (b != a)
                p.terms.push_back(Term<Rational>{b, 0, Rational(-detail::nonzero_coefficient(rng, 3))});
            normalize_terms(p, TermOrder(OrderKind::DegRevLex, n));
            gens.push_back(p);
        }
    } else if (recipe == "borel") {
        n = 3;
        int k = uniform(rng, 1, 3);
        std::vector<Monomial> seeds;
        for (int i = 0; i < k; ++i)
            seeds.push_back(detail::random_monomial(rng, n, uniform(rng, 1, 4)));
        for (const auto& m : detail::borel_closure(seeds, n))
            gens.push_back(monomial_poly(m, one));
    } else {
        throw InputError("unknown graded recipe \"" + recipe + "\"");
    }
    return GradedInstance{recipe, graded_ideal(gens, n)};
}

inline LocalInstance random_local_instance(const std::string& recipe, std::mt19937_64& rng)
{
    using detail::uniform;
    const Rational one(1);
    std::vector<Poly<Rational>> gens;
    int n = 0;
    auto random_form = [&](int nv, int d, int terms) {
        Poly<Rational> p;
        for (int t = 0; t < terms; ++t)
            p.terms.push_back(Term<Rational>{detail::random_monomial(rng, nv, d), 0,
                                             Rational(detail::nonzero_coefficient(rng, 5))});
        normalize_terms(p, TermOrder(OrderKind::NegDegRevLex, nv));
        return p;
    };
    auto perturb = [&](Poly<Rational> p, int nv, int d) {
        int extra = uniform(rng, 1, 3);
        for (int t = 0; t < extra; ++t)
            p.terms.push_back(Term<Rational>{detail::random_monomial(rng, nv, d + uniform(rng, 1, 2)), 0,
                                             Rational(detail::nonzero_coefficient(rng, 5))});
        normalize_terms(p, TermOrder(OrderKind::NegDegRevLex, nv));
        return p;
    };
    if (recipe == "super-regular") {
        // generic linear forms, then one form in the remaining variables, plus higher-order tails
        n = uniform(rng, 2, 4);
        int k = uniform(rng, 0, std::min(2, n - 1));
        for (int i = 0; i < k; ++i) {
            Poly<Rational> l;
            l.terms.push_back(Term<Rational>{Monomial::variable(i), 0, one});
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2)
                    l.terms.push_back(Term<Rational>{Monomial::variable(j), 0, Rational(detail::nonzero_coefficient(rng, 5))});
            normalize_terms(l, TermOrder(OrderKind::NegDegRevLex, n));
            gens.push_back(perturb(l, n, 1));
        }
        int d = uniform(rng, 2, 3);
        Poly<Rational> f;
        f.terms.push_back(Term<Rational>{Monomial::variable(k, d), 0, one});
        for (int t = 0; t < 2; ++t) {
            Monomial m = detail::random_monomial(rng, n - k, d);
            Monomial s;
            for (int v = 0; v < n - k; ++v)
                s.set(v + k, m[v]);
            f.terms.push_back(Term<Rational>{s, 0, Rational(detail::nonzero_coefficient(rng, 5))});
        }
        normalize_terms(f, TermOrder(OrderKind::NegDegRevLex, n));
        if (f.is_zero())
            f = monomial_poly(Monomial::variable(k, d), one);
        gens.push_back(perturb(f, n, d));
    } else if (recipe == "local-binomial") {
        n = 3;
        int k = uniform(rng, 1, 3);
        for (int i = 0; i < k; ++i) {
            Monomial a = detail::random_monomial(rng, n, uniform(rng, 2, 5));
            Monomial b = detail::random_monomial(rng, n, uniform(rng, 2, 5));
            Poly<Rational> p;
            p.terms.push_back(Term<Rational>{a, 0, one});
            if (b != a)
                p.terms.push_back(Term<Rational>{b, 0, Rational(-1)});
            normalize_terms(p, TermOrder(OrderKind::NegDegRevLex, n));
            gens.push_back(p);
        }
    } else if (recipe == "principal") {
        n = uniform(rng, 2, 4);
        int d = uniform(rng, 2, 4);
        gens.push_back(perturb(random_form(n, d, uniform(rng, 1, 3)), n, d));
    } else {
        throw InputError("unknown local recipe \"" + recipe + "\"");
    }
    return LocalInstance{recipe, FilteredIdeal<Rational>(n, gens)};
}

/// Outcome of the graded property checks on one instance.
struct GradedFindings {
    bool oracle_equal = true;        ///< betti table equals the Koszul Tor oracle
    bool betti_chain = true;         ///< β_{ij}(J) <= β_{ij}(Gin) <= β_{ij}(Lex)
    bool mu_chain = true;            ///< μ(J) <= μ(Gin) <= μ(Lex)
    bool hf_equal = true;            ///< HF of P/J, P/Gin, P/Lex up to degree 20
    bool alternating_sum = true;     ///< Σ(-1)^i β_ij t^j matches the Hilbert series numerator
    std::array<bool, 4> hh{};        ///< μ eq, total Betti eq, graded Betti eq, componentwise linear
    bool hh_agree = true;
    int ld = 0;
    bool ld_agree = true;            ///< ld = 0 iff componentwise linear
    bool alfa_ok = true;             ///< bound always, equality when componentwise linear
    bool lex_capped = false;         ///< Lex hit its degree cap; Lex comparisons skipped
    bool gotzmann_agree = true;      ///< Macaulay-bound test agrees with μ(J) = μ(Lex)
};

template <class K>
BettiTable tor_table(const GradedModule<K>& J, int jmax)
{
    TorOracle<K> o(J);
    return o.table(jmax);
}

inline GradedFindings check_graded_instance(const GradedModule<Rational>& J, std::uint64_t seed,
                                            LexOptions lopts = {})
{
    GradedFindings f;
    FreeComplex<Rational> C = minimal_graded_resolution(J);
    BettiTable B = betti_table(C);
    int jmax = 0;
    for (const auto& [k, v] : B.entries())
        jmax = std::max(jmax, k.second);
    f.oracle_equal = tor_table(J, jmax + 2) == B;

    // Hilbert numerator of J itself against the alternating Betti sum
    HilbertSeries hj = hilbert_series(J);
    f.alternating_sum = betti_alternating_sum(B) == hj.numerator;

    GinOptions go;
    go.seed = seed;
    GinResult gin = generic_initial_ideal(J, go);
    const Rational one(1);
    GradedModule<Rational> G = as_graded(gin.ideal, one);
    BettiTable BG = graded_betti(G);
    int mu = static_cast<int>(C.rank(0));
    int mug = static_cast<int>(gin.ideal.generators.size());
    f.betti_chain = graded_le(B, BG);
    f.mu_chain = mu <= mug;
    std::vector<HilbertSeries> hs{hilbert_series_of_quotient(J), hilbert_series_of_quotient(G)};
    try {
        MonomialIdeal lex = lex_ideal(J, lopts);
        GradedModule<Rational> L = as_graded(lex, one);
        BettiTable BL = graded_betti(L);
        f.betti_chain = f.betti_chain && graded_le(BG, BL);
        f.mu_chain = f.mu_chain && mug <= static_cast<int>(lex.generators.size());
        hs.push_back(hilbert_series_of_quotient(L));
        f.gotzmann_agree = is_gotzmann(J) == (mu == static_cast<int>(lex.generators.size()));
    } catch (const CapExceeded&) {
        f.lex_capped = true;
    }
    f.hf_equal = hilbert_functions_agree(hs, 20);

    bool cl = is_componentwise_linear(J).value;
    f.hh = {mu == mug, B.totals() == BG.totals(), B == BG, cl};
    f.hh_agree = f.hh[0] == f.hh[1] && f.hh[1] == f.hh[2] && f.hh[2] == f.hh[3];
    f.ld = linearity_report(C).ld;
    f.ld_agree = (f.ld == 0) == cl;
    AlfaCheck a = graded_alfa_check(J, seed);
    f.alfa_ok = a.inequality && (!cl || a.equality);
    return f;
}

struct LocalFindings {
    KoszulImplicationReport implication;
    AlfaCheck alfa;
    bool betti_le = true;   ///< β_i(I) <= β_i(I*)
    bool pd_le = true;      ///< pd(I) <= pd(I*)
    bool order_independent = true; ///< both cancellation orders give the same Betti numbers
    bool converse_candidate = false; ///< Koszul while the hypotheses fail
};

inline LocalFindings check_local_instance(const FilteredIdeal<Rational>& I, std::uint64_t seed)
{
    LocalFindings f;
    auto ctx = analyze_local(I);
    f.implication = koszul_implication_check(ctx);
    f.alfa = annihilator_bound_check(ctx, seed);
    auto b = minimalize_local(ctx.lift, true);
    auto gr = betti_table(ctx.lift.graded).totals();
    f.betti_le = elementwise_le(ctx.minimal.betti, gr);
    f.pd_le = ctx.minimal.betti.size() <= gr.size();
    f.order_independent = ctx.minimal.betti == b.betti;
    f.converse_candidate = f.implication.koszul && !(f.implication.min_standard_base && f.implication.componentwise_linear);
    return f;
}

/// What happened to one instance.
struct InstanceOutcome {
    int index = 0;
    bool capped = false;
    std::vector<std::string> fatal;
    std::vector<std::string> notes;
    bool componentwise_linear = false; ///< graded
    bool ld_zero = false;              ///< graded
    bool lex_capped = false;           ///< graded
    bool hypotheses = false;           ///< local: min standard base and componentwise linear I*
    bool converse_candidate = false;   ///< local
};

struct CorpusSummary {
    std::string recipe;
    std::uint64_t seed = 0;
    int count = 0;
    int failures = 0;               ///< instances with a fatal finding
    int capped = 0;                 ///< instances skipped on a resource cap
    int lex_capped = 0;             ///< graded instances whose Lex comparison was skipped
    int converse_candidates = 0;
    int hypotheses_held = 0;
    int componentwise_linear = 0;
    int ld_zero = 0;
    std::vector<std::string> findings;
    std::vector<InstanceOutcome> instances; ///< in index order
    double seconds = 0;
};

inline bool is_graded_recipe(const std::string& r)
{
    return std::find(graded_recipes().begin(), graded_recipes().end(), r) != graded_recipes().end();
}
inline bool is_local_recipe(const std::string& r)
{
    return std::find(local_recipes().begin(), local_recipes().end(), r) != local_recipes().end();
}

/// Instance i of a recipe uses the stream seeded by seed + i.
inline InstanceOutcome run_instance(const std::string& recipe, std::uint64_t seed, int i)
{
    InstanceOutcome o;
    o.index = i;
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
    const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
    try {
        if (is_graded_recipe(recipe)) {
            auto inst = random_graded_instance(recipe, rng);
            auto f = check_graded_instance(inst.ideal, s);
            if (!f.oracle_equal)
                o.fatal.push_back("Betti table differs from the Tor oracle");
            if (!f.betti_chain || !f.mu_chain)
                o.fatal.push_back("Gin/Lex inequality chain violated");
            if (!f.hf_equal)
                o.fatal.push_back("Hilbert functions of J, Gin, Lex differ");
            if (!f.alternating_sum)
                o.fatal.push_back("alternating Betti sum differs from the Hilbert numerator");
            if (!f.hh_agree)
                o.fatal.push_back("Gin equality / componentwise linearity booleans disagree");
            if (!f.ld_agree)
                o.fatal.push_back("ld = 0 disagrees with componentwise linearity");
            if (!f.alfa_ok)
                o.fatal.push_back("annihilator-number identity failed");
            if (!f.gotzmann_agree)
                o.fatal.push_back("Gotzmann tests disagree");
            o.componentwise_linear = f.hh[3];
            o.ld_zero = f.ld == 0;
            o.lex_capped = f.lex_capped;
            if (f.lex_capped)
                o.notes.push_back("Lex degree cap reached, Lex comparisons skipped");
        } else {
            auto inst = random_local_instance(recipe, rng);
            auto f = check_local_instance(inst.ideal, s);
            if (!f.implication.holds)
                o.fatal.push_back("homogeneous type / Koszul implication failed");
            if (!f.alfa.passed)
                o.fatal.push_back("annihilator-number identity failed");
            if (!f.betti_le || !f.pd_le)
                o.fatal.push_back("local Betti numbers exceed those of I*");
            if (!f.order_independent)
                o.fatal.push_back("minimal Betti numbers depend on the cancellation order");
            o.hypotheses = f.implication.min_standard_base && f.implication.componentwise_linear;
            o.converse_candidate = f.converse_candidate;
            if (f.converse_candidate)
                o.notes.push_back("Koszul without the hypotheses");
        }
    } catch (const CapExceeded& e) {
        o.capped = true;
        o.notes.push_back(std::string("capped: ") + e.what());
    } catch (const InvariantViolation& e) {
        o.fatal.push_back(std::string("invariant violation: ") + e.what());
    }
    return o;
}

/// Run `count` instances of a recipe on a small worker pool. The summary does
/// not depend on the number of threads.
inline CorpusSummary corpus_run(const std::string& recipe, int count, std::uint64_t seed, unsigned threads = 0)
{
    if (!is_graded_recipe(recipe) && !is_local_recipe(recipe))
        throw InputError("unknown recipe \"" + recipe + "\"");
    CorpusSummary s;
    s.recipe = recipe;
    s.seed = seed;
    s.count = std::max(count, 0);
    auto t0 = std::chrono::steady_clock::now();
    s.instances.resize(s.count);
    if (threads == 0)
        threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next++; i < s.count; i = next++)
            s.instances[i] = run_instance(recipe, seed, i);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads && static_cast<int>(t) < s.count; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (const auto& o : s.instances) {
        s.failures += !o.fatal.empty();
        s.capped += o.capped;
        s.lex_capped += o.lex_capped;
        s.componentwise_linear += o.componentwise_linear;
        s.ld_zero += o.ld_zero;
        s.hypotheses_held += o.hypotheses;
        s.converse_candidates += o.converse_candidate;
        for (const auto& f : o.fatal)
            s.findings.push_back("instance " + std::to_string(o.index) + ": " + f);
        for (const auto& f : o.notes)
            s.findings.push_back("instance " + std::to_string(o.index) + ": " + f + " (logged)");
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

} // namespace gradlift
