#pragma once

/**
 * @file invariants.hpp
 * @brief Projective dimension and depth, generic annihilator numbers of P/J,
 * the Betti / annihilator-number identity, and the symmetric algebra report.
 */

#include "companions.hpp"
#include "linearity.hpp"

#include <optional>
#include <random>
#include <vector>

namespace gradlift {

struct DepthPd {
    int pd = 0;    ///< pd(R/I)
    int depth = 0; ///< n - pd
};

template <class K>
DepthPd depth_and_pd(const LocalAnalysis<K>& a)
{
    DepthPd r;
    r.pd = static_cast<int>(a.minimal.betti.size()); // length of the resolution of I, plus one
    r.depth = a.nvars - r.pd;
    return r;
}

template <class K>
DepthPd depth_and_pd(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    return depth_and_pd(analyze_local(I, opts));
}

struct AnnihilatorNumbers {
    std::vector<long> alpha; ///< alpha[p-1] = α_p
    std::vector<std::vector<long>> forms; ///< coefficients of y_1..y_n
    std::uint64_t seed = 0;
    int retries = 0;
};

namespace detail {

/// α_1..α_n for one draw of linear forms; nullopt if some quotient has positive dimension.
template <class K>
std::optional<std::vector<long>> annihilator_numbers_for(const GradedModule<K>& J,
                                                         const std::vector<std::vector<long>>& y,
                                                         const K& one, const BasisOptions& opts)
{
    const int n = J.nvars;
    TermOrder o(OrderKind::DegRevLex, n);
    std::vector<Poly<K>> Q = J.generators;
    std::vector<long> alpha;
    for (int p = 0; p < n; ++p) {
        Poly<K> yp;
        for (int j = 0; j < n; ++j)
            if (y[p][j] != 0)
                yp.terms.push_back(Term<K>{Monomial::variable(j), 0, integer_like(one, y[p][j])});
        normalize_terms(yp, o);
        std::vector<Poly<K>> colon = Q.empty() ? std::vector<Poly<K>>{} : colon_ideal(Q, yp, o, opts);
        HilbertSeries a = hilbert_function(Q, n);
        HilbertSeries b = hilbert_function(colon, n);
        HilbertSeries diff = hilbert_difference(a, b);
        auto [num, dim] = diff.reduced();
        if (dim > 0)
            return std::nullopt;
        mpz_class len = 0;
        if (dim == 0)
            for (const auto& c : num)
                len += c;
        if (len < 0)
            throw InvariantViolation("negative annihilator length");
        alpha.push_back(len.get_si());
        Q.push_back(yp);
    }
    return alpha;
}

} // namespace detail

/**
 * α_p(P/J) = length of ((J, y_1..y_{p-1}) : y_p) / (J, y_1..y_{p-1}) for
 * random linear forms y_p. Two independent draws must agree; a draw giving a
 * quotient of positive dimension is discarded.
 */
template <class K>
AnnihilatorNumbers generic_annihilator_numbers(const GradedModule<K>& J, std::uint64_t seed = 1,
                                               BasisOptions opts = {}, int max_retries = 4)
{
    const int n = J.nvars;
    K one;
    bool have = false;
    for (const auto& g : J.generators)
        if (!g.is_zero()) {
            one = g.lead_coefficient() * g.lead_coefficient().inverse();
            have = true;
            break;
        }
    if (!have) {
        // J = 0: y_1..y_n is a regular sequence
        AnnihilatorNumbers r;
        r.alpha.assign(n, 0);
        r.seed = seed;
        return r;
    }
    std::mt19937_64 rng(seed);
    int box = 100;
    for (int attempt = 0; attempt <= max_retries; ++attempt) {
        auto y1 = detail::random_invertible(n, box, rng);
        auto y2 = detail::random_invertible(n, box, rng);
        auto a = detail::annihilator_numbers_for(J, y1, one, opts);
        auto b = detail::annihilator_numbers_for(J, y2, one, opts);
        if (a && b && *a == *b) {
            AnnihilatorNumbers r;
            r.alpha = *a;
            r.forms = y1;
            r.seed = seed;
            r.retries = attempt;
            return r;
        }
        box *= 2;
    }
    throw InvariantViolation("annihilator numbers did not stabilize over random draws");
}

/// Σ_{j=1}^{n-i+1} C(n-j, i-1) α_j, for i = 1..n.
inline std::vector<long> alpha_bound(const std::vector<long>& alpha)
{
    const int n = static_cast<int>(alpha.size());
    std::vector<long> r;
    for (int i = 1; i <= n; ++i) {
        mpz_class s = 0;
        for (int j = 1; j <= n - i + 1; ++j)
            s += binomial(n - j, i - 1) * alpha[j - 1];
        r.push_back(s.get_si());
    }
    return r;
}

struct AlfaCheck {
    std::vector<long> beta;  ///< β_i(R/I), i = 1..n
    std::vector<long> bound; ///< the binomial sums over α_j(P/I*)
    AnnihilatorNumbers alpha;
    bool hypotheses = false; ///< minimal standard base and I* componentwise linear
    bool inequality = false;
    bool equality = false;
    /// inequality always, equality when the hypotheses hold
    bool passed = false;
};

template <class K>
AlfaCheck annihilator_bound_check(const LocalAnalysis<K>& a, std::uint64_t seed = 1)
{
    AlfaCheck r;
    r.hypotheses = a.hypotheses();
    r.alpha = generic_annihilator_numbers(a.tangent.ideal, seed, a.opts);
    r.bound = alpha_bound(r.alpha.alpha);
    r.beta.assign(a.nvars, 0);
    for (std::size_t i = 0; i < a.minimal.betti.size() && i < r.beta.size(); ++i)
        r.beta[i] = a.minimal.betti[i];
    r.inequality = elementwise_le(r.beta, r.bound);
    r.equality = r.beta == r.bound;
    r.passed = r.inequality && (!r.hypotheses || r.equality);
    return r;
}

template <class K>
AlfaCheck annihilator_bound_check(const FilteredIdeal<K>& I, std::uint64_t seed = 1, BasisOptions opts = {})
{
    return annihilator_bound_check(analyze_local(I, opts), seed);
}

/// Same identity for P/J with J graded: β_i(P/J) against the α_j(P/J).
template <class K>
AlfaCheck graded_alfa_check(const GradedModule<K>& J, std::uint64_t seed = 1, BasisOptions opts = {})
{
    AlfaCheck r;
    r.hypotheses = is_componentwise_linear(J).value;
    r.alpha = generic_annihilator_numbers(J, seed, opts);
    r.bound = alpha_bound(r.alpha.alpha);
    auto t = graded_betti(J, opts).totals();
    r.beta.assign(J.nvars, 0);
    for (std::size_t i = 0; i < t.size() && i < r.beta.size(); ++i)
        r.beta[i] = t[i];
    r.inequality = elementwise_le(r.beta, r.bound);
    r.equality = r.beta == r.bound;
    r.passed = r.inequality && (!r.hypotheses || r.equality);
    return r;
}

struct SymmetricAlgebraReport {
    int dim = 0;                   ///< dim S_A(m) = dim R
    int depth_A = 0;
    int dim_A = 0;
    bool cohen_macaulay = false;
    bool hypotheses = false;       ///< minimal standard base and I* componentwise linear
    std::optional<int> depth_bound; ///< lower bound for depth S_A(m)
    bool exact = false;            ///< depth_bound is the exact depth
};

template <class K>
SymmetricAlgebraReport symmetric_algebra_report(const LocalAnalysis<K>& a)
{
    for (const auto& g : a.lift.local.generators)
        if (valuation(g) < 2)
            throw InputError("symmetric algebra report: I must lie in the square of the maximal ideal");
    SymmetricAlgebraReport r;
    r.dim = a.nvars;
    r.dim_A = hilbert_series_of_quotient(a.tangent.ideal).dimension();
    r.depth_A = depth_and_pd(a).depth;
    r.cohen_macaulay = r.depth_A == r.dim_A;
    r.hypotheses = a.hypotheses();
    if (r.depth_A == 0) {
        r.depth_bound = 0;
        r.exact = true;
    } else if (r.hypotheses) {
        r.depth_bound = r.depth_A + 1;
        r.exact = r.cohen_macaulay;
    }
    if (r.depth_bound && *r.depth_bound > r.dim_A + 1)
        throw InvariantViolation("symmetric algebra depth bound exceeds dim A + 1");
    return r;
}

template <class K>
SymmetricAlgebraReport symmetric_algebra_report(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    for (const auto& g : I.generators())
        if (valuation(g) < 2)
            throw InputError("symmetric algebra report: I must lie in the square of the maximal ideal");
    return symmetric_algebra_report(analyze_local(I, opts));
}

} // namespace gradlift
