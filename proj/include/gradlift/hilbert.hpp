#pragma once

/**
 * @file hilbert.hpp
 * @brief Hilbert series of quotients by monomial ideals (pivot recursion) and
 * of graded modules through their leading-term modules.
 */

#include "groebner.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <vector>

namespace gradlift {

/// Integer polynomial in t, coefficient k at index k.
using IntPoly = std::vector<mpz_class>;

inline void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

inline IntPoly poly_add(const IntPoly& a, const IntPoly& b, int sign = 1, int shift = 0)
{
    IntPoly r(std::max(a.size(), b.size() + shift));
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i + shift] += sign * b[i];
    trim(r);
    return r;
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty())
        return {};
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

inline mpz_class binomial(long n, long k)
{
    if (k < 0 || n < k)
        return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

namespace detail {

inline std::vector<Monomial> minimize_monomials(std::vector<Monomial> gens)
{
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree())
            return a.degree() < b.degree();
        return a < b;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool red = false;
        for (const auto& h : out)
            if (h.divides(g)) {
                red = true;
                break;
            }
        if (!red)
            out.push_back(g);
    }
    return out;
}

/// Numerator K(t) of the Hilbert series K(t)/(1-t)^n of P/(gens).
inline IntPoly hilbert_numerator_rec(std::vector<Monomial> gens)
{
    gens = minimize_monomials(std::move(gens));
    if (gens.empty())
        return {1};
    // pairwise coprime: product of (1 - t^deg)
    bool coprime = true;
    std::uint32_t seen = 0;
    for (const auto& g : gens) {
        if (seen & g.support()) {
            coprime = false;
            break;
        }
        seen |= g.support();
    }
    if (coprime) {
        IntPoly r{1};
        for (const auto& g : gens) {
            IntPoly f(g.degree() + 1);
            f[0] = 1;
            f[g.degree()] -= 1;
            r = poly_mul(r, f);
        }
        return r;
    }
    // pivot: the most frequent variable, with a median exponent
    int counts[kMaxVars] = {0};
    for (const auto& g : gens)
        for (int i = 0; i < kMaxVars; ++i)
            if (g[i] > 0)
                ++counts[i];
    int var = static_cast<int>(std::max_element(counts, counts + kMaxVars) - counts);
    // exponents from generators that are not pure powers of var, so x^e is not in I
    std::vector<int> exps;
    for (const auto& g : gens)
        if (g[var] > 0 && g.degree() != g[var])
            exps.push_back(g[var]);
    std::sort(exps.begin(), exps.end());
    int e = exps[(exps.size() - 1) / 2];
    Monomial p = Monomial::variable(var, e);
    // K(I) = K(I + (p)) + t^deg(p) K(I : p)
    std::vector<Monomial> plus = gens;
    plus.push_back(p);
    std::vector<Monomial> colon;
    for (const auto& g : gens) {
        Monomial q = g;
        q.set(var, std::max(0, g[var] - e));
        colon.push_back(q);
    }
    return poly_add(hilbert_numerator_rec(std::move(plus)), hilbert_numerator_rec(std::move(colon)), 1, e);
}

} // namespace detail

/**
 * Hilbert series numerator(t) / (1 - t)^nvars of a graded module.
 */
struct HilbertSeries {
    IntPoly numerator;
    int nvars = 0;

    /// HF(d) = sum_k q_k * C(d - k + n - 1, n - 1).
    mpz_class value(long d) const
    {
        mpz_class r = 0;
        for (std::size_t k = 0; k < numerator.size(); ++k) {
            long e = d - static_cast<long>(k);
            if (e < 0)
                break;
            if (nvars == 0) {
                if (e == 0)
                    r += numerator[k];
                continue;
            }
            r += numerator[k] * binomial(e + nvars - 1, nvars - 1);
        }
        return r;
    }

    /// Numerator after cancelling all factors (1 - t); dimension = nvars - cancelled.
    std::pair<IntPoly, int> reduced() const
    {
        IntPoly q = numerator;
        int dim = nvars;
        while (dim > 0 && !q.empty()) {
            mpz_class s = 0;
            for (const auto& c : q)
                s += c;
            if (s != 0)
                break;
            // divide by (1 - t): synthetic division
            IntPoly r(q.size() - 1);
            mpz_class acc = 0;
            for (std::size_t k = 0; k + 1 < q.size(); ++k) {
                acc += q[k];
                r[k] = acc;
            }
            trim(r);
            q = r;
            --dim;
        }
        if (q.empty())
            dim = -1;
        return {q, dim};
    }

    /// Krull dimension (-1 for the zero module).
    int dimension() const { return reduced().second; }

    /// Multiplicity (leading coefficient data): reduced numerator at t = 1.
    mpz_class multiplicity() const
    {
        auto [q, d] = reduced();
        mpz_class s = 0;
        for (const auto& c : q)
            s += c;
        return s;
    }

    friend bool operator==(const HilbertSeries& a, const HilbertSeries& b)
    {
        return a.nvars == b.nvars && a.numerator == b.numerator;
    }
};

/// Hilbert series of P/(gens) for monomial generators in n variables.
inline HilbertSeries hilbert_series_monomial(const std::vector<Monomial>& gens, int nvars)
{
    return HilbertSeries{detail::hilbert_numerator_rec(gens), nvars};
}

/// Hilbert series of F/M where F = ⊕ P(-shifts[c]) and M has the given
/// leading terms (monomial, component).
inline HilbertSeries hilbert_series_quotient(const std::vector<std::pair<Monomial, int>>& leads,
                                             const std::vector<int>& shifts, int nvars)
{
    std::map<int, std::vector<Monomial>> by_comp;
    for (const auto& [m, c] : leads)
        by_comp[c].push_back(m);
    IntPoly total;
    for (int c = 0; c < static_cast<int>(shifts.size()); ++c) {
        IntPoly q = detail::hilbert_numerator_rec(by_comp[c]);
        if (shifts[c] < 0)
            throw InputError("negative shifts are not supported in Hilbert series");
        total = poly_add(total, q, 1, shifts[c]);
    }
    return HilbertSeries{total, nvars};
}

/// Hilbert series of the free module ⊕ P(-shifts[c]).
inline HilbertSeries hilbert_series_free(const std::vector<int>& shifts, int nvars)
{
    return hilbert_series_quotient({}, shifts, nvars);
}

inline HilbertSeries hilbert_difference(const HilbertSeries& a, const HilbertSeries& b)
{
    return HilbertSeries{poly_add(a.numerator, b.numerator, -1), a.nvars};
}

/// Hilbert series of the submodule spanned by a Gröbner basis inside ⊕ P(-shifts[c]).
template <class K>
HilbertSeries hilbert_series_submodule(const std::vector<Vec<K>>& gb, const std::vector<int>& shifts, int nvars)
{
    return hilbert_difference(hilbert_series_free(shifts, nvars),
                              hilbert_series_quotient(leading_terms(gb), shifts, nvars));
}

/// Hilbert series of P/J for a homogeneous ideal J (Gröbner basis computed internally).
template <class K>
HilbertSeries hilbert_series_ideal(const std::vector<Poly<K>>& gens, int nvars)
{
    TermOrder ord(OrderKind::DegRevLex, nvars);
    BasisOptions opts;
    opts.product_criterion = true;
    auto gb = buchberger(gens, ord, opts);
    std::vector<Monomial> lt;
    for (const auto& g : gb)
        lt.push_back(g.lead_monomial());
    return hilbert_series_monomial(lt, nvars);
}

} // namespace gradlift
