#pragma once

/**
 * @file syzygy.hpp
 * @brief Syzygies, certificates, membership, colon ideals and elimination.
 *
 * Everything here runs the basis engine on augmented vectors (g_i, e_i): the
 * original components sit on a higher level than the tracking components
 * e_1..e_s, so a basis element with a nonzero original part carries its own
 * certificate and the elements with zero original part form a basis of the
 * syzygy module.
 */

#include "groebner.hpp"

#include <optional>
#include <vector>

namespace gradlift {

/// A basis together with, for each element, its expression in the input generators.
template <class K>
struct BasisResult {
    std::vector<Vec<K>> inputs;
    std::vector<Vec<K>> basis;
    std::vector<Vec<K>> certificates; ///< certificates[k] lives in components 0..inputs.size()-1
    TermOrder order;
    bool reduced = false;
};

/// Generators of Syz(g_1..g_s) inside the free module with basis e_i of shift shifts[i].
template <class K>
struct SyzygyModule {
    std::vector<int> shifts;
    std::vector<Vec<K>> generators;
    TermOrder order; ///< the order the generators form a basis for
};

template <class K>
struct AugmentedBasis {
    int rank = 0;
    std::vector<int> gen_shifts;
    BasisResult<K> result;
    SyzygyModule<K> syzygies;
};

namespace detail {

/// Order on the augmented module: original components (levels +1 over the rest),
/// then the tracking components with the given shifts.
inline TermOrder augmented_order(const TermOrder& ord, int rank, const std::vector<int>& gen_shifts,
                                 const std::vector<int>& extra_levels = {})
{
    std::vector<int> shifts(rank + gen_shifts.size(), 0);
    std::vector<int> levels(rank + gen_shifts.size(), 0);
    int top_level = 1;
    for (int l : extra_levels)
        top_level = std::max(top_level, l + 1);
    for (int c = 0; c < rank; ++c) {
        shifts[c] = ord.shift(c);
        levels[c] = top_level;
    }
    for (std::size_t i = 0; i < gen_shifts.size(); ++i) {
        shifts[rank + i] = gen_shifts[i];
        levels[rank + i] = i < extra_levels.size() ? extra_levels[i] : 0;
    }
    return ord.on_module(std::move(shifts), std::move(levels));
}

template <class K>
std::vector<int> default_gen_shifts(const std::vector<Vec<K>>& gens, const TermOrder& ord)
{
    std::vector<int> out;
    for (const auto& g : gens) {
        if (g.is_zero()) {
            out.push_back(0);
            continue;
        }
        Vec<K> s = resorted(g, ord);
        out.push_back(ord.term_degree(s.lead_monomial(), s.lead_component()));
    }
    return out;
}

} // namespace detail

/**
 * Basis of the span of gens (module elements of the given rank) with
 * certificates, plus a basis of the syzygy module. gen_shifts defaults to the
 * term degree of each generator's leading term (its valuation for a local order).
 */
template <class K>
AugmentedBasis<K> augmented_basis(const std::vector<Vec<K>>& gens, int rank, const TermOrder& ord,
                                  std::optional<std::vector<int>> gen_shifts = std::nullopt,
                                  BasisOptions opts = {})
{
    AugmentedBasis<K> out;
    out.rank = rank;
    out.gen_shifts = gen_shifts ? *gen_shifts : detail::default_gen_shifts(gens, ord);
    const int s = static_cast<int>(gens.size());
    TermOrder aug = detail::augmented_order(ord, rank, out.gen_shifts);
    K one;
    bool have_one = false;
    std::vector<Vec<K>> aug_gens;
    for (int i = 0; i < s; ++i) {
        Vec<K> v = gens[i];
        if (!have_one) {
            for (const auto& t : v.terms) {
                one = t.c * t.c.inverse();
                have_one = true;
                break;
            }
        }
        aug_gens.push_back(v);
    }
    if (!have_one) {
        // no coefficient to build e_i from; callers split off zero inputs themselves
        if (s > 0)
            throw InputError("syzygies of zero vectors only: no field element available");
        out.syzygies.order = ord.on_module(out.gen_shifts);
        out.result.order = ord;
        return out;
    }
    for (int i = 0; i < s; ++i) {
        aug_gens[i].terms.push_back(Term<K>{Monomial(), rank + i, one});
        normalize_terms(aug_gens[i], aug);
    }
    std::vector<Vec<K>> B = compute_basis(aug_gens, aug, opts);

    std::vector<int> top_map(rank + s, -1), low_map(rank + s, -1);
    for (int c = 0; c < rank; ++c)
        top_map[c] = c;
    for (int i = 0; i < s; ++i)
        low_map[rank + i] = i;
    TermOrder syz_ord = ord.on_module(out.gen_shifts);

    out.result.inputs = gens;
    out.result.order = ord;
    out.result.reduced = opts.reduce && !ord.is_local();
    out.syzygies.shifts = out.gen_shifts;
    out.syzygies.order = syz_ord;
    for (const auto& b : B) {
        if (b.lead_component() < rank) {
            out.result.basis.push_back(remap_components(b, top_map, ord));
            out.result.certificates.push_back(remap_components(b, low_map, syz_ord));
        } else {
            out.syzygies.generators.push_back(remap_components(b, low_map, syz_ord));
        }
    }
    return out;
}

template <class K>
BasisResult<K> basis_with_certificates(const std::vector<Vec<K>>& gens, int rank, const TermOrder& ord,
                                       BasisOptions opts = {})
{
    return augmented_basis(gens, rank, ord, std::nullopt, opts).result;
}

template <class K>
SyzygyModule<K> syzygy_basis(const std::vector<Vec<K>>& gens, int rank, const TermOrder& ord,
                             std::optional<std::vector<int>> gen_shifts = std::nullopt, BasisOptions opts = {})
{
    return augmented_basis(gens, rank, ord, std::move(gen_shifts), opts).syzygies;
}

/// Apply a coefficient vector (components 0..s-1) to generators: sum_i c_i g_i.
template <class K>
Vec<K> apply_combination(const Vec<K>& coeffs, const std::vector<Vec<K>>& gens, const TermOrder& ord)
{
    std::vector<Term<K>> acc;
    for (const auto& t : coeffs.terms) {
        const auto& g = gens.at(t.comp);
        for (const auto& u : g.terms)
            acc.push_back(Term<K>{t.m * u.m, u.comp, t.c * u.c});
    }
    Vec<K> r;
    r.terms = std::move(acc);
    normalize_terms(r, ord);
    return r;
}

template <class K>
struct Membership {
    bool member = false;
    /// unit * f = sum_i coefficients_i * g_i. For a global order the unit is a
    /// nonzero constant; for a local order it has a nonzero constant term.
    Vec<K> coefficients;
    Poly<K> unit;
};

/**
 * Membership of f in the span of gens (local span for a local order), with a
 * certificate. f gets its own tracking component on a level between the
 * original components and the other tracking components; f is a member iff
 * the colon (span : f) contains a unit.
 */
template <class K>
Membership<K> ideal_membership(const Vec<K>& f, const std::vector<Vec<K>>& gens, int rank, const TermOrder& ord,
                               BasisOptions opts = {})
{
    Membership<K> out;
    if (f.is_zero()) {
        out.member = true;
        return out;
    }
    const int s = static_cast<int>(gens.size());
    K one = f.terms.front().c * f.terms.front().c.inverse();
    std::vector<Vec<K>> all = gens;
    all.push_back(f);
    std::vector<int> shifts = detail::default_gen_shifts(all, ord);
    std::vector<int> levels(s + 1, 0);
    levels[s] = 1;
    TermOrder aug = detail::augmented_order(ord, rank, shifts, levels);
    std::vector<Vec<K>> aug_gens;
    for (int i = 0; i <= s; ++i) {
        Vec<K> v = all[i];
        v.terms.push_back(Term<K>{Monomial(), rank + i, one});
        normalize_terms(v, aug);
        aug_gens.push_back(std::move(v));
    }
    std::vector<Vec<K>> B = compute_basis(aug_gens, aug, opts);
    for (const auto& b : B) {
        if (b.lead_component() != rank + s || !b.lead_monomial().is_one())
            continue;
        // b = (0, a_1..a_s, u) with sum a_i g_i + u f = 0
        std::vector<int> low(rank + s + 1, -1);
        for (int i = 0; i < s; ++i)
            low[rank + i] = i;
        TermOrder syz = ord.on_module(std::vector<int>(shifts.begin(), shifts.begin() + s));
        out.member = true;
        out.coefficients = negate(remap_components(b, low, syz));
        std::vector<int> umap(rank + s + 1, -1);
        umap[rank + s] = 0;
        TermOrder base = TermOrder(ord.kind(), ord.nvars(), ord.weights());
        if (ord.kind() == OrderKind::Elimination)
            base = TermOrder::elimination(ord.nvars(), ord.eliminated(), ord.weights());
        out.unit = remap_components(b, umap, base);
        return out;
    }
    return out;
}

/// J : f for an ideal J (rank 1) and a polynomial f, under a global order.
template <class K>
std::vector<Poly<K>> colon_ideal(const std::vector<Poly<K>>& J, const Poly<K>& f, const TermOrder& ord,
                                 BasisOptions opts = {})
{
    if (ord.is_local())
        throw InputError("colon_ideal needs a global order");
    if (f.is_zero())
        return {Poly<K>{}};
    const int s = static_cast<int>(J.size());
    K one = f.terms.front().c * f.terms.front().c.inverse();
    std::vector<Vec<K>> all;
    all.push_back(f);
    for (const auto& j : J)
        all.push_back(j);
    std::vector<int> shifts = detail::default_gen_shifts(all, ord);
    std::vector<int> levels(s + 1, 0);
    levels[0] = 1;
    TermOrder aug = detail::augmented_order(ord, 1, shifts, levels);
    std::vector<Vec<K>> aug_gens;
    for (int i = 0; i <= s; ++i) {
        Vec<K> v = all[i];
        v.terms.push_back(Term<K>{Monomial(), 1 + i, one});
        normalize_terms(v, aug);
        aug_gens.push_back(std::move(v));
    }
    std::vector<Vec<K>> B = compute_basis(aug_gens, aug, opts);
    std::vector<Poly<K>> gens;
    std::vector<int> map(s + 2, -1);
    map[1] = 0;
    for (const auto& b : B)
        if (b.lead_component() == 1)
            gens.push_back(remap_components(b, map, TermOrder(ord.kind(), ord.nvars(), ord.weights())));
    return buchberger(gens, ord, opts);
}

/// J ∩ k[variables outside `eliminated`], as a Gröbner basis for the
/// elimination order (the kept block ordered by weighted degrevlex).
template <class K>
std::vector<Poly<K>> eliminate(const std::vector<Poly<K>>& J, std::uint32_t eliminated, int nvars,
                               std::vector<int> weights = {}, BasisOptions opts = {})
{
    TermOrder ord = TermOrder::elimination(nvars, eliminated, std::move(weights));
    opts.product_criterion = true;
    std::vector<Poly<K>> G = buchberger(J, ord, opts);
    std::vector<Poly<K>> out;
    for (const auto& g : G) {
        bool free = true;
        for (const auto& t : g.terms)
            if (t.m.support() & eliminated) {
                free = false;
                break;
            }
        if (free)
            out.push_back(g);
    }
    return out;
}

} // namespace gradlift
