#pragma once

/**
 * @file local_lift.hpp
 * @brief Lifting the minimal graded resolution of I* to a filtered free
 * resolution of I over k[[x]], minimalizing it, and comparing Betti numbers.
 */

#include "tangent_cone.hpp"

#include <vector>

namespace gradlift {

template <class K>
struct LiftedResolution {
    FreeComplex<K> local;  ///< shifts are the special-filtration valuations
    FreeComplex<K> graded; ///< the minimal graded resolution of I* it lifts
    /// certificates[s][c]: coefficients of column c of graded d_{s+1} over the
    /// initial forms of the local kernel standard basis used at that step
    std::vector<std::vector<Vec<K>>> certificates;
    std::vector<std::vector<Vec<K>>> kernel_bases;
    TangentCone<K> tangent;
};

/// Columns of C over the local ring: term order on F_s with its shifts.
inline TermOrder local_module_order(int nvars, const std::vector<int>& shifts)
{
    return TermOrder(OrderKind::NegDegRevLex, nvars).on_module(shifts);
}

inline TermOrder graded_module_order(int nvars, const std::vector<int>& shifts)
{
    return TermOrder(OrderKind::DegRevLex, nvars).on_module(shifts);
}

/**
 * gr of a filtered complex: each entry is replaced by its homogeneous part of
 * degree shift_{s+1}(c) - shift_s(r) (zero when the valuation is higher).
 */
template <class K>
FreeComplex<K> associated_graded(const FreeComplex<K>& L)
{
    FreeComplex<K> G;
    G.nvars = L.nvars;
    G.local = false;
    G.ambient_shifts = L.ambient_shifts;
    G.shifts = L.shifts;
    TermOrder amb = graded_module_order(L.nvars, L.ambient_shifts);
    for (std::size_t g = 0; g < L.generators.size(); ++g)
        G.generators.push_back(resorted(homogeneous_part(L.generators[g], L.shifts[0][g], L.ambient_shifts), amb));
    for (std::size_t s = 0; s < L.maps.size(); ++s) {
        TermOrder o = graded_module_order(L.nvars, L.shifts[s]);
        std::vector<Vec<K>> cols;
        for (std::size_t c = 0; c < L.maps[s].size(); ++c)
            cols.push_back(resorted(homogeneous_part(L.maps[s][c], L.shifts[s + 1][c], L.shifts[s]), o));
        G.maps.push_back(std::move(cols));
    }
    G.minimal = !has_unit_entry(G);
    return G;
}

template <class K>
bool same_complex(const FreeComplex<K>& a, const FreeComplex<K>& b)
{
    return a.shifts == b.shifts && a.generators == b.generators && a.maps == b.maps;
}

/**
 * Filtered free resolution of I whose gr is the minimal graded resolution of I*.
 * Generators are the standard-basis elements whose initial forms minimally
 * generate I*. At each step a local standard basis of the kernel is computed
 * under the shifted local order; each column of the next graded differential
 * is written over the initial forms of that basis and lifted with the same
 * coefficients. Every step is checked: a failure means an engine bug.
 */
template <class K>
LiftedResolution<K> lift_resolution(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    const int n = I.nvars();
    TangentCone<K> tc = tangent_cone(I, opts);
    LiftedResolution<K> out;
    out.tangent = tc;
    out.graded = minimal_graded_resolution(tc.ideal, opts);
    const FreeComplex<K>& G = out.graded;
    if (G.generators != tc.ideal.generators)
        throw InvariantViolation("graded resolution reordered the generators of I*");

    FreeComplex<K>& L = out.local;
    L.nvars = n;
    L.local = true;
    L.ambient_shifts = {0};
    L.generators = tc.lifts;
    L.shifts.push_back(G.shifts[0]);

    std::vector<Vec<K>> cols = tc.lifts;
    std::vector<int> row_shifts = L.ambient_shifts;
    int rank = 1;
    for (std::size_t s = 0; s < G.maps.size(); ++s) {
        const std::vector<int>& src = G.shifts[s];
        TermOrder lo_rows = local_module_order(n, row_shifts);
        TermOrder lo = local_module_order(n, src);
        TermOrder go = graded_module_order(n, src);
        auto aug = augmented_basis(cols, rank, lo_rows, src, opts);
        std::vector<Vec<K>> sigma, in_sigma;
        for (const auto& v : aug.syzygies.generators) {
            if (v.is_zero())
                continue;
            sigma.push_back(resorted(v, lo));
            in_sigma.push_back(resorted(initial_form(v, src), go));
        }
        const std::vector<Vec<K>>& gprev = s == 0 ? G.generators : G.maps[s - 1];
        TermOrder grows = graded_module_order(n, row_shifts);
        for (const auto& h : in_sigma)
            if (!apply_combination(h, gprev, grows).is_zero())
                throw InvariantViolation("initial form of a local syzygy is not a graded syzygy");

        std::vector<Vec<K>> lifted, certs;
        for (std::size_t c = 0; c < G.maps[s].size(); ++c) {
            const Vec<K>& g = G.maps[s][c];
            auto mem = ideal_membership(g, in_sigma, static_cast<int>(src.size()), go, opts);
            if (!mem.member)
                throw InvariantViolation("graded syzygy is not generated by initial forms of local syzygies");
            K u = mem.unit.lead_coefficient().inverse();
            Vec<K> coeffs = scale(mem.coefficients, u);
            Vec<K> f = apply_combination(coeffs, sigma, lo);
            if (valuation(f, src) < G.shifts[s + 1][c] ||
                resorted(homogeneous_part(f, G.shifts[s + 1][c], src), go) != g)
                throw InvariantViolation("lifted syzygy has the wrong initial form");
            lifted.push_back(f);
            certs.push_back(coeffs);
        }
        L.maps.push_back(lifted);
        L.shifts.push_back(G.shifts[s + 1]);
        out.certificates.push_back(std::move(certs));
        out.kernel_bases.push_back(std::move(sigma));
        cols = std::move(lifted);
        row_shifts = src;
        rank = static_cast<int>(src.size());
    }
    L.minimal = !has_unit_entry(L);
    if (!same_complex(associated_graded(L), G))
        throw InvariantViolation("gr of the lifted complex differs from the graded resolution");
    return out;
}

template <class K>
struct LocalMinimal {
    FreeComplex<K> complex;
    std::vector<Cancellation> log;
    std::vector<long> betti; ///< β_i(I), i = 0..pd
};

template <class K>
LocalMinimal<K> minimalize_local(const LiftedResolution<K>& lift, bool reverse = false)
{
    LocalMinimal<K> out;
    out.complex = lift.local;
    out.log = minimalize(out.complex, reverse);
    if (!out.complex.minimal)
        throw InvariantViolation("local complex still has a unit entry after minimalization");
    out.betti = total_ranks(out.complex);
    return out;
}

struct HomogeneousTypeReport {
    bool value = false;
    std::vector<long> local;  ///< β_i(I)
    std::vector<long> graded; ///< β_i(I*)
};

inline HomogeneousTypeReport compare_betti(std::vector<long> local, std::vector<long> graded)
{
    HomogeneousTypeReport r;
    std::size_t len = std::max(local.size(), graded.size());
    local.resize(len, 0);
    graded.resize(len, 0);
    r.value = local == graded;
    r.local = std::move(local);
    r.graded = std::move(graded);
    return r;
}

/// Everything the local verdicts share, computed once.
template <class K>
struct LocalAnalysis {
    TangentCone<K> tangent;
    LiftedResolution<K> lift;
    LocalMinimal<K> minimal;
    int mu = 0;                        ///< μ(I) = β_0 of the minimal resolution
    int mu_tangent = 0;                ///< μ(I*)
    bool componentwise_linear = false; ///< of I*
    int nvars = 0;
    BasisOptions opts;

    bool min_standard_base() const { return mu == mu_tangent; }
    bool hypotheses() const { return min_standard_base() && componentwise_linear; }
};

template <class K>
LocalAnalysis<K> analyze_local(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    LocalAnalysis<K> a;
    a.opts = opts;
    a.nvars = I.nvars();
    a.lift = lift_resolution(I, opts);
    a.tangent = a.lift.tangent;
    a.minimal = minimalize_local(a.lift);
    a.mu = a.minimal.betti.empty() ? 0 : static_cast<int>(a.minimal.betti[0]);
    a.mu_tangent = static_cast<int>(a.tangent.ideal.generators.size());
    a.componentwise_linear = is_componentwise_linear(a.tangent.ideal).value;
    return a;
}

template <class K>
HomogeneousTypeReport homogeneous_type_verdict(const LocalAnalysis<K>& a)
{
    return compare_betti(a.minimal.betti, betti_table(a.lift.graded).totals());
}

template <class K>
HomogeneousTypeReport homogeneous_type_verdict(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    auto lift = lift_resolution(I, opts);
    auto m = minimalize_local(lift);
    return compare_betti(m.betti, betti_table(lift.graded).totals());
}

} // namespace gradlift
