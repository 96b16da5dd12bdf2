#pragma once

/**
 * @file linearity.hpp
 * @brief Linear part of a minimal resolution, homology of graded complexes
 * via Hilbert series, linearity defect and the Koszul verdict.
 */

#include "local_lift.hpp"

#include <vector>

namespace gradlift {

/**
 * lin(C): every entry replaced by its degree-one terms (the initial form when
 * the valuation is 1, zero otherwise). F_s gets shift s, so the result is a
 * linear graded complex over P. Entries and augmentation of F_0 are dropped.
 */
template <class K>
FreeComplex<K> linear_part(const FreeComplex<K>& C)
{
    if (!C.minimal || has_unit_entry(C))
        throw InputError("linear part needs a minimal complex");
    FreeComplex<K> L;
    L.nvars = C.nvars;
    L.local = false;
    L.minimal = true;
    for (std::size_t s = 0; s < C.shifts.size(); ++s)
        L.shifts.push_back(std::vector<int>(C.shifts[s].size(), static_cast<int>(s)));
    for (std::size_t s = 0; s < C.maps.size(); ++s) {
        TermOrder o = TermOrder(OrderKind::DegRevLex, C.nvars).on_module(L.shifts[s]);
        std::vector<Vec<K>> cols;
        for (const auto& col : C.maps[s]) {
            Vec<K> v;
            for (const auto& t : col.terms)
                if (t.m.degree() == 1)
                    v.terms.push_back(t);
            normalize_terms(v, o);
            cols.push_back(std::move(v));
        }
        L.maps.push_back(std::move(cols));
    }
    if (!composition_is_zero(L))
        throw InvariantViolation("linear part is not a complex");
    return L;
}

/**
 * Hilbert series of H_i(C) = ker d_i / im d_{i+1} for a graded complex with
 * composition zero (i = 0 uses ker d_0 = F_0). Exact: zero iff the numerator
 * is empty.
 */
template <class K>
HilbertSeries complex_homology(const FreeComplex<K>& C, int i, BasisOptions opts = {})
{
    const int n = C.nvars;
    if (i < 0 || i >= static_cast<int>(C.shifts.size()))
        return HilbertSeries{{}, n};
    const std::vector<int>& Fi = C.shifts[i];
    if (Fi.empty())
        return HilbertSeries{{}, n};
    for (int a : Fi)
        if (a < 0)
            throw InputError("complex_homology needs non-negative shifts");
    TermOrder oi = TermOrder(OrderKind::DegRevLex, n).on_module(Fi);
    HilbertSeries ker;
    std::vector<int> nonzero;
    if (i > 0)
        for (std::size_t c = 0; c < C.maps[i - 1].size(); ++c)
            if (!C.maps[i - 1][c].is_zero())
                nonzero.push_back(static_cast<int>(c));
    if (nonzero.empty()) {
        ker = hilbert_series_free(Fi, n);
    } else {
        // zero columns are free summands of the kernel; the rest go through syzygies
        TermOrder prev = TermOrder(OrderKind::DegRevLex, n).on_module(C.shifts[i - 1]);
        std::vector<Vec<K>> cols;
        std::vector<int> sub_shifts, back(nonzero.size());
        for (std::size_t k = 0; k < nonzero.size(); ++k) {
            cols.push_back(C.maps[i - 1][nonzero[k]]);
            sub_shifts.push_back(Fi[nonzero[k]]);
            back[k] = nonzero[k];
        }
        auto syz = syzygy_basis(cols, static_cast<int>(C.shifts[i - 1].size()), prev, sub_shifts, opts);
        std::vector<Vec<K>> gens;
        for (const auto& g : syz.generators)
            if (!g.is_zero())
                gens.push_back(remap_components(g, back, oi));
        const K one = cols.front().lead_coefficient() * cols.front().lead_coefficient().inverse();
        for (std::size_t c = 0; c < Fi.size(); ++c)
            if (C.maps[i - 1][c].is_zero())
                gens.push_back(monomial_poly(Monomial(), one, static_cast<int>(c)));
        auto gb = compute_basis(gens, oi, opts);
        ker = hilbert_series_submodule(gb, Fi, n);
    }
    HilbertSeries im{{}, n};
    if (i < static_cast<int>(C.maps.size())) {
        std::vector<Vec<K>> cols;
        for (const auto& c : C.maps[i])
            if (!c.is_zero())
                cols.push_back(resorted(c, oi));
        if (!cols.empty())
            im = hilbert_series_submodule(compute_basis(cols, oi, opts), Fi, n);
    }
    return hilbert_difference(ker, im);
}

/// dim_k H_i(C)_j for j = 0..upto.
template <class K>
std::vector<mpz_class> homology_dimensions(const FreeComplex<K>& C, int i, int upto)
{
    HilbertSeries h = complex_homology(C, i);
    std::vector<mpz_class> out;
    for (int j = 0; j <= upto; ++j)
        out.push_back(h.value(j));
    return out;
}

struct LinearityReport {
    int ld = 0;
    std::vector<bool> homology_zero; ///< index i: H_i(lin) = 0 (i >= 1)
    std::vector<HilbertSeries> homology;
};

/// ld from a minimal complex: the largest i >= 1 with H_i(lin) != 0, or 0.
template <class K>
LinearityReport linearity_report(const FreeComplex<K>& minimal, BasisOptions opts = {})
{
    FreeComplex<K> L = linear_part(minimal);
    LinearityReport r;
    const int h = static_cast<int>(L.shifts.size()) - 1;
    r.homology_zero.push_back(true);
    r.homology.push_back(HilbertSeries{{}, L.nvars});
    for (int i = 1; i <= h; ++i) {
        HilbertSeries hs = complex_homology(L, i, opts);
        bool zero = hs.numerator.empty();
        r.homology_zero.push_back(zero);
        r.homology.push_back(hs);
        if (!zero)
            r.ld = i;
    }
    return r;
}

template <class K>
int linearity_defect(const GradedModule<K>& N, BasisOptions opts = {})
{
    return linearity_report(minimal_graded_resolution(N, opts), opts).ld;
}

/// ld of I over the local ring, from the minimalized lifted resolution.
template <class K>
int linearity_defect(const LocalAnalysis<K>& a)
{
    return linearity_report(a.minimal.complex, a.opts).ld;
}

template <class K>
int linearity_defect(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    return linearity_defect(analyze_local(I, opts));
}

template <class K>
bool koszul_verdict(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    return linearity_defect(I, opts) == 0;
}

struct KoszulImplicationReport {
    bool min_standard_base = false;
    bool componentwise_linear = false;
    bool homogeneous_type = false;
    bool koszul = false;
    /// antecedent false, or both conclusions true
    bool holds = false;
};

/**
 * If I is minimally generated by a standard base and I* is componentwise
 * linear, then I is of homogeneous type and Koszul. Reports whether the
 * implication held here.
 */
template <class K>
KoszulImplicationReport koszul_implication_check(const LocalAnalysis<K>& a)
{
    KoszulImplicationReport r;
    r.min_standard_base = a.min_standard_base();
    r.componentwise_linear = a.componentwise_linear;
    r.homogeneous_type = homogeneous_type_verdict(a).value;
    r.koszul = linearity_defect(a) == 0;
    r.holds = !(r.min_standard_base && r.componentwise_linear) || (r.homogeneous_type && r.koszul);
    return r;
}

template <class K>
KoszulImplicationReport koszul_implication_check(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    return koszul_implication_check(analyze_local(I, opts));
}

} // namespace gradlift
