#pragma once

/**
 * @file resolution.hpp
 * @brief Minimal graded free resolutions over P = k[x_1..x_n], component
 * submodules N_<d>, componentwise linearity and the related shape checks.
 */

#include "complex.hpp"
#include "hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace gradlift {

/**
 * A graded submodule N of ⊕ P(-ambient_shifts[c]) given by homogeneous
 * generators. An ideal is the rank-1 case with shift 0.
 */
template <class K>
struct GradedModule {
    int nvars = 0;
    std::vector<int> ambient_shifts{0};
    std::vector<Vec<K>> generators;

    int rank() const { return static_cast<int>(ambient_shifts.size()); }
    TermOrder order() const { return TermOrder(OrderKind::DegRevLex, nvars).on_module(ambient_shifts); }
    int degree_of(const Vec<K>& v) const
    {
        return v.terms.front().m.degree() + shift_of(ambient_shifts, v.terms.front().comp);
    }
};

template <class K>
GradedModule<K> graded_ideal(std::vector<Poly<K>> gens, int nvars)
{
    GradedModule<K> N;
    N.nvars = nvars;
    TermOrder o(OrderKind::DegRevLex, nvars);
    for (auto& g : gens)
        if (!g.is_zero())
            N.generators.push_back(resorted(std::move(g), o));
    return N;
}

/// Minimal homogeneous generators (a subset of the given ones), sorted by degree.
template <class K>
std::vector<Vec<K>> minimal_generators(const GradedModule<K>& N, std::vector<Vec<K>>* gb = nullptr,
                                       BasisOptions opts = {})
{
    auto idx = minimal_generator_indices(N.generators, N.order(), gb, opts);
    std::vector<Vec<K>> out;
    for (int i : idx)
        out.push_back(resorted(N.generators[i], N.order()));
    std::stable_sort(out.begin(), out.end(),
                     [&](const Vec<K>& a, const Vec<K>& b) { return N.degree_of(a) < N.degree_of(b); });
    return out;
}

/// Number of minimal homogeneous generators.
template <class K>
int mu_graded(const GradedModule<K>& N)
{
    return static_cast<int>(minimal_generators(N).size());
}

/**
 * Minimal graded free resolution. Each step takes a Gröbner basis of the
 * syzygies of the current minimal generators (shifted degree-revlex order on
 * the source) and extracts minimal generators from it, so every map is
 * minimal as built.
 */
template <class K>
FreeComplex<K> minimal_graded_resolution(const GradedModule<K>& N, BasisOptions opts = {})
{
    FreeComplex<K> C;
    C.nvars = N.nvars;
    C.local = false;
    C.ambient_shifts = N.ambient_shifts;
    C.generators = minimal_generators<K>(N, nullptr, opts);
    std::vector<int> sh;
    for (const auto& g : C.generators)
        sh.push_back(N.degree_of(g));
    C.shifts.push_back(sh);
    TermOrder base(OrderKind::DegRevLex, N.nvars);

    std::vector<Vec<K>> cols = C.generators;
    int rank = N.rank();
    TermOrder ord = base.on_module(N.ambient_shifts);
    while (!cols.empty()) {
        auto syz = syzygy_basis(cols, rank, ord, C.shifts.back(), opts);
        std::vector<Vec<K>> gens;
        for (const auto& g : syz.generators)
            if (!g.is_zero())
                gens.push_back(g);
        if (gens.empty())
            break;
        GradedModule<K> S;
        S.nvars = N.nvars;
        S.ambient_shifts = C.shifts.back();
        S.generators = gens;
        std::vector<Vec<K>> next = minimal_generators<K>(S, nullptr, opts);
        std::vector<int> nsh;
        for (const auto& g : next)
            nsh.push_back(S.degree_of(g));
        rank = static_cast<int>(C.shifts.back().size());
        ord = base.on_module(C.shifts.back());
        C.maps.push_back(next);
        C.shifts.push_back(nsh);
        cols = next;
        if (static_cast<int>(C.shifts.size()) > N.nvars + 2)
            throw InvariantViolation("resolution longer than the number of variables");
    }
    C.minimal = !has_unit_entry(C);
    if (!C.minimal)
        throw InvariantViolation("graded resolution built with a unit entry");
    return C;
}

template <class K>
BettiTable graded_betti(const GradedModule<K>& N, BasisOptions opts = {})
{
    return betti_table(minimal_graded_resolution(N, opts));
}

/// Hilbert series of the module N itself.
template <class K>
HilbertSeries hilbert_series(const GradedModule<K>& N)
{
    std::vector<Vec<K>> gb = compute_basis(N.generators, N.order());
    return hilbert_series_submodule(gb, N.ambient_shifts, N.nvars);
}

/// Hilbert series of the quotient (⊕ P(-a_c)) / N.
template <class K>
HilbertSeries hilbert_series_of_quotient(const GradedModule<K>& N)
{
    std::vector<Vec<K>> gb = compute_basis(N.generators, N.order());
    return hilbert_series_quotient(leading_terms(gb), N.ambient_shifts, N.nvars);
}

/// Hilbert function of P/J for a homogeneous ideal J.
template <class K>
HilbertSeries hilbert_function(const std::vector<Poly<K>>& J, int nvars)
{
    return hilbert_series_of_quotient(graded_ideal(J, nvars));
}

/// Σ_i (-1)^i Σ_j β_{i,j} t^j.
inline IntPoly betti_alternating_sum(const BettiTable& B)
{
    IntPoly p;
    for (const auto& [k, v] : B.entries()) {
        if (k.second < 0)
            throw InputError("negative degree in Betti table");
        IntPoly m(k.second + 1);
        m[k.second] = (k.first % 2 == 0 ? 1 : -1) * v;
        p = poly_add(p, m);
    }
    return p;
}

/**
 * N_<d>: the submodule generated by N_d. Its generators are all x^a g with g
 * a minimal generator of degree <= d and deg(x^a g) = d, reduced to a minimal
 * set (a k-basis of N_d).
 */
template <class K>
GradedModule<K> component_submodule(const GradedModule<K>& N, int d)
{
    GradedModule<K> out;
    out.nvars = N.nvars;
    out.ambient_shifts = N.ambient_shifts;
    TermOrder o = N.order();
    std::vector<Vec<K>> cand;
    for (const auto& g : minimal_generators(N)) {
        int e = d - N.degree_of(g);
        if (e < 0)
            continue;
        for (const auto& m : monomials_of_degree(N.nvars, e))
            cand.push_back(mul_term(g, m, g.lead_coefficient() * g.lead_coefficient().inverse()));
    }
    GradedModule<K> tmp = out;
    tmp.generators = cand;
    if (!cand.empty())
        out.generators = minimal_generators(tmp);
    return out;
}

/// Submodule generated by the minimal generators of degree <= d.
template <class K>
GradedModule<K> generated_up_to(const GradedModule<K>& N, int d)
{
    GradedModule<K> out;
    out.nvars = N.nvars;
    out.ambient_shifts = N.ambient_shifts;
    for (const auto& g : minimal_generators(N))
        if (N.degree_of(g) <= d)
            out.generators.push_back(g);
    return out;
}

struct LinearityDegreeReport {
    int degree = 0;
    bool linear = false;
    int regularity = 0;
};

struct ComponentwiseLinearity {
    bool value = false;
    std::vector<LinearityDegreeReport> degrees;
};

enum class ComponentwiseMethod {
    /// reg(N_{<=d}) <= d, which is equivalent to N_<d> having a d-linear resolution
    Regularity,
    /// resolve N_<d> itself and inspect β_{i,j}
    Direct,
};

/**
 * Componentwise linearity: N_<d> has a d-linear resolution for each generator
 * degree d (and the initial degree). With strict = true every d from the
 * initial degree to the top generator degree is checked.
 */
template <class K>
ComponentwiseLinearity is_componentwise_linear(const GradedModule<K>& N, bool strict = false,
                                               ComponentwiseMethod method = ComponentwiseMethod::Regularity)
{
    ComponentwiseLinearity out;
    out.value = true;
    auto gens = minimal_generators(N);
    if (gens.empty())
        return out;
    std::set<int> degs;
    for (const auto& g : gens)
        degs.insert(N.degree_of(g));
    if (strict)
        for (int d = *degs.begin(); d <= *degs.rbegin(); ++d)
            degs.insert(d);
    for (int d : degs) {
        LinearityDegreeReport r;
        r.degree = d;
        if (method == ComponentwiseMethod::Direct) {
            BettiTable b = graded_betti(component_submodule(N, d));
            r.linear = true;
            for (const auto& [k, v] : b.entries())
                if (v != 0 && k.second != d + k.first)
                    r.linear = false;
            r.regularity = b.regularity();
        } else {
            BettiTable b = graded_betti(generated_up_to(N, d));
            r.regularity = b.regularity();
            r.linear = r.regularity <= d;
        }
        out.value = out.value && r.linear;
        out.degrees.push_back(r);
    }
    return out;
}

/// Every nonzero β_{s,j} has j - s among the generator degrees.
inline bool tor_concentration_check(const BettiTable& B)
{
    auto gd = B.generator_degrees();
    std::set<int> g(gd.begin(), gd.end());
    for (const auto& [k, v] : B.entries())
        if (v != 0 && !g.count(k.second - k.first))
            return false;
    return true;
}

struct BlockShapeReport {
    bool passed = true;
    std::vector<std::string> failures;
};

/**
 * Block shape of a minimal resolution of a componentwise linear module. Bases
 * are stable-sorted by shift. For d_s, rows of F_{s-1} fall in band
 * shift - (s - 1) and columns of F_s in band shift - s: diagonal blocks must
 * be linear or zero, blocks above the diagonal of degree >= 2, blocks below
 * zero, and every column must have a nonzero entry in its diagonal block.
 */
template <class K>
BlockShapeReport block_shape_check(const FreeComplex<K>& C)
{
    BlockShapeReport rep;
    auto fail = [&](std::string msg) {
        rep.passed = false;
        rep.failures.push_back(std::move(msg));
    };
    if (!C.minimal)
        fail("complex is not minimal");
    for (std::size_t s0 = 0; s0 < C.maps.size(); ++s0) {
        const int s = static_cast<int>(s0) + 1;
        const auto& rows = C.shifts[s0];
        const auto& cols = C.shifts[s0 + 1];
        std::vector<int> rorder(rows.size()), corder(cols.size());
        std::iota(rorder.begin(), rorder.end(), 0);
        std::iota(corder.begin(), corder.end(), 0);
        std::stable_sort(rorder.begin(), rorder.end(), [&](int a, int b) { return rows[a] < rows[b]; });
        std::stable_sort(corder.begin(), corder.end(), [&](int a, int b) { return cols[a] < cols[b]; });
        for (int c : corder) {
            int cband = cols[c] - s;
            bool diag_nonzero = false;
            for (int r : rorder) {
                int rband = rows[r] - (s - 1);
                Poly<K> e = C.entry(static_cast<int>(s0), r, c);
                if (e.is_zero())
                    continue;
                int deg = cols[c] - rows[r];
                bool homog = is_homogeneous(e) && e.lead_monomial().degree() == deg;
                if (!homog)
                    fail("d_" + std::to_string(s) + " entry is not of the expected degree");
                if (rband == cband) {
                    if (deg != 1)
                        fail("d_" + std::to_string(s) + " diagonal block entry is not linear");
                    diag_nonzero = true;
                } else if (rband < cband) {
                    if (deg < 2)
                        fail("d_" + std::to_string(s) + " upper block entry has degree < 2");
                } else {
                    fail("d_" + std::to_string(s) + " block below the diagonal is nonzero");
                }
            }
            if (!diag_nonzero)
                fail("d_" + std::to_string(s) + " column " + std::to_string(c) + " has a zero diagonal block");
        }
    }
    return rep;
}

/// Regularity of P/J from the resolution of J (reg J - 1, or 0 for J = 0).
template <class K>
int regularity_of_quotient(const GradedModule<K>& J)
{
    if (J.generators.empty())
        return 0;
    return graded_betti(J).regularity() - 1;
}

} // namespace gradlift
