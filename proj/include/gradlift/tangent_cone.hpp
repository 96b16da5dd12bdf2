#pragma once

/**
 * @file tangent_cone.hpp
 * @brief Ideals of the local ring k[[x]] with their filtrations, the tangent
 * cone ideal I*, local and graded minimal generator counts, and defining
 * ideals of monomial curves.
 */

#include "resolution.hpp"

#include <numeric>
#include <string>
#include <vector>

namespace gradlift {

enum class FiltrationKind {
    Adic,         ///< {n^p I}
    Intersection, ///< {n^p ∩ I}
};

/// An ideal of k[[x_1..x_n]] given by polynomial generators, with a filtration kind.
template <class K>
class FilteredIdeal {
public:
    FilteredIdeal(int nvars, std::vector<Poly<K>> gens, FiltrationKind kind = FiltrationKind::Intersection)
        : nvars_(nvars), kind_(kind)
    {
        TermOrder o = order();
        for (auto& g : gens) {
            if (g.is_zero())
                throw InputError("filtered ideal: zero generator");
            if (valuation(g) < 1)
                throw InputError("filtered ideal: generator is not in the maximal ideal");
            gens_.push_back(resorted(std::move(g), o));
        }
        if (gens_.empty())
            throw InputError("filtered ideal: no generators");
    }

    int nvars() const { return nvars_; }
    FiltrationKind kind() const { return kind_; }
    const std::vector<Poly<K>>& generators() const { return gens_; }
    TermOrder order() const { return TermOrder(OrderKind::NegDegRevLex, nvars_); }

private:
    int nvars_;
    FiltrationKind kind_;
    std::vector<Poly<K>> gens_;
};

/// I* with the data it came from.
template <class K>
struct TangentCone {
    std::vector<Poly<K>> standard_basis; ///< local standard basis of I
    std::vector<Poly<K>> initial_forms;  ///< initial forms of the standard basis (a Gröbner basis of I*)
    GradedModule<K> ideal;               ///< I* by minimal homogeneous generators
    std::vector<Poly<K>> lifts;          ///< lifts[i] in I with initial form ideal.generators[i]
};

template <class K>
TangentCone<K> tangent_cone(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    if (I.kind() != FiltrationKind::Intersection)
        throw InputError("tangent cone needs the intersection filtration");
    TangentCone<K> out;
    opts.product_criterion = true; // rank 1, so coprime leads can be skipped
    out.standard_basis = standard_basis(I.generators(), I.order(), opts);
    TermOrder g(OrderKind::DegRevLex, I.nvars());
    for (const auto& f : out.standard_basis)
        out.initial_forms.push_back(resorted(initial_form(f), g));
    out.ideal.nvars = I.nvars();
    auto idx = minimal_generator_indices(out.initial_forms, g, static_cast<std::vector<Vec<K>>*>(nullptr), opts);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        return out.initial_forms[a].lead_monomial().degree() < out.initial_forms[b].lead_monomial().degree();
    });
    for (int i : idx) {
        out.ideal.generators.push_back(out.initial_forms[i]);
        out.lifts.push_back(out.standard_basis[i]);
    }
    return out;
}

template <class K>
GradedModule<K> tangent_cone_ideal(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    return tangent_cone(I, opts).ideal;
}

namespace detail {

inline bool leading_ideal_contains(const std::vector<Monomial>& a, const std::vector<Monomial>& b)
{
    for (const auto& m : b) {
        bool hit = false;
        for (const auto& l : a)
            if (l.divides(m)) {
                hit = true;
                break;
            }
        if (!hit)
            return false;
    }
    return true;
}

template <class K>
std::vector<Monomial> local_leading_ideal(const std::vector<Poly<K>>& gens, const TermOrder& ord, BasisOptions opts)
{
    opts.product_criterion = true;
    std::vector<Monomial> out;
    for (const auto& g : standard_basis(gens, ord, opts))
        out.push_back(g.lead_monomial());
    return out;
}

} // namespace detail

/// f in the local ideal (gens): adding f does not change the leading ideal.
template <class K>
bool local_ideal_member(const Poly<K>& f, const std::vector<Poly<K>>& gens, const TermOrder& ord,
                        BasisOptions opts = {})
{
    if (f.is_zero())
        return true;
    if (gens.empty())
        return false;
    auto a = detail::local_leading_ideal(gens, ord, opts);
    std::vector<Poly<K>> more = gens;
    more.push_back(f);
    auto b = detail::local_leading_ideal(more, ord, opts);
    return detail::leading_ideal_contains(a, b);
}

/// Indices of a minimal generating subset of I (greedy Nakayama pruning, last to first).
template <class K>
std::vector<int> minimal_local_generator_indices(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    const auto& G = I.generators();
    std::vector<int> keep(G.size());
    for (std::size_t i = 0; i < G.size(); ++i)
        keep[i] = static_cast<int>(i);
    for (int i = static_cast<int>(G.size()) - 1; i >= 0 && keep.size() > 1; --i) {
        std::vector<Vec<K>> rest;
        for (int j : keep)
            if (j != i)
                rest.push_back(G[j]);
        if (local_ideal_member(G[i], rest, I.order(), opts))
            keep.erase(std::find(keep.begin(), keep.end(), i));
    }
    return keep;
}

template <class K>
int mu_local(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    return static_cast<int>(minimal_local_generator_indices(I, opts).size());
}

/// The ideal restricted to a minimal generating set.
template <class K>
FilteredIdeal<K> minimally_generated(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    std::vector<Poly<K>> g;
    for (int i : minimal_local_generator_indices(I, opts))
        g.push_back(I.generators()[i]);
    return FilteredIdeal<K>(I.nvars(), g, I.kind());
}

template <class K>
bool is_min_standard_base(const FilteredIdeal<K>& I, BasisOptions opts = {})
{
    return mu_local(I, opts) == static_cast<int>(tangent_cone_ideal(I, opts).generators.size());
}

/// Same ideal: each generator list lies in the ideal of the other (under `ord`).
template <class K>
bool same_ideal(const std::vector<Poly<K>>& a, const std::vector<Poly<K>>& b, const TermOrder& ord)
{
    if (ord.is_local()) {
        // locally: J and J + J' share the leading ideal iff J' lies in J
        std::vector<Poly<K>> both = a;
        both.insert(both.end(), b.begin(), b.end());
        auto la = detail::local_leading_ideal(a, ord, {});
        auto lb = detail::local_leading_ideal(b, ord, {});
        auto lab = detail::local_leading_ideal(both, ord, {});
        return detail::leading_ideal_contains(la, lab) && detail::leading_ideal_contains(lb, lab);
    }
    auto ga = compute_basis(a, ord);
    auto gb = compute_basis(b, ord);
    for (const auto& f : b)
        if (!reduces_to_zero(f, ga, ord))
            return false;
    for (const auto& f : a)
        if (!reduces_to_zero(f, gb, ord))
            return false;
    return true;
}

/**
 * Kernel of k[x_1..x_n] -> k[t], x_i -> t^{a_i}: eliminate t from (x_i - t^{a_i})
 * under weights (a_1..a_n, 1), then keep a minimal weighted-homogeneous
 * generating set. The result is an ideal of k[[x]].
 */
template <class F>
FilteredIdeal<typename F::value_type> semigroup_defining_ideal(const std::vector<int>& a, const F& field,
                                                               BasisOptions opts = {})
{
    using K = typename F::value_type;
    const int n = static_cast<int>(a.size());
    if (n < 1 || n + 1 > kMaxVars)
        throw InputError("semigroup: need between 1 and " + std::to_string(kMaxVars - 1) + " exponents");
    long g = 0;
    for (int e : a) {
        if (e <= 0)
            throw InputError("semigroup: exponents must be positive");
        g = std::gcd(g, static_cast<long>(e));
    }
    if (g != 1)
        throw InputError("semigroup: exponents must be coprime overall");
    const K one = field.from_int(1);
    std::vector<int> w = a;
    w.push_back(1);
    TermOrder ew = TermOrder::elimination(n + 1, 1u << n, w);
    std::vector<Poly<K>> J;
    for (int i = 0; i < n; ++i) {
        Poly<K> p;
        p.terms.push_back(Term<K>{Monomial::variable(i), 0, one});
        p.terms.push_back(Term<K>{Monomial::variable(n, a[i]), 0, -one});
        normalize_terms(p, ew);
        J.push_back(p);
    }
    std::vector<Poly<K>> E = eliminate(J, 1u << n, n + 1, w, opts);
    TermOrder wo(OrderKind::DegRevLex, n, a);
    for (auto& e : E)
        e = resorted(e, wo);
    std::vector<Poly<K>> gens;
    if (n == 1) {
        gens = E; // a = (1): zero ideal is rejected by FilteredIdeal
    } else {
        for (int i : minimal_generator_indices(E, wo, static_cast<std::vector<Vec<K>>*>(nullptr), opts))
            gens.push_back(E[i]);
    }
    return FilteredIdeal<K>(n, gens, FiltrationKind::Intersection);
}

} // namespace gradlift
