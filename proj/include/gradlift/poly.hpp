#pragma once

/**
 * @file poly.hpp
 * @brief Sparse module elements over k[x_1..x_n]; a polynomial is a module
 * element living in component 0.
 *
 * Terms are kept strictly descending in whichever TermOrder was used to build
 * the element. The order is not stored in the element; every operation that
 * creates or merges terms takes it explicitly.
 */

#include "monomial.hpp"
#include "order.hpp"
#include "scalar.hpp"

#include <algorithm>
#include <climits>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gradlift {

template <class K>
struct Term {
    Monomial m;
    int comp = 0;
    K c;
};

template <class K>
class Vec {
public:
    using coefficient_type = K;
    std::vector<Term<K>> terms;

    bool is_zero() const { return terms.empty(); }
    std::size_t size() const { return terms.size(); }
    const Term<K>& lead() const { return terms.front(); }
    const Monomial& lead_monomial() const { return terms.front().m; }
    int lead_component() const { return terms.front().comp; }
    const K& lead_coefficient() const { return terms.front().c; }

    int max_component() const
    {
        int c = -1;
        for (const auto& t : terms)
            c = std::max(c, t.comp);
        return c;
    }

    friend bool operator==(const Vec& a, const Vec& b)
    {
        if (a.terms.size() != b.terms.size())
            return false;
        for (std::size_t i = 0; i < a.terms.size(); ++i) {
            const auto& x = a.terms[i];
            const auto& y = b.terms[i];
            if (x.comp != y.comp || x.m != y.m || x.c != y.c)
                return false;
        }
        return true;
    }
    friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
};

template <class K>
using Poly = Vec<K>;

/// Sort into descending order, merge equal terms, drop zeros.
template <class K>
void normalize_terms(Vec<K>& v, const TermOrder& ord)
{
    auto& t = v.terms;
    std::sort(t.begin(), t.end(), [&](const Term<K>& a, const Term<K>& b) {
        return ord.compare(a.m, a.comp, b.m, b.comp) > 0;
    });
    std::size_t out = 0;
    for (std::size_t i = 0; i < t.size();) {
        std::size_t j = i + 1;
        K c = t[i].c;
        while (j < t.size() && t[j].comp == t[i].comp && t[j].m == t[i].m) {
            c += t[j].c;
            ++j;
        }
        if (!c.is_zero()) {
            t[out] = Term<K>{t[i].m, t[i].comp, c};
            ++out;
        }
        i = j;
    }
    t.resize(out);
}

template <class K>
Vec<K> resorted(Vec<K> v, const TermOrder& ord)
{
    normalize_terms(v, ord);
    return v;
}

/// a - c * m * b, where m is a monomial (component unchanged).
template <class K>
Vec<K> sub_mul(const Vec<K>& a, const K& c, const Monomial& m, const Vec<K>& b, const TermOrder& ord)
{
    Vec<K> r;
    r.terms.reserve(a.terms.size() + b.terms.size());
    std::size_t i = 0, j = 0;
    const auto& at = a.terms;
    const auto& bt = b.terms;
    Monomial bm;
    bool have_bm = false;
    while (i < at.size() || j < bt.size()) {
        if (j < bt.size() && !have_bm) {
            bm = m * bt[j].m;
            have_bm = true;
        }
        int cmp;
        if (i >= at.size())
            cmp = -1;
        else if (j >= bt.size())
            cmp = 1;
        else
            cmp = ord.compare(at[i].m, at[i].comp, bm, bt[j].comp);
        if (cmp > 0) {
            r.terms.push_back(at[i]);
            ++i;
        } else if (cmp < 0) {
            r.terms.push_back(Term<K>{bm, bt[j].comp, -(c * bt[j].c)});
            ++j;
            have_bm = false;
        } else {
            K v = at[i].c - c * bt[j].c;
            if (!v.is_zero())
                r.terms.push_back(Term<K>{bm, at[i].comp, std::move(v)});
            ++i;
            ++j;
            have_bm = false;
        }
    }
    return r;
}

template <class K>
Vec<K> add(const Vec<K>& a, const Vec<K>& b, const TermOrder& ord, const K& minus_one)
{
    return sub_mul(a, minus_one, Monomial(), b, ord);
}

template <class K>
Vec<K> scale(const Vec<K>& a, const K& c)
{
    Vec<K> r;
    if (c.is_zero())
        return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        r.terms.push_back(Term<K>{t.m, t.comp, t.c * c});
    return r;
}

template <class K>
Vec<K> negate(const Vec<K>& a)
{
    Vec<K> r = a;
    for (auto& t : r.terms)
        t.c = -t.c;
    return r;
}

/// c * m * a (order preserving).
template <class K>
Vec<K> mul_term(const Vec<K>& a, const Monomial& m, const K& c)
{
    Vec<K> r;
    if (c.is_zero())
        return r;
    r.terms.reserve(a.terms.size());
    for (const auto& t : a.terms)
        r.terms.push_back(Term<K>{m * t.m, t.comp, t.c * c});
    return r;
}

/// Polynomial p (component 0) times module element v.
template <class K>
Vec<K> mul(const Poly<K>& p, const Vec<K>& v, const TermOrder& ord)
{
    Vec<K> r;
    if (p.is_zero() || v.is_zero())
        return r;
    r.terms.reserve(p.size() * v.size());
    for (const auto& s : p.terms)
        for (const auto& t : v.terms)
            r.terms.push_back(Term<K>{s.m * t.m, t.comp, s.c * t.c});
    normalize_terms(r, ord);
    return r;
}

template <class K>
Vec<K> make_monic(Vec<K> v)
{
    if (v.is_zero() || v.lead_coefficient().is_one())
        return v;
    K inv = v.lead_coefficient().inverse();
    for (auto& t : v.terms)
        t.c *= inv;
    return v;
}

/// Component `comp` of v as a polynomial in component 0 (relative order is kept).
template <class K>
Poly<K> component(const Vec<K>& v, int comp)
{
    Poly<K> r;
    for (const auto& t : v.terms)
        if (t.comp == comp)
            r.terms.push_back(Term<K>{t.m, 0, t.c});
    return r;
}

/// Polynomial p placed in component `comp`.
template <class K>
Vec<K> in_component(const Poly<K>& p, int comp, const TermOrder& ord)
{
    Vec<K> r = p;
    for (auto& t : r.terms)
        t.comp = comp;
    normalize_terms(r, ord);
    return r;
}

/// Renumber components through `map` (map[c] = new index, or -1 to drop).
template <class K>
Vec<K> remap_components(const Vec<K>& v, const std::vector<int>& map, const TermOrder& ord)
{
    Vec<K> r;
    for (const auto& t : v.terms) {
        int c = t.comp < static_cast<int>(map.size()) ? map[t.comp] : -1;
        if (c >= 0)
            r.terms.push_back(Term<K>{t.m, c, t.c});
    }
    normalize_terms(r, ord);
    return r;
}

inline constexpr int kInfiniteValuation = INT_MAX;

inline int shift_of(const std::vector<int>& shifts, int comp)
{
    return comp < static_cast<int>(shifts.size()) ? shifts[comp] : 0;
}

/// Valuation for the n-adic filtration shifted per component: min over terms of
/// deg(m) + shift(comp); +infinity for zero.
template <class K>
int valuation(const Vec<K>& v, const std::vector<int>& shifts = {})
{
    int best = kInfiniteValuation;
    for (const auto& t : v.terms)
        best = std::min(best, t.m.degree() + shift_of(shifts, t.comp));
    return best;
}

/// Largest shifted degree among the terms (the degree that ecart is measured against).
template <class K>
int top_degree(const Vec<K>& v, const std::vector<int>& shifts = {})
{
    int best = INT_MIN;
    for (const auto& t : v.terms)
        best = std::max(best, t.m.degree() + shift_of(shifts, t.comp));
    return best;
}

/// Sum of the terms of minimal shifted degree.
template <class K>
Vec<K> initial_form(const Vec<K>& v, const std::vector<int>& shifts = {})
{
    if (v.is_zero())
        throw DomainError("initial form of zero");
    int nu = valuation(v, shifts);
    Vec<K> r;
    for (const auto& t : v.terms)
        if (t.m.degree() + shift_of(shifts, t.comp) == nu)
            r.terms.push_back(t);
    return r;
}

/// Terms of shifted degree exactly d.
template <class K>
Vec<K> homogeneous_part(const Vec<K>& v, int d, const std::vector<int>& shifts = {})
{
    Vec<K> r;
    for (const auto& t : v.terms)
        if (t.m.degree() + shift_of(shifts, t.comp) == d)
            r.terms.push_back(t);
    return r;
}

template <class K>
bool is_homogeneous(const Vec<K>& v, const std::vector<int>& shifts = {})
{
    return v.is_zero() || valuation(v, shifts) == top_degree(v, shifts);
}

template <class K>
bool has_unit_term(const Poly<K>& p)
{
    for (const auto& t : p.terms)
        if (t.m.is_one())
            return true;
    return false;
}

/// Constant-term coefficient, if any.
template <class K>
std::optional<K> constant_term(const Poly<K>& p)
{
    for (const auto& t : p.terms)
        if (t.m.is_one() && t.comp == 0)
            return t.c;
    return std::nullopt;
}

template <class K>
Poly<K> monomial_poly(const Monomial& m, const K& c, int comp = 0)
{
    Poly<K> p;
    if (!c.is_zero())
        p.terms.push_back(Term<K>{m, comp, c});
    return p;
}

/// Substitute x_i -> images[i] in every component of v.
template <class K>
Vec<K> substitute(const Vec<K>& v, const std::vector<Poly<K>>& images, const TermOrder& ord, const K& one)
{
    const int n = static_cast<int>(images.size());
    std::vector<std::vector<Poly<K>>> powers(n);
    auto power = [&](int i, int e) -> const Poly<K>& {
        auto& pw = powers[i];
        if (pw.empty())
            pw.push_back(monomial_poly(Monomial(), one));
        while (static_cast<int>(pw.size()) <= e)
            pw.push_back(mul(pw.back(), images[i], ord));
        return pw[e];
    };
    Vec<K> acc;
    for (const auto& t : v.terms) {
        Poly<K> prod = monomial_poly(Monomial(), t.c);
        for (int i = 0; i < n; ++i)
            if (t.m[i] > 0)
                prod = mul(power(i, t.m[i]), prod, ord);
        for (auto& s : prod.terms)
            s.comp = t.comp;
        for (auto& s : prod.terms)
            acc.terms.push_back(std::move(s));
    }
    normalize_terms(acc, ord);
    return acc;
}

} // namespace gradlift
