#pragma once

/**
 * @file groebner.hpp
 * @brief Gröbner bases (global orders, Buchberger) and standard bases (local
 * orders, Mora) for ideals and submodules of free modules.
 *
 * Both algorithms share one completion loop. Global orders use full
 * reduction; local orders use the weak normal form with ecart.
 */

#include "poly.hpp"

#include <algorithm>
#include <climits>
#include <cstdio>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <iostream>
#include <vector>

namespace gradlift {

/// A resource cap (reduction steps, degree bound) was hit. Never a wrong answer.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An internal consistency check failed: a bug, not bad data.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct BasisOptions {
    std::size_t reduction_cap = 1'000'000;
    /// Buchberger's coprime-leading-term criterion. Only valid for ideals
    /// (rank 1) and never for augmented computations that need the syzygies.
    bool product_criterion = false;
    /// Global: interreduce and make monic. Local: minimize and make monic.
    bool reduce = true;
    /// Local orders: run Buchberger on homogenized inputs and dehomogenize
    /// (true), or complete directly with Mora's weak normal form (false).
    bool homogenize_local = true;
    /// Print S-pair counts to stderr.
    bool verbose = false;
};

struct BasisStats {
    std::size_t pairs_considered = 0;
    std::size_t pairs_reduced = 0;
    std::size_t chain_skipped = 0;
    std::size_t zero_reductions = 0;
    std::size_t reductions = 0;
};

namespace detail {

template <class K>
struct Element {
    Vec<K> v;
    Monomial lm;
    int comp = 0;
    int sugar = 0;
    int ecart = 0;
    bool redundant = false;
};

struct Pair {
    int i = 0, j = 0;
    Monomial lcm;
    int comp = 0;
    int sugar = 0;
};

} // namespace detail

/**
 * Completion of a generating set to a Gröbner or standard basis.
 *
 * Elements are added with add(); pairs are processed in order of sugar, then
 * the order of their lcm (smallest first), then by index, so the result is
 * deterministic.
 */
template <class K>
class Completion {
public:
    Completion(TermOrder ord, BasisOptions opts = {}) : ord_(std::move(ord)), opts_(opts) {}

    const TermOrder& order() const { return ord_; }
    const BasisStats& stats() const { return stats_; }
    bool local() const { return ord_.is_local(); }

    /// Degree used for pair selection: weighted degree plus component shift.
    int term_degree(const Monomial& m, int comp) const { return ord_.term_degree(m, comp); }

    int top(const Vec<K>& v) const
    {
        int best = INT_MIN;
        for (const auto& t : v.terms)
            best = std::max(best, term_degree(t.m, t.comp));
        return best;
    }

    int ecart(const Vec<K>& v) const { return top(v) - term_degree(v.lead_monomial(), v.lead_component()); }

    /// Reduce f: full normal form for global orders, Mora weak normal form for local ones.
    Vec<K> reduce(const Vec<K>& f)
    {
        return local() ? mora_reduce(f) : full_reduce(f);
    }

    /// Insert a nonzero element (made monic) and create its pairs.
    void add(const Vec<K>& f)
    {
        if (f.is_zero())
            return;
        detail::Element<K> e;
        e.v = make_monic(f);
        e.lm = e.v.lead_monomial();
        e.comp = e.v.lead_component();
        e.sugar = top(e.v);
        e.ecart = ecart(e.v);
        update_pairs(e);
        elems_.push_back(std::move(e));
    }

    bool has_pairs() const { return !pairs_.empty(); }

    /// Smallest pending pair sugar, or INT_MAX.
    int next_pair_degree() const
    {
        int d = INT_MAX;
        for (const auto& p : pairs_)
            d = std::min(d, p.sugar);
        return d;
    }

    /// Process pairs until none is left with sugar <= max_sugar.
    void run(int max_sugar = INT_MAX)
    {
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k)
                if (pair_less(pairs_[k], pairs_[best]))
                    best = k;
            if (pairs_[best].sugar > max_sugar)
                break;
            detail::Pair p = pairs_[best];
            pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
            ++stats_.pairs_reduced;
            Vec<K> s = spoly(p);
            Vec<K> h = reduce(s);
            if (h.is_zero()) {
                ++stats_.zero_reductions;
                continue;
            }
            add(h);
        }
        if (opts_.verbose)
            std::fprintf(stderr, "[basis] pairs=%zu reduced=%zu chain-skipped=%zu zero=%zu size=%zu\n",
                         stats_.pairs_considered, stats_.pairs_reduced, stats_.chain_skipped,
                         stats_.zero_reductions, elems_.size());
    }

    /// Current elements (not minimized).
    std::vector<Vec<K>> elements() const
    {
        std::vector<Vec<K>> out;
        for (const auto& e : elems_)
            out.push_back(e.v);
        return out;
    }

    /// Minimal basis: drop elements whose leading term is divisible by another's,
    /// keep monic, interreduce tails for global orders. Sorted by leading term ascending.
    std::vector<Vec<K>> basis()
    {
        std::vector<std::size_t> keep;
        for (std::size_t a = 0; a < elems_.size(); ++a) {
            bool drop = false;
            for (std::size_t b = 0; b < elems_.size() && !drop; ++b) {
                if (a == b || elems_[b].comp != elems_[a].comp || !elems_[b].lm.divides(elems_[a].lm))
                    continue;
                // equal leading terms: keep the earlier one
                if (elems_[b].lm != elems_[a].lm || b < a)
                    drop = true;
            }
            if (!drop)
                keep.push_back(a);
        }
        std::vector<Vec<K>> out;
        for (auto a : keep)
            out.push_back(elems_[a].v);
        if (opts_.reduce && !local()) {
            for (std::size_t a = 0; a < out.size(); ++a) {
                std::vector<Vec<K>> others;
                for (std::size_t b = 0; b < out.size(); ++b)
                    if (b != a)
                        others.push_back(out[b]);
                out[a] = make_monic(tail_reduce(out[a], others));
            }
        }
        std::sort(out.begin(), out.end(), [&](const Vec<K>& x, const Vec<K>& y) {
            return ord_.compare(x.lead_monomial(), x.lead_component(), y.lead_monomial(), y.lead_component()) < 0;
        });
        return out;
    }

private:
    void count_reduction()
    {
        if (++stats_.reductions > opts_.reduction_cap)
            throw CapExceeded("reduction cap of " + std::to_string(opts_.reduction_cap) + " steps exceeded");
    }

    bool pair_less(const detail::Pair& a, const detail::Pair& b) const
    {
        if (a.sugar != b.sugar)
            return a.sugar < b.sugar;
        int c = ord_.compare(a.lcm, a.comp, b.lcm, b.comp);
        if (c != 0)
            return local() ? c > 0 : c < 0;
        if (a.j != b.j)
            return a.j < b.j;
        return a.i < b.i;
    }

    void update_pairs(const detail::Element<K>& h)
    {
        const int hidx = static_cast<int>(elems_.size());
        // Gebauer-Möller: drop old pairs (i,j) whose lcm is strictly chained through h.
        std::vector<detail::Pair> kept;
        kept.reserve(pairs_.size());
        for (const auto& p : pairs_) {
            if (p.comp == h.comp && h.lm.divides(p.lcm)) {
                Monomial li = Monomial::lcm(elems_[p.i].lm, h.lm);
                Monomial lj = Monomial::lcm(elems_[p.j].lm, h.lm);
                if (li != p.lcm && lj != p.lcm) {
                    ++stats_.chain_skipped;
                    continue;
                }
            }
            kept.push_back(p);
        }
        pairs_.swap(kept);

        struct Cand {
            detail::Pair p;
            bool coprime;
            bool dead = false;
        };
        std::vector<Cand> cands;
        for (int i = 0; i < hidx; ++i) {
            const auto& g = elems_[i];
            if (g.redundant || g.comp != h.comp)
                continue;
            detail::Pair p;
            p.i = i;
            p.j = hidx;
            p.lcm = Monomial::lcm(g.lm, h.lm);
            p.comp = h.comp;
            p.sugar = std::max(g.sugar + ord_.wdeg(p.lcm / g.lm), h.sugar + ord_.wdeg(p.lcm / h.lm));
            cands.push_back({p, g.lm.coprime(h.lm)});
            ++stats_.pairs_considered;
        }
        // criterion M: lcm strictly divisible by another new lcm
        for (auto& a : cands)
            for (const auto& b : cands)
                if (&a != &b && b.p.lcm != a.p.lcm && b.p.lcm.divides(a.p.lcm)) {
                    a.dead = true;
                    break;
                }
        // criterion F (and the product criterion on each lcm class)
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (cands[a].dead)
                continue;
            bool any_coprime = cands[a].coprime;
            for (std::size_t b = a + 1; b < cands.size(); ++b)
                if (!cands[b].dead && cands[b].p.lcm == cands[a].p.lcm) {
                    any_coprime = any_coprime || cands[b].coprime;
                    cands[b].dead = true;
                    ++stats_.chain_skipped;
                }
            if (opts_.product_criterion && any_coprime) {
                cands[a].dead = true;
                continue;
            }
            pairs_.push_back(cands[a].p);
        }
        for (auto& g : elems_)
            if (!g.redundant && g.comp == h.comp && h.lm.divides(g.lm) && !local())
                g.redundant = true;
    }

    Vec<K> spoly(const detail::Pair& p)
    {
        const auto& a = elems_[p.i];
        const auto& b = elems_[p.j];
        Vec<K> left = mul_term(a.v, p.lcm / a.lm, a.v.lead_coefficient().inverse());
        return sub_mul(left, b.v.lead_coefficient().inverse(), p.lcm / b.lm, b.v, ord_);
    }

    int find_reducer(const Monomial& m, int comp) const
    {
        int best = -1;
        for (int k = 0; k < static_cast<int>(elems_.size()); ++k) {
            const auto& g = elems_[k];
            if (g.comp != comp || !g.lm.divides(m))
                continue;
            if (best < 0 || g.v.size() < elems_[best].v.size())
                best = k;
        }
        return best;
    }

    Vec<K> full_reduce(const Vec<K>& f)
    {
        Vec<K> h = f;
        Vec<K> r;
        std::size_t pos = 0;
        while (pos < h.terms.size()) {
            const auto& t = h.terms[pos];
            int k = find_reducer(t.m, t.comp);
            if (k < 0) {
                r.terms.push_back(t);
                ++pos;
                continue;
            }
            count_reduction();
            const auto& g = elems_[k].v;
            K c = t.c * g.lead_coefficient().inverse();
            Monomial q = t.m / g.lead_monomial();
            Vec<K> rest;
            rest.terms.assign(h.terms.begin() + static_cast<std::ptrdiff_t>(pos), h.terms.end());
            h = sub_mul(rest, c, q, g, ord_);
            pos = 0;
        }
        return r;
    }

    Vec<K> tail_reduce(const Vec<K>& f, const std::vector<Vec<K>>& others)
    {
        Vec<K> h = f;
        Vec<K> r;
        if (h.is_zero())
            return r;
        r.terms.push_back(h.terms.front());
        h.terms.erase(h.terms.begin());
        while (!h.is_zero()) {
            const auto& t = h.terms.front();
            const Vec<K>* red = nullptr;
            for (const auto& g : others)
                if (g.lead_component() == t.comp && g.lead_monomial().divides(t.m) &&
                    (!red || g.size() < red->size()))
                    red = &g;
            if (!red) {
                r.terms.push_back(t);
                h.terms.erase(h.terms.begin());
                continue;
            }
            count_reduction();
            K c = t.c * red->lead_coefficient().inverse();
            h = sub_mul(h, c, t.m / red->lead_monomial(), *red, ord_);
        }
        return r;
    }

    /// Weak normal form with ecart: the result h satisfies u*f - h in the span
    /// for a unit u, and lead(h) is not divisible by any leading term of the basis.
    Vec<K> mora_reduce(const Vec<K>& f)
    {
        struct Red {
            const Vec<K>* v;
            int ecart;
        };
        std::vector<Vec<K>> extra;
        extra.reserve(64);
        std::vector<Red> T;
        for (const auto& e : elems_)
            T.push_back({&e.v, e.ecart});
        Vec<K> h = f;
        std::vector<std::size_t> extra_idx;
        while (!h.is_zero()) {
            const Monomial& m = h.lead_monomial();
            int comp = h.lead_component();
            int best = -1;
            for (int k = 0; k < static_cast<int>(T.size()); ++k) {
                const Vec<K>& g = *T[k].v;
                if (g.lead_component() != comp || !g.lead_monomial().divides(m))
                    continue;
                if (best < 0 || T[k].ecart < T[best].ecart)
                    best = k;
            }
            if (best < 0)
                break;
            count_reduction();
            if (opts_.verbose && stats_.reductions % 500 == 0)
                std::cerr << "mora: " << stats_.reductions << " reductions, " << h.terms.size() << " terms, T=" << T.size()
                          << " top=" << top(h) << "\n";
            int eh = ecart(h);
            const Vec<K>* g = T[best].v;
            Vec<K> gcopy;
            if (T[best].ecart > eh) {
                // h joins the reducers; keep a stable copy since `extra` may reallocate
                gcopy = *g;
                g = &gcopy;
                extra.push_back(h);
                T.clear();
                for (const auto& e : elems_)
                    T.push_back({&e.v, e.ecart});
                for (const auto& x : extra)
                    T.push_back({&x, ecart(x)});
            }
            K c = h.lead_coefficient() * g->lead_coefficient().inverse();
            h = sub_mul(h, c, m / g->lead_monomial(), *g, ord_);
        }
        return h;
    }

    TermOrder ord_;
    BasisOptions opts_;
    BasisStats stats_;
    std::vector<detail::Element<K>> elems_;
    std::vector<detail::Pair> pairs_;
};

namespace detail {

template <class K>
Vec<K> homogenize(const Vec<K>& v, const TermOrder& h)
{
    const int w = h.homogenizing_variable();
    int top = INT_MIN;
    for (const auto& t : v.terms)
        top = std::max(top, h.term_degree(t.m, t.comp));
    Vec<K> r;
    for (const auto& t : v.terms) {
        Term<K> u = t;
        u.m.set(w, top - h.term_degree(t.m, t.comp));
        r.terms.push_back(std::move(u));
    }
    normalize_terms(r, h);
    return r;
}

template <class K>
Vec<K> dehomogenize(const Vec<K>& v, int w, const TermOrder& ord)
{
    Vec<K> r;
    for (const auto& t : v.terms) {
        Term<K> u = t;
        u.m.set(w, 0);
        r.terms.push_back(std::move(u));
    }
    normalize_terms(r, ord);
    return r;
}

} // namespace detail

template <class K>
std::vector<Vec<K>> compute_basis(const std::vector<Vec<K>>& gens, const TermOrder& ord, BasisOptions opts = {});

/**
 * Standard basis for a local order via homogenization: a Gröbner basis of the
 * homogenized inputs under ord.homogenized(), with w set to 1 afterwards and
 * non-minimal leading terms dropped. Every u*f with f in the local span and u a
 * unit has some w^k (u*f)^h in the homogenized span, so the leading terms
 * still generate.
 */
template <class K>
std::vector<Vec<K>> homogenized_standard_basis(const std::vector<Vec<K>>& gens, const TermOrder& ord,
                                               BasisOptions opts = {})
{
    TermOrder h = ord.homogenized();
    std::vector<Vec<K>> hg;
    for (const auto& g : gens)
        if (!g.is_zero())
            hg.push_back(detail::homogenize(g, h));
    opts.homogenize_local = false;
    std::vector<Vec<K>> G = compute_basis(hg, h, opts);
    std::vector<Vec<K>> de;
    for (const auto& g : G)
        de.push_back(make_monic(detail::dehomogenize(g, h.homogenizing_variable(), ord)));
    std::vector<Vec<K>> out;
    for (std::size_t a = 0; a < de.size(); ++a) {
        bool drop = false;
        for (std::size_t b = 0; b < de.size() && !drop; ++b) {
            if (a == b || de[b].lead_component() != de[a].lead_component() ||
                !de[b].lead_monomial().divides(de[a].lead_monomial()))
                continue;
            if (de[b].lead_monomial() != de[a].lead_monomial() || b < a)
                drop = true;
        }
        if (!drop)
            out.push_back(de[a]);
    }
    std::sort(out.begin(), out.end(), [&](const Vec<K>& x, const Vec<K>& y) {
        return ord.compare(x.lead_monomial(), x.lead_component(), y.lead_monomial(), y.lead_component()) < 0;
    });
    return out;
}

/// Gröbner basis (global order) or standard basis (local order) of the span of gens.
template <class K>
std::vector<Vec<K>> compute_basis(const std::vector<Vec<K>>& gens, const TermOrder& ord, BasisOptions opts)
{
    if (ord.is_local() && opts.homogenize_local)
        return homogenized_standard_basis(gens, ord, opts);
    Completion<K> c(ord, opts);
    std::vector<Vec<K>> sorted;
    for (const auto& g : gens)
        if (!g.is_zero())
            sorted.push_back(resorted(g, ord));
    std::stable_sort(sorted.begin(), sorted.end(), [&](const Vec<K>& a, const Vec<K>& b) {
        return c.top(a) < c.top(b);
    });
    for (const auto& g : sorted) {
        Vec<K> h = c.reduce(g);
        if (!h.is_zero())
            c.add(h);
        c.run();
    }
    return c.basis();
}

template <class K>
std::vector<Vec<K>> buchberger(const std::vector<Vec<K>>& gens, const TermOrder& ord, BasisOptions opts = {})
{
    if (ord.is_local())
        throw InputError("buchberger needs a global order");
    return compute_basis(gens, ord, opts);
}

template <class K>
std::vector<Vec<K>> standard_basis(const std::vector<Vec<K>>& gens, const TermOrder& ord, BasisOptions opts = {})
{
    if (!ord.is_local())
        throw InputError("standard_basis needs a local order");
    return compute_basis(gens, ord, opts);
}

/// Full normal form of f modulo a Gröbner basis G (global order).
template <class K>
Vec<K> normal_form(const Vec<K>& f, const std::vector<Vec<K>>& G, const TermOrder& ord)
{
    Vec<K> h = resorted(f, ord);
    Vec<K> r;
    while (!h.is_zero()) {
        const auto& t = h.terms.front();
        const Vec<K>* red = nullptr;
        for (const auto& g : G)
            if (g.lead_component() == t.comp && g.lead_monomial().divides(t.m)) {
                red = &g;
                break;
            }
        if (!red) {
            r.terms.push_back(t);
            h.terms.erase(h.terms.begin());
            continue;
        }
        K c = t.c * red->lead_coefficient().inverse();
        h = sub_mul(h, c, t.m / red->lead_monomial(), *red, ord);
    }
    return r;
}

/// Mora weak normal form of f with respect to `reducers` under a local order.
/// Zero iff f lies in the local span when the reducers form a standard basis.
template <class K>
Vec<K> mora_normal_form(const Vec<K>& f, const std::vector<Vec<K>>& reducers, const TermOrder& ord,
                        BasisOptions opts = {})
{
    if (!ord.is_local())
        throw InputError("mora_normal_form needs a local order");
    Completion<K> c(ord, opts);
    for (const auto& g : reducers)
        if (!g.is_zero())
            c.add(resorted(g, ord));
    return c.reduce(resorted(f, ord));
}

/// Reduction-to-zero test modulo a basis, dispatching on the order type.
template <class K>
bool reduces_to_zero(const Vec<K>& f, const std::vector<Vec<K>>& basis, const TermOrder& ord)
{
    if (ord.is_local())
        return mora_normal_form(f, basis, ord).is_zero();
    return normal_form(f, basis, ord).is_zero();
}

/// Leading terms (monomial, component) of a basis.
template <class K>
std::vector<std::pair<Monomial, int>> leading_terms(const std::vector<Vec<K>>& basis)
{
    std::vector<std::pair<Monomial, int>> out;
    for (const auto& g : basis)
        if (!g.is_zero())
            out.emplace_back(g.lead_monomial(), g.lead_component());
    return out;
}

/// Homogeneity for an order's term degree (weights and shifts).
template <class K>
bool is_homogeneous_for(const Vec<K>& v, const TermOrder& ord)
{
    if (v.is_zero())
        return true;
    int d = ord.term_degree(v.terms.front().m, v.terms.front().comp);
    for (const auto& t : v.terms)
        if (ord.term_degree(t.m, t.comp) != d)
            return false;
    return true;
}

/**
 * Minimal generators of a graded submodule. Every generator must be homogeneous
 * for the order's term degree (weights plus shifts) and the order must be a
 * global degree order. Returns the indices (into gens) of a minimal generating
 * subset; `basis_out` receives a Gröbner basis of the span.
 */
template <class K>
std::vector<int> minimal_generator_indices(const std::vector<Vec<K>>& gens, const TermOrder& ord,
                                           std::vector<Vec<K>>* basis_out = nullptr, BasisOptions opts = {})
{
    if (ord.is_local())
        throw InputError("minimal generators need a global order");
    Completion<K> c(ord, opts);
    std::vector<int> idx;
    std::vector<int> degree(gens.size(), 0);
    std::vector<Vec<K>> sorted(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        sorted[i] = resorted(gens[i], ord);
        if (sorted[i].is_zero())
            continue;
        degree[i] = c.top(sorted[i]);
        if (!is_homogeneous_for(sorted[i], ord))
            throw InputError("minimal generators: generator is not homogeneous");
        idx.push_back(static_cast<int>(i));
    }
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return degree[a] < degree[b]; });
    std::vector<int> chosen;
    for (std::size_t k = 0; k < idx.size();) {
        int d = degree[idx[k]];
        c.run(d);
        for (; k < idx.size() && degree[idx[k]] == d; ++k) {
            Vec<K> h = c.reduce(sorted[idx[k]]);
            if (!h.is_zero()) {
                chosen.push_back(idx[k]);
                c.add(h);
            }
        }
    }
    if (basis_out) {
        c.run();
        *basis_out = c.basis();
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace gradlift
