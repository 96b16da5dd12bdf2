#pragma once

/**
 * @file oracles.hpp
 * @brief Brute-force linear-algebra routes used to cross-check the engine:
 * Tor via the Koszul complex, graded pieces of submodules, and truncated
 * initial ideals of local ideals.
 */

#include "linalg.hpp"
#include "resolution.hpp"

#include <map>
#include <vector>

namespace gradlift {

/// A k-basis of N_e in ambient coordinates, as echelon rows over a term index.
template <class K>
struct GradedPiece {
    std::vector<Vec<K>> basis;
};

/// k-basis of the degree-e part of the graded submodule N.
template <class K>
GradedPiece<K> graded_piece(const GradedModule<K>& N, int e)
{
    GradedPiece<K> out;
    TermIndex idx;
    RowEchelon<K> ech;
    TermOrder o = N.order();
    for (const auto& g : N.generators) {
        int k = e - N.degree_of(g);
        if (k < 0)
            continue;
        for (const auto& m : monomials_of_degree(N.nvars, k)) {
            Vec<K> v = mul_term(g, m, g.lead_coefficient() * g.lead_coefficient().inverse());
            if (ech.insert(to_row(v, idx)))
                out.basis.push_back(v);
        }
    }
    return out;
}

/**
 * dim_k Tor_i^P(k, N)_j from the Koszul complex K(x_1..x_n) ⊗ N:
 * dim C_i - rank d_i - rank d_{i+1} in internal degree j, where
 * C_i = ∧^i k^n ⊗ N_{j-i}.
 */
template <class K>
class TorOracle {
public:
    explicit TorOracle(GradedModule<K> N) : N_(std::move(N))
    {
        const int n = N_.nvars;
        for (int mask = 0; mask < (1 << n); ++mask)
            subsets_[__builtin_popcount(mask)].push_back(mask);
    }

    long value(int i, int j)
    {
        const int n = N_.nvars;
        if (i < 0 || i > n)
            return 0;
        long dimC = static_cast<long>(subsets_[i].size()) * static_cast<long>(piece(j - i).basis.size());
        return dimC - static_cast<long>(rank_d(i, j)) - static_cast<long>(rank_d(i + 1, j));
    }

    /// All β_{i,j} with j <= jmax.
    BettiTable table(int jmax)
    {
        BettiTable t;
        for (int i = 0; i <= N_.nvars; ++i)
            for (int j = i; j <= jmax; ++j)
                t.add(i, j, value(i, j));
        return t;
    }

private:
    const GradedPiece<K>& piece(int e)
    {
        auto it = pieces_.find(e);
        if (it != pieces_.end())
            return it->second;
        GradedPiece<K> p;
        if (e >= 0)
            p = graded_piece(N_, e);
        return pieces_.emplace(e, std::move(p)).first->second;
    }

    /// rank of d_i : C_i -> C_{i-1} in internal degree j.
    std::size_t rank_d(int i, int j)
    {
        const int n = N_.nvars;
        if (i < 1 || i > n)
            return 0;
        auto key = std::make_pair(i, j);
        auto it = ranks_.find(key);
        if (it != ranks_.end())
            return it->second;
        const auto& src = piece(j - i);
        const int r = N_.rank();
        TermIndex idx;
        RowEchelon<K> ech;
        for (int S : subsets_[i]) {
            for (const auto& f : src.basis) {
                SparseRow<K> row;
                std::vector<Term<K>> acc;
                int sign_pos = 0;
                for (int k = 0; k < n; ++k) {
                    if (!(S & (1 << k)))
                        continue;
                    int T = S & ~(1 << k);
                    bool neg = (sign_pos % 2) == 1;
                    ++sign_pos;
                    Monomial x = Monomial::variable(k);
                    for (const auto& t : f.terms) {
                        K c = neg ? -t.c : t.c;
                        acc.push_back(Term<K>{x * t.m, T * r + t.comp, c});
                    }
                }
                for (const auto& t : acc)
                    row.emplace_back(idx.index(t.m, t.comp), t.c);
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                ech.insert(std::move(row));
            }
        }
        ranks_[key] = ech.rank();
        return ech.rank();
    }

    GradedModule<K> N_;
    std::map<int, std::vector<int>> subsets_;
    std::map<int, GradedPiece<K>> pieces_;
    std::map<std::pair<int, int>, std::size_t> ranks_;
};

template <class K>
long tor_oracle(const GradedModule<K>& N, int i, int j)
{
    TorOracle<K> o(N);
    return o.value(i, j);
}

/**
 * Degree-d part of I* for a local ideal I, by linear algebra on the truncation
 * of I modulo n^{d+1}. Returns a basis of I*_d and, through `quotient_dim`,
 * dim_k R/(I + n^{d+1}).
 */
template <class K>
std::vector<Poly<K>> truncated_initial_forms(const std::vector<Poly<K>>& gens, int nvars, int d,
                                             long* quotient_dim = nullptr)
{
    TermIndex idx;
    long total = 0;
    for (int e = 0; e <= d; ++e)
        for (const auto& m : monomials_of_degree(nvars, e)) {
            idx.index(m, 0);
            ++total;
        }
    RowEchelon<K> ech;
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        int v = valuation(g);
        for (int e = 0; e + v <= d; ++e)
            for (const auto& m : monomials_of_degree(nvars, e)) {
                SparseRow<K> row;
                for (const auto& t : g.terms) {
                    Monomial p = m * t.m;
                    if (p.degree() <= d)
                        row.emplace_back(idx.find(p, 0), t.c);
                }
                std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
                ech.insert(std::move(row));
            }
    }
    if (quotient_dim)
        *quotient_dim = total - static_cast<long>(ech.rank());
    TermOrder o(OrderKind::DegRevLex, nvars);
    std::vector<Poly<K>> out;
    for (const auto& row : ech.rows()) {
        if (idx.term(row.front().first).second.degree() != d)
            continue;
        Poly<K> p;
        for (const auto& [c, v] : row) {
            const Monomial& m = idx.term(c).second;
            if (m.degree() == d)
                p.terms.push_back(Term<K>{m, 0, v});
        }
        normalize_terms(p, o);
        out.push_back(p);
    }
    return out;
}

} // namespace gradlift
