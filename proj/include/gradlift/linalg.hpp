#pragma once

/**
 * @file linalg.hpp
 * @brief Exact sparse row echelon forms. Used by the brute-force oracles
 * (Tor via Koszul complexes, truncated initial ideals, graded pieces).
 */

#include "poly.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gradlift {

/// Sparse row: (column, value) pairs, columns strictly increasing, values nonzero.
template <class K>
using SparseRow = std::vector<std::pair<int, K>>;

/**
 * Incremental row echelon form. Rows are reduced against existing pivots as
 * they are inserted; a row that survives becomes a new pivot row (made monic).
 */
template <class K>
class RowEchelon {
public:
    /// Insert a row; returns true if it was independent of the previous rows.
    bool insert(SparseRow<K> row)
    {
        reduce(row);
        if (row.empty())
            return false;
        K inv = row.front().second.inverse();
        for (auto& e : row)
            e.second *= inv;
        int col = row.front().first;
        pivots_.emplace(col, rows_.size());
        rows_.push_back(std::move(row));
        return true;
    }

    /// Reduce a row against the pivots (in place); empty iff in the row span.
    void reduce(SparseRow<K>& row) const
    {
        std::size_t pos = 0;
        while (pos < row.size()) {
            auto it = pivots_.find(row[pos].first);
            if (it == pivots_.end()) {
                ++pos;
                continue;
            }
            K c = row[pos].second;
            row = axpy(row, rows_[it->second], c);
        }
    }

    bool contains(SparseRow<K> row) const
    {
        reduce(row);
        return row.empty();
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<SparseRow<K>>& rows() const { return rows_; }

private:
    /// a - c * b
    static SparseRow<K> axpy(const SparseRow<K>& a, const SparseRow<K>& b, const K& c)
    {
        SparseRow<K> r;
        r.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
                r.push_back(a[i++]);
            } else if (i >= a.size() || b[j].first < a[i].first) {
                r.emplace_back(b[j].first, -(c * b[j].second));
                ++j;
            } else {
                K v = a[i].second - c * b[j].second;
                if (!v.is_zero())
                    r.emplace_back(a[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        return r;
    }

    std::vector<SparseRow<K>> rows_;
    std::unordered_map<int, std::size_t> pivots_;
};

template <class K>
std::size_t matrix_rank(const std::vector<SparseRow<K>>& rows)
{
    RowEchelon<K> e;
    for (const auto& r : rows)
        e.insert(r);
    return e.rank();
}

/**
 * Column indexing for module terms (monomial, component). Columns are
 * numbered in order of first registration.
 */
class TermIndex {
public:
    int index(const Monomial& m, int comp)
    {
        auto key = std::make_pair(comp, m);
        auto it = map_.find(key);
        if (it != map_.end())
            return it->second;
        int id = static_cast<int>(terms_.size());
        map_.emplace(key, id);
        terms_.push_back(key);
        return id;
    }

    int find(const Monomial& m, int comp) const
    {
        auto it = map_.find(std::make_pair(comp, m));
        return it == map_.end() ? -1 : it->second;
    }

    const std::pair<int, Monomial>& term(int id) const { return terms_[id]; }
    std::size_t size() const { return terms_.size(); }

private:
    std::map<std::pair<int, Monomial>, int> map_;
    std::vector<std::pair<int, Monomial>> terms_;
};

/// Vec to sparse row through an index (registers new terms).
template <class K>
SparseRow<K> to_row(const Vec<K>& v, TermIndex& idx)
{
    SparseRow<K> r;
    for (const auto& t : v.terms)
        r.emplace_back(idx.index(t.m, t.comp), t.c);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
}

} // namespace gradlift
