#pragma once

/**
 * @file complex.hpp
 * @brief Free complexes with shift data, Betti tables, and minimalization by
 * cancelling unit entries.
 */

#include "syzygy.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace gradlift {

/**
 * F_h -> ... -> F_1 -> F_0 (-> ambient). maps[s] is the matrix of
 * d_{s+1}: F_{s+1} -> F_s given by its columns; a column is a module element
 * whose component r is the entry in row r. `generators` are the images of the
 * basis of F_0 in the ambient free module.
 *
 * For graded complexes shifts are degrees; for complexes over the local ring
 * they are the special-filtration valuations.
 */
template <class K>
struct FreeComplex {
    int nvars = 0;
    bool local = false;
    bool minimal = false;
    std::vector<int> ambient_shifts;
    std::vector<Vec<K>> generators;
    std::vector<std::vector<int>> shifts;
    std::vector<std::vector<Vec<K>>> maps;

    int length() const
    {
        int h = static_cast<int>(shifts.size()) - 1;
        while (h > 0 && shifts[h].empty())
            --h;
        return h;
    }
    int rank(int s) const
    {
        return s >= 0 && s < static_cast<int>(shifts.size()) ? static_cast<int>(shifts[s].size()) : 0;
    }

    /// Entry (row r, column c) of d_{s+1}.
    Poly<K> entry(int s, int r, int c) const { return component(maps[s][c], r); }

    TermOrder base_order() const
    {
        return TermOrder(local ? OrderKind::NegDegRevLex : OrderKind::DegRevLex, nvars);
    }
};

/// One unit cancellation: in d_{map+1}, row `row` of F_map against column `col` of F_{map+1}.
struct Cancellation {
    int map = 0;
    int row = 0;
    int col = 0;
};

/// Graded Betti numbers β_{i,j}; totals and generator degrees are derived.
class BettiTable {
public:
    BettiTable() = default;

    void add(int i, int j, long v = 1)
    {
        if (v != 0)
            data_[{i, j}] += v;
    }
    long operator()(int i, int j) const
    {
        auto it = data_.find({i, j});
        return it == data_.end() ? 0 : it->second;
    }
    const std::map<std::pair<int, int>, long>& entries() const { return data_; }

    int max_index() const
    {
        int m = -1;
        for (const auto& [k, v] : data_)
            if (v != 0)
                m = std::max(m, k.first);
        return m;
    }

    long total(int i) const
    {
        long s = 0;
        for (const auto& [k, v] : data_)
            if (k.first == i)
                s += v;
        return s;
    }

    std::vector<long> totals() const
    {
        std::vector<long> t;
        for (int i = 0; i <= max_index(); ++i)
            t.push_back(total(i));
        return t;
    }

    /// Degrees j with β_{0,j} > 0, ascending.
    std::vector<int> generator_degrees() const
    {
        std::vector<int> d;
        for (const auto& [k, v] : data_)
            if (k.first == 0 && v > 0)
                d.push_back(k.second);
        return d;
    }

    /// max(j - i) over nonzero entries.
    int regularity() const
    {
        int r = INT_MIN;
        for (const auto& [k, v] : data_)
            if (v != 0)
                r = std::max(r, k.second - k.first);
        return r;
    }

    /// Classic Betti diagram: columns i, rows j - i.
    std::string to_text() const
    {
        if (data_.empty())
            return "(zero)\n";
        int imax = max_index();
        int rmin = INT_MAX, rmax = INT_MIN;
        for (const auto& [k, v] : data_) {
            rmin = std::min(rmin, k.second - k.first);
            rmax = std::max(rmax, k.second - k.first);
        }
        std::ostringstream os;
        const int w = 6;
        os << std::setw(w + 1) << "";
        for (int i = 0; i <= imax; ++i)
            os << std::setw(w) << i;
        os << "\n" << std::setw(w) << "total:" << " ";
        for (int i = 0; i <= imax; ++i)
            os << std::setw(w) << total(i);
        os << "\n";
        for (int r = rmin; r <= rmax; ++r) {
            os << std::setw(w - 1) << r << ": ";
            for (int i = 0; i <= imax; ++i) {
                long v = (*this)(i, i + r);
                if (v == 0)
                    os << std::setw(w) << "-";
                else
                    os << std::setw(w) << v;
            }
            os << "\n";
        }
        return os.str();
    }

    friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.data_ == b.data_; }
    friend bool operator!=(const BettiTable& a, const BettiTable& b) { return !(a == b); }

private:
    std::map<std::pair<int, int>, long> data_;
};

/// β_{i,j} of a minimal complex: the number of shift-j basis elements of F_i.
template <class K>
BettiTable betti_table(const FreeComplex<K>& C)
{
    if (!C.minimal)
        throw InputError("betti_table needs a minimal complex");
    BettiTable t;
    for (int i = 0; i < static_cast<int>(C.shifts.size()); ++i)
        for (int j : C.shifts[i])
            t.add(i, j);
    return t;
}

/// Total ranks of any complex.
template <class K>
std::vector<long> total_ranks(const FreeComplex<K>& C)
{
    std::vector<long> r;
    for (int i = 0; i <= C.length(); ++i)
        r.push_back(C.rank(i));
    while (!r.empty() && r.back() == 0 && r.size() > 1)
        r.pop_back();
    return r;
}

template <class K>
bool has_unit_entry(const FreeComplex<K>& C)
{
    for (const auto& m : C.maps)
        for (const auto& col : m)
            for (const auto& t : col.terms)
                if (t.m.is_one())
                    return true;
    return false;
}

/// Composition zero: ε∘d_1 = 0 and d_s∘d_{s+1} = 0 for all s.
template <class K>
bool composition_is_zero(const FreeComplex<K>& C)
{
    TermOrder base = C.base_order();
    if (!C.generators.empty() && !C.maps.empty()) {
        TermOrder amb = base.on_module(C.ambient_shifts);
        for (const auto& col : C.maps[0])
            if (!apply_combination(col, C.generators, amb).is_zero())
                return false;
    }
    for (std::size_t s = 0; s + 1 < C.maps.size(); ++s) {
        TermOrder o = base.on_module(C.shifts[s]);
        for (const auto& col : C.maps[s + 1])
            if (!apply_combination(col, C.maps[s], o).is_zero())
                return false;
    }
    return true;
}

/// Graded compatibility: entry (r, c) of d_{s+1} homogeneous of degree shift_{s+1}(c) - shift_s(r).
template <class K>
bool is_graded_compatible(const FreeComplex<K>& C)
{
    for (std::size_t s = 0; s < C.maps.size(); ++s)
        for (std::size_t c = 0; c < C.maps[s].size(); ++c)
            for (const auto& t : C.maps[s][c].terms)
                if (t.m.degree() != C.shifts[s + 1][c] - C.shifts[s][t.comp])
                    return false;
    for (std::size_t g = 0; g < C.generators.size(); ++g)
        for (const auto& t : C.generators[g].terms)
            if (t.m.degree() + shift_of(C.ambient_shifts, t.comp) != C.shifts[0][g])
                return false;
    return true;
}

/// Filtration compatibility: entry (r, c) of d_{s+1} has valuation >= shift_{s+1}(c) - shift_s(r).
template <class K>
bool is_filtration_compatible(const FreeComplex<K>& C)
{
    for (std::size_t s = 0; s < C.maps.size(); ++s)
        for (std::size_t c = 0; c < C.maps[s].size(); ++c)
            for (const auto& t : C.maps[s][c].terms)
                if (t.m.degree() < C.shifts[s + 1][c] - C.shifts[s][t.comp])
                    return false;
    for (std::size_t g = 0; g < C.generators.size(); ++g)
        for (const auto& t : C.generators[g].terms)
            if (t.m.degree() + shift_of(C.ambient_shifts, t.comp) < C.shifts[0][g])
                return false;
    return true;
}

namespace detail {

template <class K>
Vec<K> drop_component(const Vec<K>& v, int comp, const TermOrder& ord)
{
    Vec<K> r;
    for (const auto& t : v.terms) {
        if (t.comp == comp)
            continue;
        r.terms.push_back(Term<K>{t.m, t.comp > comp ? t.comp - 1 : t.comp, t.c});
    }
    normalize_terms(r, ord);
    return r;
}

} // namespace detail

/**
 * Remove every unit entry by cancelling trivial summands. For a unit u at
 * (row r, column c) of d_{s+1}, the other columns x become
 * u*col_x - B_rx*col_c (or col_x - (B_rx/u)*col_c when u is a constant) and
 * lose row r; column c is dropped; d_{s+2} loses row c; d_s (or the
 * augmentation) loses column r.
 *
 * Units are searched map by map from d_1 upward, columns by ascending shift
 * (descending with reverse = true), rows by ascending index.
 */
template <class K>
std::vector<Cancellation> minimalize(FreeComplex<K>& C, bool reverse = false)
{
    std::vector<Cancellation> log;
    TermOrder base = C.base_order();
    for (std::size_t s = 0; s < C.maps.size(); ++s) {
        while (true) {
            auto& B = C.maps[s];
            std::vector<int> cols(B.size());
            for (std::size_t c = 0; c < B.size(); ++c)
                cols[c] = static_cast<int>(c);
            std::stable_sort(cols.begin(), cols.end(), [&](int a, int b) {
                return reverse ? C.shifts[s + 1][a] > C.shifts[s + 1][b] : C.shifts[s + 1][a] < C.shifts[s + 1][b];
            });
            int found_r = -1, found_c = -1;
            for (int c : cols) {
                int best_r = -1;
                for (const auto& t : B[c].terms)
                    if (t.m.is_one() && (best_r < 0 || t.comp < best_r))
                        best_r = t.comp;
                if (best_r >= 0) {
                    found_r = best_r;
                    found_c = c;
                    break;
                }
            }
            if (found_c < 0)
                break;
            const int r = found_r, c = found_c;
            log.push_back({static_cast<int>(s), r, c});
            Poly<K> u = component(B[c], r);
            bool scalar_unit = u.size() == 1 && u.lead_monomial().is_one();
            const K one = u.lead_coefficient() * u.lead_coefficient().inverse();
            const K u_inv = u.lead_coefficient().inverse();
            TermOrder row_ord = base.on_module(C.shifts[s]);
            std::vector<int> new_row_shifts = C.shifts[s];
            new_row_shifts.erase(new_row_shifts.begin() + r);
            TermOrder new_row_ord = base.on_module(new_row_shifts);
            const Vec<K> colc = B[c];
            std::vector<Vec<K>> nb;
            for (std::size_t x = 0; x < B.size(); ++x) {
                if (static_cast<int>(x) == c)
                    continue;
                Poly<K> brx = component(B[x], r);
                Vec<K> nx;
                if (brx.is_zero())
                    nx = B[x];
                else if (scalar_unit)
                    nx = sub_mul(B[x], one, Monomial(), mul(scale(brx, u_inv), colc, row_ord), row_ord);
                else
                    nx = sub_mul(mul(u, B[x], row_ord), one, Monomial(), mul(brx, colc, row_ord), row_ord);
                nb.push_back(detail::drop_component(nx, r, new_row_ord));
            }
            B = std::move(nb);
            C.shifts[s + 1].erase(C.shifts[s + 1].begin() + c);
            if (s + 1 < C.maps.size()) {
                std::vector<int> sh = C.shifts[s + 1];
                TermOrder o = base.on_module(sh);
                for (auto& col : C.maps[s + 1])
                    col = detail::drop_component(col, c, o);
            }
            if (s == 0) {
                if (!C.generators.empty())
                    C.generators.erase(C.generators.begin() + r);
            } else {
                C.maps[s - 1].erase(C.maps[s - 1].begin() + r);
            }
            C.shifts[s].erase(C.shifts[s].begin() + r);
        }
    }
    while (C.shifts.size() > 1 && C.shifts.back().empty()) {
        C.shifts.pop_back();
        if (!C.maps.empty())
            C.maps.pop_back();
    }
    C.minimal = !has_unit_entry(C);
    return log;
}

} // namespace gradlift
