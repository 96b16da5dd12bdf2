#pragma once

#include "monomial.hpp"
#include "scalar.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradlift {

enum class OrderKind {
    Lex,          ///< pure lexicographic, x_0 > x_1 > ...
    DegLex,       ///< weighted degree, then lex
    DegRevLex,    ///< weighted degree, then reverse lex
    NegDegLex,    ///< local: lower weighted degree is larger, then lex
    NegDegRevLex, ///< local: lower weighted degree is larger, then reverse lex
    Elimination,  ///< block order: (masked variables, degrevlex) then (rest, degrevlex)
};

inline std::string to_string(OrderKind k)
{
    switch (k) {
    case OrderKind::Lex: return "lex";
    case OrderKind::DegLex: return "deglex";
    case OrderKind::DegRevLex: return "degrevlex";
    case OrderKind::NegDegLex: return "negdeglex";
    case OrderKind::NegDegRevLex: return "negdegrevlex";
    case OrderKind::Elimination: return "elimination";
    }
    return "?";
}

/**
 * Monomial order on terms x^a e_i of a free module.
 *
 * A term's degree is the weighted degree of x^a plus the shift of component i.
 * Components are grouped into levels; a term in a higher level beats every term
 * in a lower level (position-over-term between levels). Inside one level the
 * comparison is term-over-position, with e_0 > e_1 > ... as the final tie-break.
 */
class TermOrder {
public:
    TermOrder() = default;
    TermOrder(OrderKind kind, int nvars, std::vector<int> weights = {})
        : kind_(kind), nvars_(nvars), weights_(std::move(weights))
    {
        if (nvars < 1 || nvars > kMaxVars)
            throw InputError("variable count out of range");
        if (!weights_.empty() && static_cast<int>(weights_.size()) != nvars)
            throw InputError("weight vector length must equal variable count");
        for (int w : weights_)
            if (w <= 0)
                throw InputError("weights must be positive");
    }

    static TermOrder elimination(int nvars, std::uint32_t eliminated, std::vector<int> weights = {})
    {
        TermOrder o(OrderKind::Elimination, nvars, std::move(weights));
        o.elim_mask_ = eliminated;
        return o;
    }

    /// Same monomial order, acting on a free module with the given component shifts
    /// and levels (levels default to all zero).
    TermOrder on_module(std::vector<int> shifts, std::vector<int> levels = {}) const
    {
        TermOrder o = *this;
        o.shifts_ = std::move(shifts);
        o.levels_ = std::move(levels);
        return o;
    }

    /**
     * Global order on terms with one extra variable w (index nvars()) used to
     * homogenize: level, then degree counting w, then this order on the term
     * with w removed. On homogeneous elements the leading term is the leading
     * term of the dehomogenized element under this order.
     */
    TermOrder homogenized() const
    {
        if (nvars_ + 1 > kMaxVars)
            throw InputError("no variable slot left for homogenization");
        TermOrder o = *this;
        o.hom_var_ = nvars_;
        return o;
    }
    int homogenizing_variable() const { return hom_var_; }
    /// The order a homogenized order was built from.
    TermOrder base() const
    {
        TermOrder o = *this;
        o.hom_var_ = -1;
        return o;
    }

    OrderKind kind() const { return kind_; }
    int nvars() const { return nvars_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::vector<int>& shifts() const { return shifts_; }
    const std::vector<int>& levels() const { return levels_; }
    std::uint32_t eliminated() const { return elim_mask_; }
    bool is_local() const
    {
        return hom_var_ < 0 && (kind_ == OrderKind::NegDegLex || kind_ == OrderKind::NegDegRevLex);
    }
    bool is_global() const { return !is_local(); }
    bool has_levels() const
    {
        for (int l : levels_)
            if (l != 0)
                return true;
        return false;
    }

    int shift(int comp) const { return comp < static_cast<int>(shifts_.size()) ? shifts_[comp] : 0; }
    int level(int comp) const { return comp < static_cast<int>(levels_.size()) ? levels_[comp] : 0; }

    int wdeg(const Monomial& m) const
    {
        if (weights_.empty())
            return m.degree();
        int d = 0;
        for (int i = 0; i < nvars_; ++i)
            d += weights_[i] * m[i];
        return d;
    }

    int term_degree(const Monomial& m, int comp) const
    {
        return wdeg(m) + shift(comp) + (hom_var_ >= 0 ? m[hom_var_] : 0);
    }

    /// Sign of (a e_ca) - (b e_cb) in this order: 1, 0 or -1.
    int compare(const Monomial& a, int ca, const Monomial& b, int cb) const
    {
        if (!levels_.empty()) {
            int la = level(ca), lb = level(cb);
            if (la != lb)
                return la > lb ? 1 : -1;
        }
        int c = 0;
        if (hom_var_ >= 0) {
            c = cmp_int(term_degree(a, ca), term_degree(b, cb));
            if (c != 0)
                return c;
            Monomial x = a, y = b;
            x.set(hom_var_, 0);
            y.set(hom_var_, 0);
            return base_compare(x, ca, y, cb);
        }
        return base_compare(a, ca, b, cb);
    }

    int compare(const Monomial& a, const Monomial& b) const { return compare(a, 0, b, 0); }

private:
    int base_compare(const Monomial& a, int ca, const Monomial& b, int cb) const
    {
        int c = 0;
        switch (kind_) {
        case OrderKind::Lex:
            c = lex(a, b);
            break;
        case OrderKind::DegLex:
            c = cmp_int(term_degree(a, ca), term_degree(b, cb));
            if (c == 0)
                c = lex(a, b);
            break;
        case OrderKind::DegRevLex:
            c = cmp_int(term_degree(a, ca), term_degree(b, cb));
            if (c == 0)
                c = revlex(a, b, ~0u);
            break;
        case OrderKind::NegDegLex:
            c = cmp_int(term_degree(b, cb), term_degree(a, ca));
            if (c == 0)
                c = lex(a, b);
            break;
        case OrderKind::NegDegRevLex:
            c = cmp_int(term_degree(b, cb), term_degree(a, ca));
            if (c == 0)
                c = revlex(a, b, ~0u);
            break;
        case OrderKind::Elimination:
            c = cmp_int(block_degree(a, elim_mask_), block_degree(b, elim_mask_));
            if (c == 0)
                c = revlex(a, b, elim_mask_);
            if (c == 0)
                c = cmp_int(block_degree(a, ~elim_mask_) + shift(ca), block_degree(b, ~elim_mask_) + shift(cb));
            if (c == 0)
                c = revlex(a, b, ~elim_mask_);
            break;
        }
        if (c != 0)
            return c;
        if (ca != cb)
            return ca < cb ? 1 : -1;
        return 0;
    }

    static int cmp_int(int a, int b) { return a < b ? -1 : (a > b ? 1 : 0); }

    int lex(const Monomial& a, const Monomial& b) const
    {
        for (int i = 0; i < nvars_; ++i)
            if (a[i] != b[i])
                return a[i] > b[i] ? 1 : -1;
        return 0;
    }

    int revlex(const Monomial& a, const Monomial& b, std::uint32_t mask) const
    {
        for (int i = nvars_ - 1; i >= 0; --i) {
            if (!(mask & (1u << i)))
                continue;
            if (a[i] != b[i])
                return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }

    int block_degree(const Monomial& m, std::uint32_t mask) const
    {
        int d = 0;
        for (int i = 0; i < nvars_; ++i)
            if (mask & (1u << i))
                d += (weights_.empty() ? 1 : weights_[i]) * m[i];
        return d;
    }

    OrderKind kind_ = OrderKind::DegRevLex;
    int nvars_ = 1;
    std::vector<int> weights_;
    std::vector<int> shifts_;
    std::vector<int> levels_;
    std::uint32_t elim_mask_ = 0;
    int hom_var_ = -1;
};

} // namespace gradlift
