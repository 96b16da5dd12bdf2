#pragma once

#include "poly.hpp"

#include <cctype>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace gradlift {

/// GRADED: P = k[x_1..x_n] with the standard grading.
/// LOCAL: R = k[[x_1..x_n]], elements presented by polynomials.
enum class RingMode { Graded, Local };

inline std::string to_string(RingMode m) { return m == RingMode::Graded ? "graded" : "local"; }

/**
 * Variables, coefficient field and mode. The mode fixes the ambient order:
 * degrevlex for GRADED, negdegrevlex for LOCAL, unless an explicit order is given.
 */
template <class F>
class Ring {
public:
    using Field = F;
    using K = typename F::value_type;

    Ring(std::vector<std::string> vars, F field, RingMode mode)
        : Ring(vars, field, mode,
               TermOrder(mode == RingMode::Graded ? OrderKind::DegRevLex : OrderKind::NegDegRevLex,
                         static_cast<int>(vars.size())))
    {
    }

    Ring(std::vector<std::string> vars, F field, RingMode mode, TermOrder order)
        : vars_(std::move(vars)), field_(std::move(field)), mode_(mode), order_(std::move(order))
    {
        if (vars_.empty())
            throw InputError("a ring needs at least one variable");
        if (static_cast<int>(vars_.size()) > kMaxVars)
            throw InputError("at most " + std::to_string(kMaxVars) + " variables are supported");
        std::set<std::string> seen;
        for (const auto& v : vars_) {
            if (v.empty())
                throw InputError("empty variable name");
            for (char ch : v)
                if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
                    throw InputError("variable name '" + v + "' is not alphanumeric");
            if (std::isdigit(static_cast<unsigned char>(v[0])))
                throw InputError("variable name '" + v + "' starts with a digit");
            if (!seen.insert(v).second)
                throw InputError("duplicate variable '" + v + "'");
        }
        if (order_.nvars() != nvars())
            throw InputError("order does not match the variable count");
    }

    const std::vector<std::string>& variables() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    const F& field() const { return field_; }
    RingMode mode() const { return mode_; }
    const TermOrder& order() const { return order_; }

    Ring with_mode(RingMode mode) const { return Ring(vars_, field_, mode); }
    Ring with_order(TermOrder order) const { return Ring(vars_, field_, mode_, std::move(order)); }

    K one() const { return field_.from_int(1); }
    K minus_one() const { return field_.from_int(-1); }
    K scalar(long v) const { return field_.from_int(v); }

    int index_of(const std::string& name) const
    {
        for (int i = 0; i < nvars(); ++i)
            if (vars_[i] == name)
                return i;
        return -1;
    }

    Poly<K> variable(int i) const { return monomial_poly(Monomial::variable(i), one()); }
    Poly<K> constant(long c) const { return monomial_poly(Monomial(), scalar(c)); }

    Poly<K> parse(const std::string& text) const;

    std::string format_monomial(const Monomial& m) const
    {
        std::string s;
        for (int i = 0; i < nvars(); ++i) {
            if (m[i] == 0)
                continue;
            if (!s.empty())
                s += "*";
            s += vars_[i];
            if (m[i] > 1)
                s += "^" + std::to_string(m[i]);
        }
        return s.empty() ? "1" : s;
    }

    /// Polynomial text in the input grammar, e.g. "x^2*y - x*t^3 - z^6".
    std::string format(const Poly<K>& p) const
    {
        if (p.is_zero())
            return "0";
        std::string s;
        bool first = true;
        for (const auto& t : p.terms) {
            std::string c = coefficient_string(t.c);
            bool neg = !c.empty() && c[0] == '-';
            if (neg)
                c = c.substr(1);
            if (first)
                s += neg ? "-" : "";
            else
                s += neg ? " - " : " + ";
            first = false;
            if (t.m.is_one())
                s += c;
            else if (c == "1")
                s += format_monomial(t.m);
            else
                s += c + "*" + format_monomial(t.m);
        }
        return s;
    }

    /// Module element as "[p_1, ..., p_rank]".
    std::string format_vector(const Vec<K>& v, int rank) const
    {
        std::string s = "[";
        for (int c = 0; c < rank; ++c) {
            if (c)
                s += ", ";
            s += format(component(v, c));
        }
        return s + "]";
    }

private:
    std::vector<std::string> vars_;
    F field_;
    RingMode mode_;
    TermOrder order_;
};

namespace detail {

template <class F>
class PolyParser {
public:
    using K = typename F::value_type;
    PolyParser(const Ring<F>& ring, const std::string& text) : ring_(ring), s_(text) {}

    Poly<K> run()
    {
        skip();
        if (pos_ >= s_.size())
            fail("empty polynomial");
        Poly<K> p = expr();
        skip();
        if (pos_ < s_.size())
            fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const
    {
        throw InputError(msg + " at position " + std::to_string(pos_ + 1) + " in \"" + s_ + "\"");
    }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }

    bool peek(char ch)
    {
        skip();
        return pos_ < s_.size() && s_[pos_] == ch;
    }

    bool starts_factor()
    {
        skip();
        if (pos_ >= s_.size())
            return false;
        char ch = s_[pos_];
        return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '(';
    }

    Poly<K> expr()
    {
        const auto& ord = ring_.order();
        Poly<K> acc;
        bool neg = false;
        if (peek('+'))
            ++pos_;
        else if (peek('-')) {
            ++pos_;
            neg = true;
        }
        Poly<K> t = term();
        acc = neg ? negate(t) : t;
        while (true) {
            if (peek('+')) {
                ++pos_;
                acc = add(acc, term(), ord, ring_.minus_one());
            } else if (peek('-')) {
                ++pos_;
                acc = sub_mul(acc, ring_.one(), Monomial(), term(), ord);
            } else
                break;
        }
        return acc;
    }

    Poly<K> term()
    {
        Poly<K> acc = factor();
        while (true) {
            if (peek('*')) {
                ++pos_;
                acc = mul(acc, factor(), ring_.order());
            } else if (starts_factor())
                acc = mul(acc, factor(), ring_.order());
            else
                break;
        }
        return acc;
    }

    Poly<K> factor()
    {
        Poly<K> base = primary();
        if (peek('^')) {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            long e = std::stol(s_.substr(start, pos_ - start));
            if (e > kMaxExponent)
                fail("exponent too large");
            Poly<K> r = ring_.constant(1);
            for (long i = 0; i < e; ++i)
                r = mul(r, base, ring_.order());
            return r;
        }
        return base;
    }

    Poly<K> primary()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        char ch = s_[pos_];
        if (ch == '(') {
            ++pos_;
            Poly<K> p = expr();
            if (!peek(')'))
                fail("expected ')'");
            ++pos_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::size_t dstart = pos_;
                while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                    ++pos_;
                if (dstart == pos_)
                    fail("expected denominator");
            }
            std::string num = s_.substr(start, pos_ - start);
            K c;
            try {
                c = ring_.field().parse(num);
            } catch (const std::exception& e) {
                fail(e.what());
            }
            return monomial_poly(Monomial(), c);
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            int idx = ring_.index_of(name);
            if (idx < 0) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            return ring_.variable(idx);
        }
        fail(std::string("unexpected '") + ch + "'");
    }

    const Ring<F>& ring_;
    std::string s_;
    std::size_t pos_ = 0;
};

} // namespace detail

template <class F>
Poly<typename F::value_type> Ring<F>::parse(const std::string& text) const
{
    return detail::PolyParser<F>(*this, text).run();
}

/// Free module with basis e_1..e_s and special-filtration shifts nu_1..nu_s.
struct FreeModule {
    std::vector<int> shifts;

    FreeModule() = default;
    explicit FreeModule(std::vector<int> s) : shifts(std::move(s)) {}
    int rank() const { return static_cast<int>(shifts.size()); }
};

} // namespace gradlift
