#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gradlift {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxExponent = (1 << 15) - 1;

class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent vector with a cached total degree and a support bitmask.
/// Variables beyond the ring's count are always zero.
class Monomial {
public:
    Monomial() = default;

    template <class Range>
    static Monomial from_exponents(const Range& exps)
    {
        Monomial m;
        int i = 0;
        for (auto e : exps) {
            if (i >= kMaxVars)
                throw OverflowError("too many variables");
            m.set(i++, static_cast<int>(e));
        }
        return m;
    }

    static Monomial variable(int i, int power = 1)
    {
        Monomial m;
        m.set(i, power);
        return m;
    }

    int operator[](int i) const { return e_[i]; }
    int degree() const { return deg_; }
    std::uint32_t support() const { return mask_; }
    bool is_one() const { return deg_ == 0; }

    void set(int i, int value)
    {
        if (value < 0 || value > kMaxExponent)
            throw OverflowError("exponent out of range");
        deg_ += value - e_[i];
        e_[i] = static_cast<std::int16_t>(value);
        if (value)
            mask_ |= (1u << i);
        else
            mask_ &= ~(1u << i);
    }

    bool divides(const Monomial& o) const
    {
        if ((mask_ & ~o.mask_) != 0 || deg_ > o.deg_)
            return false;
        for (int i = 0; i < kMaxVars; ++i)
            if (e_[i] > o.e_[i])
                return false;
        return true;
    }

    bool coprime(const Monomial& o) const { return (mask_ & o.mask_) == 0; }

    friend Monomial operator*(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int v = a.e_[i] + b.e_[i];
            if (v > kMaxExponent)
                throw OverflowError("exponent overflow in monomial product");
            r.e_[i] = static_cast<std::int16_t>(v);
        }
        r.deg_ = a.deg_ + b.deg_;
        r.mask_ = a.mask_ | b.mask_;
        return r;
    }

    /// a / b; requires b | a.
    friend Monomial operator/(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e_[i] = static_cast<std::int16_t>(a.e_[i] - b.e_[i]);
            if (r.e_[i])
                r.mask_ |= (1u << i);
        }
        r.deg_ = a.deg_ - b.deg_;
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i)
            r.e_[i] = std::max(a.e_[i], b.e_[i]);
        r.mask_ = a.mask_ | b.mask_;
        r.deg_ = 0;
        for (int i = 0; i < kMaxVars; ++i)
            r.deg_ += r.e_[i];
        return r;
    }

    static Monomial gcd(const Monomial& a, const Monomial& b)
    {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e_[i] = std::min(a.e_[i], b.e_[i]);
            if (r.e_[i])
                r.mask_ |= (1u << i);
            r.deg_ += r.e_[i];
        }
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b)
    {
        return a.mask_ == b.mask_ && a.deg_ == b.deg_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    /// Plain lexicographic comparison of exponent vectors (x_0 most significant);
    /// used for container keys, not as a term order.
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.e_ < b.e_; }

    std::size_t hash() const
    {
        std::size_t h = 1469598103934665603ull;
        for (int i = 0; i < kMaxVars; ++i)
            h = (h ^ static_cast<std::uint16_t>(e_[i])) * 1099511628211ull;
        return h;
    }

private:
    std::array<std::int16_t, kMaxVars> e_{};
    std::int32_t deg_ = 0;
    std::uint32_t mask_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree d in the first n variables, in lex-descending order
/// (x_0^d first).
inline std::vector<Monomial> monomials_of_degree(int n, int d)
{
    std::vector<Monomial> out;
    if (d < 0 || n <= 0)
        return out;
    std::array<int, kMaxVars> e{};
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == n - 1) {
            e[var] = left;
            Monomial m;
            for (int i = 0; i < n; ++i)
                m.set(i, e[i]);
            out.push_back(m);
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[var] = k;
            rec(var + 1, left - k);
        }
    };
    rec(0, d);
    return out;
}

} // namespace gradlift
