#pragma once

/**
 * @file scalar.hpp
 * @brief Exact coefficient fields: the rationals (GMP backed) and prime fields F_p, p < 2^31.
 *
 * Both field element types are plain immutable values. Each has a matching
 * field descriptor (RationalField, PrimeField) that knows how to build
 * constants, which is all the polynomial engine needs beyond the arithmetic
 * operators.
 */

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <variant>

namespace gradlift {

/// Raised for malformed input (bad syntax, zero denominators, non-prime moduli).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when a computation would divide by zero in a field.
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Rational {
public:
    Rational() = default;
    Rational(long v) : q_(v) {}
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Reduced representative num/den with positive denominator.
    static Rational normalize(const mpz_class& num, const mpz_class& den)
    {
        if (den == 0)
            throw DomainError("rational with zero denominator");
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    }

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational inverse() const
    {
        if (is_zero())
            throw DomainError("inversion of zero");
        mpq_class r;
        mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
        return Rational(std::move(r));
    }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o)
    {
        if (o.is_zero())
            throw DomainError("division by zero");
        q_ /= o.q_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }

    /// "a/b", or "a" when the denominator is 1.
    std::string to_string() const
    {
        if (q_.get_den() == 1)
            return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    static Rational parse(const std::string& text)
    {
        auto slash = text.find('/');
        mpz_class num, den(1);
        if (num.set_str(text.substr(0, slash), 10) != 0)
            throw InputError("malformed rational '" + text + "'");
        if (slash != std::string::npos && den.set_str(text.substr(slash + 1), 10) != 0)
            throw InputError("malformed rational '" + text + "'");
        if (den == 0)
            throw InputError("rational with zero denominator '" + text + "'");
        return normalize(num, den);
    }

private:
    mpq_class q_;
};

inline bool is_prime_u32(std::uint32_t p)
{
    if (p < 2)
        return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

/// Residue modulo a prime p < 2^31. The modulus travels with the value.
class Modular {
public:
    Modular() = default;
    Modular(std::uint32_t residue, std::uint32_t modulus) : r_(residue % modulus), p_(modulus) {}

    static Modular from_int(long v, std::uint32_t p)
    {
        long r = v % static_cast<long>(p);
        if (r < 0)
            r += p;
        return Modular(static_cast<std::uint32_t>(r), p);
    }

    std::uint32_t residue() const { return r_; }
    std::uint32_t modulus() const { return p_; }
    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }

    Modular inverse() const
    {
        if (r_ == 0)
            throw DomainError("inversion of zero");
        std::int64_t a = r_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            std::int64_t q = a / b;
            std::int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        x0 %= static_cast<std::int64_t>(p_);
        if (x0 < 0)
            x0 += p_;
        return Modular(static_cast<std::uint32_t>(x0), p_);
    }

    Modular operator-() const { return Modular(r_ == 0 ? 0 : p_ - r_, p_); }
    Modular& operator+=(const Modular& o)
    {
        std::uint32_t s = r_ + o.r_;
        r_ = s >= p_ ? s - p_ : s;
        return *this;
    }
    Modular& operator-=(const Modular& o)
    {
        r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
        return *this;
    }
    Modular& operator*=(const Modular& o)
    {
        r_ = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r_) * o.r_ % p_);
        return *this;
    }
    Modular& operator/=(const Modular& o) { return *this *= o.inverse(); }
    friend Modular operator+(Modular a, const Modular& b) { return a += b; }
    friend Modular operator-(Modular a, const Modular& b) { return a -= b; }
    friend Modular operator*(Modular a, const Modular& b) { return a *= b; }
    friend Modular operator/(Modular a, const Modular& b) { return a /= b; }
    friend bool operator==(const Modular& a, const Modular& b) { return a.r_ == b.r_ && a.p_ == b.p_; }
    friend bool operator!=(const Modular& a, const Modular& b) { return !(a == b); }

    /// "r mod p".
    std::string to_string() const { return std::to_string(r_) + " mod " + std::to_string(p_); }

    /// Coefficient rendering inside a polynomial: the plain residue.
    std::string coefficient_string() const { return std::to_string(r_); }

private:
    std::uint32_t r_ = 0;
    std::uint32_t p_ = 2;
};

struct RationalField {
    using value_type = Rational;
    Rational from_int(long v) const { return Rational(v); }
    Rational parse(const std::string& text) const { return Rational::parse(text); }
    std::string name() const { return "QQ"; }
    bool characteristic_zero() const { return true; }
};

struct PrimeField {
    using value_type = Modular;
    std::uint32_t p = 32003;

    PrimeField() = default;
    explicit PrimeField(std::uint32_t modulus) : p(modulus)
    {
        if (modulus >= (1u << 31) || !is_prime_u32(modulus))
            throw InputError("modulus " + std::to_string(modulus) + " is not a prime below 2^31");
    }
    Modular from_int(long v) const { return Modular::from_int(v, p); }
    Modular parse(const std::string& text) const
    {
        Rational q = Rational::parse(text);
        mpz_class n = q.numerator() % p, d = q.denominator() % p;
        if (n < 0)
            n += p;
        Modular den(static_cast<std::uint32_t>(d.get_ui()), p);
        if (den.is_zero())
            throw InputError("denominator of '" + text + "' vanishes mod " + std::to_string(p));
        return Modular(static_cast<std::uint32_t>(n.get_ui()), p) / den;
    }
    std::string name() const { return "F" + std::to_string(p); }
    bool characteristic_zero() const { return false; }
};

inline std::string coefficient_string(const Rational& c) { return c.to_string(); }
inline std::string coefficient_string(const Modular& c) { return c.coefficient_string(); }

/// Tagged scalar used at API edges: either a reduced rational or a prime-field residue.
using Scalar = std::variant<Rational, Modular>;

inline Scalar rational_normalize(const mpz_class& num, const mpz_class& den)
{
    return Rational::normalize(num, den);
}

inline Scalar field_invert(const Scalar& a)
{
    return std::visit([](const auto& v) -> Scalar { return v.inverse(); }, a);
}

inline std::string to_string(const Scalar& a)
{
    return std::visit([](const auto& v) { return v.to_string(); }, a);
}

/// Inverse of to_string: "a/b", "a", or "r mod p".
inline Scalar parse_scalar(const std::string& text)
{
    auto pos = text.find(" mod ");
    if (pos == std::string::npos)
        return Rational::parse(text);
    PrimeField f(static_cast<std::uint32_t>(std::stoul(text.substr(pos + 5))));
    return f.parse(text.substr(0, pos));
}

/// The integer v in the field of `one` (Q, or F_p with p read off the element).
inline Rational integer_like(const Rational&, long v) { return Rational(v); }
inline Modular integer_like(const Modular& one, long v) { return Modular::from_int(v, one.modulus()); }

} // namespace gradlift
