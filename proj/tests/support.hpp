#pragma once

// Shared helpers for the test suites. The dense elimination here is
// deliberately separate from the engine's sparse echelon code.

#include <gradlift/ring.hpp>

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace testing_support {

using gradlift::Monomial;
using gradlift::Poly;
using gradlift::Rational;
using gradlift::RationalField;
using gradlift::RingMode;

using QRing = gradlift::Ring<RationalField>;

inline QRing ring(std::vector<std::string> vars, RingMode mode = RingMode::Graded)
{
    return QRing(std::move(vars), RationalField{}, mode);
}

inline std::vector<Poly<Rational>> polys(const QRing& R, std::initializer_list<const char*> texts)
{
    std::vector<Poly<Rational>> out;
    for (const char* t : texts)
        out.push_back(R.parse(t));
    return out;
}

inline std::vector<std::string> vars(int n, const std::string& stem = "x")
{
    std::vector<std::string> v;
    for (int i = 1; i <= n; ++i)
        v.push_back(stem + std::to_string(i));
    return v;
}

// Coefficient of monomial m in p, read through the text form so no engine
// arithmetic is involved.
inline mpq_class coeff(const Poly<Rational>& p, const Monomial& m)
{
    for (const auto& t : p.terms)
        if (t.m == m)
            return mpq_class(t.c.to_string());
    return 0;
}

// Rank of a dense rational matrix by plain Gaussian elimination.
inline int dense_rank(std::vector<std::vector<mpq_class>> a)
{
    int rank = 0;
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0)
            continue;
        std::swap(a[piv], a[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0)
                continue;
            mpq_class f = a[r][c] / a[rank][c];
            for (int k = c; k < cols; ++k)
                a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Rows of the given polynomials over the monomials of `basis`.
inline std::vector<std::vector<mpq_class>> rows_over(const std::vector<Poly<Rational>>& ps,
                                                     const std::vector<Monomial>& basis)
{
    std::vector<std::vector<mpq_class>> out;
    for (const auto& p : ps) {
        std::vector<mpq_class> row;
        for (const auto& m : basis)
            row.push_back(coeff(p, m));
        out.push_back(row);
    }
    return out;
}

// All monomials of degree exactly d in n variables.
inline std::vector<Monomial> degree_monomials(int n, int d)
{
    std::vector<Monomial> out;
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == n - 1) {
            e[i] = left;
            out.push_back(Monomial::from_exponents(e));
            return;
        }
        for (int k = left; k >= 0; --k) {
            e[i] = k;
            self(self, i + 1, left - k);
        }
    };
    if (n > 0 && d >= 0)
        rec(rec, 0, d);
    return out;
}

// Product of a monomial and a polynomial, term by term.
inline Poly<Rational> times(const Monomial& m, const Poly<Rational>& p, const gradlift::TermOrder& o)
{
    Poly<Rational> r;
    for (const auto& t : p.terms)
        r.terms.push_back(gradlift::Term<Rational>{m * t.m, 0, t.c});
    gradlift::normalize_terms(r, o);
    return r;
}

// dim_k of the degree-d part of the homogeneous ideal generated by gens
// (gens homogeneous in the standard grading).
inline int graded_piece_dim(const std::vector<Poly<Rational>>& gens, int n, int d, const gradlift::TermOrder& o)
{
    std::vector<Poly<Rational>> span;
    for (const auto& g : gens) {
        int k = d - g.terms.front().m.degree();
        if (k < 0)
            continue;
        for (const auto& m : degree_monomials(n, k))
            span.push_back(times(m, g, o));
    }
    if (span.empty())
        return 0;
    return dense_rank(rows_over(span, degree_monomials(n, d)));
}

// f lies in the degree-d part of (gens), all homogeneous of standard degree.
inline bool graded_member(const Poly<Rational>& f, const std::vector<Poly<Rational>>& gens, int n,
                          const gradlift::TermOrder& o)
{
    int d = f.terms.front().m.degree();
    int a = graded_piece_dim(gens, n, d, o);
    std::vector<Poly<Rational>> more = gens;
    more.push_back(f);
    return graded_piece_dim(more, n, d, o) == a;
}

// Binomial coefficient on machine integers.
inline long choose(long n, long k)
{
    if (k < 0 || n < k)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

} // namespace testing_support
