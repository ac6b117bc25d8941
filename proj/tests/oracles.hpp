#pragma once

// Reference computations that share no code with the library beyond data
// accessors: truncated power series, a bitmask model of Dpow(n), and the
// classical counting recurrences.

#include "jetkit/jets.hpp"
#include "jetkit/taylor.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using jetkit::JetCoord;
using jetkit::MultiIndex;
using jetkit::Rational;
using jetkit::SmallObject;
using jetkit::TaylorElement;

inline Rational fact(int n)
{
    Rational r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Rational choose(int n, int k)
{
    if (k < 0 || k > n) return 0;
    Rational r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Every exponent vector over p variables with total degree <= n.
inline std::vector<MultiIndex> exponents_up_to(int p, int n)
{
    std::vector<MultiIndex> out;
    MultiIndex cur(static_cast<std::size_t>(p), 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == p) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            cur[static_cast<std::size_t>(var)] = e;
            rec(var + 1, left - e);
        }
        cur[static_cast<std::size_t>(var)] = 0;
    };
    rec(0, n);
    return out;
}

inline Rational multi_factorial(const MultiIndex& m)
{
    Rational r = 1;
    for (int e : m) r *= fact(e);
    return r;
}

// Taylor polynomial of the section x -> u(x) of a jet, one polynomial per
// fibre coordinate, in the shifted variable h = x - x0.
using Poly = std::map<MultiIndex, Rational>;

inline std::vector<Poly> section_polynomials(const JetCoord& j)
{
    std::vector<Poly> out(static_cast<std::size_t>(j.q()));
    for (const MultiIndex& m : exponents_up_to(j.p(), j.order())) {
        const auto d = j.derivative(m);
        for (int c = 0; c < j.q(); ++c) out[static_cast<std::size_t>(c)][m] = d[static_cast<std::size_t>(c)] / multi_factorial(m);
    }
    return out;
}

// ---- truncated univariate series: the Faa di Bruno check ----------------

using Series = std::vector<Rational>;  // coefficients of t^0..t^n

inline Series series_mul(const Series& a, const Series& b)
{
    Series out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; i + k < a.size(); ++k) out[i + k] += a[i] * b[k];
    return out;
}

// u(gamma(t)) truncated at t^n, for gamma over Dn(n) with raw coefficients.
inline TaylorElement compose_series(const JetCoord& j, const TaylorElement& curve)
{
    const int n = curve.object().first_param();
    const auto size = static_cast<std::size_t>(n + 1);
    std::vector<Series> shift(static_cast<std::size_t>(j.p()), Series(size, Rational(0)));
    for (int i = 0; i < j.p(); ++i)
        for (int k = 1; k <= n; ++k) shift[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = curve.coeff_of({k})[static_cast<std::size_t>(i)];
    TaylorElement out(curve.object(), j.p() + j.q());
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i < j.p(); ++i) out.coeff_of({k})[static_cast<std::size_t>(i)] = curve.coeff_of({k})[static_cast<std::size_t>(i)];
    const auto polys = section_polynomials(j);
    for (int c = 0; c < j.q(); ++c) {
        Series total(size, Rational(0));
        for (const auto& [m, coeff] : polys[static_cast<std::size_t>(c)]) {
            Series term(size, Rational(0));
            term[0] = coeff;
            for (int i = 0; i < j.p(); ++i)
                for (int e = 0; e < m[static_cast<std::size_t>(i)]; ++e) term = series_mul(term, shift[static_cast<std::size_t>(i)]);
            for (std::size_t k = 0; k < size; ++k) total[k] += term[k];
        }
        for (int k = 0; k <= n; ++k) out.coeff_of({k})[static_cast<std::size_t>(j.p() + c)] = total[static_cast<std::size_t>(k)];
    }
    return out;
}

// ---- bitmask model of Dpow(n): monomial d^S <-> bitmask S -----------------

using Cube = std::vector<Rational>;  // 2^axes coefficients

inline Cube cube_mul(const Cube& a, const Cube& b)
{
    Cube out(a.size(), Rational(0));
    for (std::size_t s = 0; s < a.size(); ++s)
        for (std::size_t t = 0; t < b.size(); ++t)
            if ((s & t) == 0) out[s | t] += a[s] * b[t];
    return out;
}

inline MultiIndex mask_exponents(std::size_t mask, int axes)
{
    MultiIndex m(static_cast<std::size_t>(axes), 0);
    for (int i = 0; i < axes; ++i) m[static_cast<std::size_t>(i)] = static_cast<int>((mask >> i) & 1u);
    return m;
}

inline Poly derivative(const Poly& f, int var)
{
    Poly out;
    for (const auto& [m, c] : f) {
        const int e = m[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        MultiIndex lower = m;
        --lower[static_cast<std::size_t>(var)];
        out[lower] += c * e;
    }
    return out;
}

// f(h) for h a vector of Cube elements, by peeling the last axis:
// f(a + d b) = f(a) + d * sum_i (d_i f)(a) b_i with a, b free of that axis.
inline Cube eval_peeling(const Poly& f, const std::vector<Cube>& h, int axes)
{
    if (axes == 0) {
        Rational value = 0;
        for (const auto& [m, c] : f) {
            Rational term = c;
            for (std::size_t i = 0; i < m.size(); ++i)
                for (int e = 0; e < m[i]; ++e) term *= h[i][0];
            value += term;
        }
        return Cube{value};
    }
    const std::size_t half = std::size_t{1} << (axes - 1);
    std::vector<Cube> low;
    std::vector<Cube> top;
    for (const Cube& c : h) {
        low.emplace_back(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(half));
        top.emplace_back(c.begin() + static_cast<std::ptrdiff_t>(half), c.end());
    }
    Cube out(2 * half, Rational(0));
    const Cube base = eval_peeling(f, low, axes - 1);
    std::copy(base.begin(), base.end(), out.begin());
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Cube slope = cube_mul(eval_peeling(derivative(f, static_cast<int>(i)), low, axes - 1), top[i]);
        for (std::size_t s = 0; s < half; ++s) out[half + s] += slope[s];
    }
    return out;
}

// The section of j applied to g over Dpow(n) through the peeling recursion.
inline TaylorElement cube_by_peeling(const JetCoord& j, const TaylorElement& g)
{
    const int axes = g.object().first_param();
    const std::size_t size = std::size_t{1} << axes;
    std::vector<Cube> shift(static_cast<std::size_t>(j.p()), Cube(size, Rational(0)));
    for (std::size_t s = 1; s < size; ++s)
        for (int i = 0; i < j.p(); ++i) shift[static_cast<std::size_t>(i)][s] = g.coeff_of(mask_exponents(s, axes))[static_cast<std::size_t>(i)];
    TaylorElement out(g.object(), j.p() + j.q());
    for (std::size_t s = 0; s < size; ++s)
        for (int i = 0; i < j.p(); ++i) out.coeff_of(mask_exponents(s, axes))[static_cast<std::size_t>(i)] = g.coeff_of(mask_exponents(s, axes))[static_cast<std::size_t>(i)];
    const auto polys = section_polynomials(j);
    for (int c = 0; c < j.q(); ++c) {
        const Cube value = eval_peeling(polys[static_cast<std::size_t>(c)], shift, axes);
        for (std::size_t s = 0; s < size; ++s) out.coeff_of(mask_exponents(s, axes))[static_cast<std::size_t>(j.p() + c)] = value[s];
    }
    return out;
}

// ---- counting -------------------------------------------------------------

// Bell numbers as row sums of Stirling numbers of the second kind.
inline std::uint64_t bell(int n)
{
    std::vector<std::vector<std::uint64_t>> s(static_cast<std::size_t>(n + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(n + 1), 0));
    s[0][0] = 1;
    for (std::size_t a = 1; a <= static_cast<std::size_t>(n); ++a)
        for (std::size_t k = 1; k <= a; ++k) s[a][k] = k * s[a - 1][k] + s[a - 1][k - 1];
    std::uint64_t total = 0;
    for (std::uint64_t v : s[static_cast<std::size_t>(n)]) total += v;
    return total;
}

// Partition numbers by Euler's pentagonal number recurrence.
inline std::uint64_t partitions(int n)
{
    std::vector<long long> p(static_cast<std::size_t>(n + 1), 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long long total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            const int g2 = k * (3 * k + 1) / 2;
            if (g1 > m) break;
            const long long sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m) total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return static_cast<std::uint64_t>(p[static_cast<std::size_t>(n)]);
}

// ---- coordinate lengths ---------------------------------------------------

// Elements of R^{p+q} over Dsym(p, n).
inline Rational dsym_element_length(int p, int q, int n)
{
    Rational monomials = 0;
    for (int k = 0; k <= n; ++k) monomials += choose(p + k - 1, k);
    return (p + q) * monomials;
}
inline Rational jet_length(int p, int q, int n)
{
    Rational total = p + q;
    for (int k = 1; k <= n; ++k) total += q * choose(p + k - 1, k);
    return total;
}
// Elements of R^{p+q} over Dmany(C(p+n, n+1)).
inline Rational dmany_element_length(int p, int q, int n) { return (p + q) * (1 + choose(p + n, n + 1)); }
inline Rational form_length(int p, int q, int n) { return p + q + q * choose(p + n, n + 1); }

}  // namespace oracle
