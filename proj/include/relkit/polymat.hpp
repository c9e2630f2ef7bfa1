#ifndef RELKIT_POLYMAT_HPP
#define RELKIT_POLYMAT_HPP

#include <utility>
#include <vector>

#include "relkit/poly.hpp"
#include "relkit/scalar.hpp"

namespace relkit {

template <class F>
using PolyMat = std::vector<std::vector<Poly<F>>>;  // row-major

// A nonzero multiplier turning the given coefficients into small integral
// ones; fraction-free elimination only pays off on denominator-free input.
inline Rational integral_scale(const std::vector<Rational>& values) {
    Integer den_lcm = 1, num_gcd = 0;
    for (const Rational& v : values) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(v));
    for (const Rational& v : values) {
        Integer n = numerator(v) * (den_lcm / denominator(v));
        if (n < 0) n = -n;
        num_gcd = boost::multiprecision::gcd(num_gcd, n);
    }
    if (num_gcd == 0) num_gcd = 1;
    return Rational(den_lcm) / Rational(num_gcd);
}

inline GaussianRational integral_scale(const std::vector<GaussianRational>& values) {
    std::vector<Rational> parts;
    for (const GaussianRational& v : values) {
        parts.push_back(v.re);
        parts.push_back(v.im);
    }
    return GaussianRational(integral_scale(parts));
}

/**
 * Scales every column by a nonzero constant so its coefficients become
 * primitive integers.  Generic rank and the vanishing loci of the pivots are
 * unchanged, while the minor growth of the elimination stays integral.
 */
template <class F>
void normalize_columns(PolyMat<F>& m) {
    if (m.empty()) return;
    const std::size_t cols = m[0].size();
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<F> coeffs;
        for (const auto& row : m)
            for (const F& a : row[c].coeffs()) coeffs.push_back(a);
        if (coeffs.empty()) continue;
        const F s = integral_scale(coeffs);
        if (s == F(1)) continue;
        for (auto& row : m) row[c] = row[c] * s;
    }
}

/**
 * Result of fraction-free (Bareiss) elimination of a matrix with polynomial
 * entries over the field of rational functions: the rank valid for all but
 * finitely many specialisation points, and the nonconstant pivot polynomials.
 * A point at which no pivot vanishes specialises the whole elimination, so
 * the rank of the evaluated matrix can only change at pivot roots.
 */
template <class F>
struct PivotResult {
    int generic_rank = 0;
    std::vector<Poly<F>> pivots;  // monic, nonconstant only
};

/**
 * Column-major fraction-free Gaussian elimination.  Within each column the
 * pivot is a nonzero entry of minimal degree (ties broken by row order),
 * which limits both coefficient growth and spurious pivot roots.
 */
template <class F>
PivotResult<F> function_field_pivots(PolyMat<F> m) {
    PivotResult<F> out;
    if (m.empty() || m[0].empty()) return out;
    normalize_columns(m);
    const std::size_t rows = m.size(), cols = m[0].size();
    Poly<F> prev = Poly<F>::constant(F(1));
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            if (piv == rows || m[i][c].degree() < m[piv][c].degree()) piv = i;
        }
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const Poly<F> p = m[r][c];
        if (!p.is_constant()) out.pivots.push_back(p.monic());
        // one-step Bareiss update of every remaining row, including rows
        // whose entry in the pivot column is zero (required for exactness)
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                m[i][j] = Poly<F>::exact_div(m[i][j] * p - m[r][j] * m[i][c], prev);
            }
            m[i][c] = Poly<F>();
        }
        prev = p;
        ++r;
        ++out.generic_rank;
    }
    return out;
}

/**
 * Determinant of a square polynomial matrix by single-step fraction-free
 * elimination with row pivoting.
 */
template <class F>
Poly<F> poly_det(PolyMat<F> m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly<F>::constant(F(1));
    internal_check(m[0].size() == n, "poly_det needs a square matrix");
    Poly<F> prev = Poly<F>::constant(F(1));
    bool negate = false;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t i = c; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            if (piv == n || m[i][c].degree() < m[piv][c].degree()) piv = i;
        }
        if (piv == n) return Poly<F>();
        if (piv != c) {
            std::swap(m[piv], m[c]);
            negate = !negate;
        }
        const Poly<F> p = m[c][c];
        // update all trailing rows, including those with a zero pivot-column
        // entry, to keep the one-step divisions exact
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                m[i][j] = Poly<F>::exact_div(m[i][j] * p - m[c][j] * m[i][c], prev);
            m[i][c] = Poly<F>();
        }
        prev = p;
    }
    Poly<F> det = m[n - 1][n - 1];
    return negate ? -det : det;
}

/**
 * Resultant with respect to the outer variable of two polynomials given by
 * their coefficient lists (entries are polynomials in a second variable),
 * via the Sylvester matrix.  Exact for integral input; otherwise the columns
 * are rescaled first, so the result can carry a nonzero constant factor
 * (immaterial for root extraction, its only use).
 */
template <class F>
Poly<F> poly_resultant(const std::vector<Poly<F>>& f, const std::vector<Poly<F>>& g) {
    auto deg = [](const std::vector<Poly<F>>& p) {
        int d = -1;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (!p[k].is_zero()) d = static_cast<int>(k);
        return d;
    };
    const int df = deg(f), dg = deg(g);
    internal_check(df >= 1 && dg >= 1, "resultant needs positive degrees");
    const int n = df + dg;
    PolyMat<F> s(static_cast<std::size_t>(n), std::vector<Poly<F>>(static_cast<std::size_t>(n)));
    for (int i = 0; i < dg; ++i)
        for (int k = 0; k <= df; ++k) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + k)] = f[static_cast<std::size_t>(df - k)];
    for (int i = 0; i < df; ++i)
        for (int k = 0; k <= dg; ++k) s[static_cast<std::size_t>(dg + i)][static_cast<std::size_t>(i + k)] = g[static_cast<std::size_t>(dg - k)];
    normalize_columns(s);
    return poly_det(std::move(s));
}

}  // namespace relkit

#endif
