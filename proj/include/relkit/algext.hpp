#ifndef RELKIT_ALGEXT_HPP
#define RELKIT_ALGEXT_HPP

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "relkit/linalg.hpp"
#include "relkit/poly.hpp"
#include "relkit/polymat.hpp"

namespace relkit {

/**
 * Exact linear algebra in F[t]/(q) for a squarefree modulus q, used to test
 * rank conditions at every root of q at once.  When q is reducible a zero
 * divisor eventually needs inverting; the discovered factor is thrown and
 * the caller restarts on both halves (dynamic evaluation).
 */
namespace algext {

template <class F>
struct Split {
    Poly<F> factor;
};

template <class F>
class Elem {
  public:
    Elem() = default;
    Elem(Poly<F> v, std::shared_ptr<const Poly<F>> mod) : v_(std::move(v)), mod_(std::move(mod)) {
        reduce();
    }

    static Elem constant(const F& c, const std::shared_ptr<const Poly<F>>& mod) {
        return Elem(Poly<F>::constant(c), mod);
    }
    static Elem generator(const std::shared_ptr<const Poly<F>>& mod) {
        return Elem(Poly<F>::variable(), mod);
    }

    bool is_zero() const { return v_.is_zero(); }
    const Poly<F>& value() const { return v_; }

    friend Elem operator+(const Elem& a, const Elem& b) { return Elem(a.v_ + b.v_, a.pick(b)); }
    friend Elem operator-(const Elem& a, const Elem& b) { return Elem(a.v_ - b.v_, a.pick(b)); }
    friend Elem operator-(const Elem& a) { return Elem(-a.v_, a.mod_); }
    friend Elem operator*(const Elem& a, const Elem& b) { return Elem(a.v_ * b.v_, a.pick(b)); }

    // Multiplicative inverse; throws Split when the modulus factors.
    Elem inv() const {
        internal_check(!is_zero(), "inverting zero in an extension ring");
        // extended euclid on (v, q)
        Poly<F> r0 = *mod_, r1 = v_;
        Poly<F> s0, s1 = Poly<F>::constant(F(1));
        while (!r1.is_zero()) {
            auto [q, r] = Poly<F>::divmod(r0, r1);
            Poly<F> s2 = s0 - q * s1;
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s2);
        }
        if (r0.degree() == 0) {
            const F lead = r0.leading();
            return Elem(s0 * field_inverse(lead), mod_);
        }
        throw Split<F>{r0.monic()};  // proper factor of the modulus
    }

  private:
    std::shared_ptr<const Poly<F>> pick(const Elem& other) const { return mod_ ? mod_ : other.mod_; }
    void reduce() {
        if (mod_ && !v_.is_zero() && v_.degree() >= mod_->degree()) v_ = v_ % *mod_;
    }
    Poly<F> v_;
    std::shared_ptr<const Poly<F>> mod_;
};

template <class F>
using ExtMat = std::vector<std::vector<Elem<F>>>;

// Reduced row echelon form over the extension; returns pivot columns.
template <class F>
std::vector<std::size_t> rref(ExtMat<F>& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { piv = i; break; }
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        const Elem<F> inv = m[r][c].inv();
        for (std::size_t j = 0; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Elem<F> f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

// Kernel basis (columns of coefficients) over the extension.
template <class F>
std::vector<std::vector<Elem<F>>> ext_kernel(ExtMat<F> m, std::size_t cols,
                                             const std::shared_ptr<const Poly<F>>& mod) {
    const auto piv = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : piv) is_pivot[c] = true;
    std::vector<std::vector<Elem<F>>> out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem<F>> v(cols, Elem<F>::constant(F(0), mod));
        v[free] = Elem<F>::constant(F(1), mod);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][free];
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace algext

/**
 * Fast one-sided innocence certificate.  If M (a matrix of polynomials in
 * one variable over Q) keeps its generic rank r at every root t0 of q, then
 * some r x r minor D of M satisfies gcd(D, q) = 1.  A dynamic-evaluation
 * elimination of M over F_p[t]/(q mod p) that reaches r pivots in every
 * branch exhibits, per branch, such a minor invertible modulo (p, branch).
 * Each root's minimal polynomial m is irreducible and m mod p divides some
 * branch modulus, so m cannot divide that branch's minor over Q either;
 * hence the minor is nonzero at the root and the rank is certified to stay
 * r.  Failure is inconclusive (unlucky prime) and callers fall back to the
 * exact extension-field computation.
 */
namespace modp {

using u64 = std::uint64_t;

inline u64 mulm(u64 a, u64 b, u64 p) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

inline u64 powm(u64 b, u64 e, u64 p) {
    u64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = mulm(r, b, p);
        b = mulm(b, b, p);
        e >>= 1;
    }
    return r;
}

inline u64 invm(u64 a, u64 p) { return powm(a % p, p - 2, p); }

using UPoly = std::vector<u64>;  // ascending degree, trimmed, coefficients mod p

inline void trim(UPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline UPoly rem(UPoly a, const UPoly& b, u64 p) {
    const u64 lead_inv = invm(b.back(), p);
    while (a.size() >= b.size()) {
        const u64 c = mulm(a.back(), lead_inv, p);
        const std::size_t off = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k)
            a[off + k] = (a[off + k] + p - mulm(c, b[k], p)) % p;
        a.pop_back();
        trim(a);
    }
    return a;
}

inline UPoly gcd(UPoly a, UPoly b, u64 p) {
    while (!b.empty()) {
        UPoly r = rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const u64 inv = invm(a.back(), p);
        for (auto& c : a) c = mulm(c, inv, p);
    }
    return a;
}

inline UPoly quot(UPoly a, const UPoly& b, u64 p) {
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    const u64 lead_inv = invm(b.back(), p);
    while (a.size() >= b.size()) {
        const u64 c = mulm(a.back(), lead_inv, p);
        const std::size_t off = a.size() - b.size();
        q[off] = c;
        for (std::size_t k = 0; k < b.size(); ++k)
            a[off + k] = (a[off + k] + p - mulm(c, b[k], p)) % p;
        a.pop_back();
        trim(a);
    }
    return q;
}

inline UPoly mul_mod(const UPoly& a, const UPoly& b, const UPoly& modulus, u64 p) {
    if (a.empty() || b.empty()) return {};
    UPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + static_cast<unsigned __int128>(a[i]) * b[j]) % p;
    trim(out);
    return out.size() >= modulus.size() ? rem(std::move(out), modulus, p) : out;
}

inline UPoly sub(UPoly a, const UPoly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t k = 0; k < b.size(); ++k) a[k] = (a[k] + p - b[k]) % p;
    trim(a);
    return a;
}

// Reduce a rational-coefficient polynomial mod p; false when a denominator
// vanishes mod p.
inline bool reduce(const Poly<Rational>& f, u64 p, UPoly& out) {
    out.assign(f.coeffs().size(), 0);
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
        const Integer num = numerator(f.coeffs()[k]) % Integer(p);
        const Integer den = denominator(f.coeffs()[k]) % Integer(p);
        if (den == 0) return false;
        u64 n = static_cast<u64>(num < 0 ? num + Integer(p) : num);
        out[k] = mulm(n, invm(static_cast<u64>(den), p), p);
    }
    trim(out);
    return true;
}

// Eliminates the matrix over F_p[t]/(branch) for every branch of q; true
// when each branch reaches `rank` pivots.
inline bool branches_keep_rank(const std::vector<std::vector<UPoly>>& m, const UPoly& q, int rank,
                               u64 p) {
    std::vector<UPoly> work{q};
    while (!work.empty()) {
        UPoly cur = work.back();
        work.pop_back();
        if (cur.size() <= 1) continue;
        // RREF attempt over F_p[t]/(cur); splits on non-invertible pivots
        auto rows = m;
        for (auto& row : rows)
            for (auto& e : row)
                if (e.size() >= cur.size()) e = rem(e, cur, p);
        const std::size_t nrows = rows.size(), ncols = rows.empty() ? 0 : rows[0].size();
        std::size_t r = 0;
        bool split = false;
        for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
            std::size_t piv = nrows;
            for (std::size_t i = r; i < nrows; ++i)
                if (!rows[i][c].empty()) { piv = i; break; }
            if (piv == nrows) continue;
            std::swap(rows[piv], rows[r]);
            const UPoly g = gcd(rows[r][c], cur, p);
            if (g.size() > 1) {  // entries are reduced, so g is a proper factor
                work.push_back(g);
                work.push_back(quot(cur, g, p));
                split = true;
                break;
            }
            for (std::size_t i = r + 1; i < nrows; ++i) {
                if (rows[i][c].empty()) continue;
                // row_i := row_i * piv - row_r * entry  (scaling is harmless)
                const UPoly factor = rows[i][c];
                for (std::size_t j = 0; j < ncols; ++j)
                    rows[i][j] = sub(mul_mod(rows[i][j], rows[r][c], cur, p),
                                     mul_mod(rows[r][j], factor, cur, p), p);
            }
            ++r;
        }
        if (split) continue;
        if (static_cast<int>(r) < rank) return false;
    }
    return true;
}

}  // namespace modp

/**
 * Certifies that the polynomial matrix keeps rank `rank` at every root of q.
 * Only a "true" answer is meaningful; "false" means the cheap certificate
 * did not apply and an exact check is required.
 */
inline bool modp_certifies_rank(const Poly<Rational>& q, const PolyMat<Rational>& m, int rank) {
    static const modp::u64 primes[] = {2147483629ull, 2147483587ull};
    for (modp::u64 p : primes) {
        modp::UPoly qbar;
        if (!modp::reduce(q.monic(), p, qbar)) continue;
        if (static_cast<int>(qbar.size()) != q.degree() + 1) continue;
        std::vector<std::vector<modp::UPoly>> rows(m.size());
        bool ok = true;
        for (std::size_t i = 0; i < m.size() && ok; ++i) {
            rows[i].resize(m[i].size());
            for (std::size_t j = 0; j < m[i].size(); ++j)
                if (!modp::reduce(m[i][j], p, rows[i][j])) { ok = false; break; }
        }
        if (!ok) continue;
        if (modp::branches_keep_rank(rows, qbar, rank, p)) return true;
    }
    return false;
}

inline bool modp_certifies_rank(const Poly<GaussianRational>&, const PolyMat<GaussianRational>&,
                                int) {
    return false;  // no machine-prime shortcut for the gaussian field
}

/**
 * True iff some root t0 of q (over the algebraic closure, handled exactly
 * through F[t]/(q)) admits a kernel vector c of (Y - t0 X) whose image X c
 * lies outside the span of the columns of S.  With S empty this asks whether
 * t0 yields any eigenvector at all.
 */
template <class F>
bool roots_give_kernel_outside(const Poly<F>& q, const Mat<F>& xblk, const Mat<F>& yblk,
                               const Mat<F>& s) {
    using E = algext::Elem<F>;
    std::vector<Poly<F>> work{q.monic()};
    while (!work.empty()) {
        Poly<F> cur = work.back();
        work.pop_back();
        if (cur.degree() < 1) continue;
        auto mod = std::make_shared<const Poly<F>>(cur);
        try {
            const E t = E::generator(mod);
            const std::size_t rows = static_cast<std::size_t>(yblk.rows());
            const std::size_t cols = static_cast<std::size_t>(yblk.cols());
            algext::ExtMat<F> m(rows, std::vector<E>(cols));
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    m[i][j] = E::constant(yblk(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), mod) -
                              t * E::constant(xblk(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), mod);
            const auto null = algext::ext_kernel(std::move(m), cols, mod);
            const std::size_t n = static_cast<std::size_t>(xblk.rows());
            for (const auto& c : null) {
                // image x = X c, then consistency of S * a = x
                std::vector<E> x(n, E::constant(F(0), mod));
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < cols; ++j)
                        x[i] = x[i] + E::constant(xblk(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), mod) * c[j];
                const std::size_t sc = static_cast<std::size_t>(s.cols());
                algext::ExtMat<F> aug(n, std::vector<E>(sc + 1));
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < sc; ++j)
                        aug[i][j] = E::constant(s(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), mod);
                    aug[i][sc] = x[i];
                }
                const auto piv = algext::rref(aug);
                if (!piv.empty() && piv.back() == sc) return true;  // inconsistent: escapes span(S)
            }
        } catch (const algext::Split<F>& sp) {
            work.push_back(sp.factor);
            work.push_back(Poly<F>::exact_div(cur, sp.factor));
        }
    }
    return false;
}

}  // namespace relkit

#endif
