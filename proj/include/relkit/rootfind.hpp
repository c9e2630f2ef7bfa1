#ifndef RELKIT_ROOTFIND_HPP
#define RELKIT_ROOTFIND_HPP

#include <algorithm>
#include <utility>
#include <vector>

#include "relkit/poly.hpp"
#include "relkit/polymat.hpp"
#include "relkit/scalar.hpp"

namespace relkit {

/**
 * Outcome of splitting a polynomial over the working field F: all roots in F
 * with multiplicities, plus the residual factors (monic, squarefree,
 * nonconstant, without roots in F) that the field cannot split further.
 */
template <class F>
struct RootSplit {
    std::vector<std::pair<F, int>> roots;  // sorted by FieldTraits<F>::less
    std::vector<Poly<F>> residual;
};

namespace rootdetail {

inline Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Divisors of |n| by trial division.  Returns empty when the cofactor cannot
// be certified prime within the budget or the divisor list explodes; callers
// then use the modular method instead.
inline std::vector<Integer> bounded_divisors(Integer n, unsigned prime_budget = 100000,
                                             std::size_t max_divisors = 4096) {
    n = iabs(n);
    if (n == 0) return {};
    std::vector<std::pair<Integer, int>> fac;
    Integer m = n;
    for (Integer p = 2; p <= prime_budget && p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (m > 1) {
        if (m > Integer(prime_budget) * Integer(prime_budget)) return {};
        fac.emplace_back(m, 1);
    }
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) {
                divs.push_back(divs[j] * pk);
                if (divs.size() > max_divisors) return {};
            }
        }
    }
    return divs;
}

// ----- arithmetic for dense integer polynomials modulo m -----

using ZPoly = std::vector<Integer>;  // ascending degree

inline void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly zp_reduce(const ZPoly& p, const Integer& m) {
    ZPoly out(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        out[k] = p[k] % m;
        if (out[k] < 0) out[k] += m;
    }
    zp_trim(out);
    return out;
}

inline ZPoly zp_derivative(const ZPoly& p) {
    if (p.size() <= 1) return {};
    ZPoly d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * Integer(k);
    return d;
}

inline Integer zp_eval_mod(const ZPoly& p, const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (std::size_t k = p.size(); k-- > 0;) acc = (acc * x + p[k]) % m;
    if (acc < 0) acc += m;
    return acc;
}

inline Integer mod_inv(const Integer& a, const Integer& m) {
    Integer old_r = a % m, r = m, old_s = 1, s = 0;
    if (old_r < 0) old_r += m;
    while (r != 0) {
        Integer q = old_r / r;
        Integer t = old_r - q * r;
        old_r = r; r = t;
        t = old_s - q * s;
        old_s = s; s = t;
    }
    internal_check(old_r == 1, "modular inverse of a non-unit");
    old_s %= m;
    if (old_s < 0) old_s += m;
    return old_s;
}

inline ZPoly zp_mulmod(const ZPoly& a, const ZPoly& b, const Integer& q) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % q;
    zp_trim(out);
    return out;
}

inline std::pair<ZPoly, ZPoly> zp_divmod(ZPoly a, const ZPoly& b, const Integer& q) {
    internal_check(!b.empty(), "mod-q division by zero polynomial");
    const Integer lb_inv = mod_inv(b.back(), q);
    ZPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
    while (a.size() >= b.size()) {
        const Integer c = a.back() * lb_inv % q;
        const std::size_t off = a.size() - b.size();
        quo[off] = c;
        for (std::size_t k = 0; k < b.size(); ++k) {
            a[off + k] = (a[off + k] - c * b[k]) % q;
            if (a[off + k] < 0) a[off + k] += q;
        }
        a.pop_back();
        zp_trim(a);
    }
    return {std::move(quo), std::move(a)};
}

inline ZPoly zp_gcd(ZPoly a, ZPoly b, const Integer& q) {
    while (!b.empty()) {
        ZPoly r = zp_divmod(std::move(a), b, q).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const Integer inv = mod_inv(a.back(), q);
        for (auto& c : a) c = c * inv % q;
    }
    return a;
}

// base^e modulo (f, q)
inline ZPoly zp_powmod(ZPoly base, Integer e, const ZPoly& f, const Integer& q) {
    ZPoly acc{Integer(1)};
    base = zp_divmod(std::move(base), f, q).second;
    while (e > 0) {
        if (e % 2 == 1) acc = zp_divmod(zp_mulmod(acc, base, q), f, q).second;
        base = zp_divmod(zp_mulmod(base, base, q), f, q).second;
        e /= 2;
    }
    return acc;
}

// All roots of p modulo the odd prime q; p must be squarefree mod q.
inline std::vector<Integer> roots_mod_q(const ZPoly& p, const Integer& q) {
    ZPoly xq = zp_powmod(ZPoly{Integer(0), Integer(1)}, q, p, q);
    // x^q - x
    if (xq.size() < 2) xq.resize(2, Integer(0));
    xq[1] = (xq[1] + q - 1) % q;
    zp_trim(xq);
    ZPoly g = zp_gcd(p, xq, q);  // product of the distinct linear factors

    std::vector<Integer> roots;
    std::vector<ZPoly> work{g};
    Integer shift = 0;
    while (!work.empty()) {
        ZPoly f = work.back();
        work.pop_back();
        if (f.size() <= 1) continue;
        if (f.size() == 2) {
            roots.push_back((q - f[0] * mod_inv(f[1], q) % q) % q);
            continue;
        }
        // split by quadratic-residue status of shifted roots
        ZPoly h;
        for (;; ++shift) {
            ZPoly acc = zp_powmod(ZPoly{shift % q, Integer(1)}, (q - 1) / 2, f, q);
            if (acc.empty())
                acc = ZPoly{q - 1};
            else {
                acc[0] = (acc[0] + q - 1) % q;
                zp_trim(acc);
            }
            if (acc.empty()) continue;
            h = zp_gcd(f, acc, q);
            if (h.size() > 1 && h.size() < f.size()) break;
        }
        ++shift;
        work.push_back(h);
        work.push_back(zp_divmod(std::move(f), h, q).first);
    }
    return roots;
}

// Hensel-lift a simple root of ip modulo q until the modulus exceeds bound.
inline std::pair<Integer, Integer> lift_root(const ZPoly& ip, Integer r, const Integer& q,
                                             const Integer& bound) {
    const ZPoly der = zp_derivative(ip);
    Integer modulus = q;
    while (modulus < bound) {
        const Integer next = modulus * modulus;
        const Integer fr = zp_eval_mod(ip, r, next);
        const Integer fpr = zp_eval_mod(der, r, modulus);
        const Integer t = mod_inv(fpr, modulus);
        r = (r - fr % next * (t % next)) % next;
        if (r < 0) r += next;
        modulus = next;
    }
    return {r, modulus};
}

// Find u/v with |u| <= nmax, 0 < v <= dmax and u == r*v (mod m).
inline bool rational_reconstruct(const Integer& r, const Integer& m, const Integer& nmax,
                                 const Integer& dmax, Integer& u, Integer& v) {
    Integer r0 = m, r1 = r % m, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > nmax) {
        const Integer qq = r0 / r1;
        Integer t = r0 - qq * r1;
        r0 = r1; r1 = t;
        t = s0 - qq * s1;
        s0 = s1; s1 = t;
    }
    u = r1;
    v = s1;
    if (v < 0) { v = -v; u = -u; }
    if (v == 0 || v > dmax) return false;
    return boost::multiprecision::gcd(iabs(u), v) == 1;
}

// Squarefree decomposition (Yun): p = prod out[k].first ^ out[k].second.
template <class F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition(const Poly<F>& p) {
    std::vector<std::pair<Poly<F>, int>> out;
    Poly<F> a = p.monic();
    Poly<F> g = poly_gcd(a, a.derivative());
    if (g.is_constant()) {
        out.emplace_back(a, 1);
        return out;
    }
    Poly<F> w = Poly<F>::exact_div(a, g);
    int mult = 1;
    while (!w.is_constant()) {
        Poly<F> y = poly_gcd(w, g);
        Poly<F> factor = Poly<F>::exact_div(w, y);
        if (factor.degree() >= 1) out.emplace_back(factor.monic(), mult);
        w = y;
        g = Poly<F>::exact_div(g, y);
        ++mult;
    }
    return out;
}

// Candidate roots in F of a squarefree polynomial with no zero root.
inline std::vector<Rational> field_root_candidates(const Poly<Rational>& sf) {
    // primitive integer form
    Integer den_lcm = 1;
    for (const auto& a : sf.coeffs()) den_lcm = boost::multiprecision::lcm(den_lcm, denominator(a));
    ZPoly ip(sf.coeffs().size());
    Integer content = 0;
    for (std::size_t k = 0; k < sf.coeffs().size(); ++k) {
        ip[k] = numerator(sf.coeffs()[k] * Rational(den_lcm));
        content = boost::multiprecision::gcd(content, iabs(ip[k]));
    }
    if (content > 1)
        for (auto& c : ip) c /= content;

    const Integer a0 = ip.front(), an = ip.back();
    internal_check(a0 != 0, "zero roots must be stripped before candidate search");
    std::vector<Rational> found;

    auto divs0 = bounded_divisors(a0);
    auto divsn = bounded_divisors(an);
    if (!divs0.empty() && !divsn.empty() && divs0.size() * divsn.size() <= 20000) {
        for (const Integer& u : divs0)
            for (const Integer& v : divsn) {
                if (boost::multiprecision::gcd(u, v) != 1) continue;
                Rational cand(u, v);
                if (sf.eval(cand) == Rational(0)) found.push_back(cand);
                if (sf.eval(-cand) == Rational(0)) found.push_back(-cand);
            }
        return found;
    }

    // modular path: deterministic prime walk until p stays squarefree mod q
    const Integer bound = 2 * iabs(a0) * iabs(an) + 1;
    Integer q = 1000003;
    for (;; q += 2) {
        bool is_prime = true;
        for (Integer d = 3; d * d <= q; d += 2)
            if (q % d == 0) { is_prime = false; break; }
        if (!is_prime) continue;
        if (an % q == 0 || a0 % q == 0) continue;
        ZPoly pq = zp_reduce(ip, q);
        if (zp_gcd(pq, zp_reduce(zp_derivative(ip), q), q).size() == 1) break;
    }
    const ZPoly pq = zp_reduce(ip, q);
    for (const Integer& r0 : roots_mod_q(pq, q)) {
        auto [r, modulus] = lift_root(ip, r0, q, bound);
        Integer u, v;
        if (rational_reconstruct(r, modulus, iabs(a0), iabs(an), u, v)) {
            Rational cand(u, v);
            if (sf.eval(cand) == Rational(0)) found.push_back(cand);
        }
    }
    return found;
}

// Roots in Q(i) of a squarefree Gaussian polynomial with no zero root, via
// the resultant of the real/imaginary parts of f(a + b*i).
inline std::vector<GaussianRational> field_root_candidates(const Poly<GaussianRational>& sf);

}  // namespace rootdetail

/**
 * Split a nonzero polynomial over F into its roots in F (with
 * multiplicities, sorted) and residual squarefree factors without F-roots.
 * Works for F = Rational and F = GaussianRational.
 */
template <class F>
RootSplit<F> poly_roots(const Poly<F>& input) {
    if (input.is_zero()) throw ZeroPolynomial();
    RootSplit<F> out;
    if (input.is_constant()) return out;

    Poly<F> p = input.monic();
    // roots at zero
    int zero_mult = 0;
    while (p.degree() >= 1 && p[0] == F(0)) {
        std::vector<F> shifted(p.coeffs().begin() + 1, p.coeffs().end());
        p = Poly<F>(std::move(shifted));
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(F(0), zero_mult);

    while (p.degree() >= 1) {
        const Poly<F> sf = squarefree_part(p);
        std::vector<F> found;
        if (sf.degree() == 1)
            found.push_back(-sf[0] / sf[1]);
        else
            found = rootdetail::field_root_candidates(sf);
        if (found.empty()) break;
        for (const F& r : found) {
            int mult = 0;
            const Poly<F> lin = Poly<F>::linear_root(r);
            while (true) {
                auto [quo, rem] = Poly<F>::divmod(p, lin);
                if (!rem.is_zero()) break;
                p = quo;
                ++mult;
            }
            if (mult > 0) out.roots.emplace_back(r, mult);
        }
    }

    if (p.degree() >= 1) {
        for (auto& [factor, mult] : rootdetail::squarefree_decomposition(p)) {
            bool dup = false;
            for (const auto& f : out.residual)
                if (f == factor) { dup = true; break; }
            if (!dup) out.residual.push_back(factor);
        }
    }

    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return FieldTraits<F>::less(a.first, b.first); });
    return out;
}

namespace rootdetail {

inline std::vector<GaussianRational> field_root_candidates(const Poly<GaussianRational>& sf) {
    const int d = sf.degree();
    internal_check(d >= 2, "gaussian candidate search expects degree >= 2");

    // coeff[b_deg][a_deg] layout for Re f(a+bi) and Im f(a+bi)
    std::vector<std::vector<Rational>> re(static_cast<std::size_t>(d + 1),
                                          std::vector<Rational>(static_cast<std::size_t>(d + 1), Rational(0)));
    auto im = re, pr = re, pi = re;
    pr[0][0] = 1;  // (a+bi)^0
    for (int k = 0; k <= d; ++k) {
        const GaussianRational c = sf[k];
        for (int bb = 0; bb <= k; ++bb)
            for (int aa = 0; aa + bb <= k; ++aa) {
                re[bb][aa] += c.re * pr[bb][aa] - c.im * pi[bb][aa];
                im[bb][aa] += c.re * pi[bb][aa] + c.im * pr[bb][aa];
            }
        if (k == d) break;
        auto nr = pr, ni = pi;
        for (auto& row : nr) std::fill(row.begin(), row.end(), Rational(0));
        for (auto& row : ni) std::fill(row.begin(), row.end(), Rational(0));
        for (int bb = 0; bb <= k; ++bb)
            for (int aa = 0; aa + bb <= k; ++aa) {
                if (pr[bb][aa] == 0 && pi[bb][aa] == 0) continue;
                nr[bb][aa + 1] += pr[bb][aa];
                ni[bb][aa + 1] += pi[bb][aa];
                nr[bb + 1][aa] -= pi[bb][aa];
                ni[bb + 1][aa] += pr[bb][aa];
            }
        pr = std::move(nr);
        pi = std::move(ni);
    }

    auto to_b_poly = [&](const std::vector<std::vector<Rational>>& coeff) {
        std::vector<Poly<Rational>> out;
        for (int bb = 0; bb <= d; ++bb) out.push_back(Poly<Rational>(std::vector<Rational>(coeff[static_cast<std::size_t>(bb)])));
        while (!out.empty() && out.back().is_zero()) out.pop_back();
        return out;
    };
    std::vector<Poly<Rational>> re_b = to_b_poly(re), im_b = to_b_poly(im);
    internal_check(!re_b.empty() && !im_b.empty(),
                   "nonconstant polynomial with identically real or imaginary values");

    std::vector<GaussianRational> found;
    auto roots_at_a = [&](const Rational& a0) {
        // specialise both parts at a = a0 and intersect their rational b-roots
        auto specialise = [&](const std::vector<Poly<Rational>>& fb) {
            std::vector<Rational> c;
            for (const auto& pa : fb) c.push_back(pa.eval(a0));
            return Poly<Rational>(std::move(c));
        };
        const Poly<Rational> rb = specialise(re_b), ib = specialise(im_b);
        Poly<Rational> g;
        if (rb.is_zero())
            g = ib;
        else if (ib.is_zero())
            g = rb;
        else
            g = poly_gcd(rb, ib);
        if (g.is_zero()) return;  // cannot happen for nonzero sf
        for (const auto& [b0, mult] : poly_roots(g).roots) {
            GaussianRational cand(a0, b0);
            if (sf.eval(cand) == GaussianRational(0)) found.push_back(cand);
        }
    };

    const bool re_const_b = re_b.size() <= 1, im_const_b = im_b.size() <= 1;
    Poly<Rational> a_poly;
    if (im_const_b && !im_b.empty())
        a_poly = im_b[0];
    else if (re_const_b && !re_b.empty())
        a_poly = re_b[0];
    else
        a_poly = poly_resultant(re_b, im_b);
    internal_check(!a_poly.is_zero(), "vanishing resultant in gaussian root search");
    if (a_poly.is_constant()) return found;
    for (const auto& [a0, mult] : poly_roots(a_poly).roots) roots_at_a(a0);
    return found;
}

}  // namespace rootdetail

}  // namespace relkit

#endif
