#ifndef RELKIT_POLY_HPP
#define RELKIT_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "relkit/errors.hpp"
#include "relkit/scalar.hpp"

namespace relkit {

/**
 * Univariate polynomial over an exact field F, stored densely by ascending
 * degree with a nonzero leading coefficient (the zero polynomial has an
 * empty coefficient list and degree -1).
 */
template <class F>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<F> coeffs) : c_(coeffs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const F& a) { return Poly(std::vector<F>{a}); }
    static Poly variable() { return Poly(std::vector<F>{F(0), F(1)}); }
    // x - r
    static Poly linear_root(const F& r) { return Poly(std::vector<F>{-r, F(1)}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    const std::vector<F>& coeffs() const { return c_; }

    const F& operator[](int k) const {
        static const F kZero(0);
        if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
        return c_[static_cast<std::size_t>(k)];
    }

    F leading() const { return c_.empty() ? F(0) : c_.back(); }

    F eval(const F& x) const {
        F acc(0);
        for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
        return acc;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        F lc = leading();
        if (lc == F(1)) return *this;
        Poly out = *this;
        for (auto& a : out.c_) a = a / lc;
        return out;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly();
        std::vector<F> d(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * F(static_cast<int>(k));
        return Poly(std::move(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<F> out(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] += b.c_[k];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<F> out(std::max(a.c_.size(), b.c_.size()), F(0));
        for (std::size_t k = 0; k < a.c_.size(); ++k) out[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) out[k] -= b.c_[k];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a) {
        std::vector<F> out(a.c_);
        for (auto& v : out) v = -v;
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<F> out(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    friend Poly operator*(const Poly& a, const F& s) {
        std::vector<F> out(a.c_);
        for (auto& v : out) v = v * s;
        return Poly(std::move(out));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; the divisor must be nonzero.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero();
        std::vector<F> rem(a.c_);
        const int db = b.degree();
        const F lb = b.leading();
        int dr = static_cast<int>(rem.size()) - 1;
        std::vector<F> quo(dr >= db ? static_cast<std::size_t>(dr - db + 1) : 0, F(0));
        while (dr >= db) {
            while (dr >= 0 && rem[static_cast<std::size_t>(dr)] == F(0)) --dr;
            if (dr < db) break;
            F q = rem[static_cast<std::size_t>(dr)] / lb;
            quo[static_cast<std::size_t>(dr - db)] = q;
            for (int k = 0; k <= db; ++k)
                rem[static_cast<std::size_t>(dr - db + k)] -= q * b.c_[static_cast<std::size_t>(k)];
            --dr;
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
    friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

    // Exact division; throws if b does not divide a.
    static Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        internal_check(r.is_zero(), "polynomial division expected to be exact");
        return q;
    }

    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (int k = degree(); k >= 0; --k) {
            const F& a = (*this)[k];
            if (a == F(0)) continue;
            if (!out.empty()) out += " + ";
            std::string coeff = FieldTraits<F>::str(a);
            if (k == 0) {
                out += coeff;
            } else {
                if (coeff != "1") out += "(" + coeff + ")*";
                out += var;
                if (k > 1) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back() == F(0)) c_.pop_back();
    }
    std::vector<F> c_;
};

// Monic gcd over a field.
template <class F>
Poly<F> poly_gcd(Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = b;
        b = r;
    }
    return a.monic();
}

// Largest squarefree divisor: p / gcd(p, p').
template <class F>
Poly<F> squarefree_part(const Poly<F>& p) {
    if (p.is_zero() || p.is_constant()) return p.monic();
    Poly<F> g = poly_gcd(p, p.derivative());
    if (g.is_constant()) return p.monic();
    return Poly<F>::exact_div(p, g).monic();
}

}  // namespace relkit

#endif
