#ifndef RELKIT_SCALAR_HPP
#define RELKIT_SCALAR_HPP

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>
#include <cctype>
#include <string>
#include <utility>

#include "relkit/errors.hpp"

namespace relkit {

// Exact base field elements. Rationals are stored in lowest terms with a
// positive denominator (boost/GMP canonicalize on every operation).
// Expression templates are off so arithmetic results keep the field type,
// which generic code over the scalar relies on.
using Rational = boost::multiprecision::number<boost::multiprecision::backends::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::backends::gmp_int,
                                              boost::multiprecision::et_off>;

inline Integer numerator(const Rational& x)   { return Integer(boost::multiprecision::numerator(x)); }
inline Integer denominator(const Rational& x) { return Integer(boost::multiprecision::denominator(x)); }

// Gaussian rationals a + b*i over Rational.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() : re(0), im(0) {}
    GaussianRational(int v) : re(v), im(0) {}  // NOLINT: implicit by design
    GaussianRational(Rational r) : re(std::move(r)), im(0) {}
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        Rational n = b.norm();
        if (n == 0) throw DivisionByZero();
        GaussianRational c = a * b.conj();
        return {c.re / n, c.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { *this = *this + b; return *this; }
    GaussianRational& operator-=(const GaussianRational& b) { *this = *this - b; return *this; }
    GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }
    GaussianRational& operator/=(const GaussianRational& b) { *this = *this / b; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

namespace detail {

inline std::string rational_str(const Rational& x) { return x.str(); }

inline Integer parse_integer(const std::string& s) {
    if (s.empty()) throw ParseError("empty integer literal");
    std::size_t k = (s[0] == '-') ? 1 : 0;
    if (k == s.size()) throw ParseError("bad integer literal: " + s);
    for (; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k])))
            throw ParseError("bad integer literal: " + s);
    return Integer(s);
}

inline Rational parse_rational(std::string s) {
    if (!s.empty() && s.front() == '+') s.erase(s.begin());
    if (s.empty()) throw ParseError("empty scalar string");
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    const Integer num = parse_integer(s.substr(0, slash));
    const Integer den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in scalar: " + s);
    return Rational(num) / Rational(den);
}

// Gaussian literals look like "p/q", "p/q+r/si" or "p/q-r/si".
inline GaussianRational parse_gaussian(const std::string& s) {
    if (s.empty()) throw ParseError("empty scalar string");
    if (s.back() != 'i') return GaussianRational(parse_rational(s));
    std::string body = s.substr(0, s.size() - 1);
    // Split at the last top-level '+' or '-' that is not the leading sign
    // and not directly after '/': that separator starts the imaginary part.
    std::size_t split = std::string::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != '/' && body[k - 1] != '+' && body[k - 1] != '-') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        // purely imaginary, e.g. "3/2i" or "-i"
        if (body.empty() || body == "+" || body == "-") body += "1";
        return GaussianRational(Rational(0), parse_rational(body));
    }
    std::string re = body.substr(0, split);
    std::string im = body.substr(split);  // keeps the sign
    if (im == "+" || im == "-") im += "1";
    return GaussianRational(parse_rational(re), parse_rational(im));
}

inline std::string gaussian_str(const GaussianRational& x) {
    if (x.im == 0) return rational_str(x.re);
    std::string out = rational_str(x.re);
    if (x.im < 0)
        out += "-" + rational_str(Rational(-x.im));
    else
        out += "+" + rational_str(x.im);
    out += "i";
    return out;
}

}  // namespace detail

// The handful of facts generic code needs about a working field: parsing,
// canonical printing, and a deterministic total order for sorting output.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static constexpr bool is_gaussian = false;
    static const char* name() { return "rational"; }
    static Rational parse(const std::string& s) { return detail::parse_rational(s); }
    static std::string str(const Rational& x) { return detail::rational_str(x); }
    static bool less(const Rational& a, const Rational& b) { return a < b; }
};

template <>
struct FieldTraits<GaussianRational> {
    static constexpr bool is_gaussian = true;
    static const char* name() { return "gaussian"; }
    static GaussianRational parse(const std::string& s) { return detail::parse_gaussian(s); }
    static std::string str(const GaussianRational& x) { return detail::gaussian_str(x); }
    static bool less(const GaussianRational& a, const GaussianRational& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    }
};

template <class F>
inline F field_inverse(const F& x) {
    if (x == F(0)) throw DivisionByZero();
    return F(1) / x;
}

template <class F>
inline F field_div(const F& a, const F& b) {
    if (b == F(0)) throw DivisionByZero();
    return a / b;
}

template <class F>
struct FieldLess {
    bool operator()(const F& a, const F& b) const { return FieldTraits<F>::less(a, b); }
};

}  // namespace relkit

namespace Eigen {

template <>
struct NumTraits<relkit::GaussianRational> : GenericNumTraits<relkit::GaussianRational> {
    typedef relkit::GaussianRational Real;
    typedef relkit::GaussianRational NonInteger;
    typedef relkit::GaussianRational Nested;
    enum {
        IsComplex = 0,  // treated as a plain field scalar; no conj() paths
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 120,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif
