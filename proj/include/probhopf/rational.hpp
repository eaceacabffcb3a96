// Exact rational scalars and snapping of floating-point values back to
// rationals.  Rational is an arbitrary-precision reduced fraction with a
// positive denominator (both invariants maintained by the backing type).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace probhopf {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const Int& n) { return n.convert_to<double>(); }

// Renders "p/q" with no spaces, or just "p" for integers.
inline std::string render_rational(const Rational& q) {
    std::ostringstream os;
    os << num(q);
    if (den(q) != 1) os << '/' << den(q);
    return os.str();
}

// Accepts "p", "p/q" or a decimal like "0.25"/"2.5e-3".  A decimal is parsed
// through binary floating point, so only use it for inexact data.
inline std::optional<Rational> parse_rational_token(const std::string& tok) {
    if (tok.empty()) return std::nullopt;
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) {
            if (tok.find('.') != std::string::npos || tok.find('e') != std::string::npos ||
                tok.find('E') != std::string::npos)
                return std::nullopt;  // decimal form: caller handles float fallback
            return Rational(Int(tok));
        }
        Int n(tok.substr(0, slash)), d(tok.substr(slash + 1));
        if (d == 0) return std::nullopt;
        return Rational(n, d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

inline bool is_decimal_token(const std::string& tok) {
    return tok.find('.') != std::string::npos || tok.find('e') != std::string::npos ||
           tok.find('E') != std::string::npos;
}

// Nearest-rational recovery by continued fractions.  Succeeds only when the
// answer is unambiguous: the convergent p/q must satisfy |x - p/q| <= tol
// *and* lie within half the Farey spacing, |x - p/q| < 1/(2*q*max_den), which
// makes p/q the unique closest fraction among all denominators <= max_den
// (two distinct fractions with denominators q, q' differ by at least
// 1/(q*q') >= 1/(q*max_den)).  The second condition is what makes the
// function usable as an irrationality screen: values like pi or
// (sqrt(5)-1)/2 admit *many* fractions within loose tolerances at
// max_den 1e6, so they come back absent instead of silently picking one.
inline std::optional<Rational> snap_rational(double x, long long max_den = 1000000,
                                             double tol = 1e-9) {
    if (!std::isfinite(x) || max_den < 1) return std::nullopt;
    Int h_prev = 1, h_prev2 = 0;  // numerator recurrence
    Int k_prev = 0, k_prev2 = 1;  // denominator recurrence
    double z = x;
    for (int step = 0; step < 64; ++step) {
        double fa = std::floor(z);
        if (std::abs(fa) > 9e15) break;  // remainder at the noise floor
        Int a(static_cast<long long>(fa));
        Int h = a * h_prev + h_prev2;
        Int k = a * k_prev + k_prev2;
        if (k > max_den) break;
        h_prev2 = h_prev; h_prev = h;
        k_prev2 = k_prev; k_prev = k;
        Rational cand(h, k);
        double err = std::abs(x - to_double(cand));
        if (err <= tol && err < 0.5 / (to_double(k) * static_cast<double>(max_den)))
            return cand;
        double frac = z - fa;
        if (frac < 1e-13) break;
        z = 1.0 / frac;
    }
    return std::nullopt;
}

inline std::optional<long long> snap_integer(double x, double tol = 1e-6) {
    if (!std::isfinite(x)) return std::nullopt;
    double r = std::round(x);
    if (std::abs(x - r) > tol || std::abs(r) > 9e17) return std::nullopt;
    return static_cast<long long>(r);
}

// Complex number with exact rational real/imaginary parts.  Covers character
// values like -1/2 or i; anything irrational stays in floating point.
struct GaussianRational {
    Rational re, im;

    GaussianRational() = default;
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im == 0; }
    GaussianRational conj() const { return {re, -im}; }
    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

inline std::optional<GaussianRational> snap_gaussian(std::complex<double> z,
                                                     long long max_den = 1000000,
                                                     double tol = 1e-9) {
    auto re = snap_rational(z.real(), max_den, tol);
    auto im = snap_rational(z.imag(), max_den, tol);
    if (!re || !im) return std::nullopt;
    return GaussianRational(*re, *im);
}

inline std::string render_gaussian(const GaussianRational& g) {
    if (g.is_real()) return render_rational(g.re);
    std::ostringstream os;
    if (g.re != 0) os << render_rational(g.re);
    if (g.im > 0 && g.re != 0) os << '+';
    if (g.im == -1) os << '-';
    else if (g.im != 1) os << render_rational(g.im);
    os << 'i';
    return os.str();
}

// "a+bi" with 12 significant digits; drops a vanished imaginary part.
inline std::string render_complex(std::complex<double> z, double zero_tol = 5e-13) {
    std::ostringstream os;
    os.precision(12);
    if (std::abs(z.imag()) <= zero_tol * std::max(1.0, std::abs(z.real()))) {
        double re = z.real() == 0.0 ? 0.0 : z.real();  // normalize -0
        os << re;
        return os.str();
    }
    os << z.real() << (z.imag() < 0 ? '-' : '+');
    double ai = std::abs(z.imag());
    os << ai << 'i';
    return os.str();
}

// Integer square root test on exact values (used by the integrality checks).
inline bool is_perfect_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = boost::multiprecision::sqrt(n);
    if (r * r == n) { if (root) *root = r; return true; }
    return false;
}

}  // namespace probhopf
