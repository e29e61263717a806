#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "freefusion/errors.hpp"

namespace freefusion {

using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" rendering, lowest terms, q > 0. Always carries the slash
/// so matrix files round-trip bit-exactly.
inline std::string format_rational(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
    try {
        auto slash = text.find('/');
        if (slash == std::string_view::npos)
            return Rational(boost::multiprecision::cpp_int(std::string(text)));
        boost::multiprecision::cpp_int p{std::string(text.substr(0, slash))};
        boost::multiprecision::cpp_int q{std::string(text.substr(slash + 1))};
        if (q == 0) throw parse_error("zero denominator: " + std::string(text));
        return Rational(p, q);
    } catch (const std::runtime_error& e) {
        throw parse_error("bad rational \"" + std::string(text) + "\": " + e.what());
    }
}

/// An element of Q(i): exact real and imaginary rational parts. A field with
/// decidable equality; every matrix computation in the library runs over it.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(int r) : re(r) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r) : re(std::move(r)) {} // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }

    /// re^2 + im^2; zero only for the zero element.
    Rational norm2() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& x, const GaussianRational& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x, const GaussianRational& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend GaussianRational operator-(const GaussianRational& x) { return {-x.re, -x.im}; }
    friend GaussianRational operator*(const GaussianRational& x, const GaussianRational& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend GaussianRational operator/(const GaussianRational& x, const GaussianRational& y) {
        Rational n = y.norm2();
        if (n == 0) throw domain_error("division by zero in Q(i)");
        GaussianRational t = x * y.conj();
        return {t.re / n, t.im / n};
    }

    GaussianRational& operator+=(const GaussianRational& y) { return *this = *this + y; }
    GaussianRational& operator-=(const GaussianRational& y) { return *this = *this - y; }
    GaussianRational& operator*=(const GaussianRational& y) { return *this = *this * y; }
    GaussianRational& operator/=(const GaussianRational& y) { return *this = *this / y; }

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

inline std::string format_gaussian(const GaussianRational& z) {
    return format_rational(z.re) + (z.im < 0 ? "" : "+") + format_rational(z.im) + "i";
}

} // namespace freefusion
