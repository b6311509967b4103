#ifndef YB_SCALAR_HPP
#define YB_SCALAR_HPP

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <concepts>
#include <cstdio>
#include <string>
#include <string_view>

namespace yb {

/// Exact backend: GMP rationals, always kept canonical (reduced, positive denominator).
using Rational = mpq_class;
/// Floating backend.
using Complex = std::complex<double>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    using real_type = Rational;
    static constexpr bool exact = true;
    static constexpr std::string_view backend = "exact-rational";
    static constexpr std::string_view mode = "exact";

    static Rational from_int(long v) { return Rational(v); }
    static Rational from_ratio(long num, long den) {
        Rational q(num, den);
        q.canonicalize();
        return q;
    }
    static Rational magnitude(const Rational& v) { return abs(v); }
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    // Exact zero is the only singular value in exact arithmetic.
    static bool negligible(const Rational& v, const Rational& /*scale*/) { return sgn(v) == 0; }
    static bool near_pole(const Rational& v, const Rational& /*scale*/) { return sgn(v) == 0; }
    static bool within(const Rational& residual, double /*tol*/) { return sgn(residual) == 0; }
    static bool equal(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }
    static double to_double(const Rational& v) { return v.get_d(); }

    static std::string to_string(const Rational& v) { return v.get_str(); }
    static std::string real_to_string(const Rational& v) { return v.get_str(); }
    static Rational parse(const std::string& s) {
        Rational q(s);
        q.canonicalize();
        return q;
    }
};

template <>
struct scalar_traits<Complex> {
    using real_type = double;
    static constexpr bool exact = false;
    static constexpr std::string_view backend = "complex-float";
    static constexpr std::string_view mode = "float";
    /// Relative size below which a float value is treated as zero.
    static constexpr double singular_rtol = 1e-12;
    /// Relative distance to a pole of a map below which float evaluation is
    /// refused as numerically singular. Rounding error near a pole grows like
    /// the inverse square of this distance.
    static constexpr double pole_rtol = 1e-4;

    static Complex from_int(long v) { return Complex(static_cast<double>(v), 0.0); }
    static Complex from_ratio(long num, long den) {
        return Complex(static_cast<double>(num) / static_cast<double>(den), 0.0);
    }
    static double magnitude(const Complex& v) { return std::abs(v); }
    static bool is_zero(const Complex& v) { return v == Complex(0.0, 0.0); }
    static bool negligible(const Complex& v, double scale) {
        return std::abs(v) <= singular_rtol * (scale > 0.0 ? scale : 1.0);
    }
    static bool near_pole(const Complex& v, double scale) {
        return std::abs(v) <= pole_rtol * (scale > 0.0 ? scale : 1.0);
    }
    static bool within(double residual, double tol) { return residual <= tol; }
    static bool equal(const Complex& a, const Complex& b, double tol) {
        const double scale = std::max({std::abs(a), std::abs(b), 1e-300});
        return std::abs(a - b) <= tol * scale;
    }
    static double to_double(double v) { return v; }

    static std::string real_to_string(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
    static std::string to_string(const Complex& v) {
        if (v.imag() == 0.0) return real_to_string(v.real());
        std::string im = real_to_string(v.imag());
        if (im.front() != '-') im.insert(im.begin(), '+');
        return real_to_string(v.real()) + im + "i";
    }
    static Complex parse(const std::string& s) {
        double re = 0.0, im = 0.0;
        char unit = 0;
        if (std::sscanf(s.c_str(), "%lf%lf%c", &re, &im, &unit) == 3 && unit == 'i')
            return Complex(re, im);
        return Complex(std::stod(s), 0.0);
    }
};

/// A ground field the library can compute over.
template <class T>
concept FieldScalar = requires(const T& a, const T& b) {
    typename scalar_traits<T>::real_type;
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a / b } -> std::convertible_to<T>;
    { scalar_traits<T>::magnitude(a) } -> std::convertible_to<typename scalar_traits<T>::real_type>;
};

template <FieldScalar T>
using real_t = typename scalar_traits<T>::real_type;

template <FieldScalar T>
inline T scalar(long v) {
    return scalar_traits<T>::from_int(v);
}

template <FieldScalar T>
inline T scalar(long num, long den) {
    return scalar_traits<T>::from_ratio(num, den);
}

template <FieldScalar T>
inline real_t<T> magnitude(const T& v) {
    return scalar_traits<T>::magnitude(v);
}

template <FieldScalar T>
inline bool is_zero(const T& v) {
    return scalar_traits<T>::is_zero(v);
}

/// |num| / den with the convention 0/0 = 0.
template <class R>
inline R relative(const R& num, const R& den) {
    if (num == R(0)) return R(0);
    if (den == R(0)) return num;
    return R(num / den);
}

}  // namespace yb

#endif  // YB_SCALAR_HPP
