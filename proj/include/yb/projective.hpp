#ifndef YB_PROJECTIVE_HPP
#define YB_PROJECTIVE_HPP

#include <yb/error.hpp>
#include <yb/matrix.hpp>
#include <yb/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>

namespace yb {

/// Point of CP^{n-1} in homogeneous coordinates. Equality is up to a common
/// nonzero factor; see projective_residual.
template <FieldScalar T>
class ProjectivePoint {
public:
    explicit ProjectivePoint(Vector<T> coords) : c_(std::move(coords)) {
        if (c_.empty()) fail(ErrorKind::Shape, "projective point needs at least one coordinate");
        if (std::all_of(c_.begin(), c_.end(), [](const T& x) { return yb::is_zero(x); }))
            fail(ErrorKind::InvalidState, "projective point with all coordinates zero");
    }
    ProjectivePoint(std::initializer_list<T> coords) : ProjectivePoint(Vector<T>(coords)) {}

    /// (x : 1) on the projective line.
    static ProjectivePoint affine(const T& x) { return ProjectivePoint({x, scalar<T>(1)}); }
    /// (1 : 0) on the projective line.
    static ProjectivePoint infinity() { return ProjectivePoint({scalar<T>(1), scalar<T>(0)}); }

    std::size_t size() const noexcept { return c_.size(); }
    std::span<const T> coords() const noexcept { return c_; }
    const T& operator[](std::size_t i) const { return c_[i]; }

    /// Index used to normalize: first nonzero coordinate in exact mode,
    /// largest modulus in float mode.
    std::size_t pivot() const {
        std::size_t best = 0;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if constexpr (scalar_traits<T>::exact) {
                if (!yb::is_zero(c_[i])) return i;
            } else {
                if (magnitude(c_[i]) > magnitude(c_[best])) best = i;
            }
        }
        return best;
    }

    Vector<T> normalized() const {
        const T p = c_[pivot()];
        Vector<T> out(c_);
        for (auto& x : out) x /= p;
        return out;
    }

    // Projective-line helpers.
    bool is_infinite() const { return c_.size() == 2 && yb::is_zero(c_[1]); }
    T affine_value() const {
        if (c_.size() != 2) fail(ErrorKind::Shape, "affine value is defined on the projective line only");
        if (is_infinite()) fail(ErrorKind::Unsupported, "point at infinity has no affine value");
        return T(c_[0] / c_[1]);
    }

private:
    Vector<T> c_;
};

namespace detail {
// Exact: the primitive integer vector on the same line, last nonzero entry
// positive. Float: v divided by its largest entry.
template <FieldScalar T>
Vector<T> rescaled(Vector<T> v) {
    if constexpr (scalar_traits<T>::exact) {
        mpz_class den = 1, g = 0;
        for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
        std::vector<mpz_class> num(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpz_divexact(num[i].get_mpz_t(), den.get_mpz_t(), v[i].get_den_mpz_t());
            num[i] *= v[i].get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num[i].get_mpz_t());
        }
        if (g == 0) return v;
        auto last = std::find_if(num.rbegin(), num.rend(), [](const mpz_class& c) { return c != 0; });
        if (sgn(*last) < 0) g = -g;
        for (std::size_t i = 0; i < v.size(); ++i) {
            mpz_divexact(num[i].get_mpz_t(), num[i].get_mpz_t(), g.get_mpz_t());
            v[i] = Rational(num[i]);
        }
    } else {
        std::size_t k = 0;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (magnitude(v[i]) > magnitude(v[k])) k = i;
        if (yb::is_zero(v[k])) return v;
        const T p = v[k];
        for (auto& x : v) x /= p;
    }
    return v;
}
}  // namespace detail

/// Representative of the same point without common factors. Keeps long
/// orbits from accumulating them.
template <FieldScalar T>
ProjectivePoint<T> canonical(const ProjectivePoint<T>& p) {
    return ProjectivePoint<T>(detail::rescaled(Vector<T>(p.coords().begin(), p.coords().end())));
}

/// Distance between two points of CP^{n-1}: both are scaled so that a's pivot
/// coordinate is 1, then the max-modulus entrywise difference is taken. Zero
/// exactly when the points coincide. A pivot coordinate missing from b counts
/// as a unit mismatch.
template <FieldScalar T>
real_t<T> projective_residual(const ProjectivePoint<T>& a, const ProjectivePoint<T>& b) {
    if (a.size() != b.size()) fail(ErrorKind::Shape, "projective points of different dimension");
    const std::size_t k = a.pivot();
    if (scalar_traits<T>::negligible(b[k], magnitude(b[b.pivot()]))) return real_t<T>(1);
    real_t<T> worst(0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const T d = a[i] / a[k] - b[i] / b[k];
        worst = std::max<real_t<T>>(worst, magnitude(d));
    }
    return worst;
}

template <FieldScalar T>
real_t<T> field_residual(const ProjectivePoint<T>& a, const ProjectivePoint<T>& b) {
    return projective_residual(a, b);
}

/// Standard projective action of GL_n on CP^{n-1}: homogeneous coords m * p.
template <FieldScalar T>
ProjectivePoint<T> projective_apply(const SquareMatrix<T>& m, const ProjectivePoint<T>& p) {
    if (m.size() != p.size()) fail(ErrorKind::Shape, "projective_apply: dimension mismatch");
    m.require_group_element("projective_apply");
    return ProjectivePoint<T>(m.apply(p.coords()));
}

/// Moebius action of GL_2 on CP^1: y -> (a y + b) / (c y + d).
template <FieldScalar T>
ProjectivePoint<T> mobius_apply(const SquareMatrix<T>& m, const ProjectivePoint<T>& p) {
    if (m.size() != 2 || p.size() != 2) fail(ErrorKind::Shape, "mobius_apply acts on CP^1 with 2x2 matrices");
    return projective_apply(m, p);
}

}  // namespace yb

#endif  // YB_PROJECTIVE_HPP
