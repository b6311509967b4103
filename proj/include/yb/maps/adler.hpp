#ifndef YB_MAPS_ADLER_HPP
#define YB_MAPS_ADLER_HPP

#include <yb/check_report.hpp>
#include <yb/checks.hpp>
#include <yb/error.hpp>
#include <yb/matrix.hpp>
#include <yb/projective.hpp>

#include <string_view>
#include <utility>

namespace yb::maps {

namespace detail {

// x~ = y - a/(x+y), y~ = x - b/(x+y) in homogeneous coordinates x = (x1:x0),
// y = (y1:y0). With s = x1 y0 + y1 x0:
//   x~ = (y1 s - a x0 y0^2 : y0 s),   y~ = (x1 s - b y0 x0^2 : x0 s).
// This also covers one argument at infinity; s = 0 is the pole x + y = 0
// (or both arguments infinite).
template <FieldScalar T>
std::pair<ProjectivePoint<T>, ProjectivePoint<T>> adler_like(const T& a, const T& b, const ProjectivePoint<T>& x,
                                                             const ProjectivePoint<T>& y) {
    if (x.size() != 2 || y.size() != 2) fail(ErrorKind::Shape, "Adler map acts on CP^1");
    const T& x1 = x[0];
    const T& x0 = x[1];
    const T& y1 = y[0];
    const T& y0 = y[1];
    const T s = x1 * y0 + y1 * x0;
    const real_t<T> scale = magnitude(T(x1 * y0)) + magnitude(T(y1 * x0));
    if (scalar_traits<T>::near_pole(s, scale)) fail(ErrorKind::SingularInput, "Adler map: x + y = 0");
    ProjectivePoint<T> xt({T(y1 * s - a * x0 * y0 * y0), T(y0 * s)});
    ProjectivePoint<T> yt({T(x1 * s - b * y0 * x0 * x0), T(x0 * s)});
    return {std::move(xt), std::move(yt)};
}

}  // namespace detail

/// Adler's map on CP^1:
///   x~ = y - (lambda - mu)/(x + y),   y~ = x - (mu - lambda)/(x + y).
template <FieldScalar T>
std::pair<ProjectivePoint<T>, ProjectivePoint<T>> adler_apply(const T& lambda, const T& mu, const ProjectivePoint<T>& x,
                                                              const ProjectivePoint<T>& y) {
    return detail::adler_like(T(lambda - mu), T(mu - lambda), x, y);
}

/// A(x, lambda, zeta) = [[x, x^2 + lambda - zeta], [1, x]]. det = zeta - lambda.
template <FieldScalar T>
SquareMatrix<T> adler_lax(const T& x, const T& lambda, const T& zeta) {
    return SquareMatrix<T>{{x, T(x * x + lambda - zeta)}, {scalar<T>(1), x}};
}

template <FieldScalar T>
SquareMatrix<T> adler_lax(const ProjectivePoint<T>& x, const T& lambda, const T& zeta) {
    return adler_lax(x.affine_value(), lambda, zeta);
}

template <FieldScalar T>
class AdlerMap {
public:
    using scalar_type = T;
    using field_type = ProjectivePoint<T>;

    std::string_view name() const noexcept { return "adler"; }
    LaxMode lax_mode() const noexcept { return LaxMode::Exact; }

    std::pair<field_type, field_type> apply(const T& lambda, const T& mu, const field_type& x,
                                            const field_type& y) const {
        return adler_apply(lambda, mu, x, y);
    }

    SquareMatrix<T> lax_a(const field_type& x, const T& lambda, const T& zeta) const {
        return adler_lax(x, lambda, zeta);
    }
    // R21 = R, so the second action matrix is the same.
    SquareMatrix<T> lax_b(const field_type& x, const T& lambda, const T& zeta) const {
        return adler_lax(x, lambda, zeta);
    }
};

/// Checks that the map is its own group-action form:
///   y~ = A(x, lambda, mu)[y],   x~ = A(y, mu, lambda)[x]   (Moebius action).
template <FieldScalar T>
CheckReport<T, ProjectivePoint<T>> adler_mobius_form_check(const T& lambda, const T& mu, const ProjectivePoint<T>& x,
                                                           const ProjectivePoint<T>& y, double tol) {
    using Map = AdlerMap<T>;
    WitnessFor<Map> inputs{{}, {lambda, mu}, {x, y}, {}};
    return yb::detail::run_trial<Map>(
        "projective-form", tol, std::move(inputs), [&](ReportFor<Map>& report, WitnessFor<Map>& w) {
            const auto [xt, yt] = adler_apply(lambda, mu, x, y);
            const auto ya = mobius_apply(adler_lax(x, lambda, mu), y);
            const auto xb = mobius_apply(adler_lax(y, mu, lambda), x);
            const auto residual = std::max<real_t<T>>(projective_residual(ya, yt), projective_residual(xb, xt));
            yb::detail::settle<Map>(report, w, residual, tol, "map differs from its Moebius form");
        });
}

}  // namespace yb::maps

#endif  // YB_MAPS_ADLER_HPP
