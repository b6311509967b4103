#ifndef YB_MAPS_CONTROLS_HPP
#define YB_MAPS_CONTROLS_HPP

// Reference maps on CP^1 used as positive and negative controls for the checkers.

#include <yb/checks.hpp>
#include <yb/maps/adler.hpp>

#include <string_view>
#include <utility>

namespace yb::maps {

namespace detail {

template <FieldScalar T>
[[noreturn]] SquareMatrix<T> no_lax(std::string_view map) {
    fail(ErrorKind::Unsupported, std::string(map) + " has no Lax matrix");
}

}  // namespace detail

/// R(x, y) = (y, x). A trivial Yang-Baxter map.
template <FieldScalar T>
class FlipMap {
public:
    using scalar_type = T;
    using field_type = ProjectivePoint<T>;

    std::string_view name() const noexcept { return "flip"; }
    LaxMode lax_mode() const noexcept { return LaxMode::Exact; }

    std::pair<field_type, field_type> apply(const T&, const T&, const field_type& x, const field_type& y) const {
        return {y, x};
    }
    SquareMatrix<T> lax_a(const field_type&, const T&, const T&) const { return detail::no_lax<T>(name()); }
    SquareMatrix<T> lax_b(const field_type&, const T&, const T&) const { return detail::no_lax<T>(name()); }
};

/// R(x, y) = (y + 1, x). Not reversible: R21 R shifts y by 2.
template <FieldScalar T>
class ShiftMap {
public:
    using scalar_type = T;
    using field_type = ProjectivePoint<T>;

    std::string_view name() const noexcept { return "shift"; }
    LaxMode lax_mode() const noexcept { return LaxMode::Exact; }

    std::pair<field_type, field_type> apply(const T&, const T&, const field_type& x, const field_type& y) const {
        if (y.is_infinite()) return {y, x};
        return {ProjectivePoint<T>::affine(T(y.affine_value() + scalar<T>(1))), x};
    }
    SquareMatrix<T> lax_a(const field_type&, const T&, const T&) const { return detail::no_lax<T>(name()); }
    SquareMatrix<T> lax_b(const field_type&, const T&, const T&) const { return detail::no_lax<T>(name()); }
};

/// Adler's map with lambda - mu replaced by lambda - 2 mu in x~. Breaks the
/// Yang-Baxter relation whenever mu != 0.
template <FieldScalar T>
class PerturbedAdlerMap {
public:
    using scalar_type = T;
    using field_type = ProjectivePoint<T>;

    std::string_view name() const noexcept { return "adler-perturbed"; }
    LaxMode lax_mode() const noexcept { return LaxMode::Exact; }

    std::pair<field_type, field_type> apply(const T& lambda, const T& mu, const field_type& x,
                                            const field_type& y) const {
        return detail::adler_like(T(lambda - scalar<T>(2) * mu), T(mu - lambda), x, y);
    }
    SquareMatrix<T> lax_a(const field_type& x, const T& lambda, const T& zeta) const {
        return adler_lax(x, lambda, zeta);
    }
    SquareMatrix<T> lax_b(const field_type& x, const T& lambda, const T& zeta) const {
        return adler_lax(x, lambda, zeta);
    }
};

}  // namespace yb::maps

#endif  // YB_MAPS_CONTROLS_HPP
