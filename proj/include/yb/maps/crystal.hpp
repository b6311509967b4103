#ifndef YB_MAPS_CRYSTAL_HPP
#define YB_MAPS_CRYSTAL_HPP

#include <yb/check_report.hpp>
#include <yb/checks.hpp>
#include <yb/error.hpp>
#include <yb/matrix.hpp>
#include <yb/projective.hpp>

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>

namespace yb::maps {

/// Point (x_1, ..., x_n) of C^n with all components nonzero. Lies in the level
/// set X_lambda for lambda = x_1 ... x_n.
template <FieldScalar T>
class CrystalVector {
public:
    explicit CrystalVector(Vector<T> x) : x_(std::move(x)) {
        if (x_.empty()) fail(ErrorKind::Shape, "crystal vector needs at least one component");
        for (const auto& v : x_)
            if (yb::is_zero(v)) fail(ErrorKind::InvalidState, "crystal vector with a zero component");
    }
    CrystalVector(std::initializer_list<T> x) : CrystalVector(Vector<T>(x)) {}

    std::size_t size() const noexcept { return x_.size(); }
    const T& operator[](std::size_t i) const { return x_[i]; }
    std::span<const T> components() const noexcept { return x_; }

    T product() const {
        T p = scalar<T>(1);
        for (const auto& v : x_) p *= v;
        return p;
    }

private:
    Vector<T> x_;
};

template <FieldScalar T>
const CrystalVector<T>& canonical(const CrystalVector<T>& x) {
    return x;
}

template <FieldScalar T>
real_t<T> field_residual(const CrystalVector<T>& a, const CrystalVector<T>& b) {
    if (a.size() != b.size()) fail(ErrorKind::Shape, "crystal vectors of different length");
    real_t<T> d(0);
    for (std::size_t i = 0; i < a.size(); ++i) d = std::max<real_t<T>>(d, magnitude(T(a[i] - b[i])));
    return relative<real_t<T>>(d, std::max<real_t<T>>(max_modulus<T>(a.components()), max_modulus<T>(b.components())));
}

namespace detail {

// Tolerance for matching a float product against its subset label.
inline constexpr double crystal_label_rtol = 1e-8;

template <FieldScalar T>
void check_label(const CrystalVector<T>& v, const T& label, const char* which) {
    const T p = v.product();
    if (!scalar_traits<T>::equal(p, label, crystal_label_rtol))
        fail(ErrorKind::InvalidState, std::string("crystal map: ") + which + " label " +
                                          scalar_traits<T>::to_string(label) + " differs from product " +
                                          scalar_traits<T>::to_string(p));
}

// Returns P_j and the sum of the moduli of its terms (float pole scale).
template <FieldScalar T>
std::pair<T, real_t<T>> crystal_P_with_scale(std::size_t j, const CrystalVector<T>& x, const CrystalVector<T>& y) {
    const std::size_t n = x.size();
    if (y.size() != n) fail(ErrorKind::Shape, "crystal map: length mismatch");
    if (j < 1 || j > n) fail(ErrorKind::Precondition, "crystal P_j: j must lie in 1..n");
    // Subscript j+k reduced into 1..n; zero-based storage index is (j+k-1) mod n.
    auto at = [n, j](std::size_t k) { return (j + k - 1) % n; };
    T total = scalar<T>(0);
    real_t<T> scale(0);
    for (std::size_t a = 1; a <= n; ++a) {
        T term = scalar<T>(1);
        for (std::size_t k = 1; k < a; ++k) term *= x[at(k)];
        for (std::size_t k = a + 1; k <= n; ++k) term *= y[at(k)];
        if constexpr (!scalar_traits<T>::exact) scale += magnitude(term);
        total += term;
    }
    return {total, scale};
}

}  // namespace detail

/// P_j = sum_{a=1}^{n} prod_{k=1}^{a-1} x_{j+k} prod_{k=a+1}^{n} y_{j+k},
/// subscripts taken mod n in 1..n, 1 <= j <= n.
template <FieldScalar T>
T crystal_P(std::size_t j, const CrystalVector<T>& x, const CrystalVector<T>& y) {
    return detail::crystal_P_with_scale(j, x, y).first;
}

/// Geometric crystal map on X_lambda x X_mu:
///   x~_j = x_j P_j / P_{j-1},   y~_j = y_j P_{j-1} / P_j,   P_0 = P_n.
/// lambda and mu are the subset labels and must equal the products of x and y.
template <FieldScalar T>
std::pair<CrystalVector<T>, CrystalVector<T>> crystal_apply(const T& lambda, const T& mu, const CrystalVector<T>& x,
                                                            const CrystalVector<T>& y) {
    const std::size_t n = x.size();
    if (y.size() != n) fail(ErrorKind::Shape, "crystal map: length mismatch");
    detail::check_label(x, lambda, "first");
    detail::check_label(y, mu, "second");

    Vector<T> p(n, scalar<T>(0));
    for (std::size_t j = 1; j <= n; ++j) {
        auto [pj, scale] = detail::crystal_P_with_scale(j, x, y);
        if (scalar_traits<T>::near_pole(pj, scale))
            fail(ErrorKind::SingularInput, "crystal map: P_" + std::to_string(j) + " = 0");
        p[j - 1] = std::move(pj);
    }
    Vector<T> xt(n, scalar<T>(0)), yt(n, scalar<T>(0));
    for (std::size_t i = 0; i < n; ++i) {
        const T ratio = p[i] / p[(i + n - 1) % n];
        xt[i] = x[i] * ratio;
        yt[i] = y[i] / ratio;
    }
    return {CrystalVector<T>(std::move(xt)), CrystalVector<T>(std::move(yt))};
}

/// Projective coordinates on X_lambda x X_mu:
///   z = (1 : z_1 : ... : z_{n-1}),  z_j = x_1 ... x_j,
///   w = (w_1 : ... : w_{n-1} : 1),  w_j = y_{j+1} ... y_n.
template <FieldScalar T>
std::pair<ProjectivePoint<T>, ProjectivePoint<T>> crystal_embed(const CrystalVector<T>& x,
                                                                const CrystalVector<T>& y) {
    const std::size_t n = x.size();
    if (y.size() != n) fail(ErrorKind::Shape, "crystal embedding: length mismatch");
    Vector<T> z(n, scalar<T>(1)), w(n, scalar<T>(1));
    for (std::size_t j = 1; j < n; ++j) z[j] = z[j - 1] * x[j - 1];
    for (std::size_t j = n - 1; j-- > 0;) w[j] = w[j + 1] * y[j + 1];
    return {ProjectivePoint<T>(std::move(z)), ProjectivePoint<T>(std::move(w))};
}

/// A^{-1}(x, ., mu): diagonal x_1..x_n, -1 below the diagonal, -mu in the
/// top-right corner. det = x_1 ... x_n - mu.
template <FieldScalar T>
SquareMatrix<T> crystal_lax_A_inv(const CrystalVector<T>& x, const T& mu) {
    const std::size_t n = x.size();
    SquareMatrix<T> m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = x[i];
    for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = scalar<T>(-1);
    m(0, n - 1) -= mu;
    return m;
}

/// B^{-1}(y, ., lambda): diagonal y_1..y_n, -1 above the diagonal, -lambda in
/// the bottom-left corner. The transpose of crystal_lax_A_inv(y, lambda).
template <FieldScalar T>
SquareMatrix<T> crystal_lax_B_inv(const CrystalVector<T>& y, const T& lambda) {
    const std::size_t n = y.size();
    SquareMatrix<T> m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = y[i];
    for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = scalar<T>(-1);
    m(n - 1, 0) -= lambda;
    return m;
}

/// The map's own parameter drops out of its Lax matrices; only the spectral
/// parameter remains. Matrices are inverted at use.
template <FieldScalar T>
class CrystalMap {
public:
    using scalar_type = T;
    using field_type = CrystalVector<T>;

    std::string_view name() const noexcept { return "crystal"; }
    LaxMode lax_mode() const noexcept { return LaxMode::Exact; }

    std::pair<field_type, field_type> apply(const T& lambda, const T& mu, const field_type& x,
                                            const field_type& y) const {
        return crystal_apply(lambda, mu, x, y);
    }
    SquareMatrix<T> lax_a(const field_type& x, const T& /*lambda*/, const T& zeta) const {
        return crystal_lax_A_inv(x, zeta).inverse();
    }
    SquareMatrix<T> lax_b(const field_type& y, const T& /*mu*/, const T& zeta) const {
        return crystal_lax_B_inv(y, zeta).inverse();
    }
};

/// Checks the group-action form in embedded coordinates:
///   z(x~) = B(y, mu, lambda)[z(x)],   w(y~) = A(x, lambda, mu)[w(y)].
template <FieldScalar T>
CheckReport<T, CrystalVector<T>> crystal_projective_form_check(const T& lambda, const T& mu,
                                                               const CrystalVector<T>& x, const CrystalVector<T>& y,
                                                               double tol) {
    using Map = CrystalMap<T>;
    WitnessFor<Map> inputs{{}, {lambda, mu}, {x, y}, {}};
    return yb::detail::run_trial<Map>(
        "projective-form", tol, std::move(inputs), [&](ReportFor<Map>& report, WitnessFor<Map>& w) {
            const auto [xt, yt] = crystal_apply(lambda, mu, x, y);
            const auto [z, wv] = crystal_embed(x, y);
            const auto [zt, wt] = crystal_embed(xt, yt);
            const auto zb = projective_apply(crystal_lax_B_inv(y, lambda).inverse(), z);
            const auto wa = projective_apply(crystal_lax_A_inv(x, mu).inverse(), wv);
            const auto residual = std::max<real_t<T>>(projective_residual(zb, zt), projective_residual(wa, wt));
            yb::detail::settle<Map>(report, w, residual, tol, "embedded map differs from its projective form");
        });
}

}  // namespace yb::maps

#endif  // YB_MAPS_CRYSTAL_HPP
