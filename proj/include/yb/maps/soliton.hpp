#ifndef YB_MAPS_SOLITON_HPP
#define YB_MAPS_SOLITON_HPP

#include <yb/checks.hpp>
#include <yb/error.hpp>
#include <yb/matrix.hpp>

#include <cstddef>
#include <string_view>
#include <utility>

namespace yb::maps {

/// Vector xi in V and covector eta in V* with <xi, eta> != 0. Represents the
/// rank-one projector P = xi (x) eta / <xi, eta>; the pair itself is only
/// defined up to independent rescaling of xi and eta.
template <FieldScalar T>
class RankOnePair {
public:
    RankOnePair(Vector<T> xi, Vector<T> eta) : xi_(std::move(xi)), eta_(std::move(eta)) {
        if (xi_.empty() || xi_.size() != eta_.size()) fail(ErrorKind::Shape, "rank-one pair: length mismatch");
        if (is_degenerate(xi_, eta_)) fail(ErrorKind::InvalidState, "rank-one pair with zero pairing <xi, eta>");
    }

    std::size_t dim() const noexcept { return xi_.size(); }
    const Vector<T>& xi() const noexcept { return xi_; }
    const Vector<T>& eta() const noexcept { return eta_; }
    T pairing() const { return dot<T>(xi_, eta_); }

    SquareMatrix<T> projector() const {
        const T d = pairing();
        SquareMatrix<T> p(dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j) p(i, j) = xi_[i] * eta_[j] / d;
        return p;
    }

    static bool is_degenerate(std::span<const T> xi, std::span<const T> eta) {
        return scalar_traits<T>::negligible(dot<T>(xi, eta), pairing_scale(xi, eta));
    }
    // Pairing within the float pole margin of zero.
    static bool near_degenerate(std::span<const T> xi, std::span<const T> eta) {
        return scalar_traits<T>::near_pole(dot<T>(xi, eta), pairing_scale(xi, eta));
    }

private:
    // Exact zero tests ignore the scale.
    static real_t<T> pairing_scale(std::span<const T> xi, std::span<const T> eta) {
        real_t<T> s(0);
        if constexpr (!scalar_traits<T>::exact)
            for (std::size_t i = 0; i < xi.size(); ++i) s += magnitude(T(xi[i] * eta[i]));
        return s;
    }

    Vector<T> xi_;
    Vector<T> eta_;
};

/// Rescales xi and eta separately; the projector is unchanged.
template <FieldScalar T>
RankOnePair<T> canonical(const RankOnePair<T>& p) {
    return RankOnePair<T>(yb::detail::rescaled(p.xi()), yb::detail::rescaled(p.eta()));
}

/// Compares the induced projectors.
template <FieldScalar T>
real_t<T> field_residual(const RankOnePair<T>& a, const RankOnePair<T>& b) {
    if (a.dim() != b.dim()) fail(ErrorKind::Shape, "rank-one pairs of different dimension");
    const auto pa = a.projector();
    const auto pb = b.projector();
    const auto d = (pa - pb).max_modulus();
    return relative<real_t<T>>(d, std::max<real_t<T>>(pa.max_modulus(), pb.max_modulus()));
}

/// Change of the polarizations of two matrix KdV solitons with velocities
/// lambda1, lambda2 after their interaction.
template <FieldScalar T>
std::pair<RankOnePair<T>, RankOnePair<T>> soliton_apply(const T& lambda1, const T& lambda2, const RankOnePair<T>& p1,
                                                        const RankOnePair<T>& p2) {
    if (p1.dim() != p2.dim()) fail(ErrorKind::Shape, "soliton map: dimension mismatch");
    const real_t<T> lscale = std::max<real_t<T>>(magnitude(lambda1), magnitude(lambda2));
    if (scalar_traits<T>::near_pole(T(lambda1 - lambda2), lscale))
        fail(ErrorKind::SingularInput, "soliton map: lambda1 = lambda2");

    const auto& xi1 = p1.xi();
    const auto& eta1 = p1.eta();
    const auto& xi2 = p2.xi();
    const auto& eta2 = p2.eta();
    const T d1 = p1.pairing();
    const T d2 = p2.pairing();
    const T x1e2 = dot<T>(xi1, eta2);
    const T x2e1 = dot<T>(xi2, eta1);

    const T c_xi1 = T(2) * lambda2 * x1e2 / ((lambda1 - lambda2) * d2);
    const T c_eta1 = T(2) * lambda2 * x2e1 / ((lambda1 - lambda2) * d2);
    const T c_xi2 = T(2) * lambda1 * x2e1 / ((lambda2 - lambda1) * d1);
    const T c_eta2 = T(2) * lambda1 * x1e2 / ((lambda2 - lambda1) * d1);

    const std::size_t n = p1.dim();
    Vector<T> nxi1(n, scalar<T>(0)), neta1(n, scalar<T>(0)), nxi2(n, scalar<T>(0)), neta2(n, scalar<T>(0));
    for (std::size_t i = 0; i < n; ++i) {
        nxi1[i] = xi1[i] + c_xi1 * xi2[i];
        neta1[i] = eta1[i] + c_eta1 * eta2[i];
        nxi2[i] = xi2[i] + c_xi2 * xi1[i];
        neta2[i] = eta2[i] + c_eta2 * eta1[i];
    }
    if (RankOnePair<T>::near_degenerate(nxi1, neta1) || RankOnePair<T>::near_degenerate(nxi2, neta2))
        fail(ErrorKind::SingularOutput, "soliton map: output pairing vanishes");
    return {RankOnePair<T>(std::move(nxi1), std::move(neta1)), RankOnePair<T>(std::move(nxi2), std::move(neta2))};
}

/// Same projectors as soliton_apply, with each output vector multiplied by
/// the denominator of its coefficient. Free of divisions, so cheaper for
/// long exact orbits where only the projectors matter.
template <FieldScalar T>
std::pair<RankOnePair<T>, RankOnePair<T>> soliton_apply_scaled(const T& lambda1, const T& lambda2,
                                                               const RankOnePair<T>& p1, const RankOnePair<T>& p2) {
    if (p1.dim() != p2.dim()) fail(ErrorKind::Shape, "soliton map: dimension mismatch");
    const real_t<T> lscale = std::max<real_t<T>>(magnitude(lambda1), magnitude(lambda2));
    if (scalar_traits<T>::near_pole(T(lambda1 - lambda2), lscale))
        fail(ErrorKind::SingularInput, "soliton map: lambda1 = lambda2");

    const auto& xi1 = p1.xi();
    const auto& eta1 = p1.eta();
    const auto& xi2 = p2.xi();
    const auto& eta2 = p2.eta();
    const T x1e2 = dot<T>(xi1, eta2);
    const T x2e1 = dot<T>(xi2, eta1);
    const T a1 = (lambda1 - lambda2) * p2.pairing();
    const T a2 = (lambda2 - lambda1) * p1.pairing();
    const T b_xi1 = T(2) * lambda2 * x1e2;
    const T b_eta1 = T(2) * lambda2 * x2e1;
    const T b_xi2 = T(2) * lambda1 * x2e1;
    const T b_eta2 = T(2) * lambda1 * x1e2;

    const std::size_t n = p1.dim();
    Vector<T> nxi1(n, scalar<T>(0)), neta1(n, scalar<T>(0)), nxi2(n, scalar<T>(0)), neta2(n, scalar<T>(0));
    for (std::size_t i = 0; i < n; ++i) {
        nxi1[i] = a1 * xi1[i] + b_xi1 * xi2[i];
        neta1[i] = a1 * eta1[i] + b_eta1 * eta2[i];
        nxi2[i] = a2 * xi2[i] + b_xi2 * xi1[i];
        neta2[i] = a2 * eta2[i] + b_eta2 * eta1[i];
    }
    if (RankOnePair<T>::near_degenerate(nxi1, neta1) || RankOnePair<T>::near_degenerate(nxi2, neta2))
        fail(ErrorKind::SingularOutput, "soliton map: output pairing vanishes");
    return {RankOnePair<T>(std::move(nxi1), std::move(neta1)), RankOnePair<T>(std::move(nxi2), std::move(neta2))};
}

/// A(P, lambda, zeta) = I + 2 lambda / (zeta - lambda) P. det = (zeta + lambda)/(zeta - lambda).
template <FieldScalar T>
SquareMatrix<T> soliton_lax(const RankOnePair<T>& p, const T& lambda, const T& zeta) {
    const real_t<T> scale = std::max<real_t<T>>(magnitude(lambda), magnitude(zeta));
    if (scalar_traits<T>::near_pole(T(zeta - lambda), scale))
        fail(ErrorKind::SpectralSingularity, "soliton Lax matrix: zeta = lambda");
    const T c = T(2) * lambda / (zeta - lambda);
    return SquareMatrix<T>::identity(p.dim()) + c * p.projector();
}

template <FieldScalar T>
class SolitonMap {
public:
    using scalar_type = T;
    using field_type = RankOnePair<T>;

    std::string_view name() const noexcept { return "soliton"; }
    // Genuine Lax representation, not only projective.
    LaxMode lax_mode() const noexcept { return LaxMode::Exact; }

    std::pair<field_type, field_type> apply(const T& lambda1, const T& lambda2, const field_type& p1,
                                            const field_type& p2) const {
        return soliton_apply(lambda1, lambda2, p1, p2);
    }
    // Projectively equal to apply(); used by chain dynamics.
    std::pair<field_type, field_type> apply_representative(const T& lambda1, const T& lambda2, const field_type& p1,
                                                           const field_type& p2) const {
        return soliton_apply_scaled(lambda1, lambda2, p1, p2);
    }
    SquareMatrix<T> lax_a(const field_type& p, const T& lambda, const T& zeta) const {
        return soliton_lax(p, lambda, zeta);
    }
    SquareMatrix<T> lax_b(const field_type& p, const T& lambda, const T& zeta) const {
        return soliton_lax(p, lambda, zeta);
    }
};

}  // namespace yb::maps

#endif  // YB_MAPS_SOLITON_HPP
