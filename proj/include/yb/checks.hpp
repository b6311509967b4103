#ifndef YB_CHECKS_HPP
#define YB_CHECKS_HPP

#include <yb/check_report.hpp>
#include <yb/error.hpp>
#include <yb/matrix.hpp>
#include <yb/spectral.hpp>

#include <algorithm>
#include <array>
#include <concepts>
#include <string>
#include <string_view>
#include <utility>

namespace yb {

/// Whether a map's Lax relation is expected to hold exactly or only up to a
/// scalar matrix cI.
enum class LaxMode { Exact, Projective };

constexpr std::string_view to_string(LaxMode m) noexcept {
    return m == LaxMode::Exact ? "exact" : "projective";
}

/// A parameter-dependent map R(lambda, mu): X x X -> X x X together with the
/// matrices A, B of its group-action form
///   x~ = B(y, mu, lambda)[x],   y~ = A(x, lambda, mu)[y],
/// which double as Lax matrices with the last argument as spectral parameter.
///
/// apply/lax_a/lax_b throw yb::Error on their singular sets.
/// field_residual(a, b) must be zero exactly when a and b are the same point of X.
template <class M>
concept ParamMap = requires(const M& m, const typename M::scalar_type& s, const typename M::field_type& f) {
    requires FieldScalar<typename M::scalar_type>;
    { m.apply(s, s, f, f) } -> std::same_as<std::pair<typename M::field_type, typename M::field_type>>;
    { m.lax_a(f, s, s) } -> std::same_as<SquareMatrix<typename M::scalar_type>>;
    { m.lax_b(f, s, s) } -> std::same_as<SquareMatrix<typename M::scalar_type>>;
    { m.lax_mode() } -> std::same_as<LaxMode>;
    { m.name() } -> std::convertible_to<std::string_view>;
    { field_residual(f, f) } -> std::convertible_to<real_t<typename M::scalar_type>>;
    { canonical(f) } -> std::convertible_to<typename M::field_type>;
};

template <ParamMap M>
using ReportFor = CheckReport<typename M::scalar_type, typename M::field_type>;

template <ParamMap M>
using WitnessFor = Witness<typename M::scalar_type, typename M::field_type>;

/// R_21 = P R P. The parameters are the ones attached to x and y; the map is
/// evaluated on the swapped pair and the result swapped back.
template <ParamMap M>
std::pair<typename M::field_type, typename M::field_type> apply_r21(const M& map, const typename M::scalar_type& lambda,
                                                                    const typename M::scalar_type& mu,
                                                                    const typename M::field_type& x,
                                                                    const typename M::field_type& y) {
    auto [a, b] = map.apply(mu, lambda, y, x);
    return {std::move(b), std::move(a)};
}

namespace detail {

template <ParamMap M, class Body>
ReportFor<M> run_trial(std::string_view check, double tol, WitnessFor<M> inputs, Body&& body) {
    ReportFor<M> report;
    report.check = std::string(check);
    report.tolerance = scalar_traits<typename M::scalar_type>::exact ? 0.0 : tol;
    try {
        body(report, inputs);
    } catch (const Error& e) {
        if (!e.is_singularity()) throw;
        inputs.reason = e.what();
        report.record_skip(std::move(inputs));
    }
    return report;
}

template <ParamMap M>
void settle(ReportFor<M>& report, WitnessFor<M>& inputs, const real_t<typename M::scalar_type>& residual,
            double tol, std::string_view what) {
    if (scalar_traits<typename M::scalar_type>::within(residual, tol)) {
        report.record_pass(residual);
    } else {
        inputs.reason = std::string(what);
        inputs.residual = residual;
        report.record_failure(std::move(inputs));
    }
}

template <FieldScalar T>
real_t<T> product_scale(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    return real_t<T>(a.max_modulus() * b.max_modulus() * real_t<T>(static_cast<long>(a.size())));
}

// Compares lhs = l1 l2 with rhs = r1 r2 according to the map's Lax mode.
// Residuals are relative to the size of the factor products, which bounds
// the rounding error of either side.
template <ParamMap M>
void settle_lax(const M& map, ReportFor<M>& report, WitnessFor<M>& inputs,
                const SquareMatrix<typename M::scalar_type>& l1, const SquareMatrix<typename M::scalar_type>& l2,
                const SquareMatrix<typename M::scalar_type>& r1, const SquareMatrix<typename M::scalar_type>& r2,
                double tol) {
    using T = typename M::scalar_type;
    const auto lhs = l1 * l2;
    const auto rhs = r1 * r2;
    const real_t<T> scale = std::max<real_t<T>>(product_scale(l1, l2), product_scale(r1, r2));
    ScalarComparison<T> cmp{ScalarEquality::Unequal, scalar<T>(0), real_t<T>(1)};
    try {
        cmp = equal_up_to_scalar(lhs, rhs, tol, scale);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateComparison) throw;
        inputs.reason = e.what();
        inputs.residual = real_t<T>(1);
        report.record_failure(std::move(inputs));
        return;
    }
    if (map.lax_mode() == LaxMode::Exact) {
        real_t<T> diff(0);
        const auto l = lhs.entries();
        const auto r = rhs.entries();
        for (std::size_t i = 0; i < l.size(); ++i) diff = std::max<real_t<T>>(diff, magnitude(T(l[i] - r[i])));
        const real_t<T> residual = relative<real_t<T>>(diff, std::max<real_t<T>>(lhs.max_modulus(), scale));
        // The fitted factor is ill-conditioned when the product entries
        // cancel, so the verdict rests on the direct residual.
        if (scalar_traits<T>::within(residual, tol)) {
            report.record_pass(residual);
        } else {
            inputs.reason = cmp.kind == ScalarEquality::EqualProjectively
                                ? "Lax relation holds only up to factor " + scalar_traits<T>::to_string(cmp.factor)
                                : std::string("Lax products differ");
            inputs.residual = std::max<real_t<T>>(residual, cmp.residual);
            report.record_failure(std::move(inputs));
        }
        return;
    }
    if (cmp.kind == ScalarEquality::Unequal) {
        inputs.reason = "Lax products are not proportional";
        inputs.residual = cmp.residual;
        report.record_failure(std::move(inputs));
        return;
    }
    report.record_pass(cmp.residual);
    if (cmp.kind == ScalarEquality::EqualProjectively) report.record_factor(cmp.factor);
}

}  // namespace detail

/// Yang-Baxter relation R23(mu,nu) R13(lambda,nu) R12(lambda,mu) = R12 R13 R23
/// on (x, y, z): both chains of three maps must give the same (x23, y13, z12).
template <ParamMap M>
ReportFor<M> check_yang_baxter(const M& map, const std::array<typename M::scalar_type, 3>& params,
                               const std::array<typename M::field_type, 3>& fields, double tol) {
    WitnessFor<M> inputs{{}, {params.begin(), params.end()}, {fields.begin(), fields.end()}, {}};
    return detail::run_trial<M>("yb", tol, std::move(inputs), [&](ReportFor<M>& report, WitnessFor<M>& w) {
        const auto& [lambda, mu, nu] = params;
        const auto& [x, y, z] = fields;

        // Rear faces: R12, then R13, then R23.
        const auto [x2, y1] = map.apply(lambda, mu, x, y);
        const auto [x23, z1] = map.apply(lambda, nu, x2, z);
        const auto [y13, z12] = map.apply(mu, nu, y1, z1);

        // Front faces: R23, then R13, then R12.
        const auto [y3, z2] = map.apply(mu, nu, y, z);
        const auto [x3, z12r] = map.apply(lambda, nu, x, z2);
        const auto [x23r, y13r] = map.apply(lambda, mu, x3, y3);

        const auto residual = std::max({real_t<typename M::scalar_type>(field_residual(x23, x23r)),
                                        real_t<typename M::scalar_type>(field_residual(y13, y13r)),
                                        real_t<typename M::scalar_type>(field_residual(z12, z12r))});
        detail::settle<M>(report, w, residual, tol, "the two chains give different triples");
    });
}

/// Reversibility R21(mu, lambda) R(lambda, mu) = Id on (x, y).
template <ParamMap M>
ReportFor<M> check_reversibility(const M& map, const typename M::scalar_type& lambda,
                                 const typename M::scalar_type& mu, const typename M::field_type& x,
                                 const typename M::field_type& y, double tol) {
    WitnessFor<M> inputs{{}, {lambda, mu}, {x, y}, {}};
    return detail::run_trial<M>("reversibility", tol, std::move(inputs), [&](ReportFor<M>& report, WitnessFor<M>& w) {
        const auto [xt, yt] = map.apply(lambda, mu, x, y);
        const auto [xb, yb] = apply_r21(map, lambda, mu, xt, yt);
        const auto residual = std::max<real_t<typename M::scalar_type>>(field_residual(xb, x), field_residual(yb, y));
        detail::settle<M>(report, w, residual, tol, "R21 R does not return the input");
    });
}

/// Lax relation A(x,lambda;zeta) A(y,mu;zeta) = A(y~,mu;zeta) A(x~,lambda;zeta)
/// with (x~, y~) = R(lambda, mu)(x, y).
template <ParamMap M>
ReportFor<M> check_lax(const M& map, const typename M::scalar_type& lambda, const typename M::scalar_type& mu,
                       const typename M::scalar_type& zeta, const typename M::field_type& x,
                       const typename M::field_type& y, double tol) {
    WitnessFor<M> inputs{{}, {lambda, mu, zeta}, {x, y}, {}};
    return detail::run_trial<M>("lax", tol, std::move(inputs), [&](ReportFor<M>& report, WitnessFor<M>& w) {
        const auto [xt, yt] = map.apply(lambda, mu, x, y);
        detail::settle_lax(map, report, w, map.lax_a(x, lambda, zeta), map.lax_a(y, mu, zeta),
                           map.lax_a(yt, mu, zeta), map.lax_a(xt, lambda, zeta), tol);
    });
}

/// Relation for the second action matrix, with lambda as spectral parameter:
///   B(z,nu,lambda) B(y,mu,lambda) = B(y3,mu,lambda) B(z2,nu,lambda),
/// (y3, z2) = R(mu, nu)(y, z). Transposed, this is the Lax relation for B^T.
template <ParamMap M>
ReportFor<M> check_lax_dual(const M& map, const typename M::scalar_type& mu, const typename M::scalar_type& nu,
                            const typename M::scalar_type& lambda, const typename M::field_type& y,
                            const typename M::field_type& z, double tol) {
    WitnessFor<M> inputs{{}, {mu, nu, lambda}, {y, z}, {}};
    return detail::run_trial<M>("lax-dual", tol, std::move(inputs), [&](ReportFor<M>& report, WitnessFor<M>& w) {
        const auto [y3, z2] = map.apply(mu, nu, y, z);
        detail::settle_lax(map, report, w, map.lax_b(z, nu, lambda), map.lax_b(y, mu, lambda),
                           map.lax_b(y3, mu, lambda), map.lax_b(z2, nu, lambda), tol);
    });
}

}  // namespace yb

#endif  // YB_CHECKS_HPP
