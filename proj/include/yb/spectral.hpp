#ifndef YB_SPECTRAL_HPP
#define YB_SPECTRAL_HPP

#include <yb/error.hpp>
#include <yb/matrix.hpp>
#include <yb/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <vector>

namespace yb {

/// Coefficients {1, c_1, ..., c_n} of det(t I - m) = t^n + c_1 t^{n-1} + ... + c_n,
/// by the Faddeev-LeVerrier recursion:
///   M_1 = I,  c_k = -tr(m M_k) / k,  M_{k+1} = m M_k + c_k I.
/// Only divisions by the integers k occur, so the exact backend stays exact.
template <FieldScalar T>
std::vector<T> characteristic_polynomial(const SquareMatrix<T>& m) {
    const std::size_t n = m.size();
    std::vector<T> c(n + 1, scalar<T>(0));
    c[0] = scalar<T>(1);
    SquareMatrix<T> mk = SquareMatrix<T>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const SquareMatrix<T> prod = m * mk;
        c[k] = -prod.trace() / scalar<T>(static_cast<long>(k));
        if (k < n) {
            mk = prod;
            for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[k];
        }
    }
    return c;
}

template <FieldScalar T>
T power(T base, std::size_t e) {
    T acc = scalar<T>(1);
    while (e) {
        if (e & 1u) acc *= base;
        e >>= 1u;
        if (e) base *= base;
    }
    return acc;
}

/// Scale-free spectral data I_k = c_k^n / c_n^k (k = 1..n-1) of an invertible
/// matrix. Unchanged by m -> alpha m and by conjugation, so it is conserved
/// whenever a monodromy matrix is preserved up to scalar factor and similarity.
template <FieldScalar T>
struct SpectralInvariants {
    std::size_t n = 0;
    std::vector<T> values;

    friend bool operator==(const SpectralInvariants&, const SpectralInvariants&) = default;
};

/// Spectral invariants with det(m) supplied by the caller, e.g. as the product
/// of the determinants of known factors of m. Evaluating det(m) from its
/// entries loses all accuracy in float mode when they are large against it.
template <FieldScalar T>
SpectralInvariants<T> spectral_invariants(const SquareMatrix<T>& m, const T& det) {
    if (yb::is_zero(det)) fail(ErrorKind::InvalidGroupElement, "spectral_invariants: singular matrix");
    const std::size_t n = m.size();
    auto c = characteristic_polynomial(m);
    c[n] = n % 2 ? T(-det) : det;
    SpectralInvariants<T> out{n, {}};
    out.values.reserve(n > 0 ? n - 1 : 0);
    for (std::size_t k = 1; k < n; ++k) out.values.push_back(T(power(c[k], n) / power(c[n], k)));
    return out;
}

template <FieldScalar T>
SpectralInvariants<T> spectral_invariants(const SquareMatrix<T>& m) {
    m.require_group_element("spectral_invariants");
    return spectral_invariants(m, m.determinant());
}

/// Worst per-invariant relative difference |a_k - b_k| / max(|a_k|, |b_k|).
/// Zero exactly when the fingerprints agree.
template <FieldScalar T>
real_t<T> invariants_drift(const SpectralInvariants<T>& a, const SpectralInvariants<T>& b) {
    if (a.n != b.n || a.values.size() != b.values.size())
        fail(ErrorKind::Shape, "spectral invariants of different dimension");
    real_t<T> worst(0);
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        const real_t<T> d = magnitude(T(a.values[k] - b.values[k]));
        const real_t<T> s = std::max<real_t<T>>(magnitude(a.values[k]), magnitude(b.values[k]));
        worst = std::max<real_t<T>>(worst, relative<real_t<T>>(d, s));
    }
    return worst;
}

enum class ScalarEquality { EqualExactly, EqualProjectively, Unequal };

template <FieldScalar T>
struct ScalarComparison {
    ScalarEquality kind;
    T factor;            // candidate c with a ~ c b
    real_t<T> residual;  // max |a - c b| / max |a|
};

/// Decides whether a = c b for a scalar c. The candidate c is read off the
/// max-modulus entry of b. The residual is relative to max(max |a|, scale);
/// pass the size of the factors when a and b are computed products. In exact
/// mode tol is ignored and all tests are exact.
template <FieldScalar T>
ScalarComparison<T> equal_up_to_scalar(const SquareMatrix<T>& a, const SquareMatrix<T>& b, double tol,
                                       const real_t<T>& scale = real_t<T>(0)) {
    if (a.size() != b.size()) fail(ErrorKind::Shape, "equal_up_to_scalar: dimension mismatch");
    if (a.is_zero() || b.is_zero()) fail(ErrorKind::DegenerateComparison, "zero matrix in scalar comparison");

    const auto eb = b.entries();
    const auto ea = a.entries();
    std::size_t k = 0;
    for (std::size_t i = 1; i < eb.size(); ++i)
        if (magnitude(eb[i]) > magnitude(eb[k])) k = i;
    const T c = ea[k] / eb[k];

    real_t<T> diff(0);
    for (std::size_t i = 0; i < ea.size(); ++i) diff = std::max<real_t<T>>(diff, magnitude(T(ea[i] - c * eb[i])));
    const real_t<T> residual = relative<real_t<T>>(diff, std::max<real_t<T>>(a.max_modulus(), scale));

    using tr = scalar_traits<T>;
    if (!tr::within(residual, tol)) return {ScalarEquality::Unequal, c, residual};
    if (tr::equal(c, scalar<T>(1), tol)) return {ScalarEquality::EqualExactly, c, residual};
    return {ScalarEquality::EqualProjectively, c, residual};
}

}  // namespace yb

#endif  // YB_SPECTRAL_HPP
