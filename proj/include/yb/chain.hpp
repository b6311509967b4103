#ifndef YB_CHAIN_HPP
#define YB_CHAIN_HPP

#include <yb/checks.hpp>
#include <yb/error.hpp>
#include <yb/spectral.hpp>

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace yb {

/// Periodic chain of (field, parameter) sites driven by one map. Values are
/// immutable in spirit: every operation returns a new state.
template <ParamMap M>
struct ChainState {
    using scalar_type = typename M::scalar_type;
    using field_type = typename M::field_type;

    struct Site {
        field_type field;
        scalar_type param;
    };

    M map;
    std::vector<Site> sites;

    std::size_t size() const noexcept { return sites.size(); }

    std::vector<scalar_type> params() const {
        std::vector<scalar_type> out;
        out.reserve(sites.size());
        for (const auto& s : sites) out.push_back(s.param);
        return out;
    }
};

/// Thrown when a transfer sweep hits a singular pair; carries the state
/// reached so far and the pair position that failed.
template <ParamMap M>
class TransferAborted : public Error {
public:
    TransferAborted(ChainState<M> partial, std::size_t position, const std::string& why)
        : Error(ErrorKind::AbortedStep, "transfer sweep stopped at pair " + std::to_string(position) + ": " + why),
          partial_(std::move(partial)),
          position_(position) {}

    const ChainState<M>& partial() const noexcept { return partial_; }
    std::size_t position() const noexcept { return position_; }

private:
    ChainState<M> partial_;
    std::size_t position_;
};

namespace detail {

// Monodromy together with its determinant as the product of factor determinants.
template <ParamMap M>
std::pair<SquareMatrix<typename M::scalar_type>, typename M::scalar_type> monodromy_with_det(
    const ChainState<M>& c, const typename M::scalar_type& zeta) {
    using T = typename M::scalar_type;
    if (c.sites.empty()) fail(ErrorKind::Precondition, "monodromy of an empty chain");
    std::optional<SquareMatrix<T>> acc;
    T det = scalar<T>(1);
    for (std::size_t i = 0; i < c.sites.size(); ++i) {
        try {
            auto l = c.map.lax_a(c.sites[i].field, c.sites[i].param, zeta);
            l.require_group_element("Lax matrix");
            det *= l.determinant();
            acc = acc ? *acc * l : std::move(l);
        } catch (const Error& e) {
            if (!e.is_singularity()) throw;
            fail(ErrorKind::SpectralSingularity, "monodromy: site " + std::to_string(i) + ": " + e.what());
        }
    }
    return {std::move(*acc), std::move(det)};
}

}  // namespace detail

/// L(x_1, lambda_1; zeta) ... L(x_n, lambda_n; zeta), left to right in site order.
template <ParamMap M>
SquareMatrix<typename M::scalar_type> monodromy(const ChainState<M>& c, const typename M::scalar_type& zeta) {
    return detail::monodromy_with_det(c, zeta).first;
}

/// Exchanges sites i and i+1 (zero-based) through the map:
/// (x, lambda), (y, mu) -> (y~, mu), (x~, lambda) with (x~, y~) = R(lambda, mu)(x, y).
/// The Lax relation makes the monodromy invariant under this move. Fields are
/// stored as canonical representatives, computed through the map's
/// apply_representative when it has one.
template <ParamMap M>
ChainState<M> apply_adjacent(const ChainState<M>& c, std::size_t i) {
    if (i + 1 >= c.sites.size())
        fail(ErrorKind::Precondition, "apply_adjacent: no pair at position " + std::to_string(i));
    ChainState<M> out = c;
    const auto& a = c.sites[i];
    const auto& b = c.sites[i + 1];
    auto [xt, yt] = [&] {
        if constexpr (requires { c.map.apply_representative(a.param, b.param, a.field, b.field); })
            return c.map.apply_representative(a.param, b.param, a.field, b.field);
        else
            return c.map.apply(a.param, b.param, a.field, b.field);
    }();
    out.sites[i] = {canonical(yt), b.param};
    out.sites[i + 1] = {canonical(xt), a.param};
    return out;
}

/// Carries the first site through the whole chain by adjacent exchanges, then
/// rotates the sites left by one. The monodromy after the step is
/// F^{-1} M F, with F the Lax matrix of the first site after the sweep.
///
/// This sweep-then-rotate construction stands in for the transfer maps of the
/// Yang-Baxter map; it is built only from moves that provably conserve the
/// spectral invariants.
template <ParamMap M>
ChainState<M> sweep(const ChainState<M>& c) {
    ChainState<M> cur = c;
    for (std::size_t i = 0; i + 1 < c.sites.size(); ++i) {
        try {
            cur = apply_adjacent(cur, i);
        } catch (const Error& e) {
            if (!e.is_singularity()) throw;
            throw TransferAborted<M>(std::move(cur), i, e.what());
        }
    }
    return cur;
}

template <ParamMap M>
ChainState<M> rotate_left(const ChainState<M>& c, std::size_t k = 1) {
    ChainState<M> out = c;
    if (!out.sites.empty()) std::rotate(out.sites.begin(), out.sites.begin() + k % out.sites.size(), out.sites.end());
    return out;
}

template <ParamMap M>
ChainState<M> transfer_step(const ChainState<M>& c) {
    return rotate_left(sweep(c));
}

/// Spectral invariants of the monodromy at each sample; nullopt where the
/// sample hits a singularity. The determinant enters as the product of the
/// Lax determinants.
template <ParamMap M>
std::vector<std::optional<SpectralInvariants<typename M::scalar_type>>> integrals(
    const ChainState<M>& c, std::span<const typename M::scalar_type> zetas) {
    std::vector<std::optional<SpectralInvariants<typename M::scalar_type>>> out;
    out.reserve(zetas.size());
    for (const auto& zeta : zetas) {
        try {
            const auto [m, det] = detail::monodromy_with_det(c, zeta);
            out.emplace_back(spectral_invariants(m, det));
        } catch (const Error& e) {
            if (!e.is_singularity()) throw;
            out.emplace_back(std::nullopt);
        }
    }
    return out;
}

}  // namespace yb

#endif  // YB_CHAIN_HPP
