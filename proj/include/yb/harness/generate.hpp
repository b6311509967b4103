#ifndef YB_HARNESS_GENERATE_HPP
#define YB_HARNESS_GENERATE_HPP

#include <yb/chain.hpp>
#include <yb/checks.hpp>
#include <yb/harness/random.hpp>
#include <yb/maps/crystal.hpp>
#include <yb/maps/soliton.hpp>
#include <yb/projective.hpp>

#include <array>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace yb::harness {

inline constexpr int redraw_cap = 1000;

/// Minimal relative separation between distinct float parameters.
inline constexpr double float_param_separation = 1e-9;

template <class Field>
struct field_sampler;

template <FieldScalar T>
struct field_sampler<ProjectivePoint<T>> {
    static constexpr bool labelled = false;
    static ProjectivePoint<T> draw(std::mt19937_64& rng, std::size_t /*dim*/) {
        return ProjectivePoint<T>::affine(draw_scalar<T>(rng));
    }
};

template <FieldScalar T>
struct field_sampler<maps::RankOnePair<T>> {
    static constexpr bool labelled = false;
    static maps::RankOnePair<T> draw(std::mt19937_64& rng, std::size_t dim) {
        for (int attempt = 0; attempt < redraw_cap; ++attempt) {
            Vector<T> xi(dim, scalar<T>(0)), eta(dim, scalar<T>(0));
            for (auto& v : xi) v = draw_scalar<T>(rng);
            for (auto& v : eta) v = draw_scalar<T>(rng);
            if (!maps::RankOnePair<T>::is_degenerate(xi, eta)) return {std::move(xi), std::move(eta)};
        }
        fail(ErrorKind::Generation, "no rank-one pair with nonzero pairing");
    }
};

template <FieldScalar T>
struct field_sampler<maps::CrystalVector<T>> {
    // The parameter of a crystal site is its subset label, the product of its components.
    static constexpr bool labelled = true;
    static maps::CrystalVector<T> draw(std::mt19937_64& rng, std::size_t dim) {
        Vector<T> x(dim, scalar<T>(0));
        for (auto& v : x) v = draw_scalar<T>(rng);
        return maps::CrystalVector<T>(std::move(x));
    }
    static T label(const maps::CrystalVector<T>& x) { return x.product(); }
};

template <FieldScalar T>
bool separated(const T& a, const T& b) {
    if constexpr (scalar_traits<T>::exact) {
        return a != b;
    } else {
        const double s = std::max(std::abs(a), std::abs(b));
        return std::abs(a - b) > float_param_separation * s;
    }
}

template <FieldScalar T>
bool pairwise_separated(std::span<const T> v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!separated(v[i], v[j])) return false;
    return true;
}

template <ParamMap M>
typename M::field_type draw_field(std::mt19937_64& rng, std::size_t dim) {
    return field_sampler<typename M::field_type>::draw(rng, dim);
}

template <ParamMap M>
typename M::scalar_type param_for(std::mt19937_64& rng, const typename M::field_type& f) {
    if constexpr (field_sampler<typename M::field_type>::labelled)
        return field_sampler<typename M::field_type>::label(f);
    else
        return draw_scalar<typename M::scalar_type>(rng);
}

template <ParamMap M>
bool applicable(const M& map, const typename M::scalar_type& a, const typename M::scalar_type& b,
                const typename M::field_type& x, const typename M::field_type& y) {
    try {
        (void)map.apply(a, b, x, y);
        return true;
    } catch (const Error& e) {
        if (!e.is_singularity()) throw;
        return false;
    }
}

/// Three fields with their parameters (lambda, mu, nu) and a spectral
/// parameter zeta, enough to drive any of the checkers.
template <ParamMap M>
struct Instance {
    std::array<typename M::scalar_type, 3> params;
    typename M::scalar_type zeta;
    std::array<typename M::field_type, 3> fields;
};

/// Draws an instance off the singular sets: parameters pairwise distinct,
/// zeta distinct from all of them, and the map defined on every pair of fields
/// in both orders. Throws generation-failure after redraw_cap attempts.
template <ParamMap M>
Instance<M> generate_instance(const M& map, std::mt19937_64& rng, std::size_t dim) {
    using T = typename M::scalar_type;
    for (int attempt = 0; attempt < redraw_cap; ++attempt) {
        auto x = draw_field<M>(rng, dim);
        auto y = draw_field<M>(rng, dim);
        auto z = draw_field<M>(rng, dim);
        std::array<T, 3> p{param_for<M>(rng, x), param_for<M>(rng, y), param_for<M>(rng, z)};
        const T zeta = draw_scalar<T>(rng);
        const std::array<T, 4> all{p[0], p[1], p[2], zeta};
        if (!pairwise_separated<T>(all)) continue;
        Instance<M> inst{p, zeta, {std::move(x), std::move(y), std::move(z)}};
        bool ok = true;
        for (std::size_t i = 0; i < 3 && ok; ++i)
            for (std::size_t j = 0; j < 3 && ok; ++j)
                if (i != j) ok = applicable(map, inst.params[i], inst.params[j], inst.fields[i], inst.fields[j]);
        if (ok) return inst;
    }
    fail(ErrorKind::Generation, std::string(map.name()) + ": redraw cap exceeded");
}

/// Random periodic chain with pairwise distinct parameters on which every
/// adjacent pair is a regular point of the map.
template <ParamMap M>
ChainState<M> generate_chain(const M& map, std::mt19937_64& rng, std::size_t sites, std::size_t dim) {
    using T = typename M::scalar_type;
    if (sites == 0) fail(ErrorKind::Config, "chain needs at least one site");
    for (int attempt = 0; attempt < redraw_cap; ++attempt) {
        ChainState<M> c{map, {}};
        std::vector<T> params;
        for (std::size_t i = 0; i < sites; ++i) {
            auto f = draw_field<M>(rng, dim);
            T p = param_for<M>(rng, f);
            params.push_back(p);
            c.sites.push_back({std::move(f), std::move(p)});
        }
        if (!pairwise_separated<T>(params)) continue;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < sites && ok; ++i) {
            const std::size_t j = (i + 1) % sites;
            ok = applicable(map, params[i], params[j], c.sites[i].field, c.sites[j].field);
        }
        if (ok) return c;
    }
    fail(ErrorKind::Generation, std::string(map.name()) + ": chain redraw cap exceeded");
}

/// Spectral samples avoiding every site parameter and every monodromy singularity.
template <ParamMap M>
std::vector<typename M::scalar_type> generate_zetas(const ChainState<M>& c, std::mt19937_64& rng, std::size_t count) {
    using T = typename M::scalar_type;
    std::vector<T> out;
    const auto params = c.params();
    int attempts = 0;
    while (out.size() < count) {
        if (++attempts > redraw_cap) fail(ErrorKind::Generation, "no regular spectral sample");
        const T zeta = draw_scalar<T>(rng);
        bool ok = std::all_of(params.begin(), params.end(), [&](const T& p) { return separated(p, zeta); }) &&
                  std::all_of(out.begin(), out.end(), [&](const T& z) { return separated(z, zeta); });
        if (!ok) continue;
        const std::array<T, 1> probe{zeta};
        if (!integrals(c, std::span<const T>(probe)).front()) continue;
        out.push_back(zeta);
    }
    return out;
}

}  // namespace yb::harness

#endif  // YB_HARNESS_GENERATE_HPP
