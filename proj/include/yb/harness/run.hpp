#ifndef YB_HARNESS_RUN_HPP
#define YB_HARNESS_RUN_HPP

#include <yb/chain.hpp>
#include <yb/checks.hpp>
#include <yb/harness/generate.hpp>
#include <yb/harness/random.hpp>
#include <yb/harness/report.hpp>
#include <yb/maps/adler.hpp>
#include <yb/maps/controls.hpp>
#include <yb/maps/crystal.hpp>
#include <yb/maps/soliton.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

namespace yb::harness {

inline const std::vector<std::string>& known_maps() {
    static const std::vector<std::string> v{"adler", "soliton", "crystal", "adler-perturbed", "flip", "shift"};
    return v;
}

inline const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> v{"yb", "reversibility", "lax", "lax-dual", "projective-form",
                                            "chain-conserve"};
    return v;
}

inline constexpr double default_verify_tol = 1e-9;
inline constexpr double default_chain_tol = 1e-8;
/// Largest admissible share of skipped trials.
inline constexpr double max_skip_fraction = 0.05;

struct RunConfig {
    std::string map = "adler";
    std::string check = "yb";
    std::string mode = "exact";
    std::size_t trials = 100;
    std::optional<double> tol;  // float mode only; defaults depend on the check
    std::uint64_t seed = 0;
    std::size_t dim = 0;  // soliton N or crystal n; 0 selects the default
    std::size_t sites = 4;
    std::size_t steps = 100;
    std::size_t zeta_samples = 3;

    bool is_chain() const { return check == "chain-conserve"; }

    double tolerance() const { return tol.value_or(is_chain() ? default_chain_tol : default_verify_tol); }

    std::size_t dimension() const {
        if (dim != 0) return dim;
        if (map == "soliton") return 2;
        if (map == "crystal") return 3;
        return 2;
    }
};

inline void validate(const RunConfig& c) {
    auto has = [](const std::vector<std::string>& v, const std::string& s) {
        return std::find(v.begin(), v.end(), s) != v.end();
    };
    if (!has(known_maps(), c.map)) fail(ErrorKind::Config, "unknown map '" + c.map + "'");
    if (!has(known_checks(), c.check)) fail(ErrorKind::Config, "unknown check '" + c.check + "'");
    if (c.mode != "exact" && c.mode != "float") fail(ErrorKind::Config, "mode must be exact or float");
    if (c.trials == 0) fail(ErrorKind::Config, "trials must be positive");
    if (c.tol && !(*c.tol > 0.0)) fail(ErrorKind::Config, "tolerance must be positive");
    const bool control = c.map == "flip" || c.map == "shift";
    if (control && c.check != "yb" && c.check != "reversibility")
        fail(ErrorKind::Config, "map '" + c.map + "' supports only yb and reversibility");
    if (c.check == "projective-form" && c.map != "adler" && c.map != "crystal")
        fail(ErrorKind::Config, "projective-form is defined for adler and crystal");
    if (c.is_chain() && (c.map == "adler-perturbed" || control))
        fail(ErrorKind::Config, "chain runs need a map with a Lax matrix");
    if (c.map != "soliton" && c.map != "crystal" && c.dim != 0 && c.dim != 2)
        fail(ErrorKind::Config, "map '" + c.map + "' lives on CP^1; --dim must be 2");
    if (c.is_chain() && c.sites == 0) fail(ErrorKind::Config, "sites must be positive");
    if (c.is_chain() && c.zeta_samples == 0) fail(ErrorKind::Config, "zeta-samples must be positive");
}

inline json config_to_json(const RunConfig& c) {
    json j{{"map", c.map},       {"check", c.check},         {"mode", c.mode},
           {"trials", c.trials}, {"seed", c.seed},           {"dim", c.dimension()}};
    j["tolerance"] = c.mode == "exact" ? std::string("0") : scalar_traits<Complex>::real_to_string(c.tolerance());
    if (c.is_chain()) {
        j["sites"] = c.sites;
        j["steps"] = c.steps;
        j["zeta_samples"] = c.zeta_samples;
    }
    return j;
}

struct RunOutcome {
    json report;
    int exit_code = 0;
};

namespace detail {

template <ParamMap M>
struct has_projective_form : std::false_type {};
template <FieldScalar T>
struct has_projective_form<maps::AdlerMap<T>> : std::true_type {};
template <FieldScalar T>
struct has_projective_form<maps::CrystalMap<T>> : std::true_type {};

template <ParamMap M>
ReportFor<M> run_trial_check(const M& map, const RunConfig& cfg, const Instance<M>& in) {
    const double tol = cfg.tolerance();
    const auto& [l, m, n] = in.params;
    const auto& [x, y, z] = in.fields;
    if (cfg.check == "yb") return check_yang_baxter(map, in.params, in.fields, tol);
    if (cfg.check == "reversibility") return check_reversibility(map, l, m, x, y, tol);
    if (cfg.check == "lax") return check_lax(map, l, m, in.zeta, x, y, tol);
    if (cfg.check == "lax-dual") return check_lax_dual(map, m, n, l, y, z, tol);
    if constexpr (has_projective_form<M>::value) {
        using T = typename M::scalar_type;
        if constexpr (std::is_same_v<M, maps::AdlerMap<T>>)
            return maps::adler_mobius_form_check(l, m, x, y, tol);
        else
            return maps::crystal_projective_form_check(l, m, x, y, tol);
    }
    fail(ErrorKind::Config, "check '" + cfg.check + "' is not available for this map");
}

template <ParamMap M>
ReportFor<M> run_verify(const M& map, const RunConfig& cfg) {
    ReportFor<M> total;
    total.check = cfg.check;
    total.seed = cfg.seed;
    total.tolerance = scalar_traits<typename M::scalar_type>::exact ? 0.0 : cfg.tolerance();
    for (std::size_t i = 0; i < cfg.trials; ++i) {
        auto rng = trial_rng(cfg.seed, i);
        const auto inst = generate_instance(map, rng, cfg.dimension());
        total.merge(run_trial_check(map, cfg, inst));
    }
    return total;
}

/// Evolves `trials` random chains; a chain passes when its integrals at every
/// spectral sample agree with the initial ones after every step. Witness
/// layout: params = site parameters followed by the spectral samples,
/// fields = initial site fields.
template <ParamMap M>
ReportFor<M> run_chain(const M& map, const RunConfig& cfg) {
    using T = typename M::scalar_type;
    ReportFor<M> total;
    total.check = cfg.check;
    total.seed = cfg.seed;
    const double tol = cfg.tolerance();
    total.tolerance = scalar_traits<T>::exact ? 0.0 : tol;

    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        auto rng = trial_rng(cfg.seed, trial);
        const auto start = generate_chain(map, rng, cfg.sites, cfg.dimension());
        const auto zetas = generate_zetas(start, rng, cfg.zeta_samples);
        const auto reference = integrals(start, std::span<const T>(zetas));

        WitnessFor<M> w;
        w.params = start.params();
        w.params.insert(w.params.end(), zetas.begin(), zetas.end());
        for (const auto& s : start.sites) w.fields.push_back(s.field);

        real_t<T> worst(0);
        std::string problem;
        auto state = start;
        for (std::size_t step = 1; step <= cfg.steps && problem.empty(); ++step) {
            try {
                state = transfer_step(state);
            } catch (const TransferAborted<M>& e) {
                problem = "step " + std::to_string(step) + ": " + e.what();
                break;
            }
            // Exact integrals are costly once heights have grown; equality at
            // the last step is the claim being tested.
            if (scalar_traits<T>::exact && step != cfg.steps) continue;
            const auto now = integrals(state, std::span<const T>(zetas));
            for (std::size_t k = 0; k < zetas.size(); ++k) {
                if (!now[k]) {
                    problem = "step " + std::to_string(step) + ": integrals undefined at sample " + std::to_string(k);
                    break;
                }
                const auto d = invariants_drift(*reference[k], *now[k]);
                worst = std::max<real_t<T>>(worst, d);
                if (!scalar_traits<T>::within(d, tol) && w.reason.empty())
                    w.reason = "invariants drift first at step " + std::to_string(step);
            }
        }
        ReportFor<M> r;
        if (!problem.empty()) {
            w.reason = problem;
            r.record_skip(std::move(w));
        } else if (scalar_traits<T>::within(worst, tol)) {
            r.record_pass(worst);
        } else {
            w.residual = worst;
            r.record_failure(std::move(w));
        }
        total.merge(r);
    }
    return total;
}

template <ParamMap M>
std::pair<json, bool> run_map(const M& map, const RunConfig& cfg) {
    const auto report = cfg.is_chain() ? run_chain(map, cfg) : run_verify(map, cfg);
    const std::size_t total = report.attempted + report.skipped;
    if (static_cast<double>(report.skipped) > max_skip_fraction * static_cast<double>(total))
        fail(ErrorKind::Generation, std::to_string(report.skipped) + " of " + std::to_string(total) +
                                        " trials skipped on singular inputs (cap " +
                                        std::to_string(static_cast<int>(max_skip_fraction * 100)) + "%)");
    json j{{"map", std::string(map.name())},
           {"mode", std::string(scalar_traits<typename M::scalar_type>::mode)},
           {"lax_mode", std::string(to_string(map.lax_mode()))}};
    if (cfg.is_chain()) {
        j["transfer_map"] = "sweep-then-rotate (stand-in for the transfer maps)";
        j["sites"] = cfg.sites;
        j["steps"] = cfg.steps;
        j["zeta_samples"] = cfg.zeta_samples;
    }
    j.update(report_to_json(report));
    return {j, report.ok()};
}

template <FieldScalar T>
std::pair<json, bool> run_backend(const RunConfig& cfg) {
    if (cfg.map == "adler") return run_map(maps::AdlerMap<T>{}, cfg);
    if (cfg.map == "soliton") return run_map(maps::SolitonMap<T>{}, cfg);
    if (cfg.map == "crystal") return run_map(maps::CrystalMap<T>{}, cfg);
    if (cfg.map == "adler-perturbed") return run_map(maps::PerturbedAdlerMap<T>{}, cfg);
    if (cfg.map == "flip") return run_map(maps::FlipMap<T>{}, cfg);
    return run_map(maps::ShiftMap<T>{}, cfg);
}

}  // namespace detail

/// Runs one verification or chain-evolution job and builds the report
/// {version, config, results[], summary}. Exit code: 0 all trials pass,
/// 1 some trial fails, 2 configuration or generation error.
inline RunOutcome run(const RunConfig& cfg) {
    const auto t0 = std::chrono::steady_clock::now();
    RunOutcome out;
    out.report = json{{"version", artifact_version}, {"config", config_to_json(cfg)}, {"results", json::array()}};
    json summary;
    try {
        validate(cfg);
        auto [result, ok] = cfg.mode == "exact" ? detail::run_backend<Rational>(cfg) : detail::run_backend<Complex>(cfg);
        out.report["results"].push_back(std::move(result));
        out.exit_code = ok ? 0 : 1;
        summary["status"] = ok ? "pass" : "fail";
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::Config && e.kind() != ErrorKind::Generation) throw;
        out.exit_code = 2;
        summary["status"] = "error";
        summary["error"] = e.what();
    }
    summary["exit_code"] = out.exit_code;
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    summary["wall_time_s"] = scalar_traits<Complex>::real_to_string(dt.count());
    out.report["summary"] = std::move(summary);
    return out;
}

}  // namespace yb::harness

#endif  // YB_HARNESS_RUN_HPP
