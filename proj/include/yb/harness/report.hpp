#ifndef YB_HARNESS_REPORT_HPP
#define YB_HARNESS_REPORT_HPP

#include <yb/check_report.hpp>
#include <yb/maps/crystal.hpp>
#include <yb/maps/soliton.hpp>
#include <yb/projective.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace yb::harness {

using json = nlohmann::ordered_json;

inline constexpr const char* artifact_version = "1.0.0";

template <FieldScalar T>
json scalars_to_json(std::span<const T> v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar_traits<T>::to_string(x));
    return out;
}

template <FieldScalar T>
Vector<T> scalars_from_json(const json& j) {
    Vector<T> out;
    for (const auto& s : j) out.push_back(scalar_traits<T>::parse(s.get<std::string>()));
    return out;
}

template <FieldScalar T>
json field_to_json(const ProjectivePoint<T>& p) {
    return json{{"coords", scalars_to_json<T>(p.coords())}};
}

template <FieldScalar T>
json field_to_json(const maps::RankOnePair<T>& p) {
    return json{{"xi", scalars_to_json<T>(p.xi())}, {"eta", scalars_to_json<T>(p.eta())}};
}

template <FieldScalar T>
json field_to_json(const maps::CrystalVector<T>& x) {
    return json{{"x", scalars_to_json<T>(x.components())}};
}

template <class Field>
struct field_parser;

template <FieldScalar T>
struct field_parser<ProjectivePoint<T>> {
    static ProjectivePoint<T> parse(const json& j) { return ProjectivePoint<T>(scalars_from_json<T>(j.at("coords"))); }
};

template <FieldScalar T>
struct field_parser<maps::RankOnePair<T>> {
    static maps::RankOnePair<T> parse(const json& j) {
        return {scalars_from_json<T>(j.at("xi")), scalars_from_json<T>(j.at("eta"))};
    }
};

template <FieldScalar T>
struct field_parser<maps::CrystalVector<T>> {
    static maps::CrystalVector<T> parse(const json& j) { return maps::CrystalVector<T>(scalars_from_json<T>(j.at("x"))); }
};

template <FieldScalar T, class Field>
json witness_to_json(const Witness<T, Field>& w) {
    json fields = json::array();
    for (const auto& f : w.fields) fields.push_back(field_to_json(f));
    return json{{"reason", w.reason},
                {"residual", scalar_traits<T>::real_to_string(w.residual)},
                {"params", scalars_to_json<T>(w.params)},
                {"fields", std::move(fields)}};
}

template <FieldScalar T, class Field>
Witness<T, Field> witness_from_json(const json& j) {
    Witness<T, Field> w;
    w.reason = j.at("reason").get<std::string>();
    w.params = scalars_from_json<T>(j.at("params"));
    for (const auto& f : j.at("fields")) w.fields.push_back(field_parser<Field>::parse(f));
    return w;
}

template <FieldScalar T, class Field>
json report_to_json(const CheckReport<T, Field>& r) {
    json failures = json::array();
    for (const auto& w : r.failures) failures.push_back(witness_to_json(w));
    json skips = json::array();
    for (const auto& w : r.skips) skips.push_back(witness_to_json(w));
    return json{{"check", r.check},
                {"status", r.ok() ? "pass" : "fail"},
                {"seed", r.seed},
                {"tolerance", scalar_traits<T>::exact ? std::string("0") : scalar_traits<Complex>::real_to_string(r.tolerance)},
                {"attempted", r.attempted},
                {"passed", r.passed},
                {"failed", r.failed()},
                {"skipped", r.skipped},
                {"worst_residual", scalar_traits<T>::real_to_string(r.worst_residual)},
                {"projective_trials", r.projective},
                {"factors", scalars_to_json<T>(r.factors)},
                {"failures", std::move(failures)},
                {"skips", std::move(skips)}};
}

}  // namespace yb::harness

#endif  // YB_HARNESS_REPORT_HPP
