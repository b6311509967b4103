#ifndef YB_CHECK_REPORT_HPP
#define YB_CHECK_REPORT_HPP

#include <yb/scalar.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace yb {

/// Complete inputs of one trial, enough to replay it through the same checker.
/// Parameter and field order follow the checker's signature.
template <FieldScalar T, class Field>
struct Witness {
    std::string reason;
    std::vector<T> params;
    std::vector<Field> fields;
    real_t<T> residual{0};
};

/// Outcome of one or more trials of a single check. Reports merge
/// associatively: counts add, residuals take the max, witnesses concatenate.
///
/// Skipped trials (inputs on a singular set) are not counted as attempted, so
/// passed == attempted exactly when worst_residual is within tolerance.
template <FieldScalar T, class Field>
struct CheckReport {
    static constexpr std::size_t max_witnesses = 25;

    std::string check;
    double tolerance = 0.0;
    std::uint64_t seed = 0;

    std::size_t attempted = 0;
    std::size_t passed = 0;
    std::size_t skipped = 0;
    real_t<T> worst_residual{0};

    // Lax checks: trials that matched only up to a non-unit scalar factor.
    std::size_t projective = 0;
    std::vector<T> factors;

    std::vector<Witness<T, Field>> failures;
    std::vector<Witness<T, Field>> skips;

    std::size_t failed() const noexcept { return attempted - passed; }
    bool ok() const noexcept { return passed == attempted; }

    void record_pass(const real_t<T>& residual) {
        ++attempted;
        ++passed;
        worst_residual = std::max<real_t<T>>(worst_residual, residual);
    }

    void record_failure(Witness<T, Field> w) {
        ++attempted;
        worst_residual = std::max<real_t<T>>(worst_residual, w.residual);
        if (failures.size() < max_witnesses) failures.push_back(std::move(w));
    }

    void record_skip(Witness<T, Field> w) {
        ++skipped;
        if (skips.size() < max_witnesses) skips.push_back(std::move(w));
    }

    void record_factor(const T& c) {
        ++projective;
        if (factors.size() < max_witnesses) factors.push_back(c);
    }

    CheckReport& merge(const CheckReport& o) {
        if (check.empty()) check = o.check;
        attempted += o.attempted;
        passed += o.passed;
        skipped += o.skipped;
        projective += o.projective;
        worst_residual = std::max<real_t<T>>(worst_residual, o.worst_residual);
        append_capped(failures, o.failures);
        append_capped(skips, o.skips);
        for (const auto& c : o.factors)
            if (factors.size() < max_witnesses) factors.push_back(c);
        return *this;
    }

private:
    static void append_capped(std::vector<Witness<T, Field>>& dst, const std::vector<Witness<T, Field>>& src) {
        for (const auto& w : src) {
            if (dst.size() >= max_witnesses) break;
            dst.push_back(w);
        }
    }
};

}  // namespace yb

#endif  // YB_CHECK_REPORT_HPP
