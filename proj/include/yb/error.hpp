#ifndef YB_ERROR_HPP
#define YB_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace yb {

enum class ErrorKind {
    InvalidGroupElement,   // singular matrix where an element of GL_n is required
    Shape,                 // dimension mismatch
    SingularInput,         // input lies on a pole of the map
    SingularOutput,        // map evaluated but produced an invalid field value
    SpectralSingularity,   // spectral parameter hits a pole of the Lax matrix
    InvalidState,          // value violates its type invariant
    Unsupported,           // evaluation not defined for this kind of input
    DegenerateComparison,  // comparison of a zero matrix
    Precondition,          // caller violated an operation precondition
    AbortedStep,           // chain sweep hit a singular pair
    Generation,            // instance generator ran out of redraws
    Config                 // malformed run configuration
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidGroupElement: return "invalid-group-element";
        case ErrorKind::Shape: return "shape";
        case ErrorKind::SingularInput: return "singular-input";
        case ErrorKind::SingularOutput: return "singular-output";
        case ErrorKind::SpectralSingularity: return "spectral-singularity";
        case ErrorKind::InvalidState: return "invalid-state";
        case ErrorKind::Unsupported: return "unsupported-evaluation";
        case ErrorKind::DegenerateComparison: return "degenerate-comparison";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::AbortedStep: return "aborted-step";
        case ErrorKind::Generation: return "generation-failure";
        case ErrorKind::Config: return "config";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    /// Errors a checker turns into a skip rather than a failure: the identity
    /// under test is only claimed away from these sets.
    bool is_singularity() const noexcept {
        return kind_ == ErrorKind::SingularInput || kind_ == ErrorKind::SingularOutput ||
               kind_ == ErrorKind::SpectralSingularity || kind_ == ErrorKind::InvalidGroupElement ||
               kind_ == ErrorKind::Unsupported;
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace yb

#endif  // YB_ERROR_HPP
