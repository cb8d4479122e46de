#ifndef ORBITSPACE_ERRORS_HPP
#define ORBITSPACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace orbitspace {

// Every failure mode of the library carries one of these codes so callers
// (and the CLI exit-code contract) can dispatch without string matching.
enum class ErrorCode {
    malformed_number,
    rank_mismatch,
    unknown_label,
    duplicate_label,
    non_pointed_tail,
    not_a_vertex,
    empty_input,
    tail_mismatch,
    unbounded_support,
    not_admissible,
    not_coherent,
    invalid_marking,
    invalid_identification,
    invalid_schema,
    unsupported_fan,
    internal,
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::malformed_number: return "malformed-number";
        case ErrorCode::rank_mismatch: return "rank-mismatch";
        case ErrorCode::unknown_label: return "unknown-label";
        case ErrorCode::duplicate_label: return "duplicate-label";
        case ErrorCode::non_pointed_tail: return "non-pointed-tail";
        case ErrorCode::not_a_vertex: return "not-a-vertex";
        case ErrorCode::empty_input: return "empty-input";
        case ErrorCode::tail_mismatch: return "tail-mismatch";
        case ErrorCode::unbounded_support: return "unbounded-support";
        case ErrorCode::not_admissible: return "not-admissible";
        case ErrorCode::not_coherent: return "not-coherent";
        case ErrorCode::invalid_marking: return "invalid-marking";
        case ErrorCode::invalid_identification: return "invalid-identification";
        case ErrorCode::invalid_schema: return "invalid-schema";
        case ErrorCode::unsupported_fan: return "unsupported-fan";
        case ErrorCode::internal: return "internal";
    }
    return "unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace orbitspace

#endif // ORBITSPACE_ERRORS_HPP
