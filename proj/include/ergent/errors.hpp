#pragma once

#include <stdexcept>
#include <string>

namespace ergent {

// Failure categories. Grouped by the exit status the CLI maps them to:
// parameter/shape problems -> 2, resource caps -> 3, violated numerical
// invariants -> 4.
enum class errc {
    invalid_dimension,
    invalid_parameter,
    degenerate_spectrum,
    degenerate_profile,
    pairing_mismatch,
    symmetry_violation,
    malformed_input,
    out_of_regime,
    invalid_window,
    configuration,
    empty_input,
    io_failure,
    resource_limit,
    invariant_violation,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::invalid_dimension: return "invalid-dimension";
        case errc::invalid_parameter: return "invalid-parameter";
        case errc::degenerate_spectrum: return "degenerate-spectrum";
        case errc::degenerate_profile: return "degenerate-profile";
        case errc::pairing_mismatch: return "pairing-mismatch";
        case errc::symmetry_violation: return "symmetry-violation";
        case errc::malformed_input: return "malformed-input";
        case errc::out_of_regime: return "out-of-regime";
        case errc::invalid_window: return "invalid-window";
        case errc::configuration: return "configuration";
        case errc::empty_input: return "empty-input";
        case errc::io_failure: return "io-failure";
        case errc::resource_limit: return "resource-limit";
        case errc::invariant_violation: return "invariant-violation";
    }
    return "error";
}

inline int exit_status_for(errc c) {
    switch (c) {
        case errc::resource_limit: return 3;
        case errc::invariant_violation: return 4;
        default: return 2;
    }
}

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& message) {
    throw Error(code, message);
}

inline void require(bool cond, errc code, const std::string& message) {
    if (!cond) fail(code, message);
}

}  // namespace ergent
