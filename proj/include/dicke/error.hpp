// error.hpp — error codes and the exception type shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

enum class errc {
    invalid_params,
    invalid_couplings,
    zero_coupling,
    squeeze_divergence,
    sz_zero,
    no_transition,
    ratio_one,
    unstable,
    degenerate_l,
    imaginary_gap,
    below_critical,
    cutoff_too_small,
    cutoff_limit,
    no_convergence,
    no_crossing,
    config_error,
    io_error,
};

// Stable short tag, e.g. "BelowCritical"; used as the per-row marker in sweep output.
const char* errc_tag(errc c) noexcept;

// True for parameter/domain errors (CLI exit code 2); false for numerical
// failures (CLI exit code 3).
bool errc_is_invalid_input(errc c) noexcept;

class error : public std::runtime_error {
public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }
    const char* tag() const noexcept { return errc_tag(code_); }

private:
    errc code_;
};

} // namespace dicke
