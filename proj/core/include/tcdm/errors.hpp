#pragma once

#include <stdexcept>
#include <string>

namespace tcdm {

/// Error categories raised by the library. Each maps to one CLI exit-code
/// class: usage (1), data (2), solver (3).
enum class errc {
    invalid_argument,
    missing_file,
    shape_mismatch,
    non_finite,
    non_uniform_times,
    io_failure,
    zero_density,
    disconnected_row,
    dimension_mismatch,
    no_convergence,
    non_positive_entry,
    rank_deficient,
    too_large,
    index_out_of_range,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    errc code() const noexcept { return code_; }

    /// true for malformed input or I/O problems (CLI exit code 2)
    bool is_data_error() const noexcept {
        switch (code_) {
            case errc::missing_file:
            case errc::shape_mismatch:
            case errc::non_finite:
            case errc::non_uniform_times:
            case errc::io_failure:
            case errc::zero_density:
            case errc::disconnected_row:
            case errc::dimension_mismatch:
            case errc::too_large:
            case errc::index_out_of_range:
                return true;
            default:
                return false;
        }
    }

    /// true for iterative-solver failures (CLI exit code 3)
    bool is_solver_error() const noexcept {
        return code_ == errc::no_convergence || code_ == errc::non_positive_entry ||
               code_ == errc::rank_deficient;
    }

private:
    errc code_;
};

const char* errc_name(errc code);

} // namespace tcdm
