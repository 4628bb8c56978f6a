#pragma once

#include <stdexcept>
#include <string>

namespace lppl {

// Gram matrix of the linear subproblem is rank-deficient beyond tolerance.
struct SingularSystemError : std::runtime_error {
    explicit SingularSystemError(const std::string& what) : std::runtime_error(what) {}
};

// No start of a multi-start calibration produced a usable fit.
struct FitFailedError : std::runtime_error {
    explicit FitFailedError(const std::string& what) : std::runtime_error(what) {}
};

// Not enough observations before an evaluation date to fit any window.
struct InsufficientHistoryError : std::runtime_error {
    explicit InsufficientHistoryError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file (CSV header/row problems, bad dates, ...).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lppl
