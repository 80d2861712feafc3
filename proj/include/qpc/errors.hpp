#pragma once

#include <stdexcept>
#include <string>

namespace qpc {

/// Invalid parameter value (bad pulse spec, unsupported shape, non-finite input).
struct DomainError : std::invalid_argument {
    explicit DomainError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Grid mismatch or misalignment (no sample at t=0, lag not a multiple of dt, ...).
struct GridError : std::invalid_argument {
    explicit GridError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Grid too narrow for the requested waveform (edge value above truncation threshold).
struct CoverageError : std::runtime_error {
    explicit CoverageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// RF grid too coarse for the carrier.
struct SamplingError : std::runtime_error {
    explicit SamplingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Trace does not have the shape an operation requires (e.g. no half-height crossing).
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace qpc
