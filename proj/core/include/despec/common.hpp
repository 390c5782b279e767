#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace despec {

// Config-file / CLI-argument problems. The CLI maps these to exit code 2.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// File and serialization problems.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Dimension / shape violations (image sizes, tensor shapes, batch sizes).
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Training aborted (e.g. non-finite loss). Carries the diagnostic message.
struct TrainError : std::runtime_error {
    explicit TrainError(const std::string& msg) : std::runtime_error(msg) {}
};

// Fixes the number of threads used by Eigen's matrix products and by the
// OpenMP loops in the renderer/eval. Bit-level reproducibility of results
// holds for a fixed thread count. Returns the count in effect.
int set_num_threads(int n);

// Current thread count (initialized from DESPEC_THREADS or the hardware
// concurrency on first use).
int num_threads();

}  // namespace despec
