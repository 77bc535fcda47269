#pragma once

#include <stdexcept>
#include <string>

namespace foulab {

// Estimator fed a degenerate input (zero variation, empty sum, ...).
struct estimation_error : std::runtime_error {
    explicit estimation_error(const std::string& what) : std::runtime_error(what) {}
};

// Monte Carlo / experiment configuration violates a theorem hypothesis.
struct config_error : std::invalid_argument {
    explicit config_error(const std::string& what) : std::invalid_argument(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace foulab
