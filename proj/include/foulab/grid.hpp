#pragma once

#include <cstdint>
#include <stdexcept>

namespace foulab {

/// Uniform observation grid t_i = i*h, i = 0..n.
struct GridSpec {
    std::int64_t n = 0;  // number of steps
    double h = 0.0;      // step length

    GridSpec() = default;
    GridSpec(std::int64_t n_, double h_) : n(n_), h(h_) { validate(); }

    double horizon() const { return static_cast<double>(n) * h; }

    void validate() const {
        if (n < 1) throw std::domain_error("GridSpec: n must be >= 1");
        if (!(h > 0.0)) throw std::domain_error("GridSpec: h must be > 0");
    }
};

}  // namespace foulab
