#pragma once

#include <complex>
#include <vector>

namespace foulab {

/// In-place radix-2 complex FFT, forward sign convention
/// X_k = sum_j x_j exp(-2*pi*i*j*k/N). N must be a power of two.
void fft_inplace(std::vector<std::complex<double>>& data);

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace foulab
