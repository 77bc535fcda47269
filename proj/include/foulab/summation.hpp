#pragma once

#include <cstddef>
#include <span>

namespace foulab {

/// Pairwise (tree) summation in fixed index order. Used everywhere results
/// must not depend on chunking or thread count.
inline double pairwise_sum(std::span<const double> x) {
    const std::size_t n = x.size();
    if (n <= 32) {
        double s = 0.0;
        for (double v : x) s += v;
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

/// Pairwise sum of f(i) for i in [0, n) without materializing the terms.
template <class F>
double pairwise_sum_indexed(std::size_t begin, std::size_t end, F&& f) {
    const std::size_t n = end - begin;
    if (n <= 32) {
        double s = 0.0;
        for (std::size_t i = begin; i < end; ++i) s += f(i);
        return s;
    }
    const std::size_t mid = begin + n / 2;
    return pairwise_sum_indexed(begin, mid, f) + pairwise_sum_indexed(mid, end, f);
}

}  // namespace foulab
