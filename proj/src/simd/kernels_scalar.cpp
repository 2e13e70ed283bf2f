#include "tuza/simd.hpp"

#include <bit>

namespace tuza::simd::detail {
namespace {

std::size_t and_popcount_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::size_t popcount_scalar(const std::uint64_t* a, std::size_t words) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

void and_into_scalar(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] = a[i] & b[i];
}

void xor_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i) dst[i] ^= src[i];
}

bool intersects_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    for (std::size_t i = 0; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

constexpr Kernels kScalar{Isa::scalar,    and_popcount_scalar, popcount_scalar, and_into_scalar,
                          xor_into_scalar, intersects_scalar,  dot_scalar,      axpy_scalar};

}  // namespace

const Kernels& scalar_kernels() { return kScalar; }

}  // namespace tuza::simd::detail
