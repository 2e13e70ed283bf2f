#include "tuza/simd.hpp"

#if defined(__aarch64__) || defined(_M_ARM64)

#include <arm_neon.h>

#include <bit>

namespace tuza::simd::detail {
namespace {

inline std::size_t sum_bytes(uint8x16_t counts) { return vaddlvq_u8(counts); }

std::size_t and_popcount_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        total += sum_bytes(vcntq_u8(vreinterpretq_u8_u64(v)));
    }
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return total;
}

std::size_t popcount_neon(const std::uint64_t* a, std::size_t words) {
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) total += sum_bytes(vcntq_u8(vreinterpretq_u8_u64(vld1q_u64(a + i))));
    for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
    return total;
}

void and_into_neon(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    for (; i < words; ++i) dst[i] = a[i] & b[i];
}

void xor_into_neon(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, veorq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
    for (; i < words; ++i) dst[i] ^= src[i];
}

bool intersects_neon(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
    std::size_t i = 0;
    for (; i + 2 <= words; i += 2) {
        const uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
        if (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) return true;
    }
    for (; i < words; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

double dot_neon(const double* a, const double* b, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
    double s = vaddvq_f64(acc);
    for (; i < n; ++i) s += a[i] * b[i];
    return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t va = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
    for (; i < n; ++i) y[i] += alpha * x[i];
}

constexpr Kernels kNeon{Isa::neon,    and_popcount_neon, popcount_neon, and_into_neon,
                        xor_into_neon, intersects_neon,  dot_neon,      axpy_neon};

}  // namespace

const Kernels* neon_kernels() { return &kNeon; }

}  // namespace tuza::simd::detail

#else

namespace tuza::simd::detail {
const Kernels* neon_kernels() { return nullptr; }
}  // namespace tuza::simd::detail

#endif
