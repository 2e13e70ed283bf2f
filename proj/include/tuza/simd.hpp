#pragma once
// Data-parallel kernels over packed 64-bit bitset rows and dense double vectors.
//
// Every kernel has a scalar reference implementation. Wider variants (AVX2 on
// x86-64, NEON on AArch64) are compiled into separate translation units and
// picked at first use from the running CPU's capabilities. Setting the
// environment variable TUZA_ISA=scalar forces the reference path.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace tuza::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);

struct Kernels {
    Isa isa;
    // popcount(a & b)
    std::size_t (*and_popcount)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    // popcount(a)
    std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
    // dst = a & b
    void (*and_into)(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                     std::size_t words);
    // dst ^= src
    void (*xor_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
    // (a & b) != 0
    bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
    // sum a[i] * b[i]
    double (*dot)(const double* a, const double* b, std::size_t n);
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
};

/// Kernels selected for this process (CPU detection + TUZA_ISA override).
const Kernels& active();

/// Kernels for a specific ISA, or nullptr when it is not compiled in or the
/// CPU cannot run it. Used by the equivalence tests.
const Kernels* kernels_for(Isa isa);

namespace detail {
const Kernels& scalar_kernels();
const Kernels* avx2_kernels();  // nullptr when not built
const Kernels* neon_kernels();  // nullptr when not built
}  // namespace detail

// Convenience wrappers over active().

inline std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return active().and_popcount(a.data(), b.data(), a.size());
}
inline std::size_t popcount(std::span<const std::uint64_t> a) {
    return active().popcount(a.data(), a.size());
}
inline void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> a,
                     std::span<const std::uint64_t> b) {
    active().and_into(dst.data(), a.data(), b.data(), dst.size());
}
inline void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    active().xor_into(dst.data(), src.data(), dst.size());
}
inline bool intersects(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    return active().intersects(a.data(), b.data(), a.size());
}
inline double dot(std::span<const double> a, std::span<const double> b) {
    return active().dot(a.data(), b.data(), a.size());
}
inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    active().axpy(alpha, x.data(), y.data(), y.size());
}

}  // namespace tuza::simd
