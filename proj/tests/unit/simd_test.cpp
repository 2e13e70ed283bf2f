#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "tuza/simd.hpp"

namespace tuza::simd {
namespace {

std::vector<const Kernels*> available() {
    std::vector<const Kernels*> out;
    for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
        if (const Kernels* k = kernels_for(isa)) out.push_back(k);
    return out;
}

TEST(SimdKernels, ScalarAlwaysPresent) {
    ASSERT_NE(kernels_for(Isa::scalar), nullptr);
    EXPECT_NE(isa_name(active().isa), "unknown");
}

// Every compiled variant must agree bit-for-bit with the scalar reference on
// bitset kernels, for lengths that exercise both the vector body and the tail.
TEST(SimdKernels, BitsetVariantsMatchScalar) {
    const Kernels& ref = *kernels_for(Isa::scalar);
    std::mt19937_64 rng(7);
    for (std::size_t words : {0u, 1u, 3u, 4u, 5u, 8u, 13u, 64u, 157u}) {
        std::vector<std::uint64_t> a(words), b(words);
        for (int trial = 0; trial < 20; ++trial) {
            for (auto& w : a) w = rng() & rng();
            for (auto& w : b) w = trial % 5 == 0 ? 0 : rng();
            for (const Kernels* k : available()) {
                SCOPED_TRACE(std::string(isa_name(k->isa)) + " words=" + std::to_string(words));
                EXPECT_EQ(k->and_popcount(a.data(), b.data(), words), ref.and_popcount(a.data(), b.data(), words));
                EXPECT_EQ(k->popcount(a.data(), words), ref.popcount(a.data(), words));
                EXPECT_EQ(k->intersects(a.data(), b.data(), words), ref.intersects(a.data(), b.data(), words));
                std::vector<std::uint64_t> d1(words), d2(words);
                k->and_into(d1.data(), a.data(), b.data(), words);
                ref.and_into(d2.data(), a.data(), b.data(), words);
                EXPECT_EQ(d1, d2);
                d1 = a;
                d2 = a;
                k->xor_into(d1.data(), b.data(), words);
                ref.xor_into(d2.data(), b.data(), words);
                EXPECT_EQ(d1, d2);
            }
        }
    }
}

TEST(SimdKernels, FloatingVariantsMatchScalarWithinRounding) {
    const Kernels& ref = *kernels_for(Isa::scalar);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (std::size_t n : {0u, 1u, 3u, 7u, 8u, 9u, 31u, 100u, 1001u}) {
        std::vector<double> x(n), y(n);
        for (auto& v : x) v = u(rng);
        for (auto& v : y) v = u(rng);
        for (const Kernels* k : available()) {
            SCOPED_TRACE(std::string(isa_name(k->isa)) + " n=" + std::to_string(n));
            EXPECT_NEAR(k->dot(x.data(), y.data(), n), ref.dot(x.data(), y.data(), n), 1e-12 * (1.0 + n));
            std::vector<double> y1 = y, y2 = y;
            k->axpy(0.37, x.data(), y1.data(), n);
            ref.axpy(0.37, x.data(), y2.data(), n);
            for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y1[i], y2[i], 1e-15);
        }
    }
}

}  // namespace
}  // namespace tuza::simd
