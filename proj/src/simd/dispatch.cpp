#include "tuza/simd.hpp"

#include <cstdlib>
#include <string>

namespace tuza::simd {

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::scalar: return "scalar";
        case Isa::avx2: return "avx2";
        case Isa::neon: return "neon";
    }
    return "unknown";
}

const Kernels* kernels_for(Isa isa) {
    switch (isa) {
        case Isa::scalar: return &detail::scalar_kernels();
        case Isa::avx2: {
#if defined(__x86_64__) || defined(_M_X64)
            __builtin_cpu_init();
            if (!__builtin_cpu_supports("avx2") || !__builtin_cpu_supports("fma")) return nullptr;
#endif
            return detail::avx2_kernels();
        }
        case Isa::neon: return detail::neon_kernels();
    }
    return nullptr;
}

namespace {

const Kernels& select() {
    if (const char* env = std::getenv("TUZA_ISA")) {
        const std::string want(env);
        for (Isa isa : {Isa::scalar, Isa::avx2, Isa::neon})
            if (want == isa_name(isa))
                if (const Kernels* k = kernels_for(isa)) return *k;
    }
    if (const Kernels* k = kernels_for(Isa::avx2)) return *k;
    if (const Kernels* k = kernels_for(Isa::neon)) return *k;
    return detail::scalar_kernels();
}

}  // namespace

const Kernels& active() {
    static const Kernels& chosen = select();
    return chosen;
}

}  // namespace tuza::simd
