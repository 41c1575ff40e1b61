#include "rml/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#if defined(__x86_64__) || defined(_M_X64)
#include <cpuid.h>
#endif

namespace rml::simd {
namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    unsigned eax = 0, ebx = 0, ecx = 0, edx = 0;
    if (!__get_cpuid(1, &eax, &ebx, &ecx, &edx))
        return false;
    const bool osxsave = (ecx & bit_OSXSAVE) != 0;
    const bool avx = (ecx & bit_AVX) != 0;
    if (!osxsave || !avx)
        return false;
    // OS must save ymm state (xcr0 bits 1 and 2)
    unsigned xlo = 0, xhi = 0;
    __asm__ volatile("xgetbv" : "=a"(xlo), "=d"(xhi) : "c"(0));
    if ((xlo & 0x6) != 0x6)
        return false;
    if (!__get_cpuid_count(7, 0, &eax, &ebx, &ecx, &edx))
        return false;
    return (ebx & bit_AVX2) != 0;
#else
    return false;
#endif
}

const Kernels* pick_default() {
    if (const char* env = std::getenv("RML_SIMD")) {
        std::string want(env);
        if (want == "scalar")
            return &scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
        if (want == "avx2" && cpu_has_avx2())
            return &avx2_kernels();
#endif
        // unknown or unsupported request: fall through to autodetect
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_has_avx2())
        return &avx2_kernels();
#endif
    return &scalar_kernels();
}

std::atomic<const Kernels*> g_active{nullptr};

} // namespace

const Kernels& active() {
    const Kernels* k = g_active.load(std::memory_order_acquire);
    if (!k) {
        k = pick_default();
        g_active.store(k, std::memory_order_release);
    }
    return *k;
}

bool set_active(std::string_view name) {
    if (name == "scalar") {
        g_active.store(&scalar_kernels(), std::memory_order_release);
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2" && cpu_has_avx2()) {
        g_active.store(&avx2_kernels(), std::memory_order_release);
        return true;
    }
#endif
    return false;
}

} // namespace rml::simd
