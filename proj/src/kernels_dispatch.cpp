#include "periodica/kernels.hpp"

#include <cstdlib>

namespace periodica::kernels {

bool avx2_available()
{
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
}

Backend default_backend()
{
    if (std::getenv("PERIODICA_SCALAR") != nullptr)
        return Backend::Scalar;
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

const char* backend_name(Backend b)
{
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

void polymul_mod(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t count,
                 std::uint32_t p, const std::uint32_t* f, unsigned d, Backend backend)
{
    if (backend == Backend::Avx2 && avx2_available())
        polymul_mod_avx2(a, b, out, count, p, f, d);
    else
        polymul_mod_scalar(a, b, out, count, p, f, d);
}

} // namespace periodica::kernels
