#include "periodica/kernels.hpp"

namespace periodica::kernels {

void polymul_mod_scalar(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t count,
                        std::uint32_t p, const std::uint32_t* f, unsigned d)
{
    std::uint64_t prod[127];
    const unsigned w = 2 * d - 1;
    for (std::size_t i = 0; i < count; ++i) {
        for (unsigned k = 0; k < w; ++k)
            prod[k] = 0;
        for (unsigned x = 0; x < d; ++x) {
            std::uint64_t ax = a[x * count + i];
            if (ax == 0)
                continue;
            for (unsigned y = 0; y < d; ++y)
                prod[x + y] = (prod[x + y] + ax * b[y * count + i]) % p;
        }
        for (unsigned k = w; k-- > d;) {
            std::uint64_t c = prod[k];
            if (c == 0)
                continue;
            for (unsigned j = 0; j < d; ++j)
                prod[k - d + j] = (prod[k - d + j] + c * ((p - f[j]) % p)) % p;
        }
        for (unsigned k = 0; k < d; ++k)
            out[k * count + i] = static_cast<std::uint32_t>(prod[k]);
    }
}

} // namespace periodica::kernels
