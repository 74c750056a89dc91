#pragma once

#include <cstddef>
#include <cstdint>

namespace periodica::kernels {

// Batched product of residues mod (p, f), f monic of degree d.
// Operands are coefficient planes: a[k * count + i] is coefficient k of operand i.
// Requires p < 2^15 and 1 <= d <= 64.
void polymul_mod_scalar(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t count,
                        std::uint32_t p, const std::uint32_t* f, unsigned d);

// Same contract; p >= 2048 falls back to the scalar kernel.
void polymul_mod_avx2(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t count,
                      std::uint32_t p, const std::uint32_t* f, unsigned d);

enum class Backend { Scalar, Avx2 };

bool avx2_available();
// Avx2 when the CPU supports it, unless PERIODICA_SCALAR is set.
Backend default_backend();
const char* backend_name(Backend b);

void polymul_mod(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out, std::size_t count,
                 std::uint32_t p, const std::uint32_t* f, unsigned d, Backend backend = default_backend());

} // namespace periodica::kernels
