#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Composition kernels for permutation images stored as byte arrays.
// out[i] = q[p[i]] computes the left-to-right product p*q on
// 0-based points. A scalar reference kernel is always available;
// SSSE3/AVX2 (x86) and NEON (aarch64) variants cover degrees up to
// 16/32 and fall back to scalar beyond that. The active kernel is
// picked at runtime from CPU features and may be pinned with the
// SGC_KERNEL environment variable (scalar|ssse3|avx2|neon).

namespace sgc::kernels {

enum class Impl { Scalar, SSSE3, AVX2, NEON };

const char* name(Impl impl);

// Kernels usable on this machine, scalar first.
const std::vector<Impl>& available();

// Kernel selected from CPU features and SGC_KERNEL, fixed at first call.
Impl active();

void compose(const std::uint8_t* p, const std::uint8_t* q, std::uint8_t* out,
             unsigned n);

// Same operation forced through a specific kernel (equivalence tests).
void compose_with(Impl impl, const std::uint8_t* p, const std::uint8_t* q,
                  std::uint8_t* out, unsigned n);

}  // namespace sgc::kernels
