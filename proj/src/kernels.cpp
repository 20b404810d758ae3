#include "sgc/kernels.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(_M_X64) || defined(__i386__)
#define SGC_SIMD_X86 1
#include <immintrin.h>
#endif

#if defined(__aarch64__)
#define SGC_SIMD_NEON 1
#include <arm_neon.h>
#endif

namespace sgc::kernels {

// ============================================================
// scalar reference
// ============================================================

static void compose_scalar(const std::uint8_t* p, const std::uint8_t* q,
                           std::uint8_t* out, unsigned n) {
  for (unsigned i = 0; i < n; ++i) out[i] = q[p[i]];
}

// ============================================================
// x86: SSSE3 (n <= 16) and AVX2 (n <= 32) byte shuffles
// ============================================================

#ifdef SGC_SIMD_X86

__attribute__((target("ssse3"))) static void compose_ssse3(
    const std::uint8_t* p, const std::uint8_t* q, std::uint8_t* out,
    unsigned n) {
  if (n > 16) {
    compose_scalar(p, q, out, n);
    return;
  }
  alignas(16) std::uint8_t pb[16], qb[16], ob[16];
  for (unsigned i = 0; i < 16; ++i) {
    pb[i] = i < n ? p[i] : static_cast<std::uint8_t>(i);
    qb[i] = i < n ? q[i] : static_cast<std::uint8_t>(i);
  }
  __m128i pv = _mm_load_si128(reinterpret_cast<const __m128i*>(pb));
  __m128i qv = _mm_load_si128(reinterpret_cast<const __m128i*>(qb));
  _mm_store_si128(reinterpret_cast<__m128i*>(ob), _mm_shuffle_epi8(qv, pv));
  std::memcpy(out, ob, n);
}

__attribute__((target("avx2"))) static void compose_avx2(const std::uint8_t* p,
                                                         const std::uint8_t* q,
                                                         std::uint8_t* out,
                                                         unsigned n) {
  if (n > 32) {
    compose_scalar(p, q, out, n);
    return;
  }
  alignas(32) std::uint8_t pb[32], qb[32], ob[32];
  for (unsigned i = 0; i < 32; ++i) {
    pb[i] = i < n ? p[i] : static_cast<std::uint8_t>(i);
    qb[i] = i < n ? q[i] : static_cast<std::uint8_t>(i);
  }
  __m256i pv = _mm256_load_si256(reinterpret_cast<const __m256i*>(pb));
  // Both 16-byte halves of q as in-lane lookup tables.
  __m128i qlo = _mm_load_si128(reinterpret_cast<const __m128i*>(qb));
  __m128i qhi = _mm_load_si128(reinterpret_cast<const __m128i*>(qb + 16));
  __m256i tlo = _mm256_broadcastsi128_si256(qlo);
  __m256i thi = _mm256_broadcastsi128_si256(qhi);
  __m256i idx = _mm256_and_si256(pv, _mm256_set1_epi8(0x0F));
  __m256i lo = _mm256_shuffle_epi8(tlo, idx);
  __m256i hi = _mm256_shuffle_epi8(thi, idx);
  // Indices 16..31 select from the high table.
  __m256i is_hi = _mm256_cmpgt_epi8(pv, _mm256_set1_epi8(15));
  _mm256_store_si256(reinterpret_cast<__m256i*>(ob),
                     _mm256_blendv_epi8(lo, hi, is_hi));
  std::memcpy(out, ob, n);
}

#endif  // SGC_SIMD_X86

// ============================================================
// aarch64: NEON table lookups
// ============================================================

#ifdef SGC_SIMD_NEON

static void compose_neon(const std::uint8_t* p, const std::uint8_t* q,
                         std::uint8_t* out, unsigned n) {
  if (n > 32) {
    compose_scalar(p, q, out, n);
    return;
  }
  std::uint8_t pb[32], qb[32], ob[32];
  for (unsigned i = 0; i < 32; ++i) {
    pb[i] = i < n ? p[i] : static_cast<std::uint8_t>(i);
    qb[i] = i < n ? q[i] : static_cast<std::uint8_t>(i);
  }
  if (n <= 16) {
    uint8x16_t pv = vld1q_u8(pb);
    uint8x16_t qv = vld1q_u8(qb);
    vst1q_u8(ob, vqtbl1q_u8(qv, pv));
  } else {
    uint8x16x2_t tab;
    tab.val[0] = vld1q_u8(qb);
    tab.val[1] = vld1q_u8(qb + 16);
    vst1q_u8(ob, vqtbl2q_u8(tab, vld1q_u8(pb)));
    vst1q_u8(ob + 16, vqtbl2q_u8(tab, vld1q_u8(pb + 16)));
  }
  std::memcpy(out, ob, n);
}

#endif  // SGC_SIMD_NEON

// ============================================================
// dispatch
// ============================================================

const char* name(Impl impl) {
  switch (impl) {
    case Impl::Scalar: return "scalar";
    case Impl::SSSE3: return "ssse3";
    case Impl::AVX2: return "avx2";
    case Impl::NEON: return "neon";
  }
  return "?";
}

const std::vector<Impl>& available() {
  static const std::vector<Impl> impls = [] {
    std::vector<Impl> v{Impl::Scalar};
#ifdef SGC_SIMD_X86
    if (__builtin_cpu_supports("ssse3")) v.push_back(Impl::SSSE3);
    if (__builtin_cpu_supports("avx2")) v.push_back(Impl::AVX2);
#endif
#ifdef SGC_SIMD_NEON
    v.push_back(Impl::NEON);
#endif
    return v;
  }();
  return impls;
}

Impl active() {
  static const Impl chosen = [] {
    const std::vector<Impl>& impls = available();
    if (const char* env = std::getenv("SGC_KERNEL")) {
      std::string want(env);
      for (Impl impl : impls)
        if (want == name(impl)) return impl;
    }
    return impls.back();
  }();
  return chosen;
}

void compose_with(Impl impl, const std::uint8_t* p, const std::uint8_t* q,
                  std::uint8_t* out, unsigned n) {
  switch (impl) {
#ifdef SGC_SIMD_X86
    case Impl::SSSE3: compose_ssse3(p, q, out, n); return;
    case Impl::AVX2: compose_avx2(p, q, out, n); return;
#endif
#ifdef SGC_SIMD_NEON
    case Impl::NEON: compose_neon(p, q, out, n); return;
#endif
    default: compose_scalar(p, q, out, n); return;
  }
}

void compose(const std::uint8_t* p, const std::uint8_t* q, std::uint8_t* out,
             unsigned n) {
  compose_with(active(), p, q, out, n);
}

}  // namespace sgc::kernels
