#include <bit>
#include <cstring>

#include "recomb/state_sum.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace recomb::detail {

#if defined(__AVX2__)

bool avx2_compiled() { return true; }

namespace {

// Eight consecutive states per group; lane j holds state base + j.
void group_avx2(const LinkDiagram& d, std::uint64_t base, __m256i* lab, __m256i* prev, std::uint64_t* hist) {
    const int c = d.crossing_count();
    const int E = d.edge_count();
    const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    __m256i mask_lo[3];
    for (int i = 0; i < 3; ++i) {
        const __m256i bit = _mm256_set1_epi32(1 << i);
        mask_lo[i] = _mm256_cmpeq_epi32(_mm256_and_si256(lane, bit), bit);
    }
    for (int e = 0; e < E; ++e) lab[e] = _mm256_set1_epi32(e);

    auto mask_of = [&](int i) {
        if (i < 3) return mask_lo[i];
        return ((base >> i) & 1) ? _mm256_set1_epi32(-1) : _mm256_setzero_si256();
    };
    auto step = [&](int i) {
        const auto& e = d.crossings[i].e;
        const __m256i m = mask_of(i);
        __m256i p = _mm256_blendv_epi8(lab[e[1]], lab[e[3]], m);
        __m256i v = _mm256_min_epi32(lab[e[0]], p);
        lab[e[0]] = v;
        lab[e[1]] = _mm256_blendv_epi8(v, lab[e[1]], m);
        lab[e[3]] = _mm256_blendv_epi8(lab[e[3]], v, m);
        p = _mm256_blendv_epi8(lab[e[3]], lab[e[1]], m);
        v = _mm256_min_epi32(lab[e[2]], p);
        lab[e[2]] = v;
        lab[e[3]] = _mm256_blendv_epi8(v, lab[e[3]], m);
        lab[e[1]] = _mm256_blendv_epi8(lab[e[1]], v, m);
    };

    bool forward = true;
    for (;;) {
        std::memcpy(prev, lab, sizeof(__m256i) * E);
        if (forward)
            for (int i = 0; i < c; ++i) step(i);
        else
            for (int i = c - 1; i >= 0; --i) step(i);
        forward = !forward;
        __m256i diff = _mm256_setzero_si256();
        for (int e = 0; e < E; ++e) diff = _mm256_or_si256(diff, _mm256_xor_si256(lab[e], prev[e]));
        if (_mm256_testz_si256(diff, diff)) break;
    }

    __m256i count = _mm256_setzero_si256();
    for (int e = 0; e < E; ++e) count = _mm256_sub_epi32(count, _mm256_cmpeq_epi32(lab[e], _mm256_set1_epi32(e)));
    alignas(32) int loops[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(loops), count);
    for (int j = 0; j < 8; ++j) {
        int a = c - std::popcount(base + j);
        ++hist[a * (E + 1) + loops[j]];
    }
}

}  // namespace

void histogram_avx2(const LinkDiagram& d, std::uint64_t begin, std::uint64_t end, std::uint64_t* hist) {
    if (d.crossing_count() < 3) {
        histogram_scalar(d, begin, end, hist);
        return;
    }
    std::uint64_t lo = (begin + 7) & ~std::uint64_t{7};
    std::uint64_t hi = end & ~std::uint64_t{7};
    if (lo >= hi) {
        histogram_scalar(d, begin, end, hist);
        return;
    }
    histogram_scalar(d, begin, lo, hist);
    alignas(32) __m256i lab[2 * kMaxStateSumCrossings];
    alignas(32) __m256i prev[2 * kMaxStateSumCrossings];
    for (std::uint64_t base = lo; base < hi; base += 8) group_avx2(d, base, lab, prev, hist);
    histogram_scalar(d, hi, end, hist);
}

#else

bool avx2_compiled() { return false; }

void histogram_avx2(const LinkDiagram& d, std::uint64_t begin, std::uint64_t end, std::uint64_t* hist) {
    histogram_scalar(d, begin, end, hist);
}

#endif

}  // namespace recomb::detail
