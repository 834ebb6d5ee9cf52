#include <bit>
#include <cstring>

#include "recomb/state_sum.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#endif

namespace recomb::detail {

#if defined(__aarch64__) && defined(__ARM_NEON)

bool neon_compiled() { return true; }

namespace {

// Four consecutive states per group; lane j holds state base + j.
void group_neon(const LinkDiagram& d, std::uint64_t base, int32x4_t* lab, int32x4_t* prev, std::uint64_t* hist) {
    const int c = d.crossing_count();
    const int E = d.edge_count();
    const int32_t lanes[4] = {0, 1, 2, 3};
    const int32x4_t lane = vld1q_s32(lanes);
    uint32x4_t mask_lo[2];
    for (int i = 0; i < 2; ++i) {
        const int32x4_t bit = vdupq_n_s32(1 << i);
        mask_lo[i] = vceqq_s32(vandq_s32(lane, bit), bit);
    }
    for (int e = 0; e < E; ++e) lab[e] = vdupq_n_s32(e);

    auto mask_of = [&](int i) {
        if (i < 2) return mask_lo[i];
        return ((base >> i) & 1) ? vdupq_n_u32(~0u) : vdupq_n_u32(0);
    };
    // vbslq picks its second argument where the mask is set.
    auto step = [&](int i) {
        const auto& e = d.crossings[i].e;
        const uint32x4_t m = mask_of(i);
        int32x4_t p = vbslq_s32(m, lab[e[3]], lab[e[1]]);
        int32x4_t v = vminq_s32(lab[e[0]], p);
        lab[e[0]] = v;
        lab[e[1]] = vbslq_s32(m, lab[e[1]], v);
        lab[e[3]] = vbslq_s32(m, v, lab[e[3]]);
        p = vbslq_s32(m, lab[e[1]], lab[e[3]]);
        v = vminq_s32(lab[e[2]], p);
        lab[e[2]] = v;
        lab[e[3]] = vbslq_s32(m, lab[e[3]], v);
        lab[e[1]] = vbslq_s32(m, v, lab[e[1]]);
    };

    bool forward = true;
    for (;;) {
        std::memcpy(prev, lab, sizeof(int32x4_t) * E);
        if (forward)
            for (int i = 0; i < c; ++i) step(i);
        else
            for (int i = c - 1; i >= 0; --i) step(i);
        forward = !forward;
        uint32x4_t diff = vdupq_n_u32(0);
        for (int e = 0; e < E; ++e) diff = vorrq_u32(diff, vmvnq_u32(vceqq_s32(lab[e], prev[e])));
        if (vmaxvq_u32(diff) == 0) break;
    }

    int32x4_t count = vdupq_n_s32(0);
    for (int e = 0; e < E; ++e)
        count = vsubq_s32(count, vreinterpretq_s32_u32(vceqq_s32(lab[e], vdupq_n_s32(e))));
    int32_t loops[4];
    vst1q_s32(loops, count);
    for (int j = 0; j < 4; ++j) {
        int a = c - std::popcount(base + j);
        ++hist[a * (E + 1) + loops[j]];
    }
}

}  // namespace

void histogram_neon(const LinkDiagram& d, std::uint64_t begin, std::uint64_t end, std::uint64_t* hist) {
    if (d.crossing_count() < 2) {
        histogram_scalar(d, begin, end, hist);
        return;
    }
    std::uint64_t lo = (begin + 3) & ~std::uint64_t{3};
    std::uint64_t hi = end & ~std::uint64_t{3};
    if (lo >= hi) {
        histogram_scalar(d, begin, end, hist);
        return;
    }
    histogram_scalar(d, begin, lo, hist);
    int32x4_t lab[2 * kMaxStateSumCrossings];
    int32x4_t prev[2 * kMaxStateSumCrossings];
    for (std::uint64_t base = lo; base < hi; base += 4) group_neon(d, base, lab, prev, hist);
    histogram_scalar(d, hi, end, hist);
}

#else

bool neon_compiled() { return false; }

void histogram_neon(const LinkDiagram& d, std::uint64_t begin, std::uint64_t end, std::uint64_t* hist) {
    histogram_scalar(d, begin, end, hist);
}

#endif

}  // namespace recomb::detail
