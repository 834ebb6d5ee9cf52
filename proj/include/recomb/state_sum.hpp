#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "recomb/diagram.hpp"

namespace recomb {

constexpr int kMaxStateSumCrossings = 24;

enum class Kernel { Scalar, Avx2, Neon };

std::string_view kernel_name(Kernel k);
bool kernel_available(Kernel k);
Kernel best_kernel();

// hist[a * (E + 1) + loops] counts the smoothing states with `a` A-smoothings that
// leave `loops` closed curves (free loops of the diagram not included). E = 2c.
using StateHistogram = std::vector<std::uint64_t>;

// Bit i of a state selects the B-smoothing at crossing i. Range is [begin, end).
StateHistogram state_histogram(const LinkDiagram& d, Kernel k, std::uint64_t begin, std::uint64_t end);
// Full range, split over threads (0 picks the default thread count).
StateHistogram state_histogram(const LinkDiagram& d, Kernel k, int threads = 1);

namespace detail {
void histogram_scalar(const LinkDiagram& d, std::uint64_t begin, std::uint64_t end, std::uint64_t* hist);
void histogram_avx2(const LinkDiagram& d, std::uint64_t begin, std::uint64_t end, std::uint64_t* hist);
void histogram_neon(const LinkDiagram& d, std::uint64_t begin, std::uint64_t end, std::uint64_t* hist);
bool avx2_compiled();
bool neon_compiled();
}  // namespace detail

}  // namespace recomb
