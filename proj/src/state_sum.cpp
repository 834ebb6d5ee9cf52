#include "recomb/state_sum.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <thread>

#include "recomb/errors.hpp"

namespace recomb {

std::string_view kernel_name(Kernel k) {
    switch (k) {
        case Kernel::Scalar: return "scalar";
        case Kernel::Avx2: return "avx2";
        case Kernel::Neon: return "neon";
    }
    return "?";
}

bool kernel_available(Kernel k) {
    switch (k) {
        case Kernel::Scalar: return true;
        case Kernel::Avx2:
#if defined(__x86_64__) || defined(__i386__)
            return detail::avx2_compiled() && __builtin_cpu_supports("avx2");
#else
            return false;
#endif
        case Kernel::Neon: return detail::neon_compiled();
    }
    return false;
}

Kernel best_kernel() {
    static const Kernel k = kernel_available(Kernel::Avx2)   ? Kernel::Avx2
                            : kernel_available(Kernel::Neon) ? Kernel::Neon
                                                             : Kernel::Scalar;
    return k;
}

namespace detail {

void histogram_scalar(const LinkDiagram& d, std::uint64_t begin, std::uint64_t end, std::uint64_t* hist) {
    const int c = d.crossing_count();
    const int E = d.edge_count();
    std::vector<int> parent(E);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::uint64_t st = begin; st < end; ++st) {
        std::iota(parent.begin(), parent.end(), 0);
        int loops = E;
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) {
                parent[a] = b;
                --loops;
            }
        };
        for (int i = 0; i < c; ++i) {
            const auto& e = d.crossings[i].e;
            if ((st >> i) & 1) {
                unite(e[0], e[3]);
                unite(e[1], e[2]);
            } else {
                unite(e[0], e[1]);
                unite(e[2], e[3]);
            }
        }
        int a = c - std::popcount(st);
        ++hist[a * (E + 1) + loops];
    }
}

}  // namespace detail

StateHistogram state_histogram(const LinkDiagram& d, Kernel k, std::uint64_t begin, std::uint64_t end) {
    if (d.crossing_count() > kMaxStateSumCrossings)
        throw SizeError("state sum limited to " + std::to_string(kMaxStateSumCrossings) + " crossings");
    if (!kernel_available(k)) throw InvariantError("kernel not available: " + std::string(kernel_name(k)));
    const int E = d.edge_count();
    StateHistogram hist(static_cast<std::size_t>(d.crossing_count() + 1) * (E + 1), 0);
    switch (k) {
        case Kernel::Scalar: detail::histogram_scalar(d, begin, end, hist.data()); break;
        case Kernel::Avx2: detail::histogram_avx2(d, begin, end, hist.data()); break;
        case Kernel::Neon: detail::histogram_neon(d, begin, end, hist.data()); break;
    }
    return hist;
}

StateHistogram state_histogram(const LinkDiagram& d, Kernel k, int threads) {
    const std::uint64_t total = std::uint64_t{1} << d.crossing_count();
    if (threads <= 0) threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    // Small sums are not worth a thread.
    if (d.crossing_count() < 14) threads = 1;
    if (threads == 1) return state_histogram(d, k, 0, total);

    const std::uint64_t chunk = ((total / threads) + 7) & ~std::uint64_t{7};
    std::vector<StateHistogram> parts(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t b = std::min(total, chunk * t);
        std::uint64_t e = t + 1 == threads ? total : std::min(total, chunk * (t + 1));
        pool.emplace_back([&, t, b, e] { parts[t] = state_histogram(d, k, b, e); });
    }
    for (auto& th : pool) th.join();
    StateHistogram sum = std::move(parts[0]);
    for (int t = 1; t < threads; ++t)
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += parts[t][i];
    return sum;
}

}  // namespace recomb
