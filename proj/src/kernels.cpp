#include "hbsa/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "hbsa/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hbsa {

namespace {

// first bucket whose cumulative weight exceeds u; zero-weight buckets are
// never selected because their cumulative value equals their predecessor's
inline int pick_bucket(const std::array<double, 16>& cdf, double u, int last_nonzero) {
    for (int k = 0; k < 16; ++k)
        if (u < cdf[static_cast<std::size_t>(k)]) return k;
    return last_nonzero;  // u landed beyond the accumulated total by rounding
}

}  // namespace

Counts16 sample_counts(const std::array<double, 16>& probabilities, std::uint64_t shots,
                       std::uint64_t seed, Exec exec) {
    if (shots == 0) throw std::invalid_argument("sample_counts: shots must be >= 1");

    std::array<double, 16> cdf{};
    double total = 0.0;
    int last_nonzero = 0;
    for (int k = 0; k < 16; ++k) {
        const double p = probabilities[static_cast<std::size_t>(k)];
        if (p < -1e-12) throw std::invalid_argument("sample_counts: negative probability");
        if (p > 0.0) last_nonzero = k;
        total += p;
        cdf[static_cast<std::size_t>(k)] = total;
    }
    if (std::abs(total - 1.0) > 1e-10)
        throw std::invalid_argument("sample_counts: probabilities do not sum to 1");

    Counts16 counts{};

    if (exec == Exec::serial) {
        // reference path: sequential walk of the stream
        SplitMix64 rng(seed);
        for (std::uint64_t i = 0; i < shots; ++i)
            ++counts[static_cast<std::size_t>(pick_bucket(cdf, rng.next_unit(), last_nonzero))];
        return counts;
    }

#ifdef _OPENMP
    const auto n = static_cast<std::int64_t>(shots);
#pragma omp parallel
    {
        Counts16 local{};
#pragma omp for nowait
        for (std::int64_t i = 0; i < n; ++i) {
            const double u = SplitMix64::unit_at(seed, static_cast<std::uint64_t>(i));
            ++local[static_cast<std::size_t>(pick_bucket(cdf, u, last_nonzero))];
        }
#pragma omp critical
        for (std::size_t k = 0; k < 16; ++k) counts[k] += local[k];
    }
#else
    for (std::uint64_t i = 0; i < shots; ++i)
        ++counts[static_cast<std::size_t>(pick_bucket(cdf, SplitMix64::unit_at(seed, i), last_nonzero))];
#endif
    return counts;
}

std::vector<StateVector> apply_batch(const ElementOp& op, std::span<const StateVector> states,
                                     Exec exec) {
    std::vector<StateVector> out;
    out.reserve(states.size());
    for (const StateVector& psi : states) out.push_back(psi);  // placeholder slots

    const auto n = static_cast<std::int64_t>(states.size());
    if (exec == Exec::serial) {
        for (std::int64_t i = 0; i < n; ++i)
            out[static_cast<std::size_t>(i)] = apply(op, states[static_cast<std::size_t>(i)]);
        return out;
    }

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < n; ++i)
        out[static_cast<std::size_t>(i)] = apply(op, states[static_cast<std::size_t>(i)]);
    return out;
}

int max_parallel_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace hbsa
