// Data-parallel kernels with serial reference implementations. The parallel
// variants are OpenMP; both variants of each kernel produce identical output
// for identical input (the sampling stream is counter-indexed, and batch
// application is independent per state), so the reference stays usable as an
// exact oracle in tests and in the benchmark tool.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "hbsa/elements.hpp"

namespace hbsa {

enum class Exec : std::uint8_t { serial, parallel };

using Counts16 = std::array<std::uint64_t, 16>;

// Inverse-CDF sampling over a <=16-entry distribution in its fixed ordering.
// Draw i uses SplitMix64 output i of `seed`; counts are exact sums and do not
// depend on the execution mode or thread count.
Counts16 sample_counts(const std::array<double, 16>& probabilities, std::uint64_t shots,
                       std::uint64_t seed, Exec exec);

// apply(op, state) over a batch
std::vector<StateVector> apply_batch(const ElementOp& op, std::span<const StateVector> states,
                                     Exec exec);

int max_parallel_threads();

}  // namespace hbsa
