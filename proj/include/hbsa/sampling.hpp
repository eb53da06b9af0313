// Seeded Monte Carlo detection-event sampling on top of an analyzer's
// outcome distribution.

#pragma once

#include <cstdint>
#include <string>

#include "hbsa/analyzer.hpp"
#include "hbsa/kernels.hpp"

#include <json.hpp>

namespace hbsa {

struct SampleReport {
    std::string analyzer;  // "pol" / "mom"
    Dof dof;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;
    std::string rng;  // algorithm identifier

    std::array<double, 16> exact{};        // outcome distribution, signature order
    Counts16 counts{};                     // sampled counts, signature order
    std::array<double, 16> frequency{};    // counts / shots
    std::array<double, kNumBellKinds> label_frequency{};  // decoded, by BellKind
};

// i.i.d. draws from outcome_distribution(psi); deterministic for fixed seed.
// shots = 0 is rejected with std::invalid_argument.
SampleReport sample(const Analyzer& analyzer, const StateVector& psi, std::uint64_t shots,
                    std::uint64_t seed, Exec exec = Exec::parallel);

// one row per signature: signature, decoded label, count, frequency
std::string to_text(const SampleReport& report, const Analyzer& analyzer);
nlohmann::ordered_json to_json(const SampleReport& report, const Analyzer& analyzer);

}  // namespace hbsa
