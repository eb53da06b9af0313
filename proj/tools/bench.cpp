// Compares the serial reference kernels against the OpenMP ones: inverse-CDF
// sampling and batch state application. Verifies that both paths produce
// identical output before reporting throughput.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "hbsa/analyzer.hpp"
#include "hbsa/kernels.hpp"
#include "hbsa/rng.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

hbsa::StateVector random_state(std::uint64_t seed) {
    hbsa::SplitMix64 rng(seed);
    hbsa::Vec16 amp;
    for (auto& c : amp) c = hbsa::cplx{2.0 * rng.next_unit() - 1.0, 2.0 * rng.next_unit() - 1.0};
    return hbsa::StateVector::normalized(amp);
}

}  // namespace

int main(int argc, char** argv) {
    std::uint64_t shots = 20'000'000;
    std::size_t batch = 200'000;
    if (argc > 1) shots = std::stoull(argv[1]);
    if (argc > 2) batch = std::stoull(argv[2]);

    std::printf("threads available: %d\n", hbsa::max_parallel_threads());

    const hbsa::Analyzer analyzer = hbsa::Analyzer::polarization_bsa();
    const hbsa::StateVector input = analyzer.canonical_input(hbsa::BellKind::psi_plus);
    const std::array<double, 16> dist = analyzer.outcome_distribution(input);

    std::printf("\nsampling kernel (%llu draws)\n", static_cast<unsigned long long>(shots));
    auto t0 = clock_type::now();
    const hbsa::Counts16 counts_serial = hbsa::sample_counts(dist, shots, 42, hbsa::Exec::serial);
    const double t_serial = seconds_since(t0);
    t0 = clock_type::now();
    const hbsa::Counts16 counts_parallel = hbsa::sample_counts(dist, shots, 42, hbsa::Exec::parallel);
    const double t_parallel = seconds_since(t0);
    const bool counts_equal = counts_serial == counts_parallel;
    std::printf("  serial   %8.3f s  (%6.1f Mdraw/s)\n", t_serial, shots / t_serial / 1e6);
    std::printf("  parallel %8.3f s  (%6.1f Mdraw/s)\n", t_parallel, shots / t_parallel / 1e6);
    std::printf("  speedup  %8.2fx   counts identical: %s\n", t_serial / t_parallel,
                counts_equal ? "yes" : "NO");

    std::vector<hbsa::StateVector> states;
    states.reserve(batch);
    for (std::size_t i = 0; i < batch; ++i) states.push_back(random_state(1000 + i));
    const hbsa::ElementOp circuit = hbsa::compose(
        std::span<const hbsa::ElementOp>(analyzer.elements().data(), analyzer.elements().size()));

    std::printf("\nbatch apply kernel (%zu states through the pol analyzer circuit)\n", batch);
    t0 = clock_type::now();
    const auto out_serial = hbsa::apply_batch(circuit, states, hbsa::Exec::serial);
    const double a_serial = seconds_since(t0);
    t0 = clock_type::now();
    const auto out_parallel = hbsa::apply_batch(circuit, states, hbsa::Exec::parallel);
    const double a_parallel = seconds_since(t0);

    bool states_equal = true;
    for (std::size_t i = 0; i < batch && states_equal; ++i)
        states_equal = out_serial[i].amplitudes() == out_parallel[i].amplitudes();
    std::printf("  serial   %8.3f s  (%6.2f Mstate/s)\n", a_serial, batch / a_serial / 1e6);
    std::printf("  parallel %8.3f s  (%6.2f Mstate/s)\n", a_parallel, batch / a_parallel / 1e6);
    std::printf("  speedup  %8.2fx   outputs identical: %s\n", a_serial / a_parallel,
                states_equal ? "yes" : "NO");

    return (counts_equal && states_equal) ? 0 : 1;
}
