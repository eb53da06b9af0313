#include "hbsa/sampling.hpp"

#include <sstream>
#include <stdexcept>

#include "hbsa/rng.hpp"

namespace hbsa {

SampleReport sample(const Analyzer& analyzer, const StateVector& psi, std::uint64_t shots,
                    std::uint64_t seed, Exec exec) {
    if (shots == 0) throw std::invalid_argument("sample: shots must be >= 1");

    SampleReport report;
    report.analyzer = analyzer.name();
    report.dof = analyzer.discriminates();
    report.seed = seed;
    report.shots = shots;
    report.rng = std::string(kRngId);
    report.exact = analyzer.outcome_distribution(psi);
    report.counts = sample_counts(report.exact, shots, seed, exec);

    // frequencies come from one integer division each, so a point-mass law
    // reports exactly 1.0
    std::array<std::uint64_t, kNumBellKinds> label_counts{};
    for (int i = 0; i < 16; ++i) {
        report.frequency[static_cast<std::size_t>(i)] =
            static_cast<double>(report.counts[static_cast<std::size_t>(i)]) /
            static_cast<double>(shots);
        label_counts[static_cast<int>(analyzer.decode(i).kind)] +=
            report.counts[static_cast<std::size_t>(i)];
    }
    for (int k = 0; k < kNumBellKinds; ++k)
        report.label_frequency[static_cast<std::size_t>(k)] =
            static_cast<double>(label_counts[static_cast<std::size_t>(k)]) /
            static_cast<double>(shots);
    return report;
}

std::string to_text(const SampleReport& report, const Analyzer& analyzer) {
    std::ostringstream os;
    os << "# hbsa sample report\n";
    os << "# analyzer: " << report.analyzer << "\n";
    os << "# rng: " << report.rng << "\n";
    os << "# seed: " << report.seed << "\n";
    os << "# shots: " << report.shots << "\n";
    os << "# ordering: ascending output-basis signature index\n";
    os << "signature\tlabel\tcount\tfrequency\n";
    os.precision(12);
    for (int i = 0; i < 16; ++i) {
        os << analyzer.signature_name(i) << "\t" << to_string(analyzer.decode(i)) << "\t"
           << report.counts[static_cast<std::size_t>(i)] << "\t"
           << report.frequency[static_cast<std::size_t>(i)] << "\n";
    }
    os << "label frequencies:";
    for (int k = 0; k < kNumBellKinds; ++k)
        os << " " << to_string(static_cast<BellKind>(k), report.dof) << "="
           << report.label_frequency[static_cast<std::size_t>(k)];
    os << "\n";
    return os.str();
}

nlohmann::ordered_json to_json(const SampleReport& report, const Analyzer& analyzer) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int i = 0; i < 16; ++i) {
        rows.push_back({{"signature", analyzer.signature_name(i)},
                        {"label", to_string(analyzer.decode(i))},
                        {"count", report.counts[static_cast<std::size_t>(i)]},
                        {"frequency", report.frequency[static_cast<std::size_t>(i)]}});
    }
    nlohmann::ordered_json labels;
    for (int k = 0; k < kNumBellKinds; ++k)
        labels[to_string(static_cast<BellKind>(k), report.dof)] =
            report.label_frequency[static_cast<std::size_t>(k)];
    return nlohmann::ordered_json{{"analyzer", report.analyzer},
                                  {"rng", report.rng},
                                  {"seed", report.seed},
                                  {"shots", report.shots},
                                  {"rows", rows},
                                  {"label_frequencies", labels}};
}

}  // namespace hbsa
