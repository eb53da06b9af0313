#include "hbsa/protocols.hpp"

#include <cmath>
#include <stdexcept>

#include "hbsa/rng.hpp"
#include "hbsa/sampling.hpp"

namespace hbsa {

namespace {

constexpr double kQuarterPi = 0.78539816339744830962;

const Analyzer& pol_analyzer() {
    static const Analyzer analyzer = Analyzer::polarization_bsa();
    return analyzer;
}

}  // namespace

BellKind bell_kind_of(TwoBitMessage message) {
    switch (message) {
        case TwoBitMessage::m00: return BellKind::phi_plus;
        case TwoBitMessage::m01: return BellKind::phi_minus;
        case TwoBitMessage::m10: return BellKind::psi_plus;
        case TwoBitMessage::m11: return BellKind::psi_minus;
    }
    throw std::logic_error("bell_kind_of: bad message");
}

TwoBitMessage message_of(BellKind kind) {
    switch (kind) {
        case BellKind::phi_plus: return TwoBitMessage::m00;
        case BellKind::phi_minus: return TwoBitMessage::m01;
        case BellKind::psi_plus: return TwoBitMessage::m10;
        case BellKind::psi_minus: return TwoBitMessage::m11;
    }
    throw std::logic_error("message_of: bad kind");
}

std::string to_string(TwoBitMessage message) {
    const int v = static_cast<int>(message);
    return std::string{static_cast<char>('0' + (v >> 1)), static_cast<char>('0' + (v & 1))};
}

std::string to_string(ClassicalMessage message) {
    const int v = static_cast<int>(message);
    return std::string{static_cast<char>('0' + (v >> 1)), static_cast<char>('0' + (v & 1))};
}

StateVector dense_coding_resource() {
    return hyper_product(BellLabel{Dof::polarization, BellKind::phi_plus},
                         BellLabel{Dof::momentum, BellKind::psi_plus});
}

StateVector encode(TwoBitMessage message, const StateVector& psi) {
    if (psi.overlap_modulus(dense_coding_resource()) < 1.0 - 1e-9)
        throw std::invalid_argument("encode: state is not the shared resource |Phi+>|psi+>");

    // wave plates on photon 1 only, identical in both modes:
    // hwp at 0 flips the Phi/Psi sign, hwp at 45 degrees flips H <-> V
    switch (message) {
        case TwoBitMessage::m00:
            return psi;
        case TwoBitMessage::m01:
            return apply(hwp(1, ModeSelect::both, 0.0), psi);
        case TwoBitMessage::m10:
            return apply(hwp(1, ModeSelect::both, kQuarterPi), psi);
        case TwoBitMessage::m11:
            return apply(compose({hwp(1, ModeSelect::both, 0.0), hwp(1, ModeSelect::both, kQuarterPi)}),
                         psi);
    }
    throw std::logic_error("encode: bad message");
}

DensityMatrix security_check(TwoBitMessage message) {
    const StateVector encoded = encode(message, dense_coding_resource());
    return partial_trace_photon1(DensityMatrix::pure(encoded));
}

RoundTripReport dense_code_roundtrip(TwoBitMessage message, double alpha, std::uint64_t shots,
                                     std::uint64_t seed, Exec exec) {
    const Analyzer& analyzer = pol_analyzer();

    StateVector psi = encode(message, dense_coding_resource());
    if (alpha != 0.0) psi = apply(mode_phase(1, Mode::b, alpha), psi);

    RoundTripReport report;
    report.sent = message;
    report.alpha = alpha;
    report.shots = shots;
    report.seed = seed;

    const LabelDistribution exact = analyzer.classify(psi);
    for (int k = 0; k < kNumBellKinds; ++k)
        report.exact_decoded[static_cast<std::size_t>(
            static_cast<int>(message_of(static_cast<BellKind>(k))))] =
            exact.p[static_cast<std::size_t>(k)];
    report.exact_correct = report.exact_decoded[static_cast<std::size_t>(static_cast<int>(message))];

    const SampleReport samples = sample(analyzer, psi, shots, seed, exec);
    for (int i = 0; i < 16; ++i) {
        const auto msg = static_cast<std::size_t>(
            static_cast<int>(message_of(analyzer.decode(i).kind)));
        report.decoded_counts[msg] += samples.counts[static_cast<std::size_t>(i)];
    }
    for (int m = 0; m < 4; ++m)
        report.decoded_frequency[static_cast<std::size_t>(m)] =
            static_cast<double>(report.decoded_counts[static_cast<std::size_t>(m)]) /
            static_cast<double>(shots);
    // from integer counts, so a lossless run reports exactly zero
    report.error_rate =
        static_cast<double>(shots - report.decoded_counts[static_cast<std::size_t>(
                                        static_cast<int>(message))]) /
        static_cast<double>(shots);
    std::uint64_t wrong_bits = 0;
    for (int m = 0; m < 4; ++m) {
        const int flipped = m ^ static_cast<int>(message);
        const std::uint64_t weight = static_cast<std::uint64_t>((flipped & 1) + ((flipped >> 1) & 1));
        wrong_bits += weight * report.decoded_counts[static_cast<std::size_t>(m)];
    }
    report.bit_error_rate =
        static_cast<double>(wrong_bits) / (2.0 * static_cast<double>(shots));
    return report;
}

double mutual_information_bits(const std::array<std::array<double, 4>, 4>& conditional) {
    // uniform prior p(x) = 1/4; terms with p(x, y) = 0 contribute nothing
    std::array<double, 4> marginal{};
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            marginal[static_cast<std::size_t>(y)] +=
                0.25 * conditional[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];

    double bits = 0.0;
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            const double joint = 0.25 * conditional[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (joint <= 0.0) continue;
            bits += joint * std::log2(joint / (0.25 * marginal[static_cast<std::size_t>(y)]));
        }
    return bits;
}

bool in_psi_plus_family(const StateVector& psi, double tol) {
    // projection onto span{ |Pi>|psi+> : Pi polarization Bell state }
    double projected = 0.0;
    for (int k = 0; k < kNumBellKinds; ++k) {
        const StateVector basis_state = hyper_product(
            BellLabel{Dof::polarization, static_cast<BellKind>(k)},
            BellLabel{Dof::momentum, BellKind::psi_plus});
        projected += std::norm(basis_state.inner(psi));
    }
    return std::abs(projected - 1.0) <= tol;
}

NonlocalRun nonlocal_bsm(const StateVector& psi, std::uint64_t seed) {
    if (!in_psi_plus_family(psi))
        throw std::invalid_argument("nonlocal_bsm: state is outside the |Pi>|psi+> family");

    const Analyzer& analyzer = pol_analyzer();
    const std::array<double, 16> dist = analyzer.outcome_distribution(psi);

    // stage 1: photon 1's side resolves its own detector (4 outcomes)
    std::array<double, 4> marginal{};
    for (int i = 0; i < 16; ++i) marginal[static_cast<std::size_t>(i >> 2)] += dist[static_cast<std::size_t>(i)];

    const double u1 = SplitMix64::unit_at(seed, 0);
    int d1 = 3;
    double acc = 0.0;
    for (int k = 0; k < 4; ++k) {
        acc += marginal[static_cast<std::size_t>(k)];
        if (u1 < acc) {
            d1 = k;
            break;
        }
    }
    while (marginal[static_cast<std::size_t>(d1)] <= 0.0) --d1;

    // stage 2: the 2-bit outcome index crosses the classical channel and
    // photon 2's side resolves its detector from the conditional law
    const double u2 = SplitMix64::unit_at(seed, 1);
    int d2 = -1;
    double acc2 = 0.0;
    const double norm = marginal[static_cast<std::size_t>(d1)];
    for (int j = 0; j < 4; ++j) {
        acc2 += dist[static_cast<std::size_t>(4 * d1 + j)] / norm;
        if (u2 < acc2) {
            d2 = j;
            break;
        }
    }
    if (d2 < 0) {
        d2 = 3;
        while (dist[static_cast<std::size_t>(4 * d1 + d2)] <= 0.0) --d2;
    }

    const int signature_index = 4 * d1 + d2;
    const DetectorSignature sig = analyzer.signature_of_index(signature_index);
    return NonlocalRun{sig.d1, static_cast<ClassicalMessage>(d1), sig.d2,
                       analyzer.decode(signature_index), 2};
}

LabelDistribution nonlocal_label_law(const StateVector& psi) {
    if (!in_psi_plus_family(psi))
        throw std::invalid_argument("nonlocal_label_law: state is outside the |Pi>|psi+> family");

    const Analyzer& analyzer = pol_analyzer();
    const std::array<double, 16> dist = analyzer.outcome_distribution(psi);

    std::array<double, 4> marginal{};
    for (int i = 0; i < 16; ++i) marginal[static_cast<std::size_t>(i >> 2)] += dist[static_cast<std::size_t>(i)];

    LabelDistribution law{analyzer.discriminates(), {}};
    for (int d1 = 0; d1 < 4; ++d1) {
        if (marginal[static_cast<std::size_t>(d1)] <= 0.0) continue;
        for (int d2 = 0; d2 < 4; ++d2) {
            const double conditional =
                dist[static_cast<std::size_t>(4 * d1 + d2)] / marginal[static_cast<std::size_t>(d1)];
            law.p[static_cast<int>(analyzer.decode(4 * d1 + d2).kind)] +=
                marginal[static_cast<std::size_t>(d1)] * conditional;
        }
    }
    return law;
}

}  // namespace hbsa
