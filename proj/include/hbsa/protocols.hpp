// Dense coding over the shared resource |Phi+>|psi+> and the nonlocal
// Bell-state measurement with its 2-bit classical cost. The two-bit message
// is carried entirely by wave plates on photon 1's polarization; the momentum
// factor stays untouched as the measurement ancilla.

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "hbsa/analyzer.hpp"
#include "hbsa/kernels.hpp"

namespace hbsa {

// fixed bijection with the polarization Bell states:
// 00 <-> Phi+, 01 <-> Phi-, 10 <-> Psi+, 11 <-> Psi-
enum class TwoBitMessage : std::uint8_t { m00 = 0, m01 = 1, m10 = 2, m11 = 3 };

BellKind bell_kind_of(TwoBitMessage message);
TwoBitMessage message_of(BellKind kind);
std::string to_string(TwoBitMessage message);  // "00", "01", "10", "11"

// two classical bits naming which of the four local outcomes photon 1's side
// observed during a nonlocal measurement
enum class ClassicalMessage : std::uint8_t { c00 = 0, c01 = 1, c10 = 2, c11 = 3 };
std::string to_string(ClassicalMessage message);

// the shared resource |Phi+>|psi+>
StateVector dense_coding_resource();

// Applies wave plates to photon 1 (both modes identically), turning the
// resource into |Pi(message)>|psi+>. Any state other than the resource is
// rejected with std::invalid_argument.
StateVector encode(TwoBitMessage message, const StateVector& psi);

// photon-2 reduced density matrix of the encoded state (I4/4 for every message)
DensityMatrix security_check(TwoBitMessage message);

struct RoundTripReport {
    TwoBitMessage sent{};
    double alpha = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;

    std::array<double, 4> exact_decoded{};      // exact message distribution
    std::array<std::uint64_t, 4> decoded_counts{};
    std::array<double, 4> decoded_frequency{};
    double exact_correct = 0.0;
    double error_rate = 0.0;      // sampled fraction decoded as a different message
    double bit_error_rate = 0.0;  // sampled fraction of wrong bits (2 bits per shot)
};

// encode -> phase error alpha on photon 1 mode b -> polarization analyzer ->
// decode each sampled signature back to a message
RoundTripReport dense_code_roundtrip(TwoBitMessage message, double alpha, std::uint64_t shots,
                                     std::uint64_t seed, Exec exec = Exec::parallel);

// I(sent; decoded) in bits for a uniform prior over the four messages and the
// given conditional distributions p(decoded | sent)
double mutual_information_bits(const std::array<std::array<double, 4>, 4>& conditional);

struct NonlocalRun {
    DetectorLabel local;        // photon 1's detector
    ClassicalMessage message;   // crosses the classical channel
    DetectorLabel remote;       // photon 2's detector
    BellLabel label;            // decoded Bell label
    int classical_bits = 2;     // consumed per run, by construction
};

// Two-stage measurement of a |Pi>|psi+>-family state with the polarization
// analyzer: sample photon 1's detector from the marginal law, transmit its
// index as 2 classical bits, then sample photon 2's detector from the
// conditional law. States outside the family are rejected.
NonlocalRun nonlocal_bsm(const StateVector& psi, std::uint64_t seed);

// exact decoded-label law of the two-stage procedure (marginal times
// conditional, recomposed); equals classify() up to rounding
LabelDistribution nonlocal_label_law(const StateVector& psi);

// membership check for the span of the four |Pi>|psi+> products
bool in_psi_plus_family(const StateVector& psi, double tol = 1e-9);

}  // namespace hbsa
