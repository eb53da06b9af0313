// Complete Bell-state analyzers for hyperentangled photon pairs.
//
// The polarization analyzer discriminates the four polarization Bell states
// using the momentum state psi+ as an ancilla: a polarizing beam splitter on
// each photon followed by +-45 degree polarization analysis on each output.
//
// The momentum analyzer discriminates the four momentum Bell states using the
// polarization state Psi+ as an ancilla: half-wave plates at 45 degrees in
// mode b of each photon (a CNOT with mode as control), then a beam splitter
// per photon, then H-V polarization readout.
//
// Detectors: photon j exits through port A (mode a) or B (mode b) and one of
// two analysis axes (+/- for the polarization analyzer, H/V for the momentum
// analyzer). A coincidence signature is one detector per photon; the 16
// signatures are in bijection with the 16 basis kets of the analyzer output.

#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "hbsa/elements.hpp"

namespace hbsa {

enum class Port : std::uint8_t { A = 0, B = 1 };

struct DetectorLabel {
    int photon;  // 1 or 2
    Port port;
    int axis;  // 0 or 1; named "+"/"-" or "H"/"V" by the analyzer

    friend auto operator<=>(const DetectorLabel&, const DetectorLabel&) = default;
};

struct DetectorSignature {
    DetectorLabel d1;  // photon 1
    DetectorLabel d2;  // photon 2

    friend auto operator<=>(const DetectorSignature&, const DetectorSignature&) = default;
};

// probabilities over the four Bell labels of one degree of freedom,
// indexed by BellKind
struct LabelDistribution {
    Dof dof;
    std::array<double, kNumBellKinds> p{};

    double operator[](BellKind kind) const { return p[static_cast<int>(kind)]; }
};

class Analyzer {
public:
    static Analyzer polarization_bsa();
    static Analyzer momentum_bsa();

    const std::string& name() const { return name_; }  // "pol" / "mom"
    Dof discriminates() const { return dof_; }
    BellLabel canonical_ancilla() const { return ancilla_; }
    const std::vector<ElementOp>& elements() const { return elements_; }

    // the canonical hyperentangled input carrying `kind` in the discriminated
    // degree of freedom and the canonical ancilla in the other
    StateVector canonical_input(BellKind kind) const;

    StateVector final_state(const StateVector& psi) const;

    // signature <-> output-basis-index bijection (the fixed signature ordering)
    DetectorSignature signature_of_index(int index) const;
    int index_of_signature(const DetectorSignature& sig) const;

    std::string axis_name(int axis) const;
    std::string detector_name(const DetectorLabel& d) const;   // e.g. "A1+"
    std::string signature_name(int index) const;                // e.g. "A1+ A2+"
    std::string signature_name(const DetectorSignature& sig) const;
    // throws std::invalid_argument for labels outside this analyzer
    DetectorSignature parse_signature(std::string_view text) const;

    // the unique Bell label whose signature row contains `sig`
    BellLabel decode(const DetectorSignature& sig) const;
    BellLabel decode(int signature_index) const;

    // Born-rule probabilities over the 16 coincidence signatures, indexed by
    // signature index; sums to 1 for unit-norm input
    std::array<double, 16> outcome_distribution(const StateVector& psi) const;

    // pushforward of the outcome distribution through decode
    LabelDistribution classify(const StateVector& psi) const;

    // ordered element list plus the signature -> label table, for audit
    std::string describe() const;

private:
    Analyzer(std::string name, Dof dof, BellLabel ancilla, std::vector<ElementOp> elements,
             std::array<std::string, 2> axis_names);

    std::string name_;
    Dof dof_;
    BellLabel ancilla_;
    std::vector<ElementOp> elements_;
    ElementOp composed_;
    std::array<std::string, 2> axis_names_;
    std::array<BellKind, 16> kind_of_index_{};
};

}  // namespace hbsa
