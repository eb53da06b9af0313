// Report generation for the verification suites, the phase-error sweep and
// the dense-coding run. Each report carries its full configuration and
// serializes to columnar text or JSON with stable ordering, so fixed-seed
// runs are byte-identical.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hbsa/protocols.hpp"
#include "hbsa/sampling.hpp"

#include <json.hpp>

namespace hbsa {

// Reference signature table (one row of four signatures per Bell label),
// parsed from tab-separated data: label, then four cells "A1+ A2+".
struct ReferenceTable {
    Dof dof;
    std::array<std::array<std::string, 4>, kNumBellKinds> rows;  // by BellKind

    static ReferenceTable parse(std::string_view tsv, Dof dof);
};

struct VerifyRow {
    BellKind input;               // label carried by the discriminated DOF
    BellKind expected;            // label the reference row belongs to
    std::vector<std::string> computed;   // signatures with nonzero probability
    std::vector<std::string> reference;  // the reference row, sorted
    std::array<double, 4> on_row_probabilities{};
    bool match = false;
};

struct VerifyReport {
    std::string analyzer;
    std::string ancilla;  // flag-form label, e.g. "psi-plus"
    std::vector<VerifyRow> rows;
    bool all_match = false;
};

// Runs the four canonical inputs with the given ancilla through the analyzer
// and diffs the outcome supports against the reference table. With the
// psi-minus ancilla the expected labels are the sign-swapped ones.
VerifyReport verify_bsa(const Analyzer& analyzer, BellLabel ancilla,
                        const ReferenceTable& reference);

struct PhaseSweepPoint {
    double alpha = 0.0;
    double exact = 0.0;    // exact correct-classification probability
    double sampled = 0.0;  // Monte Carlo frequency at this point's sub-seed
};

struct PhaseSweepReport {
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string rng;
    std::string audit_note;
    std::vector<PhaseSweepPoint> points;
};

// kept in every sweep artifact: which normalization of the correct-label
// probability survives the brute-force check
extern const char* const kPhaseAuditNote;

PhaseSweepReport phase_sweep(std::span<const double> grid, std::uint64_t shots,
                             std::uint64_t seed, Exec exec = Exec::parallel);

struct DenseCodeReport {
    double alpha = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::string rng;
    std::array<RoundTripReport, 4> runs;  // by message
    double mutual_information = 0.0;      // bits, from the exact distributions
    // one photon of the pair carries the message; it holds two qubits
    double bits_per_photon = 2.0;
    double bits_per_qubit = 1.0;
};

DenseCodeReport dense_code(double alpha, std::uint64_t shots, std::uint64_t seed,
                           Exec exec = Exec::parallel);

// serialization; `config_header` lines are echoed into the artifact
std::string to_text(const VerifyReport& report, const Analyzer& analyzer,
                    const std::vector<std::string>& config_header);
nlohmann::ordered_json to_json(const VerifyReport& report,
                               const nlohmann::ordered_json& config);

std::string to_text(const PhaseSweepReport& report, const std::vector<std::string>& config_header);
nlohmann::ordered_json to_json(const PhaseSweepReport& report,
                               const nlohmann::ordered_json& config);

std::string to_text(const DenseCodeReport& report, const std::vector<std::string>& config_header);
nlohmann::ordered_json to_json(const DenseCodeReport& report,
                               const nlohmann::ordered_json& config);

std::string format_double(double value);  // shortest stable decimal form

}  // namespace hbsa
