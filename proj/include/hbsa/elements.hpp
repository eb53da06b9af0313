// Catalog of linear optical elements. Each element acts on one photon's
// (pol, mode) pair through a 4x4 unitary factor, basis (Ha, Hb, Va, Vb);
// the dense 16x16 matrix on the joint space is kept alongside for audits
// and composition.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbsa/hilbert.hpp"

namespace hbsa {

// which spatial mode(s) a wave plate covers
enum class ModeSelect : std::uint8_t { a = 0, b = 1, both = 2 };

std::string to_string(ModeSelect mode);

struct FactorStep {
    int photon;   // 1 or 2
    Mat4 factor;  // unitary on that photon's (pol, mode) pair
};

Mat16 embed_photon1(const Mat4& factor);
Mat16 embed_photon2(const Mat4& factor);

class ElementOp {
public:
    // throws std::logic_error if the resulting matrix is not unitary within 1e-12
    ElementOp(std::vector<FactorStep> steps, std::string description);

    const Mat16& matrix() const { return matrix_; }
    const std::string& description() const { return description_; }
    std::span<const FactorStep> steps() const { return steps_; }

private:
    std::vector<FactorStep> steps_;
    Mat16 matrix_;
    std::string description_;
};

// Polarizing beam splitter, H-V basis: H keeps its mode, V swaps a <-> b.
// Acts as a CNOT with polarization as control and mode as target.
ElementOp pbs(int photon);

// Half-wave plate with axis at `angle` (radians, in (-pi, pi]; the axis is
// pi-periodic), applied to amplitudes whose photon occupies the selected
// mode(s). Jones matrix [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
ElementOp hwp(int photon, ModeSelect mode, double angle);

// Quarter-wave plate, fast axis at `angle`: R(t) diag(1, i) R(-t).
ElementOp qwp(int photon, ModeSelect mode, double angle);

// Non-polarizing beam splitter on the mode pair:
// a -> (a + b)/sqrt(2), b -> (a - b)/sqrt(2).
ElementOp beamsplitter(int photon);

// Multiplies amplitudes with the photon in the selected mode by e^{i alpha}.
ElementOp mode_phase(int photon, Mode mode, double alpha);

// +-45 degree polarization analysis stage: a half-wave plate at 22.5 degrees
// on both modes. The analyzer relabels the H/V readout as +/-.
ElementOp pa_45(int photon);

// Matrix product in application order (ops[0] is applied first).
ElementOp compose(std::span<const ElementOp> ops);
ElementOp compose(std::initializer_list<ElementOp> ops);

// Structured application: walks the factor steps with index arithmetic on the
// amplitude array, never forming the 16x16 matrix. Unit norm in, unit norm
// out; a norm violation is an internal bug and throws std::logic_error.
StateVector apply(const ElementOp& op, const StateVector& psi);

// Line-oriented circuit description: one element per line,
//
//     name photon [mode] [angle_rad]
//
// with names pbs | hwp | qwp | bs | phase | pa45, photon 1 | 2, mode
// a | b | both, angles in radians. '#' starts a comment.
struct ElementSpec {
    std::string name;
    int photon = 1;
    std::optional<ModeSelect> mode;
    std::optional<double> angle;

    ElementOp build() const;  // throws std::invalid_argument on bad spec
    std::string to_line() const;
};

struct CircuitDescription {
    std::vector<ElementSpec> elements;

    // throws std::invalid_argument with "line N:" position annotations
    static CircuitDescription parse(std::string_view text);
    std::string to_text() const;
    std::vector<ElementOp> build() const;
};

}  // namespace hbsa
