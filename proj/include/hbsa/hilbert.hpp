// Two photons, two degrees of freedom each: linear polarization {H, V} and
// spatial mode {a, b}. The joint Hilbert space is 16-dimensional with the
// fixed basis ordering
//
//     index = 8*[pol1 = V] + 4*[mode1 = b] + 2*[pol2 = V] + 1*[mode2 = b]
//
// i.e. (pol1, mode1, pol2, mode2) most-significant-first. Any consumer of raw
// amplitude arrays must follow this convention.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hbsa/linalg.hpp"

namespace hbsa {

enum class Pol : std::uint8_t { H = 0, V = 1 };
enum class Mode : std::uint8_t { a = 0, b = 1 };

// which degree of freedom a Bell label (or an analyzer) refers to
enum class Dof : std::uint8_t { polarization = 0, momentum = 1 };

enum class BellKind : std::uint8_t { psi_plus = 0, psi_minus = 1, phi_plus = 2, phi_minus = 3 };
inline constexpr int kNumBellKinds = 4;

struct BellLabel {
    Dof dof;
    BellKind kind;
    friend bool operator==(const BellLabel&, const BellLabel&) = default;
};

// psi+ <-> psi-, phi+ <-> phi-
BellKind sign_swapped(BellKind kind);

// "Psi+", "Phi-" for polarization; "psi+", "phi-" for momentum
std::string to_string(BellKind kind, Dof dof);
std::string to_string(BellLabel label);
// accepts both display form ("Psi+") and flag form ("Psi-plus"); uppercase
// first letter selects polarization, lowercase momentum
std::optional<BellLabel> parse_bell_label(std::string_view text);

struct BasisKet {
    Pol pol1;
    Mode mode1;
    Pol pol2;
    Mode mode2;

    int index() const;
    static BasisKet from_index(int index);
    std::string to_string() const;  // e.g. "|Ha;Vb>"

    friend bool operator==(const BasisKet&, const BasisKet&) = default;
};

// Unit-norm vector of 16 complex amplitudes in the fixed basis ordering.
// Immutable after construction; zero or non-unit input is a caller error.
class StateVector {
public:
    static StateVector basis(const BasisKet& ket);
    static StateVector basis(Pol pol1, Mode mode1, Pol pol2, Mode mode2);
    // requires unit norm within 1e-12
    static StateVector from_amplitudes(std::span<const cplx, 16> amplitudes);
    // divides by the norm; rejects vectors with norm below 1e-12
    static StateVector normalized(std::span<const cplx, 16> amplitudes);

    const Vec16& amplitudes() const { return amp_; }
    const cplx& operator[](int index) const { return amp_[static_cast<std::size_t>(index)]; }

    double norm() const;
    double probability(int index) const;
    cplx inner(const StateVector& rhs) const;  // <this|rhs>
    // |<this|rhs>|; 1 within tolerance means equal up to global phase
    double overlap_modulus(const StateVector& rhs) const;

private:
    explicit StateVector(const Vec16& amplitudes) : amp_(amplitudes) {}
    Vec16 amp_{};

    friend StateVector apply(const class ElementOp& op, const StateVector& psi);
};

// Two-photon Bell factor in a single degree of freedom. Basis ordering for
// polarization: (HH, HV, VH, VV); for momentum: (aa, ab, ba, bb).
struct BellFactor {
    Dof dof;
    Vec4 amp;
};

BellFactor bell_state(BellLabel label);

// |pol factor> (x) |momentum factor| merged into the 16-dim ordering above
StateVector hyper_product(const BellFactor& pol_factor, const BellFactor& mom_factor);
// throws std::invalid_argument if the labels' degrees of freedom are swapped
StateVector hyper_product(BellLabel pol_label, BellLabel mom_label);

// Hermitian, unit-trace, positive-semidefinite matrix; dim 16 for the photon
// pair, dim 4 for a single reduced photon.
class DensityMatrix {
public:
    static DensityMatrix pure(const StateVector& psi);  // |psi><psi|, 16x16
    // validates Hermiticity, unit trace and eigenvalues >= -1e-12
    static DensityMatrix from_entries(int dim, std::vector<cplx> entries);
    static DensityMatrix maximally_mixed(int dim);

    int dim() const { return dim_; }
    const cplx& at(int row, int col) const {
        return entries_[static_cast<std::size_t>(row) * dim_ + col];
    }
    const std::vector<cplx>& entries() const { return entries_; }

    double trace_real() const;
    double hermiticity_defect() const;            // max |m[i][j] - conj(m[j][i])|
    std::vector<double> eigenvalues() const;      // ascending

private:
    DensityMatrix(int dim, std::vector<cplx> entries)
        : dim_(dim), entries_(std::move(entries)) {}
    int dim_;
    std::vector<cplx> entries_;
};

// reduced state of photon 2 over (pol2, mode2); rejects invalid 16x16 input
DensityMatrix partial_trace_photon1(const DensityMatrix& rho);

// (1/2) * sum |eigenvalues of a - b|
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

}  // namespace hbsa
