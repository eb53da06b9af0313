#include "hbsa/hilbert.hpp"

#include <cmath>
#include <stdexcept>

namespace hbsa {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const char* kind_names_upper[] = {"Psi+", "Psi-", "Phi+", "Phi-"};
const char* kind_names_lower[] = {"psi+", "psi-", "phi+", "phi-"};
const char* kind_names_flag_upper[] = {"Psi-plus", "Psi-minus", "Phi-plus", "Phi-minus"};
const char* kind_names_flag_lower[] = {"psi-plus", "psi-minus", "phi-plus", "phi-minus"};

}  // namespace

BellKind sign_swapped(BellKind kind) {
    switch (kind) {
        case BellKind::psi_plus: return BellKind::psi_minus;
        case BellKind::psi_minus: return BellKind::psi_plus;
        case BellKind::phi_plus: return BellKind::phi_minus;
        case BellKind::phi_minus: return BellKind::phi_plus;
    }
    throw std::logic_error("sign_swapped: bad kind");
}

std::string to_string(BellKind kind, Dof dof) {
    const int k = static_cast<int>(kind);
    return dof == Dof::polarization ? kind_names_upper[k] : kind_names_lower[k];
}

std::string to_string(BellLabel label) { return to_string(label.kind, label.dof); }

std::optional<BellLabel> parse_bell_label(std::string_view text) {
    for (int k = 0; k < kNumBellKinds; ++k) {
        const auto kind = static_cast<BellKind>(k);
        if (text == kind_names_upper[k] || text == kind_names_flag_upper[k])
            return BellLabel{Dof::polarization, kind};
        if (text == kind_names_lower[k] || text == kind_names_flag_lower[k])
            return BellLabel{Dof::momentum, kind};
    }
    return std::nullopt;
}

int BasisKet::index() const {
    return 8 * static_cast<int>(pol1) + 4 * static_cast<int>(mode1) +
           2 * static_cast<int>(pol2) + static_cast<int>(mode2);
}

BasisKet BasisKet::from_index(int index) {
    if (index < 0 || index > 15) throw std::out_of_range("BasisKet::from_index: index not in 0..15");
    return BasisKet{static_cast<Pol>((index >> 3) & 1), static_cast<Mode>((index >> 2) & 1),
                    static_cast<Pol>((index >> 1) & 1), static_cast<Mode>(index & 1)};
}

std::string BasisKet::to_string() const {
    std::string s = "|";
    s += (pol1 == Pol::H) ? 'H' : 'V';
    s += (mode1 == Mode::a) ? 'a' : 'b';
    s += ';';
    s += (pol2 == Pol::H) ? 'H' : 'V';
    s += (mode2 == Mode::a) ? 'a' : 'b';
    s += '>';
    return s;
}

StateVector StateVector::basis(const BasisKet& ket) {
    Vec16 amp{};
    amp[static_cast<std::size_t>(ket.index())] = 1.0;
    return StateVector(amp);
}

StateVector StateVector::basis(Pol pol1, Mode mode1, Pol pol2, Mode mode2) {
    return basis(BasisKet{pol1, mode1, pol2, mode2});
}

StateVector StateVector::from_amplitudes(std::span<const cplx, 16> amplitudes) {
    double norm_sq = 0.0;
    for (const cplx& c : amplitudes) norm_sq += std::norm(c);
    if (std::abs(norm_sq - 1.0) > kAlgTol)
        throw std::invalid_argument("StateVector: amplitudes are not unit norm");
    Vec16 amp{};
    std::copy(amplitudes.begin(), amplitudes.end(), amp.begin());
    return StateVector(amp);
}

StateVector StateVector::normalized(std::span<const cplx, 16> amplitudes) {
    double norm_sq = 0.0;
    for (const cplx& c : amplitudes) norm_sq += std::norm(c);
    if (norm_sq < kAlgTol)
        throw std::invalid_argument("StateVector: refusing to normalize a (near-)zero vector");
    const double inv = 1.0 / std::sqrt(norm_sq);
    Vec16 amp{};
    for (std::size_t i = 0; i < 16; ++i) amp[i] = amplitudes[i] * inv;
    return StateVector(amp);
}

double StateVector::norm() const {
    double norm_sq = 0.0;
    for (const cplx& c : amp_) norm_sq += std::norm(c);
    return std::sqrt(norm_sq);
}

double StateVector::probability(int index) const {
    return std::norm(amp_[static_cast<std::size_t>(index)]);
}

cplx StateVector::inner(const StateVector& rhs) const {
    cplx acc{};
    for (std::size_t i = 0; i < 16; ++i) acc += std::conj(amp_[i]) * rhs.amp_[i];
    return acc;
}

double StateVector::overlap_modulus(const StateVector& rhs) const { return std::abs(inner(rhs)); }

BellFactor bell_state(BellLabel label) {
    // factor basis: (x1 x2) in {00, 01, 10, 11} over {H, V} or {a, b}
    Vec4 amp{};
    switch (label.kind) {
        case BellKind::psi_plus:
            amp[1] = kInvSqrt2;
            amp[2] = kInvSqrt2;
            break;
        case BellKind::psi_minus:
            amp[1] = kInvSqrt2;
            amp[2] = -kInvSqrt2;
            break;
        case BellKind::phi_plus:
            amp[0] = kInvSqrt2;
            amp[3] = kInvSqrt2;
            break;
        case BellKind::phi_minus:
            amp[0] = kInvSqrt2;
            amp[3] = -kInvSqrt2;
            break;
    }
    return BellFactor{label.dof, amp};
}

StateVector hyper_product(const BellFactor& pol_factor, const BellFactor& mom_factor) {
    if (pol_factor.dof != Dof::polarization || mom_factor.dof != Dof::momentum)
        throw std::invalid_argument("hyper_product: factors given in the wrong order");
    Vec16 amp{};
    for (int p1 = 0; p1 < 2; ++p1)
        for (int p2 = 0; p2 < 2; ++p2)
            for (int m1 = 0; m1 < 2; ++m1)
                for (int m2 = 0; m2 < 2; ++m2)
                    amp[static_cast<std::size_t>(8 * p1 + 4 * m1 + 2 * p2 + m2)] =
                        pol_factor.amp[static_cast<std::size_t>(2 * p1 + p2)] *
                        mom_factor.amp[static_cast<std::size_t>(2 * m1 + m2)];
    return StateVector::from_amplitudes(amp);
}

StateVector hyper_product(BellLabel pol_label, BellLabel mom_label) {
    if (pol_label.dof != Dof::polarization || mom_label.dof != Dof::momentum)
        throw std::invalid_argument("hyper_product: expected (polarization, momentum) labels");
    return hyper_product(bell_state(pol_label), bell_state(mom_label));
}

DensityMatrix DensityMatrix::pure(const StateVector& psi) {
    std::vector<cplx> entries(16 * 16);
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            entries[static_cast<std::size_t>(i) * 16 + j] = psi[i] * std::conj(psi[j]);
    return DensityMatrix(16, std::move(entries));
}

DensityMatrix DensityMatrix::from_entries(int dim, std::vector<cplx> entries) {
    if (dim != 4 && dim != 16) throw std::invalid_argument("DensityMatrix: dim must be 4 or 16");
    if (entries.size() != static_cast<std::size_t>(dim) * dim)
        throw std::invalid_argument("DensityMatrix: entry count does not match dim");

    DensityMatrix rho(dim, std::move(entries));
    if (rho.hermiticity_defect() > kAlgTol)
        throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
    if (std::abs(rho.trace_real() - 1.0) > kAlgTol)
        throw std::invalid_argument("DensityMatrix: trace is not 1 within 1e-12");
    if (rho.eigenvalues().front() < -kAlgTol)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue beyond -1e-12");
    return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    if (dim != 4 && dim != 16) throw std::invalid_argument("DensityMatrix: dim must be 4 or 16");
    std::vector<cplx> entries(static_cast<std::size_t>(dim) * dim);
    for (int i = 0; i < dim; ++i)
        entries[static_cast<std::size_t>(i) * dim + i] = 1.0 / static_cast<double>(dim);
    return DensityMatrix(dim, std::move(entries));
}

double DensityMatrix::trace_real() const {
    double tr = 0.0;
    for (int i = 0; i < dim_; ++i) tr += at(i, i).real();
    return tr;
}

double DensityMatrix::hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            worst = std::max(worst, std::abs(at(i, j) - std::conj(at(j, i))));
    return worst;
}

std::vector<double> DensityMatrix::eigenvalues() const {
    return hermitian_eigenvalues(entries_.data(), dim_);
}

DensityMatrix partial_trace_photon1(const DensityMatrix& rho) {
    if (rho.dim() != 16)
        throw std::invalid_argument("partial_trace_photon1: expected a 16x16 density matrix");
    if (rho.hermiticity_defect() > kAlgTol || std::abs(rho.trace_real() - 1.0) > kAlgTol)
        throw std::invalid_argument("partial_trace_photon1: input is not a density matrix");

    // index = 4 * (photon-1 pair) + (photon-2 pair); sum the photon-1 diagonal
    std::vector<cplx> reduced(16);
    for (int j = 0; j < 4; ++j)
        for (int jp = 0; jp < 4; ++jp) {
            cplx acc{};
            for (int k = 0; k < 4; ++k) acc += rho.at(4 * k + j, 4 * k + jp);
            reduced[static_cast<std::size_t>(j) * 4 + jp] = acc;
        }
    return DensityMatrix::from_entries(4, std::move(reduced));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
    const int n = a.dim();
    std::vector<cplx> diff(static_cast<std::size_t>(n) * n);
    for (std::size_t k = 0; k < diff.size(); ++k) diff[k] = a.entries()[k] - b.entries()[k];
    double sum = 0.0;
    for (double lambda : hermitian_eigenvalues(diff.data(), n)) sum += std::abs(lambda);
    return 0.5 * sum;
}

}  // namespace hbsa
