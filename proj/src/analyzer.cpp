#include "hbsa/analyzer.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hbsa {

namespace {

// probability below which a signature counts as outside the support
constexpr double kSupportTol = 1e-12;

}  // namespace

Analyzer::Analyzer(std::string name, Dof dof, BellLabel ancilla, std::vector<ElementOp> elements,
                   std::array<std::string, 2> axis_names)
    : name_(std::move(name)),
      dof_(dof),
      ancilla_(ancilla),
      elements_(std::move(elements)),
      composed_(compose(std::span<const ElementOp>(elements_.data(), elements_.size()))),
      axis_names_(std::move(axis_names)) {
    // Derive the signature -> label table by running the four canonical
    // inputs. The 16 signatures must partition into 4 rows of 4; any overlap
    // or gap is a construction bug.
    std::array<int, 16> assigned{};
    assigned.fill(-1);
    for (int k = 0; k < kNumBellKinds; ++k) {
        const StateVector out = final_state(canonical_input(static_cast<BellKind>(k)));
        for (int i = 0; i < 16; ++i) {
            if (out.probability(i) <= kSupportTol) continue;
            if (assigned[static_cast<std::size_t>(i)] != -1)
                throw std::logic_error(name_ + " analyzer: signature rows overlap");
            assigned[static_cast<std::size_t>(i)] = k;
        }
    }
    for (int i = 0; i < 16; ++i) {
        if (assigned[static_cast<std::size_t>(i)] == -1)
            throw std::logic_error(name_ + " analyzer: signature table does not cover all outcomes");
        kind_of_index_[static_cast<std::size_t>(i)] =
            static_cast<BellKind>(assigned[static_cast<std::size_t>(i)]);
    }
}

Analyzer Analyzer::polarization_bsa() {
    std::vector<ElementOp> elements;
    elements.push_back(pbs(1));
    elements.push_back(pbs(2));
    elements.push_back(pa_45(1));
    elements.push_back(pa_45(2));
    return Analyzer("pol", Dof::polarization, BellLabel{Dof::momentum, BellKind::psi_plus},
                    std::move(elements), {"+", "-"});
}

Analyzer Analyzer::momentum_bsa() {
    constexpr double kQuarterPi = 0.78539816339744830962;
    std::vector<ElementOp> elements;
    elements.push_back(hwp(1, ModeSelect::b, kQuarterPi));
    elements.push_back(hwp(2, ModeSelect::b, kQuarterPi));
    elements.push_back(beamsplitter(1));
    elements.push_back(beamsplitter(2));
    return Analyzer("mom", Dof::momentum, BellLabel{Dof::polarization, BellKind::psi_plus},
                    std::move(elements), {"H", "V"});
}

StateVector Analyzer::canonical_input(BellKind kind) const {
    const BellLabel info{dof_, kind};
    return dof_ == Dof::polarization ? hyper_product(info, ancilla_)
                                     : hyper_product(ancilla_, info);
}

StateVector Analyzer::final_state(const StateVector& psi) const { return apply(composed_, psi); }

DetectorSignature Analyzer::signature_of_index(int index) const {
    if (index < 0 || index > 15)
        throw std::out_of_range("signature_of_index: index not in 0..15");
    // readout: port from the spatial mode, axis from the polarization
    const BasisKet ket = BasisKet::from_index(index);
    return DetectorSignature{
        DetectorLabel{1, static_cast<Port>(ket.mode1), static_cast<int>(ket.pol1)},
        DetectorLabel{2, static_cast<Port>(ket.mode2), static_cast<int>(ket.pol2)}};
}

int Analyzer::index_of_signature(const DetectorSignature& sig) const {
    if (sig.d1.photon != 1 || sig.d2.photon != 2)
        throw std::invalid_argument("index_of_signature: want one detector per photon, photon 1 first");
    return 8 * sig.d1.axis + 4 * static_cast<int>(sig.d1.port) + 2 * sig.d2.axis +
           static_cast<int>(sig.d2.port);
}

std::string Analyzer::axis_name(int axis) const {
    return axis_names_[static_cast<std::size_t>(axis)];
}

std::string Analyzer::detector_name(const DetectorLabel& d) const {
    return (d.port == Port::A ? "A" : "B") + std::to_string(d.photon) + axis_name(d.axis);
}

std::string Analyzer::signature_name(int index) const {
    const DetectorSignature sig = signature_of_index(index);
    return detector_name(sig.d1) + " " + detector_name(sig.d2);
}

std::string Analyzer::signature_name(const DetectorSignature& sig) const {
    return signature_name(index_of_signature(sig));
}

DetectorSignature Analyzer::parse_signature(std::string_view text) const {
    std::istringstream stream{std::string(text)};
    std::string first, second;
    if (!(stream >> first >> second))
        throw std::invalid_argument("signature '" + std::string(text) +
                                    "': want two detector labels like 'A1" + axis_names_[0] +
                                    " A2" + axis_names_[0] + "'");
    std::string trailing;
    if (stream >> trailing)
        throw std::invalid_argument("signature '" + std::string(text) + "': trailing token");

    auto parse_detector = [&](const std::string& token, int expect_photon) -> DetectorLabel {
        auto bad = [&](const std::string& why) {
            throw std::invalid_argument("detector '" + token + "': " + why);
        };
        DetectorLabel d{expect_photon, Port::A, 0};
        std::size_t pos = 0;
        if (token.size() < 3) bad("too short");
        if (token[pos] == 'A') d.port = Port::A;
        else if (token[pos] == 'B') d.port = Port::B;
        else bad("port must be A or B");
        ++pos;
        if (token[pos] != static_cast<char>('0' + expect_photon))
            bad("expected photon " + std::to_string(expect_photon) + " in this position");
        ++pos;
        const std::string axis = token.substr(pos);
        if (axis == axis_names_[0]) d.axis = 0;
        else if (axis == axis_names_[1]) d.axis = 1;
        else bad("axis '" + axis + "' is not part of the " + name_ + " analyzer");
        return d;
    };

    return DetectorSignature{parse_detector(first, 1), parse_detector(second, 2)};
}

BellLabel Analyzer::decode(const DetectorSignature& sig) const {
    return decode(index_of_signature(sig));
}

BellLabel Analyzer::decode(int signature_index) const {
    if (signature_index < 0 || signature_index > 15)
        throw std::out_of_range("decode: signature index not in 0..15");
    return BellLabel{dof_, kind_of_index_[static_cast<std::size_t>(signature_index)]};
}

std::array<double, 16> Analyzer::outcome_distribution(const StateVector& psi) const {
    const StateVector out = final_state(psi);
    std::array<double, 16> prob{};
    for (int i = 0; i < 16; ++i) prob[static_cast<std::size_t>(i)] = out.probability(i);
    return prob;
}

LabelDistribution Analyzer::classify(const StateVector& psi) const {
    const std::array<double, 16> prob = outcome_distribution(psi);
    LabelDistribution dist{dof_, {}};
    for (int i = 0; i < 16; ++i)
        dist.p[static_cast<int>(kind_of_index_[static_cast<std::size_t>(i)])] +=
            prob[static_cast<std::size_t>(i)];
    return dist;
}

std::string Analyzer::describe() const {
    std::ostringstream os;
    os << "analyzer: " << name_ << " (discriminates "
       << (dof_ == Dof::polarization ? "polarization" : "momentum")
       << " Bell states; canonical ancilla " << to_string(ancilla_) << ")\n";
    os << "elements:\n";
    for (const ElementOp& op : elements_) os << "  " << op.description() << "\n";
    os << "readout: photon j -> port A if mode a, port B if mode b; axis "
       << axis_names_[0] << " if H, " << axis_names_[1] << " if V\n";
    os << "signature table:\n";
    for (int i = 0; i < 16; ++i)
        os << "  " << signature_name(i) << "  ->  " << to_string(decode(i)) << "\n";
    return os.str();
}

}  // namespace hbsa
