#include "hbsa/elements.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hbsa {

namespace {

constexpr double kPi = 3.14159265358979323846;

// factor basis index for one photon: 2*pol + mode (Ha, Hb, Va, Vb)
constexpr int fidx(int pol, int mode) { return 2 * pol + mode; }

Mat4& set(Mat4& m, int row, int col, cplx value) {
    m[static_cast<std::size_t>(row) * 4 + col] = value;
    return m;
}

// Jones matrix applied to the polarization of the selected mode(s),
// identity elsewhere; never mixes modes
Mat4 polarization_factor(const Mat2& jones, ModeSelect mode) {
    Mat4 f{};
    for (int m = 0; m < 2; ++m) {
        const bool covered = (mode == ModeSelect::both) || (static_cast<int>(mode) == m);
        for (int p_out = 0; p_out < 2; ++p_out)
            for (int p_in = 0; p_in < 2; ++p_in) {
                const cplx j = jones[static_cast<std::size_t>(p_out) * 2 + p_in];
                set(f, fidx(p_out, m), fidx(p_in, m),
                    covered ? j : (p_out == p_in ? cplx{1.0} : cplx{}));
            }
    }
    return f;
}

Mat2 matmul2(const Mat2& lhs, const Mat2& rhs) {
    Mat2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                out[static_cast<std::size_t>(i) * 2 + j] +=
                    lhs[static_cast<std::size_t>(i) * 2 + k] * rhs[static_cast<std::size_t>(k) * 2 + j];
    return out;
}

void check_photon(int photon, const char* element) {
    if (photon != 1 && photon != 2)
        throw std::invalid_argument(std::string(element) + ": photon must be 1 or 2");
}

void check_wave_plate_angle(double angle, const char* element) {
    if (!std::isfinite(angle))
        throw std::invalid_argument(std::string(element) + ": angle must be finite");
    // retarder axes are pi-periodic; angles are reported in (-pi, pi]
    if (angle <= -kPi || angle > kPi)
        throw std::invalid_argument(std::string(element) + ": angle must lie in (-pi, pi]");
}

std::string format_param(double value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
}

}  // namespace

std::string to_string(ModeSelect mode) {
    switch (mode) {
        case ModeSelect::a: return "a";
        case ModeSelect::b: return "b";
        case ModeSelect::both: return "both";
    }
    throw std::logic_error("to_string(ModeSelect): bad value");
}

Mat16 embed_photon1(const Mat4& factor) {
    Mat16 u{};
    for (int k_out = 0; k_out < 4; ++k_out)
        for (int k_in = 0; k_in < 4; ++k_in) {
            const cplx f = factor[static_cast<std::size_t>(k_out) * 4 + k_in];
            for (int j = 0; j < 4; ++j)
                u[static_cast<std::size_t>(4 * k_out + j) * 16 + (4 * k_in + j)] = f;
        }
    return u;
}

Mat16 embed_photon2(const Mat4& factor) {
    Mat16 u{};
    for (int k = 0; k < 4; ++k)
        for (int j_out = 0; j_out < 4; ++j_out)
            for (int j_in = 0; j_in < 4; ++j_in)
                u[static_cast<std::size_t>(4 * k + j_out) * 16 + (4 * k + j_in)] =
                    factor[static_cast<std::size_t>(j_out) * 4 + j_in];
    return u;
}

ElementOp::ElementOp(std::vector<FactorStep> steps, std::string description)
    : steps_(std::move(steps)), description_(std::move(description)) {
    if (steps_.empty()) throw std::invalid_argument("ElementOp: no factor steps");
    matrix_ = identity<16>();
    for (const FactorStep& step : steps_) {
        if (step.photon != 1 && step.photon != 2)
            throw std::invalid_argument("ElementOp: photon must be 1 or 2");
        const Mat16 embedded =
            step.photon == 1 ? embed_photon1(step.factor) : embed_photon2(step.factor);
        matrix_ = matmul<16>(embedded, matrix_);
    }
    if (!is_unitary<16>(matrix_))
        throw std::logic_error("ElementOp: '" + description_ + "' is not unitary within 1e-12");
}

ElementOp pbs(int photon) {
    check_photon(photon, "pbs");
    Mat4 f{};
    set(f, fidx(0, 0), fidx(0, 0), 1.0);  // H keeps its mode
    set(f, fidx(0, 1), fidx(0, 1), 1.0);
    set(f, fidx(1, 1), fidx(1, 0), 1.0);  // V swaps a <-> b
    set(f, fidx(1, 0), fidx(1, 1), 1.0);
    return ElementOp({{photon, f}}, "pbs " + std::to_string(photon));
}

ElementOp hwp(int photon, ModeSelect mode, double angle) {
    check_photon(photon, "hwp");
    check_wave_plate_angle(angle, "hwp");
    const double c = std::cos(2.0 * angle);
    const double s = std::sin(2.0 * angle);
    const Mat2 jones{cplx{c}, cplx{s}, cplx{s}, cplx{-c}};
    return ElementOp({{photon, polarization_factor(jones, mode)}},
                     "hwp " + std::to_string(photon) + " " + to_string(mode) + " " + format_param(angle));
}

ElementOp qwp(int photon, ModeSelect mode, double angle) {
    check_photon(photon, "qwp");
    check_wave_plate_angle(angle, "qwp");
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    const Mat2 rot{cplx{c}, cplx{-s}, cplx{s}, cplx{c}};
    const Mat2 rot_back{cplx{c}, cplx{s}, cplx{-s}, cplx{c}};
    const Mat2 retard{cplx{1.0}, cplx{}, cplx{}, cplx{0.0, 1.0}};
    const Mat2 jones = matmul2(rot, matmul2(retard, rot_back));
    return ElementOp({{photon, polarization_factor(jones, mode)}},
                     "qwp " + std::to_string(photon) + " " + to_string(mode) + " " + format_param(angle));
}

ElementOp beamsplitter(int photon) {
    check_photon(photon, "bs");
    const double r = 1.0 / std::sqrt(2.0);
    Mat4 f{};
    for (int p = 0; p < 2; ++p) {
        set(f, fidx(p, 0), fidx(p, 0), r);   // a -> (a + b)/sqrt(2)
        set(f, fidx(p, 1), fidx(p, 0), r);
        set(f, fidx(p, 0), fidx(p, 1), r);   // b -> (a - b)/sqrt(2)
        set(f, fidx(p, 1), fidx(p, 1), -r);
    }
    return ElementOp({{photon, f}}, "bs " + std::to_string(photon));
}

ElementOp mode_phase(int photon, Mode mode, double alpha) {
    check_photon(photon, "phase");
    if (!std::isfinite(alpha)) throw std::invalid_argument("phase: alpha must be finite");
    const cplx phase = std::polar(1.0, alpha);
    Mat4 f{};
    for (int p = 0; p < 2; ++p)
        for (int m = 0; m < 2; ++m)
            set(f, fidx(p, m), fidx(p, m), m == static_cast<int>(mode) ? phase : cplx{1.0});
    return ElementOp({{photon, f}}, "phase " + std::to_string(photon) + " " +
                                        (mode == Mode::a ? "a" : "b") + " " + format_param(alpha));
}

ElementOp pa_45(int photon) {
    check_photon(photon, "pa45");
    const ElementOp plate = hwp(photon, ModeSelect::both, kPi / 8.0);
    return ElementOp({plate.steps().begin(), plate.steps().end()},
                     "pa45 " + std::to_string(photon));
}

ElementOp compose(std::span<const ElementOp> ops) {
    if (ops.empty()) throw std::invalid_argument("compose: empty element list");
    std::vector<FactorStep> steps;
    std::string description = "compose(";
    for (std::size_t i = 0; i < ops.size(); ++i) {
        steps.insert(steps.end(), ops[i].steps().begin(), ops[i].steps().end());
        if (i != 0) description += ", ";
        description += ops[i].description();
    }
    description += ")";
    return ElementOp(std::move(steps), std::move(description));
}

ElementOp compose(std::initializer_list<ElementOp> ops) {
    return compose(std::span<const ElementOp>(ops.begin(), ops.size()));
}

StateVector apply(const ElementOp& op, const StateVector& psi) {
    Vec16 amp = psi.amplitudes();
    for (const FactorStep& step : op.steps()) {
        Vec16 next{};
        const Mat4& f = step.factor;
        if (step.photon == 1) {
            for (int j = 0; j < 4; ++j)
                for (int k_out = 0; k_out < 4; ++k_out) {
                    cplx acc{};
                    for (int k_in = 0; k_in < 4; ++k_in)
                        acc += f[static_cast<std::size_t>(k_out) * 4 + k_in] *
                               amp[static_cast<std::size_t>(4 * k_in + j)];
                    next[static_cast<std::size_t>(4 * k_out + j)] = acc;
                }
        } else {
            for (int k = 0; k < 4; ++k)
                for (int j_out = 0; j_out < 4; ++j_out) {
                    cplx acc{};
                    for (int j_in = 0; j_in < 4; ++j_in)
                        acc += f[static_cast<std::size_t>(j_out) * 4 + j_in] *
                               amp[static_cast<std::size_t>(4 * k + j_in)];
                    next[static_cast<std::size_t>(4 * k + j_out)] = acc;
                }
        }
        amp = next;
    }

    double norm_sq = 0.0;
    for (const cplx& c : amp) norm_sq += std::norm(c);
    if (std::abs(norm_sq - 1.0) > kAlgTol)
        throw std::logic_error("apply: output norm drifted from 1 (internal bug in '" +
                               op.description() + "')");
    return StateVector(amp);
}

ElementOp ElementSpec::build() const {
    auto need_mode = [&]() -> ModeSelect {
        if (!mode) throw std::invalid_argument(name + ": missing mode");
        return *mode;
    };
    auto need_angle = [&]() -> double {
        if (!angle) throw std::invalid_argument(name + ": missing angle");
        return *angle;
    };
    auto no_extras = [&](bool allow_mode, bool allow_angle) {
        if (!allow_mode && mode) throw std::invalid_argument(name + ": unexpected mode argument");
        if (!allow_angle && angle) throw std::invalid_argument(name + ": unexpected angle argument");
    };

    if (name == "pbs") {
        no_extras(false, false);
        return pbs(photon);
    }
    if (name == "hwp") return hwp(photon, need_mode(), need_angle());
    if (name == "qwp") return qwp(photon, need_mode(), need_angle());
    if (name == "bs") {
        no_extras(false, false);
        return beamsplitter(photon);
    }
    if (name == "phase") {
        const ModeSelect m = need_mode();
        if (m == ModeSelect::both)
            throw std::invalid_argument("phase: mode must be a or b");
        return mode_phase(photon, m == ModeSelect::a ? Mode::a : Mode::b, need_angle());
    }
    if (name == "pa45") {
        no_extras(false, false);
        return pa_45(photon);
    }
    throw std::invalid_argument("unknown element '" + name + "'");
}

std::string ElementSpec::to_line() const {
    std::string line = name + " " + std::to_string(photon);
    if (mode) line += " " + to_string(*mode);
    if (angle) line += " " + format_param(*angle);
    return line;
}

CircuitDescription CircuitDescription::parse(std::string_view text) {
    CircuitDescription circuit;
    std::istringstream stream{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);

        std::istringstream fields(line);
        ElementSpec spec;
        if (!(fields >> spec.name)) continue;  // blank line

        auto fail = [&](const std::string& what) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
        };

        static const char* known[] = {"pbs", "hwp", "qwp", "bs", "phase", "pa45"};
        bool recognized = false;
        for (const char* k : known) recognized = recognized || (spec.name == k);
        if (!recognized) fail("unknown element '" + spec.name + "'");

        if (!(fields >> spec.photon)) fail(spec.name + ": missing photon (1 or 2)");
        if (spec.photon != 1 && spec.photon != 2) fail(spec.name + ": photon must be 1 or 2");

        std::string mode_token;
        if (fields >> mode_token) {
            if (mode_token == "a") spec.mode = ModeSelect::a;
            else if (mode_token == "b") spec.mode = ModeSelect::b;
            else if (mode_token == "both") spec.mode = ModeSelect::both;
            else fail(spec.name + ": bad mode '" + mode_token + "' (want a, b or both)");

            double angle = 0.0;
            if (fields >> angle) spec.angle = angle;
            else {
                fields.clear();
                std::string leftover;
                if (fields >> leftover) fail(spec.name + ": bad angle '" + leftover + "'");
            }
        }

        std::string trailing;
        if (fields >> trailing) fail(spec.name + ": trailing token '" + trailing + "'");

        try {
            (void)spec.build();  // validate eagerly so errors carry the line number
        } catch (const std::invalid_argument& err) {
            fail(err.what());
        }
        circuit.elements.push_back(std::move(spec));
    }
    return circuit;
}

std::string CircuitDescription::to_text() const {
    std::string text;
    for (const ElementSpec& spec : elements) {
        text += spec.to_line();
        text += '\n';
    }
    return text;
}

std::vector<ElementOp> CircuitDescription::build() const {
    std::vector<ElementOp> ops;
    ops.reserve(elements.size());
    for (const ElementSpec& spec : elements) ops.push_back(spec.build());
    return ops;
}

}  // namespace hbsa
