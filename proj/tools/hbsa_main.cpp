// Command-line front end: verification suites, phase-error sweeps, sampling
// and dense-coding runs with reproducible, fully-configured outputs.
//
// Exit codes: 0 = all checks pass, 1 = verification mismatch, 2 = invalid
// configuration.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "golden_tables.hpp"
#include "hbsa/reports.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_alpha_token(const std::string& token) {
    if (token == "pi") return kPi;
    if (token == "-pi") return -kPi;
    try {
        std::size_t used = 0;
        const double value = std::stod(token, &used);
        if (used != token.size()) throw ConfigError("bad alpha value '" + token + "'");
        return value;
    } catch (const std::invalid_argument&) {
        throw ConfigError("bad alpha value '" + token + "'");
    } catch (const std::out_of_range&) {
        throw ConfigError("alpha value '" + token + "' out of range");
    }
}

void check_alpha_range(double alpha) {
    if (!(alpha > -kPi - 1e-12 && alpha <= kPi + 1e-12))
        throw ConfigError("alpha must lie in (-pi, pi]");
}

// "start:stop:n" with inclusive endpoints; "pi" and "-pi" are accepted tokens
std::vector<double> parse_alpha_grid(const std::string& text) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t colon = text.find(':', start);
        parts.push_back(text.substr(start, colon == std::string::npos ? colon : colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() != 3) throw ConfigError("alpha grid must look like start:stop:n");

    const double lo = parse_alpha_token(parts[0]);
    const double hi = parse_alpha_token(parts[1]);
    long n = 0;
    try {
        n = std::stol(parts[2]);
    } catch (const std::exception&) {
        throw ConfigError("bad grid point count '" + parts[2] + "'");
    }
    if (n < 1) throw ConfigError("alpha grid needs at least one point");

    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const double alpha = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
        check_alpha_range(alpha);
        grid.push_back(alpha);
    }
    return grid;
}

hbsa::Analyzer make_analyzer(const std::string& name) {
    if (name == "pol") return hbsa::Analyzer::polarization_bsa();
    if (name == "mom") return hbsa::Analyzer::momentum_bsa();
    throw ConfigError("analyzer must be pol or mom");
}

hbsa::BellLabel parse_label_or_fail(const std::string& text, const char* what) {
    const auto label = hbsa::parse_bell_label(text);
    if (!label) throw ConfigError(std::string(what) + ": unknown Bell label '" + text + "'");
    return *label;
}

hbsa::BellLabel resolve_ancilla(const hbsa::Analyzer& analyzer, const std::string& flag) {
    if (flag.empty()) return analyzer.canonical_ancilla();
    const hbsa::BellLabel ancilla = parse_label_or_fail(flag, "--ancilla");
    const hbsa::BellLabel canonical = analyzer.canonical_ancilla();
    if (ancilla.dof != canonical.dof)
        throw ConfigError("--ancilla " + flag + " does not fit the " + analyzer.name() +
                          " analyzer (its ancilla lives in the other degree of freedom)");
    if (analyzer.discriminates() == hbsa::Dof::momentum && ancilla.kind != hbsa::BellKind::psi_plus)
        throw ConfigError("the mom analyzer supports only the Psi-plus ancilla");
    if (ancilla.kind != hbsa::BellKind::psi_plus && ancilla.kind != hbsa::BellKind::psi_minus)
        throw ConfigError("--ancilla must be psi-plus, psi-minus or Psi-plus");
    return ancilla;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + out_path + "'");
    out << text;
}

std::string flag_form(hbsa::BellLabel label) {
    std::string s = hbsa::to_string(label);
    s.pop_back();
    s += (hbsa::to_string(label).back() == '+') ? "-plus" : "-minus";
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"hyperentangled Bell-state analysis simulator"};
    app.require_subcommand(1);

    std::string analyzer_name = "pol";
    std::string ancilla_flag;
    std::string label_flag;
    std::string alpha_flag;
    std::string alpha_grid_flag;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 1;
    std::string format = "text";
    std::string out_path;

    auto add_common = [&](CLI::App* cmd, bool with_sampling) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "structured"}));
        cmd->add_option("--out", out_path, "write the artifact to this path instead of stdout");
        if (with_sampling) {
            cmd->add_option("--shots", shots, "number of Monte Carlo draws");
            cmd->add_option("--seed", seed, "random seed");
        }
    };

    CLI::App* verify = app.add_subcommand("verify-bsa", "diff analyzer signatures against the reference tables");
    verify->add_option("--analyzer", analyzer_name, "which analyzer")->check(CLI::IsMember({"pol", "mom"}));
    verify->add_option("--ancilla", ancilla_flag, "ancilla Bell state (psi-plus, psi-minus or Psi-plus)");
    add_common(verify, false);

    CLI::App* sweep = app.add_subcommand("phase-sweep", "exact and sampled correct-classification probability vs alpha");
    sweep->add_option("--alpha", alpha_flag, "single phase error (radians; 'pi' accepted)");
    sweep->add_option("--alpha-grid", alpha_grid_flag, "grid start:stop:n (inclusive)");
    add_common(sweep, true);

    CLI::App* dense = app.add_subcommand("dense-code", "round-trip all four two-bit messages");
    dense->add_option("--alpha", alpha_flag, "phase error applied after encoding");
    add_common(dense, true);

    CLI::App* smp = app.add_subcommand("sample", "sample detector coincidences for one input state");
    smp->add_option("--analyzer", analyzer_name, "which analyzer")->check(CLI::IsMember({"pol", "mom"}));
    smp->add_option("--label", label_flag, "Bell label carried by the analyzed degree of freedom");
    smp->add_option("--ancilla", ancilla_flag, "ancilla Bell state");
    smp->add_option("--alpha", alpha_flag, "phase error on photon 1 mode b");
    add_common(smp, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int code = app.exit(err);
        return code == 0 ? 0 : 2;
    }

    try {
        const bool structured = format == "structured";

        if (verify->parsed()) {
            const hbsa::Analyzer analyzer = make_analyzer(analyzer_name);
            const hbsa::BellLabel ancilla = resolve_ancilla(analyzer, ancilla_flag);
            const hbsa::ReferenceTable reference = hbsa::ReferenceTable::parse(
                analyzer.discriminates() == hbsa::Dof::polarization ? hbsa::golden::kTable1Tsv
                                                                    : hbsa::golden::kTable2Tsv,
                analyzer.discriminates());
            const hbsa::VerifyReport report = hbsa::verify_bsa(analyzer, ancilla, reference);

            if (structured) {
                nlohmann::ordered_json config{{"analyzer", analyzer_name},
                                              {"ancilla", flag_form(ancilla)},
                                              {"format", format}};
                emit(hbsa::to_json(report, config).dump(2) + "\n", out_path);
            } else {
                const std::vector<std::string> header{
                    "hbsa verify-bsa",
                    "config: analyzer=" + analyzer_name + " ancilla=" + flag_form(ancilla) +
                        " format=" + format};
                emit(hbsa::to_text(report, analyzer, header), out_path);
            }
            return report.all_match ? 0 : 1;
        }

        if (sweep->parsed()) {
            std::vector<double> grid;
            if (!alpha_grid_flag.empty() && !alpha_flag.empty())
                throw ConfigError("give either --alpha or --alpha-grid, not both");
            if (!alpha_grid_flag.empty()) grid = parse_alpha_grid(alpha_grid_flag);
            else if (!alpha_flag.empty()) {
                const double alpha = parse_alpha_token(alpha_flag);
                check_alpha_range(alpha);
                grid = {alpha};
            } else {
                grid = parse_alpha_grid("0:pi:13");
            }
            if (shots == 0) throw ConfigError("--shots must be >= 1");

            const hbsa::PhaseSweepReport report = hbsa::phase_sweep(grid, shots, seed);
            const std::string grid_desc =
                alpha_grid_flag.empty() ? (alpha_flag.empty() ? "0:pi:13" : alpha_flag)
                                        : alpha_grid_flag;
            if (structured) {
                nlohmann::ordered_json config{{"grid", grid_desc},
                                              {"shots", shots},
                                              {"seed", seed},
                                              {"format", format}};
                emit(hbsa::to_json(report, config).dump(2) + "\n", out_path);
            } else {
                const std::vector<std::string> header{
                    "hbsa phase-sweep",
                    "config: grid=" + grid_desc + " shots=" + std::to_string(shots) +
                        " seed=" + std::to_string(seed) + " format=" + format};
                emit(hbsa::to_text(report, header), out_path);
            }
            return 0;
        }

        if (dense->parsed()) {
            double alpha = 0.0;
            if (!alpha_flag.empty()) {
                alpha = parse_alpha_token(alpha_flag);
                check_alpha_range(alpha);
            }
            if (shots == 0) throw ConfigError("--shots must be >= 1");

            const hbsa::DenseCodeReport report = hbsa::dense_code(alpha, shots, seed);
            if (structured) {
                nlohmann::ordered_json config{{"alpha", alpha},
                                              {"shots", shots},
                                              {"seed", seed},
                                              {"format", format}};
                emit(hbsa::to_json(report, config).dump(2) + "\n", out_path);
            } else {
                const std::vector<std::string> header{
                    "hbsa dense-code",
                    "config: alpha=" + hbsa::format_double(alpha) + " shots=" +
                        std::to_string(shots) + " seed=" + std::to_string(seed) +
                        " format=" + format};
                emit(hbsa::to_text(report, header), out_path);
            }
            return 0;
        }

        if (smp->parsed()) {
            const hbsa::Analyzer analyzer = make_analyzer(analyzer_name);
            const hbsa::BellLabel ancilla = resolve_ancilla(analyzer, ancilla_flag);
            hbsa::BellLabel label{analyzer.discriminates(), hbsa::BellKind::phi_plus};
            if (!label_flag.empty()) label = parse_label_or_fail(label_flag, "--label");
            if (label.dof != analyzer.discriminates())
                throw ConfigError("--label " + label_flag + " lives in the wrong degree of freedom for the " +
                                  analyzer.name() + " analyzer");
            double alpha = 0.0;
            if (!alpha_flag.empty()) {
                alpha = parse_alpha_token(alpha_flag);
                check_alpha_range(alpha);
            }
            if (shots == 0) throw ConfigError("--shots must be >= 1");

            hbsa::StateVector psi = analyzer.discriminates() == hbsa::Dof::polarization
                                        ? hbsa::hyper_product(label, ancilla)
                                        : hbsa::hyper_product(ancilla, label);
            if (alpha != 0.0) psi = hbsa::apply(hbsa::mode_phase(1, hbsa::Mode::b, alpha), psi);

            const hbsa::SampleReport report = hbsa::sample(analyzer, psi, shots, seed);
            if (structured) {
                nlohmann::ordered_json config{{"analyzer", analyzer_name},
                                              {"label", hbsa::to_string(label)},
                                              {"ancilla", flag_form(ancilla)},
                                              {"alpha", alpha},
                                              {"shots", shots},
                                              {"seed", seed},
                                              {"format", format}};
                nlohmann::ordered_json doc = hbsa::to_json(report, analyzer);
                doc["config"] = config;
                emit(doc.dump(2) + "\n", out_path);
            } else {
                std::string text = "# hbsa sample\n# config: analyzer=" + analyzer_name +
                                   " label=" + hbsa::to_string(label) + " ancilla=" +
                                   flag_form(ancilla) + " alpha=" + hbsa::format_double(alpha) +
                                   " shots=" + std::to_string(shots) + " seed=" +
                                   std::to_string(seed) + " format=" + format + "\n";
                text += hbsa::to_text(report, analyzer);
                emit(text, out_path);
            }
            return 0;
        }
    } catch (const ConfigError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "internal error: " << err.what() << "\n";
        return 2;
    }

    return 2;  // unreachable: a subcommand is required
}
