#include <doctest.h>

#include <cmath>

#include "hbsa/reports.hpp"

using namespace hbsa;

namespace {

constexpr double kPi = 3.14159265358979323846;

const char* kGoodPolTsv =
    "Psi+\tA1+ A2+\tB1+ B2+\tA1- A2-\tB1- B2-\n"
    "Psi-\tA1+ A2-\tB1+ B2-\tA1- A2+\tB1- B2+\n"
    "Phi+\tA1+ B2+\tB1+ A2+\tA1- B2-\tB1- A2-\n"
    "Phi-\tA1+ B2-\tB1+ A2-\tA1- B2+\tB1- A2+\n";

}  // namespace

TEST_CASE("reference tables parse and reject malformed rows") {
    const ReferenceTable table = ReferenceTable::parse(kGoodPolTsv, Dof::polarization);
    CHECK(table.rows[static_cast<int>(BellKind::phi_minus)][0] == "A1+ B2-");

    CHECK_THROWS_AS(ReferenceTable::parse(kGoodPolTsv, Dof::momentum), std::invalid_argument);
    CHECK_THROWS_AS(ReferenceTable::parse("Psi+\tA1+ A2+\n", Dof::polarization),
                    std::invalid_argument);
    CHECK_THROWS_AS(ReferenceTable::parse(
                        "Psi+\ta\tb\tc\td\nPsi+\ta\tb\tc\td\nPhi+\ta\tb\tc\td\nPhi-\ta\tb\tc\td\n",
                        Dof::polarization),
                    std::invalid_argument);
}

TEST_CASE("verify_bsa matches the true table and flags a corrupted one") {
    const Analyzer analyzer = Analyzer::polarization_bsa();
    const ReferenceTable good = ReferenceTable::parse(kGoodPolTsv, Dof::polarization);

    const VerifyReport ok = verify_bsa(analyzer, analyzer.canonical_ancilla(), good);
    CHECK(ok.all_match);
    CHECK(ok.rows.size() == 4);
    for (const VerifyRow& row : ok.rows) {
        CHECK(row.match);
        for (double p : row.on_row_probabilities) CHECK(p == doctest::Approx(0.25).epsilon(1e-10));
    }

    // swap one signature between the Psi+ and Psi- rows
    ReferenceTable corrupted = good;
    std::swap(corrupted.rows[0][0], corrupted.rows[1][0]);
    const VerifyReport bad = verify_bsa(analyzer, analyzer.canonical_ancilla(), corrupted);
    CHECK(!bad.all_match);
    CHECK(!bad.rows[0].match);
    CHECK(!bad.rows[1].match);
    CHECK(bad.rows[2].match);

    const std::string text = to_text(bad, analyzer, {"hbsa verify-bsa"});
    CHECK(text.find("result: FAIL") != std::string::npos);
    CHECK(text.find("reference row:") != std::string::npos);
}

TEST_CASE("verify_bsa with the swapped ancilla relabels every row") {
    const Analyzer analyzer = Analyzer::polarization_bsa();
    const ReferenceTable good = ReferenceTable::parse(kGoodPolTsv, Dof::polarization);
    const VerifyReport report =
        verify_bsa(analyzer, BellLabel{Dof::momentum, BellKind::psi_minus}, good);
    CHECK(report.all_match);
    for (const VerifyRow& row : report.rows) CHECK(row.expected == sign_swapped(row.input));
}

TEST_CASE("verify_bsa rejects an ancilla from the wrong degree of freedom") {
    const Analyzer mom = Analyzer::momentum_bsa();
    const ReferenceTable pol_table = ReferenceTable::parse(kGoodPolTsv, Dof::polarization);
    CHECK_THROWS_AS(verify_bsa(mom, BellLabel{Dof::momentum, BellKind::psi_minus}, pol_table),
                    std::invalid_argument);
}

TEST_CASE("phase sweep reports the exact law, the audit note and stable sampling") {
    std::vector<double> grid;
    for (int i = 0; i < 13; ++i) grid.push_back(kPi * static_cast<double>(i) / 12.0);
    const PhaseSweepReport report = phase_sweep(grid, 20000, 17);

    REQUIRE(report.points.size() == 13);
    for (const PhaseSweepPoint& point : report.points) {
        const double c = std::cos(point.alpha / 2.0);
        CHECK(std::abs(point.exact - c * c) < 1e-12);
    }
    CHECK(report.audit_note.find("/4") != std::string::npos);
    CHECK(report.audit_note.find("/2") != std::string::npos);

    const PhaseSweepReport again = phase_sweep(grid, 20000, 17);
    for (std::size_t i = 0; i < report.points.size(); ++i)
        CHECK(report.points[i].sampled == again.points[i].sampled);

    CHECK_THROWS_AS(phase_sweep({}, 100, 1), std::invalid_argument);

    const std::string text = to_text(report, {"hbsa phase-sweep"});
    CHECK(text.find("alpha\texact_correct_probability\tsampled_frequency") != std::string::npos);
}

TEST_CASE("dense-code artifacts carry both capacity figures") {
    const DenseCodeReport report = dense_code(0.0, 1000, 2);
    const std::string text = to_text(report, {"hbsa dense-code"});
    CHECK(text.find("bits per transmitted photon = 2") != std::string::npos);
    CHECK(text.find("bits per qubit = 1") != std::string::npos);

    const nlohmann::ordered_json doc = to_json(report, {{"alpha", 0.0}});
    CHECK(doc["bits_per_photon"] == 2.0);
    CHECK(doc["bits_per_qubit"] == 1.0);
    CHECK(doc["runs"].size() == 4);
}
