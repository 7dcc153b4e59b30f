#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "fiscsim/cli.hpp"
#include "fiscsim/config.hpp"
#include "fiscsim/errors.hpp"
#include "fiscsim/report.hpp"

using namespace fiscsim;

namespace {

bool mentions(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

const ReportRow& row_by_label(const Report& r, const std::string& label) {
    for (const ReportRow& row : r.rows)
        if (row.label == label) return row;
    REQUIRE(false);
    static ReportRow none;
    return none;
}

double cell(const Report& r, const std::string& label, const std::string& column) {
    const ReportRow& row = row_by_label(r, label);
    for (std::size_t i = 0; i < r.columns.size(); ++i)
        if (r.columns[i] == column) return row.values.at(i);
    REQUIRE(false);
    return 0.0;
}

int count_lines(const std::string& text) {
    int n = 0;
    for (char c : text)
        if (c == '\n') ++n;
    return n;
}

}  // namespace

TEST_CASE("table1 command") {
    const RunConfig cfg = parse_config("{}");
    const Report r = run_command("table1", cfg);

    SUBCASE("eight labelled rows with the crisis-experiment responses") {
        REQUIRE(r.rows.size() == 8);
        CHECK(r.rows[0].label == "A1");
        CHECK(r.rows[7].label == "C3");
        CHECK(cell(r, "A1", "y_hat") == doctest::Approx(-0.036).epsilon(1e-10));
        CHECK(cell(r, "B1", "y_hat") == doctest::Approx(-0.01235).epsilon(1e-10));
        CHECK(cell(r, "C3", "y_hat") == doctest::Approx(0.0355).epsilon(1e-10));
        CHECK(cell(r, "C2", "b_hat") == 0.0);
    }

    SUBCASE("the decomposition columns are present and consistent") {
        for (const ReportRow& row : r.rows) {
            const double sum = cell(r, row.label, "chan_gc") + cell(r, row.label, "chan_gi") +
                               cell(r, row.label, "chan_q") + cell(r, row.label, "chan_b");
            CHECK(cell(r, row.label, "y_hat") == sum);
        }
    }

    SUBCASE("defaulted calibration is disclosed in the notes") {
        bool found = false;
        for (const std::string& n : r.notes) found = found || mentions(n, "defaulted");
        CHECK(found);
    }

    SUBCASE("inputs echo the elasticities the run used") {
        CHECK(r.inputs.at("elasticities").at("m_gi").get<double>() == 1.6);
    }
}

TEST_CASE("scenario command uses configured impulses") {
    const RunConfig cfg = parse_config(
        R"({"scenarios": [{"label": "swap", "g_c_hat": -0.02, "g_i_hat": 0.02},
                          {"label": "big", "q_hat": 0.5}]})");
    const Report r = run_command("scenario", cfg);
    REQUIRE(r.rows.size() == 2);
    CHECK(cell(r, "swap", "y_hat") == doctest::Approx(0.7 * 0.02).epsilon(1e-10));

    SUBCASE("strained impulses are flagged in the notes") {
        bool strained = false;
        for (const std::string& n : r.notes)
            strained = strained || (mentions(n, "strained") && mentions(n, "big"));
        CHECK(strained);
    }

    SUBCASE("an empty scenario list falls back to the built-in eight") {
        const Report fallback = run_command("scenario", parse_config("{}"));
        CHECK(fallback.rows.size() == 8);
    }
}

TEST_CASE("multiplier command contrasts the two regimes") {
    const Report r = run_command("multiplier", parse_config("{}"));
    REQUIRE(r.rows.size() == 2);
    CHECK(r.rows[0].label == "normal");
    CHECK(r.rows[1].label == "zlb");

    SUBCASE("the zero lower bound removes the monetary offset") {
        CHECK(cell(r, "zlb", "kappa") == 0.0);
        CHECK(cell(r, "normal", "kappa") > 0.0);
        CHECK(cell(r, "zlb", "m_gi") > cell(r, "normal", "m_gi"));
        CHECK(cell(r, "zlb", "m_gc") > cell(r, "normal", "m_gc"));
    }

    SUBCASE("investment dominates consumption spending in both regimes") {
        for (const char* regime : {"normal", "zlb"}) {
            CHECK(cell(r, regime, "m_gi") > cell(r, regime, "m_gc"));
            CHECK(cell(r, regime, "gi_gc_ratio") > 1.0);
        }
        // With kappa = 0 the ratio collapses to 1 + mpk_p exactly.
        CHECK(cell(r, "zlb", "gi_gc_ratio") ==
              doctest::Approx(1.0 + cell(r, "zlb", "mpk_p")).epsilon(1e-12));
    }

    SUBCASE("the aggregate mpc blends the blocks at the regime real rate") {
        for (const char* regime : {"normal", "zlb"}) {
            const double wa = cell(r, regime, "mpc_wa");
            CHECK(wa > 0.0);
            CHECK(wa < 1.0);
            CHECK(cell(r, regime, "mpc_agg") ==
                  doctest::Approx(0.45 + 0.55 * wa).epsilon(1e-12));
        }
    }
}

TEST_CASE("mpc command") {
    SUBCASE("baseline row reconciles the closed form with the oracle") {
        const Report r = run_command("mpc", parse_config("{}"));
        REQUIRE(r.rows.size() == 1);
        const double closed = cell(r, "wa", "mpc_wa");
        CHECK(std::abs(closed - cell(r, "wa", "mpc_oracle")) < 1e-5);
        CHECK(closed > 0.0);
        CHECK(closed < 1.0);
        CHECK(cell(r, "wa", "assets") > 0.0);
        CHECK(cell(r, "wa", "mpc_agg") == doctest::Approx(0.45 + 0.55 * closed).epsilon(1e-12));
    }

    SUBCASE("phi = 0 reports the limit case instead of failing") {
        const Report r = run_command("mpc", parse_config(R"({"household": {"phi": 0}})"));
        REQUIRE(r.rows.size() == 1);
        CHECK(cell(r, "wa", "mpc_wa") == 0.0);
        CHECK(cell(r, "wa", "mpc_agg") == doctest::Approx(0.45).epsilon(1e-12));
        bool noted = false;
        for (const std::string& n : r.notes) noted = noted || mentions(n, "limit");
        CHECK(noted);
    }
}

TEST_CASE("production command reports levels, gradients and curvature") {
    const Report r = run_command("production", parse_config("{}"));
    CHECK(cell(r, "Y", "value") == doctest::Approx(1.2175833819088609527).epsilon(1e-12));
    CHECK(cell(r, "MPKP", "value") == doctest::Approx(0.440772522300264028).epsilon(1e-12));
    CHECK(cell(r, "d2Y_dK_dKP", "value") ==
          doctest::Approx(0.0469816599284372591).epsilon(1e-12));
    const double share_sum =
        cell(r, "s_K", "value") + cell(r, "s_L", "value") + cell(r, "s_P", "value");
    CHECK(share_sum == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("path command") {
    SUBCASE("default run walks the eight built-ins through the accounts") {
        const Report r = run_command("path", parse_config("{}"));
        REQUIRE(r.rows.size() == 8);
        CHECK(r.rows[0].label == "t0:A1");
        CHECK(r.rows[7].label == "t7:C3");
        // The crisis baseline runs an 8% primary deficit; A1's 5% cut still
        // leaves 3% of GDP to issue, the A1 configuration of the static table.
        CHECK(cell(r, "t0:A1", "b_hat") == doctest::Approx(0.03).epsilon(1e-10));
        CHECK(cell(r, "t0:A1", "y_hat") == doctest::Approx(-0.036).epsilon(1e-8));
        CHECK(cell(r, "t0:A1", "at_zlb") == 0.0);
    }

    SUBCASE("stochastic sentiment is seeded and disclosed") {
        const std::string text = R"({"policy": {"sigma_omega": 0.3}, "seed": 11})";
        const Report a = run_command("path", parse_config(text));
        const Report b = run_command("path", parse_config(text));
        bool noted = false;
        for (const std::string& n : a.notes) noted = noted || mentions(n, "seed 11");
        CHECK(noted);
        for (std::size_t i = 0; i < a.rows.size(); ++i)
            CHECK(a.rows[i].values == b.rows[i].values);  // same seed, same path
        const Report c = run_command("path", parse_config(
                                                 R"({"policy": {"sigma_omega": 0.3}, "seed": 12})"));
        bool differs = false;
        for (std::size_t i = 0; i < a.rows.size(); ++i)
            differs = differs || a.rows[i].values != c.rows[i].values;
        CHECK(differs);
    }
}

TEST_CASE("unknown commands are config errors") {
    CHECK_THROWS_AS((void)run_command("tabel1", parse_config("{}")), ConfigError);
}

TEST_CASE("report rendering") {
    const Report r = run_command("table1", parse_config("{}"));

    SUBCASE("csv carries a header line and one line per scenario") {
        const std::string csv = emit_report(r, "csv");
        CHECK(mentions(csv, "Scenario,g_c_hat,g_i_hat,q_hat,b_hat,"));
        CHECK(mentions(csv, "# command: table1"));
        // comment lines + header + 8 rows
        CHECK(count_lines(csv) == static_cast<int>(r.notes.size()) + 1 + 1 + 8);
        CHECK(mentions(csv, "\nA1,-0.05,0,0.1,0.03,"));
        CHECK(mentions(csv, "-0.036"));  // six-significant-digit rendering
    }

    SUBCASE("markdown uses the published column headings") {
        const std::string md = emit_report(r, "markdown");
        CHECK(mentions(md, "| Scenario |"));
        CHECK(mentions(md, "Ĝ^C"));
        CHECK(mentions(md, "Ĝ^I"));
        CHECK(mentions(md, "Ŷ"));
        CHECK(mentions(md, "| A1 |"));
    }

    SUBCASE("json round-trips values at full precision in stable order") {
        const std::string text = emit_report(r, "json");
        const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(text);
        CHECK(doc.at("command") == "table1");
        CHECK(doc.at("columns").at(0) == "Scenario");
        REQUIRE(doc.at("rows").size() == 8);
        CHECK(doc.at("rows").at(0).at("label") == "A1");
        const double y = doc.at("rows").at(0).at("values").at("y_hat").get<double>();
        CHECK(y == cell(r, "A1", "y_hat"));  // exact, not rounded
        CHECK(emit_report(r, "json") == text);  // byte-stable re-render
    }

    SUBCASE("csv and json agree to six significant digits") {
        const std::string csv = emit_report(r, "csv");
        const nlohmann::ordered_json doc = nlohmann::ordered_json::parse(emit_report(r, "json"));
        std::istringstream lines(csv);
        std::string line;
        std::size_t row_idx = 0;
        while (std::getline(lines, line)) {
            if (line.empty() || line[0] == '#' || line.rfind("Scenario", 0) == 0) continue;
            const auto comma = line.find(',');
            const std::string label = line.substr(0, comma);
            CHECK(doc.at("rows").at(row_idx).at("label") == label);
            // Compare the final column (y_hat) after re-rendering to 6 digits.
            const double y = doc.at("rows").at(row_idx).at("values").at("y_hat").get<double>();
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%.6g", y);
            CHECK(line.substr(line.rfind(',') + 1) == buf);
            ++row_idx;
        }
        CHECK(row_idx == 8);
    }

    SUBCASE("unsupported formats are rejected") {
        CHECK_THROWS_AS((void)emit_report(r, "yaml"), ConfigError);
    }
}
