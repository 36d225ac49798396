#include <cstdio>
#include <fstream>

#include <catch2/catch.hpp>

#include "dirac2q/gates.hpp"
#include "dirac2q/io.hpp"
#include "test_helpers.hpp"

using namespace dirac2q;

TEST_CASE("matrix json round-trip", "[io]") {
    std::mt19937 rng(401);
    for (int n = 0; n < 10; ++n) {
        const Mat4 m = testutil::random_matrix<4>(rng);
        const json j = matrix_to_json(m);
        const Mat4 back = matrix_from_json<4>(json::parse(j.dump()));
        REQUIRE(max_abs_diff(back, m) == 0.0);  // lossless through text
    }

    const Mat2 m2 = testutil::random_matrix<2>(rng);
    REQUIRE(max_abs_diff(matrix_from_json<2>(matrix_to_json(m2)), m2) == 0.0);
}

TEST_CASE("matrix json rejects malformed input", "[io]") {
    REQUIRE_THROWS_AS(matrix_from_json<4>(json::parse("{}")), ParseError);
    REQUIRE_THROWS_AS(matrix_from_json<4>(json::parse(R"({"rows": []})")), ParseError);
    REQUIRE_THROWS_AS(matrix_from_json<4>(json::parse(R"({"rows": [[1,2,3,4]]})")), ParseError);

    json j = matrix_to_json(Mat4::identity());
    j["rows"][0][0] = json::array({"x", 0.0});
    REQUIRE_THROWS_AS(matrix_from_json<4>(j), ParseError);

    json short_row = matrix_to_json(Mat4::identity());
    short_row["rows"][2].erase(3);
    REQUIRE_THROWS_AS(matrix_from_json<4>(short_row), ParseError);
}

TEST_CASE("matrix files", "[io]") {
    const std::string path = "test_io_matrix.json";
    {
        std::ofstream out(path);
        out << matrix_to_json(gate4(GateLabel::Cnot)).dump();
    }
    REQUIRE(max_abs_diff(load_matrix4(path), gate4(GateLabel::Cnot)) == 0.0);
    std::remove(path.c_str());

    REQUIRE_THROWS_AS(load_matrix4("does_not_exist.json"), FileNotFoundError);

    {
        std::ofstream out(path);
        out << "not json at all {";
    }
    REQUIRE_THROWS_AS(load_matrix4(path), ParseError);
    std::remove(path.c_str());
}

TEST_CASE("coefficient json uses the exact label names", "[io]") {
    const auto c = gate_dirac_form(GateLabel::Swap);
    const json j = coeffs_to_json(c);
    REQUIRE(j.size() == 16);
    REQUIRE(j.contains("UNIT"));
    REQUIRE(j.contains("GAMMA_1"));
    REQUIRE(j.contains("IG4G5"));
    REQUIRE(j.contains("GAMMA_5"));
    REQUIRE(j["GAMMA_2"][0].get<double>() == 0.5);
    REQUIRE(j["GAMMA_2"][1].get<double>() == 0.0);

    const DiracCoefficients back = coeffs_from_json(j);
    for (DiracLabel label : kAllDiracLabels) {
        REQUIRE(back[label] == c[label]);
    }
}

TEST_CASE("density params json round-trip", "[io]") {
    DensityParams p;
    p.bloch_a = {0.1, -0.2, 0.3};
    p.bloch_b = {0.0, 0.5, 0.0};
    p.corr[0][2] = -0.75;
    p.corr[2][2] = 0.25;

    const json j = params_to_json(p);
    REQUIRE(j["sA"].size() == 3);
    REQUIRE(j["C"].size() == 3);

    const DensityParams back = params_from_json(json::parse(j.dump()));
    REQUIRE(back.bloch_a.s2 == p.bloch_a.s2);
    REQUIRE(back.corr == p.corr);

    REQUIRE_THROWS_AS(params_from_json(json::parse(R"({"sA": [0,0]})")), ParseError);
}

TEST_CASE("table json has one record per action", "[io]") {
    const json records = table_to_json(derive_symmetry_table());
    REQUIRE(records.size() == 64 + 28);
    for (const auto& record : records) {
        REQUIRE(record.contains("operator"));
        REQUIRE(record.contains("source"));
        REQUIRE(record.contains("target"));
        REQUIRE(record["target"] != "MIXES");
        const cplx phase = complex_from_json(record["phase"]);
        REQUIRE(std::abs(phase) == Approx(1.0).margin(1e-12));
    }
    REQUIRE(records[0]["operator"] == "UNIT");
    REQUIRE(records[64]["operator"] == "T");
}

TEST_CASE("text formatting", "[io]") {
    REQUIRE(format_real(0.5) == "0.5");
    REQUIRE(format_real(1.0 / 3.0) == "0.333333333333");
    REQUIRE(format_complex(cplx(0.0, -1.0)) == "-1i");
    REQUIRE(format_complex(cplx(2.0, 0.25)) == "2+0.25i");
    REQUIRE(format_phase(cplx(1.0, 0.0)) == "+");
    REQUIRE(format_phase(cplx(0.0, -1.0)) == "-i");
    REQUIRE(format_phase(cplx(0.5, 0.5)) == "(0.5+0.5i)");
}
