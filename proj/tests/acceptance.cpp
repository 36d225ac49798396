// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path is passed as argv[1] for the contract checks.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "dirac2q/dirac2q.hpp"

using namespace dirac2q;

namespace {

const cplx kI(0.0, 1.0);

struct Outcome {
    bool ok = true;
    double max_error = 0.0;
    std::string note;

    void track(double err) { max_error = std::max(max_error, err); }
    void expect(double err, double bound) {
        track(err);
        ok = ok && err <= bound;
    }
    void require(bool condition, const std::string& why) {
        if (!condition) {
            ok = false;
            if (note.empty()) {
                note = why;
            }
        }
    }
};

double uniform(std::mt19937& rng) {
    return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
}

Mat4 random_matrix4(std::mt19937& rng) {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            m(i, j) = cplx(uniform(rng), uniform(rng));
        }
    }
    return m;
}

DensityParams random_params(std::mt19937& rng) {
    const Mat4 g = random_matrix4(rng);
    Mat4 d = g * g.adjoint();
    d *= cplx(1.0) / d.trace();
    return params_of(d);
}

BlochVector random_unit_bloch(std::mt19937& rng) {
    for (;;) {
        BlochVector s{uniform(rng), uniform(rng), uniform(rng)};
        const double n = s.norm();
        if (n > 0.1 && n <= 1.0) {
            return {s.s1 / n, s.s2 / n, s.s3 / n};
        }
    }
}

Outcome criterion_clifford() {
    Outcome out;
    const CliffordReport report = verify_clifford(Tolerance(1e-12));
    out.expect(report.max_error, 1e-12);
    out.require(report.ok(), "clifford violations reported");

    for (DiracLabel label : kAllDiracLabels) {
        const Mat4& m = dirac_matrix(label);
        out.expect(max_abs_diff(m, m.adjoint()), 1e-12);
        out.expect(max_abs_diff(m * m, Mat4::identity()), 1e-12);
        const cplx expected_trace = (label == DiracLabel::Unit) ? cplx(4.0) : cplx(0.0);
        out.expect(std::abs(m.trace() - expected_trace), 1e-12);
    }
    for (DiracLabel a : kAllDiracLabels) {
        for (DiracLabel b : kAllDiracLabels) {
            const cplx expected = (a == b) ? cplx(4.0) : cplx(0.0);
            out.expect(std::abs((dirac_matrix(a) * dirac_matrix(b)).trace() - expected), 1e-10);
        }
    }
    return out;
}

Outcome criterion_table() {
    Outcome out;
    const SymmetryTable table = derive_symmetry_table();
    out.require(table.dirac_rows.size() == 16 && table.symmetry_rows.size() == 7,
                "unexpected table shape");
    for (const auto& rows : {table.dirac_rows, table.symmetry_rows}) {
        for (const auto& row : rows) {
            for (const auto& action : row.actions) {
                out.require(!action.mixes(), row.op + " mixes Bell states");
                if (!action.mixes()) {
                    out.expect(std::abs(std::abs(action.phase) - 1.0), 1e-10);
                }
            }
        }
    }

    const Mat4 c_op = symmetry_operator(SymmetryLabel::C);
    for (BellLabel b : kAllBellLabels) {
        const PhaseAction action = apply_to_bell(c_op, b);
        out.require(!action.mixes() && *action.target == b, "C relabels a Bell state");
    }
    for (SymmetryLabel label : {SymmetryLabel::T, SymmetryLabel::P, SymmetryLabel::TC,
                                SymmetryLabel::PT, SymmetryLabel::TCP}) {
        const Mat4 op = symmetry_operator(label);
        bool moved = false;
        for (BellLabel b : kAllBellLabels) {
            const PhaseAction action = apply_to_bell(op, b);
            moved = moved || (!action.mixes() && *action.target != b);
        }
        out.require(moved, std::string(symmetry_label_name(label)) + " never relabels");
    }
    return out;
}

Outcome criterion_gates() {
    Outcome out;
    for (GateLabel label : {GateLabel::Cnot, GateLabel::Not2, GateLabel::Swap}) {
        out.expect(max_abs_diff(reconstruct(gate_dirac_form(label)), gate4(label)), 1e-10);
    }
    const Mat4 ipt =
        symmetry_operator(SymmetryLabel::P) * symmetry_operator(SymmetryLabel::T) * kI;
    out.expect(max_abs_diff(ipt, gate4(GateLabel::Not2)), 1e-10);
    out.expect(swap_bell_decomposition().max_error, 1e-10);
    return out;
}

Outcome criterion_density_algebra() {
    Outcome out;
    std::mt19937 rng(7001);
    for (int n = 0; n < 100; ++n) {
        const DensityParams p = random_params(rng);
        const Mat4 d = density_from_params(p, false).matrix;

        out.expect(max_abs_diff(partial_trace(d, Qubit::B), one_qubit_density(p.bloch_a)), 1e-9);
        out.expect(max_abs_diff(partial_trace(d, Qubit::A), one_qubit_density(p.bloch_b)), 1e-9);

        const Grid3 residual = correlation_residual(p);
        Mat4 rebuilt = product_density(p.bloch_a, p.bloch_b);
        for (std::size_t i = 1; i <= 3; ++i) {
            for (std::size_t j = 1; j <= 3; ++j) {
                rebuilt += kron(pauli(i), pauli(j)) * cplx(0.25 * residual[i - 1][j - 1]);
            }
        }
        out.expect(max_abs_diff(rebuilt, d), 1e-9);

        const DiracCoefficients direct = density_dirac_coeffs(p);
        const DiracCoefficients projected = decompose(d);
        for (DiracLabel label : kAllDiracLabels) {
            out.expect(std::abs(direct[label] - projected[label]), 1e-9);
        }
    }
    for (int n = 0; n < 20; ++n) {
        const BlochVector s = random_unit_bloch(rng);
        for (Qubit q : {Qubit::A, Qubit::B}) {
            const Mat4 pi = embed(s, q);
            out.expect(max_abs_diff(pi * pi, pi * cplx(0.5)), 1e-10);
        }
    }
    return out;
}

Outcome criterion_bell_projectors() {
    Outcome out;
    static constexpr std::array<std::array<double, 3>, 4> patterns = {{
        {0.25, 0.25, -0.25},
        {-0.25, -0.25, -0.25},
        {0.25, -0.25, 0.25},
        {-0.25, 0.25, 0.25},
    }};
    for (std::size_t i = 0; i < 4; ++i) {
        const Mat4 proj = bell_projector(kAllBellLabels[i]).matrix;
        out.expect(max_abs_diff(proj * proj, proj), 1e-10);
        out.expect(std::abs(proj.trace() - cplx(1.0)), 1e-10);
        const auto [pa, pb] = marginal_mixedness(proj);
        out.expect(std::abs(pa - 0.5), 1e-10);
        out.expect(std::abs(pb - 0.5), 1e-10);

        const DiracCoefficients c = decompose(proj);
        out.expect(std::abs(c[DiracLabel::Unit] - cplx(0.25)), 1e-10);
        out.expect(std::abs(c[DiracLabel::IG1G4] - cplx(patterns[i][0])), 1e-10);
        out.expect(std::abs(c[DiracLabel::Gamma2] - cplx(patterns[i][1])), 1e-10);
        out.expect(std::abs(c[DiracLabel::IG3G5] - cplx(patterns[i][2])), 1e-10);
    }
    return out;
}

Outcome criterion_outer_forms() {
    Outcome out;
    for (DiracLabel label :
         {DiracLabel::Gamma1, DiracLabel::Gamma2, DiracLabel::Gamma3, DiracLabel::Gamma4}) {
        out.expect(max_abs_diff(gamma_from_bell_outer(label), dirac_matrix(label)), 1e-10);
    }
    out.expect(max_abs_diff(gamma2_spin_form(), dirac_matrix(DiracLabel::Gamma2)), 1e-10);

    static constexpr std::array<double, 4> eigenphases = {1.0, -1.0, -1.0, 1.0};
    for (std::size_t i = 0; i < 4; ++i) {
        const Vec4& b = bell_state(kAllBellLabels[i]);
        out.expect(max_abs_diff(gamma_matrix(2) * b, b * cplx(eigenphases[i])), 1e-10);
    }
    return out;
}

Outcome criterion_even_odd() {
    Outcome out;
    out.expect(max_abs_diff(even_odd_template(EvenOdd::Odd, ParitySign::Plus),
                            bell_projector(BellLabel::PsiPlus).matrix),
               1e-10);
    out.expect(max_abs_diff(even_odd_template(EvenOdd::Odd, ParitySign::Minus),
                            bell_projector(BellLabel::PsiMinus).matrix),
               1e-10);

    const Mat4 c_op = symmetry_operator(SymmetryLabel::C);
    const Mat4 p_op = symmetry_operator(SymmetryLabel::P);
    for (ParitySign sign : {ParitySign::Plus, ParitySign::Minus}) {
        const Mat4 odd = even_odd_template(EvenOdd::Odd, sign);
        out.expect(max_abs_diff(c_op * odd * c_op.adjoint(), odd), 1e-10);
        const auto [oa, ob] = marginal_mixedness(odd);
        out.expect(std::abs(oa - 0.5), 1e-10);
        out.expect(std::abs(ob - 0.5), 1e-10);

        const Mat4 even = even_odd_template(EvenOdd::Even, sign);
        out.expect(max_abs_diff(p_op * even * p_op.adjoint(), even), 1e-10);
        const auto [ea, eb] = marginal_mixedness(even);
        out.expect(std::abs(ea - 1.0), 1e-10);
        out.expect(std::abs(eb - 1.0), 1e-10);
    }

    for (EvenUnitaryLabel label : kAllEvenUnitaryLabels) {
        const Mat4 u = even_function_unitary(label);
        out.expect(max_abs_diff(p_op * u * p_op.adjoint(), u), 1e-10);
        const auto factors = kron_factor(u);
        out.require(factors.has_value(),
                    std::string(even_unitary_name(label)) + " not factorable");
        if (factors) {
            out.expect(max_abs_diff(kron(factors->first, factors->second), u), 1e-10);
        }
    }
    return out;
}

Outcome criterion_round_trip() {
    Outcome out;
    std::mt19937 rng(7002);
    for (int n = 0; n < 1000; ++n) {
        const Mat4 m = random_matrix4(rng);
        out.expect(max_abs_diff(reconstruct(decompose(m)), m), 1e-9);
    }
    for (int n = 0; n < 100; ++n) {
        Mat4 h = random_matrix4(rng);
        h = (h + h.adjoint()) * cplx(0.5);
        const cplx shift = (cplx(1.0) - h.trace()) * cplx(0.25);
        for (std::size_t i = 0; i < 4; ++i) {
            h(i, i) += shift;
        }
        out.expect(max_abs_diff(density_from_params(params_of(h), false).matrix, h), 1e-9);
    }
    return out;
}

int run_cli(const std::string& cli, const std::string& args, const std::string& out_path) {
    const std::string command = "\"" + cli + "\" " + args + " > \"" + out_path + "\" 2>/dev/null";
    const int status = std::system(command.c_str());
    if (status == -1) {
        return -1;
    }
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion_cli(const std::string& cli) {
    Outcome out;
    if (cli.empty()) {
        out.require(false, "no CLI path supplied (pass it as argv[1])");
        return out;
    }
    namespace fs = std::filesystem;
    const fs::path out_path = fs::temp_directory_path() / "dirac2q_acceptance_cli.json";

    const int clean = run_cli(cli, "verify --format json", out_path.string());
    out.require(clean == 0, "verify exited nonzero on the canonical basis");

    for (DiracLabel label : kAllDiracLabels) {
        const std::string name(dirac_label_name(label));
        const int code =
            run_cli(cli, "verify --format json --corrupt " + name, out_path.string());
        out.require(code == 1, "corrupt " + name + " did not flip the exit code");

        std::ifstream in(out_path);
        json report;
        try {
            in >> report;
        } catch (...) {
            out.require(false, "corrupt " + name + " produced unparsable output");
            continue;
        }
        int failed = 0;
        for (const auto& check : report["checks"]) {
            if (check["status"] == "fail" && !check["name"].get<std::string>().empty()) {
                ++failed;
            }
        }
        out.require(failed > 0, "corrupt " + name + " reported no failing check name");
    }
    std::error_code ec;
    fs::remove(out_path, ec);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";

    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1-clifford-algebra", criterion_clifford},
        {"2-table-reproduction", criterion_table},
        {"3-gate-identities", criterion_gates},
        {"4-density-algebra", criterion_density_algebra},
        {"5-bell-projectors", criterion_bell_projectors},
        {"6-outer-product-forms", criterion_outer_forms},
        {"7-even-odd-suite", criterion_even_odd},
        {"8-round-trips", criterion_round_trip},
        {"9-cli-contract", [&cli] { return criterion_cli(cli); }},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        const Outcome outcome = criterion.run();
        std::printf("%-4s %-24s max_error=%.3e%s%s\n", outcome.ok ? "PASS" : "FAIL",
                    criterion.name, outcome.max_error, outcome.note.empty() ? "" : "  ",
                    outcome.note.c_str());
        failures += outcome.ok ? 0 : 1;
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
    return failures == 0 ? 0 : 1;
}
