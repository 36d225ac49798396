// dirac2q command-line tool: identity verification, basis decomposition,
// density-matrix analysis, action tables, gates and even/odd classification.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dirac2q/dirac2q.hpp"

namespace {

using dirac2q::json;

enum class Format { Text, Json };

struct CommonOpts {
    double tol = dirac2q::kDefaultEps;
    bool tol_set = false;
    std::string format = "text";

    Format fmt() const { return format == "json" ? Format::Json : Format::Text; }
    dirac2q::Tolerance tolerance() const { return dirac2q::Tolerance(tol); }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--tol", opts.tol, "comparison tolerance")
        ->check(CLI::PositiveNumber)
        ->each([&opts](const std::string&) { opts.tol_set = true; });
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
}

json report_to_json(const std::vector<dirac2q::VerifyCheck>& checks) {
    json arr = json::array();
    for (const auto& c : checks) {
        arr.push_back({{"name", c.name},
                       {"status", c.passed ? "pass" : "fail"},
                       {"detail", c.detail},
                       {"max_error", c.max_error}});
    }
    return json{{"checks", std::move(arr)}};
}

int cmd_verify(const CommonOpts& opts, const std::string& corrupt_label) {
    dirac2q::VerifyOptions vopts;
    if (opts.tol_set) {
        vopts.tolerance_override = opts.tol;
    }
    if (!corrupt_label.empty()) {
        const auto label = dirac2q::parse_dirac_label(corrupt_label);
        if (!label) {
            std::cerr << "unknown basis label: " << corrupt_label << "\n";
            return 2;
        }
        vopts.corrupt = *label;
    }

    const auto checks = dirac2q::run_verification(vopts);
    const bool ok = dirac2q::all_passed(checks);

    if (opts.fmt() == Format::Json) {
        std::cout << report_to_json(checks).dump(2) << "\n";
    } else {
        int failed = 0;
        for (const auto& c : checks) {
            std::printf("%-4s %-36s max_err=%-12s %s\n", c.passed ? "PASS" : "FAIL",
                        c.name.c_str(), dirac2q::format_real(c.max_error).c_str(),
                        c.detail.c_str());
            failed += c.passed ? 0 : 1;
        }
        std::printf("%zu checks, %d failed\n", checks.size(), failed);
    }
    return ok ? 0 : 1;
}

void print_coeff_line(const std::string& label, const dirac2q::cplx& value, double tol) {
    if (std::abs(value) <= tol) {
        return;
    }
    std::printf("  %-28s %s\n", label.c_str(), dirac2q::format_complex(value).c_str());
}

int cmd_decompose(const CommonOpts& opts, const std::string& path, const std::string& basis) {
    const dirac2q::Mat4 m = dirac2q::load_matrix4(path);
    const double tol = opts.tolerance().eps;

    json jcoeffs = json::object();
    dirac2q::Mat4 rebuilt;
    std::vector<std::pair<std::string, dirac2q::cplx>> entries;

    if (basis == "dirac") {
        const auto c = dirac2q::decompose(m);
        rebuilt = dirac2q::reconstruct(c);
        for (auto label : dirac2q::kAllDiracLabels) {
            entries.emplace_back(std::string(dirac2q::dirac_label_name(label)), c[label]);
        }
        jcoeffs = dirac2q::coeffs_to_json(c);
    } else if (basis == "pauli") {
        static constexpr const char* names = "IXYZ";
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                const auto element = dirac2q::kron(dirac2q::pauli(i), dirac2q::pauli(j));
                const dirac2q::cplx c = (element * m).trace() * 0.25;
                const std::string label = std::string{names[i]} + std::string{names[j]};
                entries.emplace_back(label, c);
                jcoeffs[label] = dirac2q::complex_to_json(c);
                rebuilt += element * c;
            }
        }
    } else {  // bell
        for (auto a : dirac2q::kAllBellLabels) {
            for (auto b : dirac2q::kAllBellLabels) {
                const dirac2q::cplx c =
                    inner(dirac2q::bell_state(a), m * dirac2q::bell_state(b));
                const std::string label = "|" + std::string(dirac2q::bell_label_name(a)) +
                                          "><" + std::string(dirac2q::bell_label_name(b)) + "|";
                entries.emplace_back(label, c);
                jcoeffs[label] = dirac2q::complex_to_json(c);
                rebuilt += outer(dirac2q::bell_state(a), dirac2q::bell_state(b)) * c;
            }
        }
    }

    const double err = dirac2q::max_abs_diff(rebuilt, m);
    if (opts.fmt() == Format::Json) {
        std::cout << json{{"basis", basis},
                          {"coefficients", jcoeffs},
                          {"reconstruction_error", err}}
                         .dump(2)
                  << "\n";
    } else {
        std::printf("%s-basis coefficients of %s (entries above %s):\n", basis.c_str(),
                    path.c_str(), dirac2q::format_real(tol).c_str());
        for (const auto& [label, value] : entries) {
            print_coeff_line(label, value, tol);
        }
        std::printf("reconstruction max error: %s\n", dirac2q::format_real(err).c_str());
    }
    return 0;
}

int cmd_density(const CommonOpts& opts, const dirac2q::DensityParams& params) {
    const auto density = dirac2q::density_from_params(params, false);
    const auto eigenvalues = dirac2q::hermitian_eigenvalues(density.matrix);
    const bool psd = eigenvalues[0] >= -dirac2q::kPsdSlack;
    const auto residual = dirac2q::correlation_residual(params);
    const auto coeffs = dirac2q::density_dirac_coeffs(params);
    const auto [purity_a, purity_b] = dirac2q::marginal_mixedness(density.matrix);
    const bool signature = dirac2q::entanglement_signature(params, opts.tolerance());
    const dirac2q::Mat2 rho_a = dirac2q::partial_trace(density.matrix, dirac2q::Qubit::B);
    const dirac2q::Mat2 rho_b = dirac2q::partial_trace(density.matrix, dirac2q::Qubit::A);

    if (opts.fmt() == Format::Json) {
        json j{{"params", dirac2q::params_to_json(params)},
               {"matrix", dirac2q::matrix_to_json(density.matrix)},
               {"positive_semidefinite", psd},
               {"eigenvalues", eigenvalues},
               {"purity", dirac2q::purity(density.matrix)},
               {"marginal_A", dirac2q::matrix_to_json(rho_a)},
               {"marginal_B", dirac2q::matrix_to_json(rho_b)},
               {"marginal_purities", {purity_a, purity_b}},
               {"correlation_residual", residual},
               {"dirac_coefficients", dirac2q::coeffs_to_json(coeffs)},
               {"entanglement_signature", signature}};
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::printf("density matrix:\n%s", dirac2q::format_matrix(density.matrix).c_str());
    if (psd) {
        std::printf("positive semi-definite: yes; eigenvalues:");
    } else {
        std::printf("WARNING: not positive semi-definite; eigenvalues:");
    }
    for (double v : eigenvalues) {
        std::printf(" %s", dirac2q::format_real(v).c_str());
    }
    std::printf("\npurity: %s\n", dirac2q::format_real(dirac2q::purity(density.matrix)).c_str());
    std::printf("marginal A:\n%s", dirac2q::format_matrix(rho_a).c_str());
    std::printf("marginal B:\n%s", dirac2q::format_matrix(rho_b).c_str());
    std::printf("marginal purities: %s %s\n", dirac2q::format_real(purity_a).c_str(),
                dirac2q::format_real(purity_b).c_str());
    std::printf("correlation residual:\n");
    for (const auto& row : residual) {
        std::printf("  [ %s  %s  %s ]\n", dirac2q::format_real(row[0]).c_str(),
                    dirac2q::format_real(row[1]).c_str(), dirac2q::format_real(row[2]).c_str());
    }
    std::printf("dirac coefficients (entries above tolerance):\n");
    for (auto label : dirac2q::kAllDiracLabels) {
        print_coeff_line(std::string(dirac2q::dirac_label_name(label)), coeffs[label],
                         opts.tolerance().eps);
    }
    std::printf("entanglement signature (diagonal correlations only): %s\n",
                signature ? "true" : "false");
    return 0;
}

int cmd_table(const CommonOpts& opts) {
    const auto table = dirac2q::derive_symmetry_table(opts.tolerance());
    if (opts.fmt() == Format::Json) {
        std::cout << dirac2q::table_to_json(table).dump(2) << "\n";
        return 0;
    }
    auto print_rows = [&](const std::vector<dirac2q::ActionTableRow>& rows) {
        for (const auto& row : rows) {
            std::printf("%-8s:", row.op.c_str());
            for (auto b : dirac2q::kAllBellLabels) {
                const auto& action = row.actions[static_cast<std::size_t>(b)];
                std::printf(" %s -> %s%s |", std::string(dirac2q::bell_label_name(b)).c_str(),
                            dirac2q::format_phase(action.phase, opts.tolerance()).c_str(),
                            action.mixes()
                                ? "MIXES"
                                : std::string(dirac2q::bell_label_name(*action.target)).c_str());
            }
            std::printf("\n");
        }
    };
    std::printf("action of the sixteen basis matrices on the Bell states:\n");
    print_rows(table.dirac_rows);
    std::printf("action of the symmetry operators:\n");
    print_rows(table.symmetry_rows);
    return 0;
}

int cmd_gate(const CommonOpts& opts, const std::string& name) {
    const auto label = dirac2q::parse_gate_label(name);
    if (!label) {
        std::cerr << "unknown gate: " << name << " (expected NOT1, HADAMARD1, CNOT, NOT2, SWAP)\n";
        return 2;
    }

    json j{{"gate", name}};
    std::string matrix_text;
    if (dirac2q::is_two_qubit(*label)) {
        const auto m = dirac2q::gate4(*label);
        matrix_text = dirac2q::format_matrix(m);
        j["matrix"] = dirac2q::matrix_to_json(m);
        j["dirac_coefficients"] = dirac2q::coeffs_to_json(dirac2q::gate_dirac_form(*label));
    } else {
        const auto m = dirac2q::gate2(*label);
        matrix_text = dirac2q::format_matrix(m);
        j["matrix"] = dirac2q::matrix_to_json(m);
    }

    if (*label == dirac2q::GateLabel::Swap) {
        const auto sum = dirac2q::swap_bell_decomposition();
        json terms = json::array();
        for (std::size_t i = 0; i < 4; ++i) {
            terms.push_back({{"projector", std::string(dirac2q::bell_label_name(
                                               dirac2q::kAllBellLabels[i]))},
                             {"sign", sum.signs[i]}});
        }
        j["bell_projector_sum"] = std::move(terms);
    }

    if (opts.fmt() == Format::Json) {
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    std::printf("%s:\n%s", name.c_str(), matrix_text.c_str());
    if (dirac2q::is_two_qubit(*label)) {
        std::printf("dirac coefficients:\n");
        const auto coeffs = dirac2q::gate_dirac_form(*label);
        for (auto l : dirac2q::kAllDiracLabels) {
            print_coeff_line(std::string(dirac2q::dirac_label_name(l)), coeffs[l],
                             opts.tolerance().eps);
        }
    }
    if (*label == dirac2q::GateLabel::Swap) {
        std::printf("bell projector sum: +PSI_PLUS -PSI_MINUS +PHI_PLUS +PHI_MINUS\n");
    }
    if (*label == dirac2q::GateLabel::Not2) {
        std::printf("equals i*P*T (parity composed with time reversal, phase i)\n");
    }
    return 0;
}

int cmd_classify(const CommonOpts& opts, const std::string& path) {
    const dirac2q::Mat4 m = dirac2q::load_matrix4(path);
    const auto verdict = dirac2q::classify_even_odd(m, opts.tolerance());
    if (opts.fmt() == Format::Json) {
        std::cout << json{{"kind", std::string(dirac2q::even_odd_kind_name(verdict.kind))},
                          {"c_invariant", verdict.c_invariant},
                          {"p_invariant", verdict.p_invariant},
                          {"separable_marginal", verdict.separable_marginal}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    std::printf("kind: %s\n", std::string(dirac2q::even_odd_kind_name(verdict.kind)).c_str());
    std::printf("invariant under charge conjugation: %s\n",
                verdict.c_invariant ? "yes" : "no");
    std::printf("invariant under parity: %s\n", verdict.p_invariant ? "yes" : "no");
    std::printf("marginals pure (separable): %s\n", verdict.separable_marginal ? "yes" : "no");
    return 0;
}

dirac2q::DensityParams params_from_options(const std::vector<double>& sa,
                                           const std::vector<double>& sb,
                                           const std::vector<double>& c) {
    auto triple = [](const std::vector<double>& v, const char* what) {
        if (v.empty()) {
            return dirac2q::BlochVector{};
        }
        if (v.size() != 3) {
            throw CLI::ValidationError(std::string(what) + " needs exactly 3 components");
        }
        return dirac2q::BlochVector{v[0], v[1], v[2]};
    };
    dirac2q::DensityParams p;
    p.bloch_a = triple(sa, "--sa");
    p.bloch_b = triple(sb, "--sb");
    if (!c.empty()) {
        if (c.size() != 9) {
            throw CLI::ValidationError("--c needs exactly 9 row-major values");
        }
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                p.corr[i][j] = c[3 * i + j];
            }
        }
    }
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-qubit operators, states and gates in the 16-element Dirac basis"};
    app.require_subcommand(1);

    CommonOpts verify_opts;
    std::string corrupt_label;
    auto* verify = app.add_subcommand("verify", "run the full identity-check suite");
    add_common(verify, verify_opts);
    verify->add_option("--corrupt", corrupt_label,
                       "test hook: perturb one basis matrix (e.g. GAMMA_2)");

    CommonOpts decompose_opts;
    std::string decompose_path;
    std::string decompose_basis = "dirac";
    auto* decompose = app.add_subcommand("decompose", "expand a matrix file in a basis");
    add_common(decompose, decompose_opts);
    decompose->add_option("input", decompose_path, "matrix JSON file")->required();
    decompose->add_option("--basis", decompose_basis, "expansion basis")
        ->check(CLI::IsMember({"dirac", "pauli", "bell"}));

    CommonOpts density_opts;
    std::vector<double> sa, sb, cgrid;
    auto* density = app.add_subcommand("density", "analyze a parameterized density matrix");
    add_common(density, density_opts);
    density->add_option("--sa", sa, "Bloch vector of qubit A, e.g. 0,0,1")->delimiter(',');
    density->add_option("--sb", sb, "Bloch vector of qubit B")->delimiter(',');
    density->add_option("--c", cgrid, "row-major 3x3 correlation grid")->delimiter(',');

    CommonOpts table_opts;
    auto* table = app.add_subcommand("table", "print the derived Bell-state action table");
    add_common(table, table_opts);

    CommonOpts gate_opts;
    std::string gate_name;
    auto* gate = app.add_subcommand("gate", "print a logic gate and its basis form");
    add_common(gate, gate_opts);
    gate->add_option("label", gate_name, "NOT1, HADAMARD1, CNOT, NOT2 or SWAP")->required();

    CommonOpts classify_opts;
    std::string classify_path;
    auto* classify = app.add_subcommand("classify", "even/odd classification of a matrix file");
    add_common(classify, classify_opts);
    classify->add_option("input", classify_path, "matrix JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) {
            return cmd_verify(verify_opts, corrupt_label);
        }
        if (decompose->parsed()) {
            return cmd_decompose(decompose_opts, decompose_path, decompose_basis);
        }
        if (density->parsed()) {
            return cmd_density(density_opts, params_from_options(sa, sb, cgrid));
        }
        if (table->parsed()) {
            return cmd_table(table_opts);
        }
        if (gate->parsed()) {
            return cmd_gate(gate_opts, gate_name);
        }
        if (classify->parsed()) {
            return cmd_classify(classify_opts, classify_path);
        }
    } catch (const dirac2q::FileNotFoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dirac2q::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
