// verify.hpp
// The full identity-check suite behind the CLI `verify` command. Every check
// has a stable dotted name, its own default threshold, and a deterministic
// result (randomized checks use fixed seeds). A corrupt hook perturbs one
// basis matrix so the reporting path can be exercised end to end.

#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dirac2q/bell.hpp"
#include "dirac2q/density.hpp"
#include "dirac2q/dirac_basis.hpp"
#include "dirac2q/gates.hpp"
#include "dirac2q/linalg.hpp"

namespace dirac2q {

struct VerifyCheck {
    std::string name;
    bool passed = false;
    double max_error = 0.0;
    double threshold = 0.0;
    std::string detail;
};

struct VerifyOptions {
    // When set, replaces every check's default threshold.
    std::optional<double> tolerance_override;
    // Test hook: perturbs one basis matrix before running the suite.
    std::optional<DiracLabel> corrupt;
};

inline bool all_passed(const std::vector<VerifyCheck>& checks) {
    return std::all_of(checks.begin(), checks.end(),
                       [](const VerifyCheck& c) { return c.passed; });
}

namespace verify_detail {

struct Outcome {
    double error = 0.0;
    std::string detail;
};

inline double uniform(std::mt19937& rng) {
    return std::uniform_real_distribution<double>(-1.0, 1.0)(rng);
}

inline cplx random_cplx(std::mt19937& rng) { return {uniform(rng), uniform(rng)}; }

inline Mat4 random_matrix4(std::mt19937& rng) {
    Mat4 m;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            m(i, j) = random_cplx(rng);
        }
    }
    return m;
}

inline Mat2 random_matrix2(std::mt19937& rng) {
    Mat2 m;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            m(i, j) = random_cplx(rng);
        }
    }
    return m;
}

inline Mat4 random_hermitian4(std::mt19937& rng) {
    const Mat4 m = random_matrix4(rng);
    return (m + m.adjoint()) * cplx(0.5);
}

inline Mat4 random_hermitian_unit_trace(std::mt19937& rng) {
    Mat4 m = random_hermitian4(rng);
    const cplx shift = (cplx(1.0) - m.trace()) * cplx(0.25);
    for (std::size_t i = 0; i < 4; ++i) {
        m(i, i) += shift;
    }
    return m;
}

inline BlochVector random_bloch_in_ball(std::mt19937& rng) {
    for (;;) {
        BlochVector s{uniform(rng), uniform(rng), uniform(rng)};
        if (s.norm() <= 1.0) {
            return s;
        }
    }
}

inline BlochVector random_unit_bloch(std::mt19937& rng) {
    for (;;) {
        BlochVector s{uniform(rng), uniform(rng), uniform(rng)};
        const double n = s.norm();
        if (n > 0.1 && n <= 1.0) {
            return BlochVector{s.s1 / n, s.s2 / n, s.s3 / n};
        }
    }
}

// Random genuine density matrix: G G^dag normalized to unit trace.
inline Mat4 random_density_matrix(std::mt19937& rng) {
    const Mat4 g = random_matrix4(rng);
    Mat4 d = g * g.adjoint();
    d *= cplx(1.0) / d.trace();
    return d;
}

inline DensityParams random_density_params(std::mt19937& rng) {
    return params_of(random_density_matrix(rng));
}

}  // namespace verify_detail

// Runs every check, in a fixed order, against a basis that is canonical
// unless the corrupt hook asked for a perturbed entry.
inline std::vector<VerifyCheck> run_verification(const VerifyOptions& options = {}) {
    using verify_detail::Outcome;

    DiracBasis basis = DiracBasis::make_canonical();
    if (options.corrupt) {
        basis[*options.corrupt](0, 0) += 0.01;
    }

    std::vector<VerifyCheck> checks;
    auto run = [&](const std::string& name, double default_threshold,
                   const std::function<Outcome()>& body) {
        VerifyCheck check;
        check.name = name;
        check.threshold = options.tolerance_override.value_or(default_threshold);
        const Outcome outcome = body();
        check.max_error = outcome.error;
        check.detail = outcome.detail;
        check.passed = outcome.error <= check.threshold;
        checks.push_back(std::move(check));
    };

    const Mat4 identity4 = Mat4::identity();

    // Symmetry operators rebuilt from the (possibly corrupted) basis.
    const cplx im(0.0, 1.0);
    const Mat4 op_t = basis[DiracLabel::Gamma5] * basis[DiracLabel::Gamma4];
    const Mat4 op_c = basis[DiracLabel::Gamma2] * (-im);
    const Mat4 op_p = basis[DiracLabel::Gamma4] * im;
    const std::array<Mat4, 7> symmetry_ops = {op_t,        op_c,        op_p, op_t * op_c,
                                              op_c * op_p, op_p * op_t, op_t * op_c * op_p};

    run("clifford.anticommutators", 1e-12, [&]() -> Outcome {
        const CliffordReport report = verify_clifford(basis, Tolerance(1e-12));
        std::string detail = "16 anticommutator pairs, gamma5 relations, gamma5 product";
        if (!report.ok()) {
            detail = "violated:";
            for (const auto& v : report.violations) {
                detail += " (" + std::to_string(v.mu) + "," + std::to_string(v.nu) + ")";
            }
        }
        return {report.max_error, detail};
    });

    run("basis.hermitian_square_traceless", 1e-12, [&]() -> Outcome {
        double err = 0.0;
        for (DiracLabel label : kAllDiracLabels) {
            const Mat4& m = basis[label];
            err = std::max(err, max_abs_diff(m, m.adjoint()));
            err = std::max(err, max_abs_diff(m * m, identity4));
            const cplx expected_trace = (label == DiracLabel::Unit) ? cplx(4.0) : cplx(0.0);
            err = std::max(err, std::abs(m.trace() - expected_trace));
        }
        return {err, "all 16 basis elements Hermitian, square to 1, traceless except UNIT"};
    });

    run("basis.orthogonality", 1e-10, [&]() -> Outcome {
        double err = 0.0;
        for (DiracLabel a : kAllDiracLabels) {
            for (DiracLabel b : kAllDiracLabels) {
                const cplx t = (basis[a] * basis[b]).trace();
                const cplx expected = (a == b) ? cplx(4.0) : cplx(0.0);
                err = std::max(err, std::abs(t - expected));
            }
        }
        return {err, "Tr(Gamma_A Gamma_B) = 4 delta_AB over all 256 pairs"};
    });

    run("basis.tensor_rank_counts", 0.0, [&]() -> Outcome {
        std::array<int, 5> counts{};
        for (DiracLabel label : kAllDiracLabels) {
            counts[static_cast<std::size_t>(rank_of(label))]++;
        }
        const bool ok = counts == std::array<int, 5>{1, 4, 6, 4, 1};
        return {ok ? 0.0 : 1.0, "rank classes partition 1/4/6/4/1"};
    });

    run("table.dirac_actions", 1e-9, [&]() -> Outcome {
        double err = 0.0;
        int mixed = 0;
        for (DiracLabel label : kAllDiracLabels) {
            for (BellLabel b : kAllBellLabels) {
                const PhaseAction action = apply_to_bell(basis[label], b);
                if (action.mixes()) {
                    ++mixed;
                    err = std::max(err, 1.0);
                } else {
                    err = std::max(err, std::abs(std::abs(action.phase) - 1.0));
                }
            }
        }
        return {err, mixed == 0 ? "64 actions, all single-component with unit phase"
                                : std::to_string(mixed) + " actions mix Bell states"};
    });

    run("table.symmetry_actions", 1e-9, [&]() -> Outcome {
        double err = 0.0;
        int mixed = 0;
        for (const Mat4& op : symmetry_ops) {
            for (BellLabel b : kAllBellLabels) {
                const PhaseAction action = apply_to_bell(op, b);
                if (action.mixes()) {
                    ++mixed;
                    err = std::max(err, 1.0);
                } else {
                    err = std::max(err, std::abs(std::abs(action.phase) - 1.0));
                }
            }
        }
        return {err, mixed == 0 ? "28 actions, all single-component with unit phase"
                                : std::to_string(mixed) + " actions mix Bell states"};
    });

    run("table.c_preserves_labels", 0.0, [&]() -> Outcome {
        for (BellLabel b : kAllBellLabels) {
            const PhaseAction action = apply_to_bell(op_c, b);
            if (action.mixes() || *action.target != b) {
                return {1.0, std::string("C moved ") + std::string(bell_label_name(b))};
            }
        }
        return {0.0, "C maps every Bell state to itself (up to phase)"};
    });

    run("table.symmetries_scramble", 0.0, [&]() -> Outcome {
        // Every symmetry except C relabels at least one Bell state.
        static constexpr std::array<std::size_t, 6> non_c = {0, 2, 3, 4, 5, 6};
        for (std::size_t idx : non_c) {
            bool moved = false;
            for (BellLabel b : kAllBellLabels) {
                const PhaseAction action = apply_to_bell(symmetry_ops[idx], b);
                if (!action.mixes() && *action.target != b) {
                    moved = true;
                }
            }
            if (!moved) {
                return {1.0, std::string(symmetry_label_name(kAllSymmetryLabels[idx])) +
                                 " preserves every Bell label"};
            }
        }
        return {0.0, "T, P, TC, CP, PT, TCP each relabel at least one Bell state"};
    });

    run("symmetry.products_and_unitarity", 1e-10, [&]() -> Outcome {
        double err = 0.0;
        err = std::max(err, max_abs_diff(symmetry_ops[4],
                                         basis[DiracLabel::Gamma2] * basis[DiracLabel::Gamma4]));
        err = std::max(err, max_abs_diff(symmetry_ops[5], basis[DiracLabel::Gamma5] * (-im)));
        err = std::max(err, max_abs_diff(symmetry_ops[6],
                                         basis[DiracLabel::Gamma2] * basis[DiracLabel::Gamma5]));
        err = std::max(err, max_abs_diff(symmetry_ops[3], basis[DiracLabel::Sigma2]));
        for (const Mat4& op : symmetry_ops) {
            err = std::max(err, max_abs_diff(op * op.adjoint(), identity4));
        }
        return {err, "product forms of CP, PT, TCP, TC and unitarity of all seven"};
    });

    run("bell.state_completeness", 1e-12, [&]() -> Outcome {
        double err = 0.0;
        Mat4 sum;
        for (BellLabel a : kAllBellLabels) {
            sum += outer(bell_state(a), bell_state(a));
            for (BellLabel b : kAllBellLabels) {
                const cplx overlap = inner(bell_state(a), bell_state(b));
                const cplx expected = (a == b) ? cplx(1.0) : cplx(0.0);
                err = std::max(err, std::abs(overlap - expected));
            }
        }
        err = std::max(err, max_abs_diff(sum, identity4));
        return {err, "orthonormality and completeness of the Bell basis"};
    });

    run("bell.spin_states", 1e-12, [&]() -> Outcome {
        double err = 0.0;
        for (SpinLabel a : kAllSpinLabels) {
            for (SpinLabel b : kAllSpinLabels) {
                const cplx overlap = inner(spin_state(a), spin_state(b));
                const cplx expected = (a == b) ? cplx(1.0) : cplx(0.0);
                err = std::max(err, std::abs(overlap - expected));
            }
        }
        err = std::max(err, max_abs_diff(spin_state(SpinLabel::Singlet),
                                         bell_state(BellLabel::PsiMinus)));
        err = std::max(err, max_abs_diff(spin_state(SpinLabel::TPlus), Vec4{1, 0, 0, 0}));
        err = std::max(err, max_abs_diff(spin_state(SpinLabel::TMinus), Vec4{0, 0, 0, 1}));
        return {err, "singlet-triplet basis orthonormal; t+/t- are the aligned product states"};
    });

    run("bell.gamma_outer_forms", 1e-10, [&]() -> Outcome {
        double err = 0.0;
        for (DiracLabel label : {DiracLabel::Gamma1, DiracLabel::Gamma2, DiracLabel::Gamma3,
                                 DiracLabel::Gamma4}) {
            err = std::max(err, max_abs_diff(gamma_from_bell_outer(label), basis[label]));
        }
        return {err, "gamma_1..gamma_4 from Bell outer products"};
    });

    run("bell.gamma2_spin_form", 1e-10, [&]() -> Outcome {
        return {max_abs_diff(gamma2_spin_form(), basis[DiracLabel::Gamma2]),
                "gamma_2 from singlet-triplet outer products"};
    });

    run("bell.gamma2_bell_eigenvalues", 1e-10, [&]() -> Outcome {
        static constexpr std::array<double, 4> expected = {1.0, -1.0, -1.0, 1.0};
        double err = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            const Vec4& b = bell_state(kAllBellLabels[i]);
            err = std::max(err,
                           max_abs_diff(basis[DiracLabel::Gamma2] * b, b * cplx(expected[i])));
        }
        return {err, "Bell states are gamma_2 eigenstates with phases +1,-1,-1,+1"};
    });

    run("bell.projector_algebra", 1e-10, [&]() -> Outcome {
        double err = 0.0;
        Mat4 sum;
        for (BellLabel a : kAllBellLabels) {
            const Mat4 pa = bell_projector(a).matrix;
            sum += pa;
            err = std::max(err, max_abs_diff(pa * pa, pa));
            err = std::max(err, std::abs(pa.trace() - cplx(1.0)));
            for (BellLabel b : kAllBellLabels) {
                const Mat4 pb = bell_projector(b).matrix;
                const cplx overlap = (pa * pb).trace();
                const cplx expected = (a == b) ? cplx(1.0) : cplx(0.0);
                err = std::max(err, std::abs(overlap - expected));
            }
        }
        err = std::max(err, max_abs_diff(sum, identity4));
        return {err, "projectors idempotent, unit trace, orthogonal, complete"};
    });

    run("bell.projector_marginals", 1e-10, [&]() -> Outcome {
        double err = 0.0;
        for (BellLabel b : kAllBellLabels) {
            const auto [pa, pb] = marginal_mixedness(bell_projector(b).matrix);
            err = std::max(err, std::abs(pa - 0.5));
            err = std::max(err, std::abs(pb - 0.5));
        }
        return {err, "both marginals of every Bell projector are maximally mixed"};
    });

    run("bell.projector_coeffs", 1e-10, [&]() -> Outcome {
        // Sign patterns on (IG1G4, GAMMA_2, IG3G5), plus UNIT = 1/4.
        static constexpr std::array<std::array<double, 3>, 4> signs = {{
            {0.25, 0.25, -0.25},   // Psi+
            {-0.25, -0.25, -0.25}, // Psi-
            {0.25, -0.25, 0.25},   // Phi+
            {-0.25, 0.25, 0.25},   // Phi-
        }};
        double err = 0.0;
        for (std::size_t i = 0; i < 4; ++i) {
            DiracCoefficients c = decompose(bell_projector(kAllBellLabels[i]).matrix, basis);
            err = std::max(err, std::abs(c[DiracLabel::Unit] - cplx(0.25)));
            err = std::max(err, std::abs(c[DiracLabel::IG1G4] - cplx(signs[i][0])));
            err = std::max(err, std::abs(c[DiracLabel::Gamma2] - cplx(signs[i][1])));
            err = std::max(err, std::abs(c[DiracLabel::IG3G5] - cplx(signs[i][2])));
            c[DiracLabel::Unit] = c[DiracLabel::IG1G4] = c[DiracLabel::Gamma2] =
                c[DiracLabel::IG3G5] = 0.0;
            for (DiracLabel rest : kAllDiracLabels) {
                err = std::max(err, std::abs(c[rest]));
            }
        }
        return {err, "projector coefficients carry the +/- quarter sign patterns"};
    });

    run("gate.cnot_dirac_form", 1e-10, [&]() -> Outcome {
        return {max_abs_diff(reconstruct(gate_dirac_form(GateLabel::Cnot), basis),
                             gate4(GateLabel::Cnot)),
                "CNOT equals its four-term basis combination"};
    });

    run("gate.not2_dirac_form", 1e-10, [&]() -> Outcome {
        double err = max_abs_diff(reconstruct(gate_dirac_form(GateLabel::Not2), basis),
                                  gate4(GateLabel::Not2));
        err = std::max(err, max_abs_diff(op_p * op_t * im, gate4(GateLabel::Not2)));
        return {err, "two-qubit NOT equals gamma_5 and i P T"};
    });

    run("gate.swap_dirac_form", 1e-10, [&]() -> Outcome {
        return {max_abs_diff(reconstruct(gate_dirac_form(GateLabel::Swap), basis),
                             gate4(GateLabel::Swap)),
                "SWAP equals its four-term basis combination"};
    });

    run("gate.swap_bell_sum", 1e-10, [&]() -> Outcome {
        return {swap_bell_decomposition().max_error,
                "SWAP = +Psi+ -Psi- +Phi+ +Phi- projector sum"};
    });

    run("gate.unitarity", 1e-12, [&]() -> Outcome {
        double err = 0.0;
        const Mat2 identity2 = Mat2::identity();
        for (GateLabel label : kAllGateLabels) {
            if (is_two_qubit(label)) {
                const Mat4 g = gate4(label);
                err = std::max(err, max_abs_diff(g * g.adjoint(), identity4));
                err = std::max(err, max_abs_diff(g * g, identity4));
            } else {
                const Mat2 g = gate2(label);
                err = std::max(err, max_abs_diff(g * g.adjoint(), identity2));
                err = std::max(err, max_abs_diff(g * g, identity2));
            }
        }
        return {err, "all gates unitary and involutive"};
    });

    run("density.marginals_random", 1e-9, [&]() -> Outcome {
        std::mt19937 rng(0x2b01);
        double err = 0.0;
        for (int n = 0; n < 100; ++n) {
            const DensityParams p = verify_detail::random_density_params(rng);
            const Mat4 d = density_from_params(p, false).matrix;
            err = std::max(err, max_abs_diff(partial_trace(d, Qubit::B),
                                             one_qubit_density(p.bloch_a)));
            err = std::max(err, max_abs_diff(partial_trace(d, Qubit::A),
                                             one_qubit_density(p.bloch_b)));
        }
        return {err, "marginals of 100 random states reproduce their Bloch vectors"};
    });

    run("density.correlation_decomposition", 1e-10, [&]() -> Outcome {
        std::mt19937 rng(0x2b02);
        double err = 0.0;
        for (int n = 0; n < 100; ++n) {
            const DensityParams p = verify_detail::random_density_params(rng);
            const Grid3 residual = correlation_residual(p);
            Mat4 rebuilt = product_density(p.bloch_a, p.bloch_b);
            for (std::size_t i = 1; i <= 3; ++i) {
                for (std::size_t j = 1; j <= 3; ++j) {
                    rebuilt += kron(pauli(i), pauli(j)) * cplx(0.25 * residual[i - 1][j - 1]);
                }
            }
            err = std::max(err, max_abs_diff(rebuilt, density_from_params(p, false).matrix));
        }
        return {err, "product part plus correlation residual rebuilds the state"};
    });

    run("density.dirac_coeffs_random", 1e-10, [&]() -> Outcome {
        std::mt19937 rng(0x2b03);
        double err = 0.0;
        for (int n = 0; n < 100; ++n) {
            const DensityParams p = verify_detail::random_density_params(rng);
            const DiracCoefficients direct = density_dirac_coeffs(p);
            const DiracCoefficients projected = decompose(density_from_params(p, false).matrix,
                                                          basis);
            for (DiracLabel label : kAllDiracLabels) {
                err = std::max(err, std::abs(direct[label] - projected[label]));
            }
        }
        return {err, "closed-form coefficients match the Hilbert-Schmidt projection"};
    });

    run("density.embed_idempotence", 1e-10, [&]() -> Outcome {
        std::mt19937 rng(0x2b04);
        double err = 0.0;
        for (int n = 0; n < 20; ++n) {
            const BlochVector s = verify_detail::random_unit_bloch(rng);
            for (Qubit q : {Qubit::A, Qubit::B}) {
                const Mat4 pi = embed(s, q);
                err = std::max(err, max_abs_diff(pi * pi, pi * cplx(0.5)));
                err = std::max(err, std::abs(purity(pi) - 0.5));
            }
        }
        return {err, "embedded pure states satisfy Pi^2 = Pi/2"};
    });

    run("density.embed_coeffs", 1e-10, [&]() -> Outcome {
        std::mt19937 rng(0x2b05);
        double err = 0.0;
        for (int n = 0; n < 20; ++n) {
            const BlochVector s = verify_detail::random_bloch_in_ball(rng);
            for (Qubit q : {Qubit::A, Qubit::B}) {
                err = std::max(err, max_abs_diff(reconstruct(embed_dirac_coeffs(s, q), basis),
                                                 embed(s, q)));
            }
        }
        return {err, "closed-form embedding coefficients rebuild the embedding"};
    });

    run("density.product_coeffs", 1e-10, [&]() -> Outcome {
        std::mt19937 rng(0x2b06);
        double err = 0.0;
        for (int n = 0; n < 20; ++n) {
            const BlochVector a = verify_detail::random_bloch_in_ball(rng);
            const BlochVector b = verify_detail::random_bloch_in_ball(rng);
            DensityParams p;
            p.bloch_a = a;
            p.bloch_b = b;
            for (std::size_t i = 1; i <= 3; ++i) {
                for (std::size_t j = 1; j <= 3; ++j) {
                    p.corr[i - 1][j - 1] = a.component(i) * b.component(j);
                }
            }
            const DiracCoefficients direct = density_dirac_coeffs(p);
            const DiracCoefficients projected = decompose(product_density(a, b), basis);
            for (DiracLabel label : kAllDiracLabels) {
                err = std::max(err, std::abs(direct[label] - projected[label]));
            }
        }
        return {err, "product states carry factorized correlation coefficients"};
    });

    run("density.entanglement_signature", 0.0, [&]() -> Outcome {
        std::mt19937 rng(0x2b07);
        for (BellLabel b : kAllBellLabels) {
            if (!entanglement_signature(params_of(bell_projector(b).matrix))) {
                return {1.0, std::string(bell_label_name(b)) + " projector missed"};
            }
        }
        for (int n = 0; n < 20; ++n) {
            const BlochVector a = verify_detail::random_unit_bloch(rng);
            const BlochVector b = verify_detail::random_unit_bloch(rng);
            if (entanglement_signature(params_of(product_density(a, b)))) {
                return {1.0, "product state flagged as entangled"};
            }
        }
        return {0.0, "signature holds for Bell projectors, rejects product states"};
    });

    run("evenodd.templates", 1e-10, [&]() -> Outcome {
        double err = 0.0;
        err = std::max(err, max_abs_diff(even_odd_template(EvenOdd::Odd, ParitySign::Plus),
                                         bell_projector(BellLabel::PsiPlus).matrix));
        err = std::max(err, max_abs_diff(even_odd_template(EvenOdd::Odd, ParitySign::Minus),
                                         bell_projector(BellLabel::PsiMinus).matrix));
        for (EvenOdd kind : {EvenOdd::Even, EvenOdd::Odd}) {
            for (ParitySign sign : {ParitySign::Plus, ParitySign::Minus}) {
                const Mat4 t = even_odd_template(kind, sign);
                err = std::max(err, max_abs_diff(t * t, t));
                err = std::max(err, std::abs(t.trace() - cplx(1.0)));
            }
        }
        // Even templates as normalized Bell superpositions.
        for (ParitySign sign : {ParitySign::Plus, ParitySign::Minus}) {
            const double s = (sign == ParitySign::Plus) ? 0.5 : -0.5;
            Vec4 psi = bell_state(BellLabel::PsiPlus) * cplx(0.5) +
                       bell_state(BellLabel::PsiMinus) * cplx(0.5) +
                       bell_state(BellLabel::PhiPlus) * cplx(s) +
                       bell_state(BellLabel::PhiMinus) * cplx(s);
            err = std::max(err, max_abs_diff(outer(psi, psi),
                                             even_odd_template(EvenOdd::Even, sign)));
        }
        return {err, "templates are pure projectors; odd pair matches the Psi projectors"};
    });

    run("evenodd.classification", 0.0, [&]() -> Outcome {
        const auto odd = classify_even_odd(even_odd_template(EvenOdd::Odd, ParitySign::Plus));
        if (odd.kind != EvenOddKind::OddPlus || !odd.c_invariant || odd.p_invariant ||
            odd.separable_marginal) {
            return {1.0, "odd template misclassified"};
        }
        const auto even = classify_even_odd(even_odd_template(EvenOdd::Even, ParitySign::Minus));
        if (even.kind != EvenOddKind::EvenMinus || even.c_invariant || !even.p_invariant ||
            !even.separable_marginal) {
            return {1.0, "even template misclassified"};
        }
        const auto mixed = classify_even_odd(Mat4::identity() * cplx(0.25));
        if (mixed.kind != EvenOddKind::Neither || !mixed.c_invariant || !mixed.p_invariant ||
            mixed.separable_marginal) {
            return {1.0, "maximally mixed state misclassified"};
        }
        return {0.0, "odd is C-invariant and entangled, even is P-invariant and separable"};
    });

    run("evenodd.unitaries", 1e-10, [&]() -> Outcome {
        const std::array<Mat4, 8> from_basis = {
            identity4,
            -identity4,
            basis[DiracLabel::Gamma4],
            -basis[DiracLabel::Gamma4],
            basis[DiracLabel::Gamma1] * basis[DiracLabel::Gamma2] * im,
            basis[DiracLabel::Gamma1] * basis[DiracLabel::Gamma2] * (-im),
            basis[DiracLabel::Gamma3] * basis[DiracLabel::Gamma5] * im,
            basis[DiracLabel::Gamma3] * basis[DiracLabel::Gamma5] * (-im),
        };
        double err = 0.0;
        for (std::size_t i = 0; i < 8; ++i) {
            const Mat4 u = from_basis[i];
            err = std::max(err, max_abs_diff(u, even_function_unitary(kAllEvenUnitaryLabels[i])));
            err = std::max(err, max_abs_diff(u * u.adjoint(), identity4));
            err = std::max(err, max_abs_diff(op_p * u * op_p.adjoint(), u));
            const auto factors = kron_factor(u);
            if (!factors) {
                return {1.0, std::string(even_unitary_name(kAllEvenUnitaryLabels[i])) +
                                 " is not Kronecker-factorable"};
            }
            err = std::max(err, max_abs_diff(kron(factors->first, factors->second), u));
        }
        return {err, "all eight even-function unitaries parity-invariant and factorable"};
    });

    run("roundtrip.decompose_reconstruct", 1e-9, [&]() -> Outcome {
        std::mt19937 rng(0x2b08);
        double err = 0.0;
        for (int n = 0; n < 1000; ++n) {
            const Mat4 m = verify_detail::random_matrix4(rng);
            err = std::max(err, max_abs_diff(reconstruct(decompose(m, basis), basis), m));
        }
        return {err, "decompose then reconstruct is the identity on 1000 random matrices"};
    });

    run("roundtrip.params_density", 1e-9, [&]() -> Outcome {
        std::mt19937 rng(0x2b09);
        double err = 0.0;
        for (int n = 0; n < 100; ++n) {
            const Mat4 d = verify_detail::random_hermitian_unit_trace(rng);
            err = std::max(err, max_abs_diff(density_from_params(params_of(d), false).matrix, d));
        }
        return {err, "params_of then density_from_params is the identity"};
    });

    run("eigen.solver_contract", 1e-8, [&]() -> Outcome {
        std::mt19937 rng(0x2b0a);
        double err = 0.0;
        for (int n = 0; n < 50; ++n) {
            const Mat4 h = verify_detail::random_hermitian4(rng);
            const auto sys = hermitian_eigensystem(h);
            Mat4 rebuilt;
            for (std::size_t k = 0; k < 4; ++k) {
                Vec4 col;
                for (std::size_t r = 0; r < 4; ++r) {
                    col[r] = sys.vectors(r, k);
                }
                rebuilt += outer(col, col) * cplx(sys.values[k]);
            }
            err = std::max(err, max_abs_diff(rebuilt, h));
            double sum = 0.0;
            for (double v : sys.values) {
                sum += v;
            }
            err = std::max(err, std::abs(sum - h.trace().real()));
        }
        // Frozen spectrum of the Bell operator 2 sqrt2 (Phi+ - Psi-).
        const Mat4 bell_op = (bell_projector(BellLabel::PhiPlus).matrix -
                              bell_projector(BellLabel::PsiMinus).matrix) *
                             cplx(2.0 * std::sqrt(2.0));
        const auto values = hermitian_eigenvalues(bell_op);
        const std::array<double, 4> expected = {-2.0 * std::sqrt(2.0), 0.0, 0.0,
                                                2.0 * std::sqrt(2.0)};
        for (std::size_t k = 0; k < 4; ++k) {
            err = std::max(err, std::abs(values[k] - expected[k]));
        }
        return {err, "spectral reconstruction on 50 random Hermitian matrices"};
    });

    run("linalg.kron_properties", 1e-10, [&]() -> Outcome {
        std::mt19937 rng(0x2b0b);
        double err = 0.0;
        for (int n = 0; n < 50; ++n) {
            const Mat2 a = verify_detail::random_matrix2(rng);
            const Mat2 a2 = verify_detail::random_matrix2(rng);
            const Mat2 b = verify_detail::random_matrix2(rng);
            const Mat2 c = verify_detail::random_matrix2(rng);
            const Mat2 d = verify_detail::random_matrix2(rng);
            err = std::max(err, max_abs_diff(kron(a + a2, b), kron(a, b) + kron(a2, b)));
            err = std::max(err, max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)));
            err = std::max(err,
                           max_abs_diff(partial_trace(kron(a, b), Qubit::B), a * b.trace()));
            Mat2 x = a;
            x(0, 0) = 1.0;
            const auto factors = kron_factor(kron(x, b));
            if (!factors) {
                return {1.0, "kron_factor failed on a product input"};
            }
            err = std::max(err, max_abs_diff(factors->first, x));
            err = std::max(err, max_abs_diff(factors->second, b));
        }
        return {err, "bilinearity, mixed product, partial trace, factorization round-trip"};
    });

    return checks;
}

}  // namespace dirac2q
