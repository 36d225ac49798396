// bell.hpp
// Bell and singlet-triplet bases, the T/C/P symmetry operators and their
// products, phase actions of operators on Bell states, and the Bell
// outer-product constructions of the gamma matrices.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dirac2q/dirac_basis.hpp"
#include "dirac2q/linalg.hpp"

namespace dirac2q {

enum class BellLabel : std::size_t { PsiPlus = 0, PsiMinus, PhiPlus, PhiMinus };

inline constexpr std::array<BellLabel, 4> kAllBellLabels = {
    BellLabel::PsiPlus, BellLabel::PsiMinus, BellLabel::PhiPlus, BellLabel::PhiMinus};

inline std::string_view bell_label_name(BellLabel label) {
    static constexpr std::array<std::string_view, 4> names = {"PSI_PLUS", "PSI_MINUS",
                                                              "PHI_PLUS", "PHI_MINUS"};
    return names[static_cast<std::size_t>(label)];
}

inline std::optional<BellLabel> parse_bell_label(std::string_view name) {
    for (BellLabel label : kAllBellLabels) {
        if (bell_label_name(label) == name) {
            return label;
        }
    }
    return std::nullopt;
}

enum class SpinLabel : std::size_t { Singlet = 0, TPlus, TZero, TMinus };

inline constexpr std::array<SpinLabel, 4> kAllSpinLabels = {
    SpinLabel::Singlet, SpinLabel::TPlus, SpinLabel::TZero, SpinLabel::TMinus};

inline std::string_view spin_label_name(SpinLabel label) {
    static constexpr std::array<std::string_view, 4> names = {"SINGLET", "T_PLUS", "T_ZERO",
                                                              "T_MINUS"};
    return names[static_cast<std::size_t>(label)];
}

enum class SymmetryLabel : std::size_t { T = 0, C, P, TC, CP, PT, TCP };

inline constexpr std::array<SymmetryLabel, 7> kAllSymmetryLabels = {
    SymmetryLabel::T,  SymmetryLabel::C,  SymmetryLabel::P, SymmetryLabel::TC,
    SymmetryLabel::CP, SymmetryLabel::PT, SymmetryLabel::TCP};

inline std::string_view symmetry_label_name(SymmetryLabel label) {
    static constexpr std::array<std::string_view, 7> names = {"T", "C", "P", "TC",
                                                              "CP", "PT", "TCP"};
    return names[static_cast<std::size_t>(label)];
}

// Maximally entangled Bell basis, unit norm.
inline const Vec4& bell_state(BellLabel label) {
    static const double r = 1.0 / std::sqrt(2.0);
    static const std::array<Vec4, 4> states = {
        Vec4{0.0, r, r, 0.0},    // (|01> + |10>)/sqrt2
        Vec4{0.0, r, -r, 0.0},   // (|01> - |10>)/sqrt2
        Vec4{r, 0.0, 0.0, r},    // (|00> + |11>)/sqrt2
        Vec4{r, 0.0, 0.0, -r},   // (|00> - |11>)/sqrt2
    };
    return states[static_cast<std::size_t>(label)];
}

// Total-spin basis: the antisymmetric singlet and the three triplet states.
inline const Vec4& spin_state(SpinLabel label) {
    static const double r = 1.0 / std::sqrt(2.0);
    static const std::array<Vec4, 4> states = [] {
        std::array<Vec4, 4> s{};
        s[0] = bell_state(BellLabel::PsiMinus);
        s[1] = (bell_state(BellLabel::PhiPlus) + bell_state(BellLabel::PhiMinus)) * cplx(r);
        s[2] = bell_state(BellLabel::PsiPlus);
        s[3] = (bell_state(BellLabel::PhiPlus) - bell_state(BellLabel::PhiMinus)) * cplx(r);
        return s;
    }();
    return states[static_cast<std::size_t>(label)];
}

// The symmetry operators as plain unitaries: T = gamma5 gamma4, C = -i gamma2,
// P = i gamma4, and the products taken left to right (TC = T*C and so on).
// They act on states by left multiplication and on operators by conjugation.
inline Mat4 symmetry_operator(SymmetryLabel label) {
    const cplx i(0.0, 1.0);
    switch (label) {
        case SymmetryLabel::T:
            return gamma_matrix(5) * gamma_matrix(4);
        case SymmetryLabel::C:
            return gamma_matrix(2) * (-i);
        case SymmetryLabel::P:
            return gamma_matrix(4) * i;
        case SymmetryLabel::TC:
            return symmetry_operator(SymmetryLabel::T) * symmetry_operator(SymmetryLabel::C);
        case SymmetryLabel::CP:
            return symmetry_operator(SymmetryLabel::C) * symmetry_operator(SymmetryLabel::P);
        case SymmetryLabel::PT:
            return symmetry_operator(SymmetryLabel::P) * symmetry_operator(SymmetryLabel::T);
        case SymmetryLabel::TCP:
            return symmetry_operator(SymmetryLabel::TC) * symmetry_operator(SymmetryLabel::P);
    }
    throw std::invalid_argument("symmetry_operator: bad label");
}

// Result of applying an operator to a Bell state: either a single Bell state
// with a complex phase, or a genuine superposition ("mixes").
struct PhaseAction {
    std::optional<BellLabel> target;
    cplx phase{};

    bool mixes() const { return !target.has_value(); }

    static PhaseAction mixed() { return PhaseAction{}; }
    static PhaseAction pure(BellLabel t, cplx p) { return PhaseAction{t, p}; }
};

// Expands op|state> in the Bell basis. Components at or below tol.eps count
// as exactly zero; a single surviving component gives a pure phase action.
inline PhaseAction apply_to_bell(const Mat4& op, BellLabel state, Tolerance tol = {}) {
    const Vec4 image = op * bell_state(state);
    std::optional<BellLabel> found;
    cplx phase{};
    for (BellLabel candidate : kAllBellLabels) {
        const cplx overlap = inner(bell_state(candidate), image);
        if (std::abs(overlap) > tol.eps) {
            if (found.has_value()) {
                return PhaseAction::mixed();
            }
            found = candidate;
            phase = overlap;
        }
    }
    if (!found.has_value()) {
        return PhaseAction::mixed();
    }
    return PhaseAction::pure(*found, phase);
}

struct ActionTableRow {
    std::string op;
    std::array<PhaseAction, 4> actions;  // indexed in kAllBellLabels order
};

struct SymmetryTable {
    std::vector<ActionTableRow> dirac_rows;     // 16 rows x 4 states
    std::vector<ActionTableRow> symmetry_rows;  // 7 rows x 4 states
};

// Row order follows the printed action table: the gamma matrices first (with
// the unit prepended), then the Sigma block and the remaining products.
inline constexpr std::array<DiracLabel, kBasisSize> kTableRowOrder = {
    DiracLabel::Unit,  DiracLabel::Gamma1, DiracLabel::Gamma2, DiracLabel::Gamma3,
    DiracLabel::Gamma4, DiracLabel::Gamma5, DiracLabel::Sigma1, DiracLabel::Sigma2,
    DiracLabel::Sigma3, DiracLabel::IG1G4, DiracLabel::IG2G4,  DiracLabel::IG3G4,
    DiracLabel::IG1G5, DiracLabel::IG2G5,  DiracLabel::IG3G5,  DiracLabel::IG4G5,
};

// Derives the full action table by direct matrix-vector computation; the
// derived phases are normative. Every entry comes out a pure phase action.
inline SymmetryTable derive_symmetry_table(Tolerance tol = {}) {
    SymmetryTable table;
    for (DiracLabel label : kTableRowOrder) {
        ActionTableRow row;
        row.op = std::string(dirac_label_name(label));
        for (BellLabel b : kAllBellLabels) {
            row.actions[static_cast<std::size_t>(b)] = apply_to_bell(dirac_matrix(label), b, tol);
        }
        table.dirac_rows.push_back(std::move(row));
    }
    for (SymmetryLabel label : kAllSymmetryLabels) {
        ActionTableRow row;
        row.op = std::string(symmetry_label_name(label));
        const Mat4 op = symmetry_operator(label);
        for (BellLabel b : kAllBellLabels) {
            row.actions[static_cast<std::size_t>(b)] = apply_to_bell(op, b, tol);
        }
        table.symmetry_rows.push_back(std::move(row));
    }
    return table;
}

// gamma_1..gamma_4 as signed combinations of Bell outer products.
inline Mat4 gamma_from_bell_outer(DiracLabel label) {
    const auto psi_p = bell_state(BellLabel::PsiPlus);
    const auto psi_m = bell_state(BellLabel::PsiMinus);
    const auto phi_p = bell_state(BellLabel::PhiPlus);
    const auto phi_m = bell_state(BellLabel::PhiMinus);
    const cplx i(0.0, 1.0);
    switch (label) {
        case DiracLabel::Gamma1:
            return (outer(psi_p, psi_m) - outer(psi_m, psi_p) + outer(phi_p, phi_m) -
                    outer(phi_m, phi_p)) *
                   i;
        case DiracLabel::Gamma2:
            return outer(psi_p, psi_p) - outer(psi_m, psi_m) - outer(phi_p, phi_p) +
                   outer(phi_m, phi_m);
        case DiracLabel::Gamma3:
            return (outer(psi_p, phi_p) - outer(psi_m, phi_m) - outer(phi_p, psi_p) +
                    outer(phi_m, psi_m)) *
                   i;
        case DiracLabel::Gamma4:
            return -(outer(psi_p, psi_m) + outer(psi_m, psi_p) + outer(phi_p, phi_m) +
                     outer(phi_m, phi_p));
        default:
            throw UnsupportedLabelError("gamma_from_bell_outer: only GAMMA_1..GAMMA_4");
    }
}

// gamma_2 built from singlet-triplet outer products. The diagonal part lives
// on |s> and |t0>; the t+/t- sector enters only through the off-diagonal
// pair, which is what makes gamma_2 decoherent in those two states.
inline Mat4 gamma2_spin_form() {
    const auto s = spin_state(SpinLabel::Singlet);
    const auto tp = spin_state(SpinLabel::TPlus);
    const auto t0 = spin_state(SpinLabel::TZero);
    const auto tm = spin_state(SpinLabel::TMinus);
    return outer(t0, t0) - outer(s, s) - outer(tp, tm) - outer(tm, tp);
}

}  // namespace dirac2q
