// gates.hpp
// Quantum logic gates in the Dirac basis, the Bell-projector decomposition
// of SWAP, the even/odd pure-state templates with their symmetry and
// separability properties, and the eight even-function unitaries.

#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string_view>
#include <variant>

#include "dirac2q/bell.hpp"
#include "dirac2q/density.hpp"
#include "dirac2q/dirac_basis.hpp"
#include "dirac2q/linalg.hpp"

namespace dirac2q {

struct BadDensityError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class GateLabel : std::size_t { Not1 = 0, Hadamard1, Cnot, Not2, Swap };

inline constexpr std::array<GateLabel, 5> kAllGateLabels = {
    GateLabel::Not1, GateLabel::Hadamard1, GateLabel::Cnot, GateLabel::Not2, GateLabel::Swap};

inline std::string_view gate_label_name(GateLabel label) {
    static constexpr std::array<std::string_view, 5> names = {"NOT1", "HADAMARD1", "CNOT",
                                                              "NOT2", "SWAP"};
    return names[static_cast<std::size_t>(label)];
}

inline std::optional<GateLabel> parse_gate_label(std::string_view name) {
    for (GateLabel label : kAllGateLabels) {
        if (gate_label_name(label) == name) {
            return label;
        }
    }
    return std::nullopt;
}

inline bool is_two_qubit(GateLabel label) {
    return label == GateLabel::Cnot || label == GateLabel::Not2 || label == GateLabel::Swap;
}

using GateMatrix = std::variant<Mat2, Mat4>;

// The explicit gate matrices. CNOT here flips qubit A conditioned on qubit B,
// matching the fixed |00>,|01>,|10>,|11> basis order; NOT2 negates qubit A.
inline GateMatrix gate(GateLabel label) {
    switch (label) {
        case GateLabel::Not1:
            return pauli(1);
        case GateLabel::Hadamard1:
            return (pauli(1) + pauli(3)) * cplx(1.0 / std::sqrt(2.0));
        case GateLabel::Cnot:
            return Mat4{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
        case GateLabel::Not2:
            return dirac_matrix(DiracLabel::Gamma5);
        case GateLabel::Swap:
            return Mat4{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}};
    }
    throw std::invalid_argument("gate: bad label");
}

inline Mat2 gate2(GateLabel label) {
    if (is_two_qubit(label)) {
        throw UnsupportedLabelError("gate2: two-qubit gate");
    }
    return std::get<Mat2>(gate(label));
}

inline Mat4 gate4(GateLabel label) {
    if (!is_two_qubit(label)) {
        throw UnsupportedLabelError("gate4: one-qubit gate");
    }
    return std::get<Mat4>(gate(label));
}

// Basis combinations of the two-qubit gates:
//   CNOT = (1 + Sigma_3 + gamma_5 - i gamma_3 gamma_4)/2
//   NOT2 = gamma_5
//   SWAP = (1 + i gamma_1 gamma_4 + gamma_2 + i gamma_3 gamma_5)/2
inline DiracCoefficients gate_dirac_form(GateLabel label) {
    DiracCoefficients c;
    switch (label) {
        case GateLabel::Cnot:
            c[DiracLabel::Unit] = 0.5;
            c[DiracLabel::Sigma3] = 0.5;
            c[DiracLabel::Gamma5] = 0.5;
            c[DiracLabel::IG3G4] = -0.5;
            return c;
        case GateLabel::Not2:
            c[DiracLabel::Gamma5] = 1.0;
            return c;
        case GateLabel::Swap:
            c[DiracLabel::Unit] = 0.5;
            c[DiracLabel::IG1G4] = 0.5;
            c[DiracLabel::Gamma2] = 0.5;
            c[DiracLabel::IG3G5] = 0.5;
            return c;
        default:
            throw UnsupportedLabelError("gate_dirac_form: two-qubit gates only");
    }
}

struct SwapBellSum {
    std::array<int, 4> signs;  // coefficients of the Bell projectors, Psi+/Psi-/Phi+/Phi- order
    double max_error;
};

// SWAP as the signed sum of the four Bell projectors: + - + +.
inline SwapBellSum swap_bell_decomposition() {
    const std::array<int, 4> signs = {1, -1, 1, 1};
    Mat4 sum;
    for (std::size_t i = 0; i < 4; ++i) {
        sum += bell_projector(kAllBellLabels[i]).matrix * cplx(static_cast<double>(signs[i]));
    }
    return SwapBellSum{signs, max_abs_diff(sum, gate4(GateLabel::Swap))};
}

enum class EvenOdd { Even, Odd };
enum class ParitySign { Plus, Minus };

enum class EvenOddKind : std::size_t { EvenPlus = 0, EvenMinus, OddPlus, OddMinus, Neither };

inline std::string_view even_odd_kind_name(EvenOddKind kind) {
    static constexpr std::array<std::string_view, 5> names = {"EVEN_PLUS", "EVEN_MINUS",
                                                              "ODD_PLUS", "ODD_MINUS", "NEITHER"};
    return names[static_cast<std::size_t>(kind)];
}

// The even/odd pure-state templates. The even pair lives in the upper-left
// block (product states), the odd pair in the middle block (the Psi Bell
// projectors).
inline Mat4 even_odd_template(EvenOdd kind, ParitySign sign) {
    const double s = (sign == ParitySign::Plus) ? 0.5 : -0.5;
    if (kind == EvenOdd::Even) {
        return Mat4{{0.5, s, 0, 0}, {s, 0.5, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
    }
    return Mat4{{0, 0, 0, 0}, {0, 0.5, s, 0}, {0, s, 0.5, 0}, {0, 0, 0, 0}};
}

struct EvenOddVerdict {
    EvenOddKind kind = EvenOddKind::Neither;
    bool c_invariant = false;
    bool p_invariant = false;
    bool separable_marginal = false;
};

// Matches a density matrix against the four templates and records its
// behavior under charge-conjugation and parity conjugation plus whether both
// marginals are pure. Odd templates come out C-invariant with maximally
// mixed marginals; even ones P-invariant with pure marginals.
inline EvenOddVerdict classify_even_odd(const Mat4& d, Tolerance tol = {}) {
    if (!is_hermitian(d, tol) || std::abs(d.trace() - cplx(1.0)) > tol.eps) {
        throw BadDensityError("classify_even_odd: need a Hermitian unit-trace matrix");
    }

    EvenOddVerdict verdict;
    const std::array<std::pair<EvenOddKind, Mat4>, 4> templates = {
        std::pair{EvenOddKind::EvenPlus, even_odd_template(EvenOdd::Even, ParitySign::Plus)},
        std::pair{EvenOddKind::EvenMinus, even_odd_template(EvenOdd::Even, ParitySign::Minus)},
        std::pair{EvenOddKind::OddPlus, even_odd_template(EvenOdd::Odd, ParitySign::Plus)},
        std::pair{EvenOddKind::OddMinus, even_odd_template(EvenOdd::Odd, ParitySign::Minus)},
    };
    for (const auto& [kind, tpl] : templates) {
        if (approx_equal(d, tpl, tol)) {
            verdict.kind = kind;
            break;
        }
    }

    const Mat4 c_op = symmetry_operator(SymmetryLabel::C);
    const Mat4 p_op = symmetry_operator(SymmetryLabel::P);
    verdict.c_invariant = approx_equal(c_op * d * c_op.adjoint(), d, tol);
    verdict.p_invariant = approx_equal(p_op * d * p_op.adjoint(), d, tol);

    const auto [pa, pb] = marginal_mixedness(d);
    verdict.separable_marginal = std::abs(pa - 1.0) <= tol.eps && std::abs(pb - 1.0) <= tol.eps;
    return verdict;
}

// The eight unitaries encoding the even two-bit functions: +-1, +-gamma_4,
// +-i gamma_1 gamma_2, +-i gamma_3 gamma_5. All parity-invariant and all
// Kronecker-factorable.
enum class EvenUnitaryLabel : std::size_t {
    U04 = 0,
    U40,
    U22G4Plus,
    U22G4Minus,
    U22IG1G2Plus,
    U22IG1G2Minus,
    U22IG3G5Plus,
    U22IG3G5Minus,
};

inline constexpr std::array<EvenUnitaryLabel, 8> kAllEvenUnitaryLabels = {
    EvenUnitaryLabel::U04,          EvenUnitaryLabel::U40,
    EvenUnitaryLabel::U22G4Plus,    EvenUnitaryLabel::U22G4Minus,
    EvenUnitaryLabel::U22IG1G2Plus, EvenUnitaryLabel::U22IG1G2Minus,
    EvenUnitaryLabel::U22IG3G5Plus, EvenUnitaryLabel::U22IG3G5Minus,
};

inline std::string_view even_unitary_name(EvenUnitaryLabel label) {
    static constexpr std::array<std::string_view, 8> names = {
        "U04", "U40", "U22_G4_PLUS", "U22_G4_MINUS",
        "U22_IG1G2_PLUS", "U22_IG1G2_MINUS", "U22_IG3G5_PLUS", "U22_IG3G5_MINUS"};
    return names[static_cast<std::size_t>(label)];
}

inline Mat4 even_function_unitary(EvenUnitaryLabel label) {
    const cplx i(0.0, 1.0);
    switch (label) {
        case EvenUnitaryLabel::U04: return Mat4::identity();
        case EvenUnitaryLabel::U40: return -Mat4::identity();
        case EvenUnitaryLabel::U22G4Plus: return gamma_matrix(4);
        case EvenUnitaryLabel::U22G4Minus: return -gamma_matrix(4);
        case EvenUnitaryLabel::U22IG1G2Plus: return gamma_matrix(1) * gamma_matrix(2) * i;
        case EvenUnitaryLabel::U22IG1G2Minus: return gamma_matrix(1) * gamma_matrix(2) * (-i);
        case EvenUnitaryLabel::U22IG3G5Plus: return gamma_matrix(3) * gamma_matrix(5) * i;
        case EvenUnitaryLabel::U22IG3G5Minus: return gamma_matrix(3) * gamma_matrix(5) * (-i);
    }
    throw std::invalid_argument("even_function_unitary: bad label");
}

}  // namespace dirac2q
