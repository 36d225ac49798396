// dirac_basis.hpp
// The sixteen-element operator basis for two qubits built from tensor
// products of Pauli matrices, its tensor-rank classification, the Clifford
// relations, and decomposition of arbitrary 4x4 operators in this basis.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dirac2q/linalg.hpp"

namespace dirac2q {

struct UnsupportedLabelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// pauli(0) is the 2x2 identity, pauli(1..3) the Pauli matrices.
inline const Mat2& pauli(std::size_t i) {
    static const std::array<Mat2, 4> sigma = {
        Mat2{{1.0, 0.0}, {0.0, 1.0}},
        Mat2{{0.0, 1.0}, {1.0, 0.0}},
        Mat2{{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}},
        Mat2{{1.0, 0.0}, {0.0, -1.0}},
    };
    return sigma.at(i);
}

inline constexpr std::size_t kBasisSize = 16;

enum class DiracLabel : std::size_t {
    Unit = 0,
    Gamma1,
    Gamma2,
    Gamma3,
    Gamma4,
    Sigma1,
    Sigma2,
    Sigma3,
    IG1G4,
    IG2G4,
    IG3G4,
    IG1G5,
    IG2G5,
    IG3G5,
    IG4G5,
    Gamma5,
};

inline constexpr std::array<DiracLabel, kBasisSize> kAllDiracLabels = {
    DiracLabel::Unit,  DiracLabel::Gamma1, DiracLabel::Gamma2, DiracLabel::Gamma3,
    DiracLabel::Gamma4, DiracLabel::Sigma1, DiracLabel::Sigma2, DiracLabel::Sigma3,
    DiracLabel::IG1G4, DiracLabel::IG2G4,  DiracLabel::IG3G4,  DiracLabel::IG1G5,
    DiracLabel::IG2G5, DiracLabel::IG3G5,  DiracLabel::IG4G5,  DiracLabel::Gamma5,
};

inline std::size_t index_of(DiracLabel label) { return static_cast<std::size_t>(label); }

inline std::string_view dirac_label_name(DiracLabel label) {
    static constexpr std::array<std::string_view, kBasisSize> names = {
        "UNIT",  "GAMMA_1", "GAMMA_2", "GAMMA_3", "GAMMA_4", "SIGMA_1",
        "SIGMA_2", "SIGMA_3", "IG1G4", "IG2G4", "IG3G4", "IG1G5",
        "IG2G5", "IG3G5", "IG4G5", "GAMMA_5",
    };
    return names[index_of(label)];
}

inline std::optional<DiracLabel> parse_dirac_label(std::string_view name) {
    for (DiracLabel label : kAllDiracLabels) {
        if (dirac_label_name(label) == name) {
            return label;
        }
    }
    return std::nullopt;
}

enum class TensorRank { Scalar, FourVector, AntisymTensor, PseudoVector, PseudoScalar };

inline std::string_view tensor_rank_name(TensorRank rank) {
    switch (rank) {
        case TensorRank::Scalar: return "scalar";
        case TensorRank::FourVector: return "four_vector";
        case TensorRank::AntisymTensor: return "antisym_tensor";
        case TensorRank::PseudoVector: return "pseudo_vector";
        case TensorRank::PseudoScalar: return "pseudo_scalar";
    }
    throw std::invalid_argument("tensor_rank_name: bad rank");
}

// Rank classes partition the basis 1/4/6/4/1.
inline TensorRank rank_of(DiracLabel label) {
    switch (label) {
        case DiracLabel::Unit:
            return TensorRank::Scalar;
        case DiracLabel::Gamma1:
        case DiracLabel::Gamma2:
        case DiracLabel::Gamma3:
        case DiracLabel::Gamma4:
            return TensorRank::FourVector;
        case DiracLabel::Sigma1:
        case DiracLabel::Sigma2:
        case DiracLabel::Sigma3:
        case DiracLabel::IG1G4:
        case DiracLabel::IG2G4:
        case DiracLabel::IG3G4:
            return TensorRank::AntisymTensor;
        case DiracLabel::IG1G5:
        case DiracLabel::IG2G5:
        case DiracLabel::IG3G5:
        case DiracLabel::IG4G5:
            return TensorRank::PseudoVector;
        case DiracLabel::Gamma5:
            return TensorRank::PseudoScalar;
    }
    throw std::invalid_argument("rank_of: bad label");
}

namespace detail {

// Canonical tensor-product realization of each basis element. The matrix
// products (Sigma_k = -i gamma_i gamma_j and friends) are checked against
// these in the test suite rather than used as definitions, since the tensor
// form carries no phase ambiguity.
inline Mat4 make_basis_matrix(DiracLabel label) {
    const Mat2& id = pauli(0);
    const Mat2& s1 = pauli(1);
    const Mat2& s2 = pauli(2);
    const Mat2& s3 = pauli(3);
    switch (label) {
        case DiracLabel::Unit: return kron(id, id);
        case DiracLabel::Gamma1: return kron(s2, s1);
        case DiracLabel::Gamma2: return kron(s2, s2);
        case DiracLabel::Gamma3: return kron(s2, s3);
        case DiracLabel::Gamma4: return -kron(s3, id);
        case DiracLabel::Sigma1: return kron(id, s1);
        case DiracLabel::Sigma2: return kron(id, s2);
        case DiracLabel::Sigma3: return kron(id, s3);
        case DiracLabel::IG1G4: return kron(s1, s1);
        case DiracLabel::IG2G4: return kron(s1, s2);
        case DiracLabel::IG3G4: return kron(s1, s3);
        case DiracLabel::IG1G5: return kron(s3, s1);
        case DiracLabel::IG2G5: return kron(s3, s2);
        case DiracLabel::IG3G5: return kron(s3, s3);
        case DiracLabel::IG4G5: return kron(s2, id);
        case DiracLabel::Gamma5: return kron(s1, id);
    }
    throw std::invalid_argument("make_basis_matrix: bad label");
}

}  // namespace detail

// An indexed copy of the sixteen basis matrices. Checks that have to run
// against a deliberately corrupted basis take one of these; everything else
// uses the shared canonical instance.
struct DiracBasis {
    std::array<Mat4, kBasisSize> matrices;

    static DiracBasis make_canonical() {
        DiracBasis b;
        for (DiracLabel label : kAllDiracLabels) {
            b.matrices[index_of(label)] = detail::make_basis_matrix(label);
        }
        return b;
    }

    static const DiracBasis& canonical() {
        static const DiracBasis b = make_canonical();
        return b;
    }

    const Mat4& operator[](DiracLabel label) const { return matrices[index_of(label)]; }
    Mat4& operator[](DiracLabel label) { return matrices[index_of(label)]; }
};

inline const Mat4& dirac_matrix(DiracLabel label) {
    return DiracBasis::canonical()[label];
}

// gamma_matrix(1..5); index 5 is the pseudo-scalar.
inline const Mat4& gamma_matrix(std::size_t mu) {
    switch (mu) {
        case 1: return dirac_matrix(DiracLabel::Gamma1);
        case 2: return dirac_matrix(DiracLabel::Gamma2);
        case 3: return dirac_matrix(DiracLabel::Gamma3);
        case 4: return dirac_matrix(DiracLabel::Gamma4);
        case 5: return dirac_matrix(DiracLabel::Gamma5);
        default: throw std::invalid_argument("gamma_matrix: index must be 1..5");
    }
}

// Expansion coefficients of a 4x4 operator in the sixteen-element basis.
// Hermitian operators have purely real coefficients.
struct DiracCoefficients {
    std::array<cplx, kBasisSize> coeffs{};

    cplx& operator[](DiracLabel label) { return coeffs[index_of(label)]; }
    const cplx& operator[](DiracLabel label) const { return coeffs[index_of(label)]; }
};

// Hilbert-Schmidt projection c_A = Tr(Gamma_A m) / 4; basis elements are
// Hermitian so no conjugation is needed on the left factor.
inline DiracCoefficients decompose(const Mat4& m, const DiracBasis& basis) {
    DiracCoefficients c;
    for (DiracLabel label : kAllDiracLabels) {
        c[label] = (basis[label] * m).trace() * 0.25;
    }
    return c;
}

inline DiracCoefficients decompose(const Mat4& m) {
    return decompose(m, DiracBasis::canonical());
}

inline Mat4 reconstruct(const DiracCoefficients& c, const DiracBasis& basis) {
    Mat4 m;
    for (DiracLabel label : kAllDiracLabels) {
        if (c[label] != cplx{}) {
            m += basis[label] * c[label];
        }
    }
    return m;
}

inline Mat4 reconstruct(const DiracCoefficients& c) {
    return reconstruct(c, DiracBasis::canonical());
}

struct CliffordViolation {
    std::size_t mu = 0;
    std::size_t nu = 0;
    double error = 0.0;
    std::string relation;
};

struct CliffordReport {
    std::vector<CliffordViolation> violations;
    double max_error = 0.0;

    bool ok() const { return violations.empty(); }

    bool contains(std::size_t mu, std::size_t nu) const {
        for (const auto& v : violations) {
            if (v.mu == mu && v.nu == nu) {
                return true;
            }
        }
        return false;
    }
};

// Checks gamma_mu gamma_nu + gamma_nu gamma_mu = 2 delta_mu_nu for all 16
// ordered pairs over mu,nu in 1..4, that gamma_5 anticommutes with each of
// them, and that gamma_5 equals the product gamma_1 gamma_2 gamma_3 gamma_4.
inline CliffordReport verify_clifford(const DiracBasis& basis, Tolerance tol = {}) {
    CliffordReport report;
    const Mat4 identity = Mat4::identity();
    const std::array<DiracLabel, 4> gammas = {DiracLabel::Gamma1, DiracLabel::Gamma2,
                                              DiracLabel::Gamma3, DiracLabel::Gamma4};

    auto record = [&](std::size_t mu, std::size_t nu, double err, const char* relation) {
        report.max_error = std::max(report.max_error, err);
        if (err > tol.eps) {
            report.violations.push_back({mu, nu, err, relation});
        }
    };

    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const Mat4& gi = basis[gammas[i]];
            const Mat4& gj = basis[gammas[j]];
            Mat4 anti = gi * gj + gj * gi;
            if (i == j) {
                anti -= identity * cplx(2.0);
            }
            record(i + 1, j + 1, anti.max_abs(), "anticommutator");
        }
    }

    const Mat4& g5 = basis[DiracLabel::Gamma5];
    for (std::size_t i = 0; i < 4; ++i) {
        const Mat4& gi = basis[gammas[i]];
        record(i + 1, 5, (gi * g5 + g5 * gi).max_abs(), "gamma5 anticommutator");
    }

    const Mat4 product = basis[DiracLabel::Gamma1] * basis[DiracLabel::Gamma2] *
                         basis[DiracLabel::Gamma3] * basis[DiracLabel::Gamma4];
    record(5, 5, max_abs_diff(product, g5), "gamma5 = gamma1 gamma2 gamma3 gamma4");

    return report;
}

inline CliffordReport verify_clifford(Tolerance tol = {}) {
    return verify_clifford(DiracBasis::canonical(), tol);
}

}  // namespace dirac2q
