// density.hpp
// One- and two-qubit density matrices: Bloch parameterization, embeddings,
// product and general forms, marginals, correlation residual, basis
// coefficients, Bell projectors, purity and the diagonal-correlation
// entanglement signature.

#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "dirac2q/bell.hpp"
#include "dirac2q/dirac_basis.hpp"
#include "dirac2q/linalg.hpp"

namespace dirac2q {

struct BlochNormError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadTraceError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotPositiveError : std::runtime_error {
    double eigenvalue;

    explicit NotPositiveError(double lambda)
        : std::runtime_error("density matrix is not positive semi-definite (eigenvalue " +
                             std::to_string(lambda) + ")"),
          eigenvalue(lambda) {}
};

// Eigenvalues down to -1e-8 still count as nonnegative; that absorbs the
// eigensolver's reconstruction slack.
inline constexpr double kPsdSlack = 1e-8;

// Bloch vector of one qubit; mixed states fill the open unit ball, pure
// states sit on the sphere.
struct BlochVector {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;

    double norm() const { return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3); }

    double component(std::size_t i) const {
        switch (i) {
            case 1: return s1;
            case 2: return s2;
            case 3: return s3;
            default: throw std::invalid_argument("BlochVector::component: index must be 1..3");
        }
    }
};

using Grid3 = std::array<std::array<double, 3>, 3>;

// Parameters of the general two-qubit density matrix: the two local Bloch
// vectors and the 3x3 correlation grid corr[i][j].
struct DensityParams {
    BlochVector bloch_a;
    BlochVector bloch_b;
    Grid3 corr{};
};

struct DensityMatrix {
    Mat4 matrix;
    bool validated = false;
};

namespace detail {

inline void require_in_ball(const BlochVector& s) {
    if (s.norm() > 1.0 + kDefaultEps) {
        throw BlochNormError("Bloch vector norm exceeds 1");
    }
}

inline void require_unit_trace(const Mat4& d) {
    if (std::abs(d.trace() - cplx(1.0)) > kDefaultEps) {
        throw BadTraceError("matrix trace is not 1");
    }
}

}  // namespace detail

// rho = (1 + s . sigma) / 2; eigenvalues (1 +- |s|)/2.
inline Mat2 one_qubit_density(const BlochVector& s) {
    detail::require_in_ball(s);
    Mat2 rho = pauli(0);
    rho += pauli(1) * cplx(s.s1);
    rho += pauli(2) * cplx(s.s2);
    rho += pauli(3) * cplx(s.s3);
    return rho * cplx(0.5);
}

// Lifts a one-qubit state into the two-qubit space with the other side
// maximally mixed: Pi(A) = (rho_A (x) 1)/2. Even a pure parent state gives
// Pi^2 = Pi/2 here.
inline Mat4 embed(const BlochVector& s, Qubit which) {
    const Mat2 rho = one_qubit_density(s);
    return (which == Qubit::A ? kron(rho, pauli(0)) : kron(pauli(0), rho)) * cplx(0.5);
}

// Basis coefficients of embed(s, which) without building the matrix.
// The A side lands on the pseudo-scalar and fourth vector/pseudo-vector
// components, the B side on the Sigma block.
inline DiracCoefficients embed_dirac_coeffs(const BlochVector& s, Qubit which) {
    detail::require_in_ball(s);
    DiracCoefficients c;
    c[DiracLabel::Unit] = 0.25;
    if (which == Qubit::A) {
        c[DiracLabel::Gamma5] = 0.25 * s.s1;
        c[DiracLabel::IG4G5] = 0.25 * s.s2;
        c[DiracLabel::Gamma4] = -0.25 * s.s3;
    } else {
        c[DiracLabel::Sigma1] = 0.25 * s.s1;
        c[DiracLabel::Sigma2] = 0.25 * s.s2;
        c[DiracLabel::Sigma3] = 0.25 * s.s3;
    }
    return c;
}

inline Mat4 product_density(const BlochVector& a, const BlochVector& b) {
    return kron(one_qubit_density(a), one_qubit_density(b));
}

// The general two-qubit density matrix
//   (1 + sA.sigma (x) 1 + 1 (x) sB.sigma + corr_ij sigma_i (x) sigma_j) / 4.
// Hermitian with unit trace by construction; positivity is a property of the
// parameters and is only checked when validate is set.
inline DensityMatrix density_from_params(const DensityParams& p, bool validate) {
    Mat4 m = kron(pauli(0), pauli(0));
    for (std::size_t i = 1; i <= 3; ++i) {
        m += kron(pauli(i), pauli(0)) * cplx(p.bloch_a.component(i));
        m += kron(pauli(0), pauli(i)) * cplx(p.bloch_b.component(i));
        for (std::size_t j = 1; j <= 3; ++j) {
            const double cij = p.corr[i - 1][j - 1];
            if (cij != 0.0) {
                m += kron(pauli(i), pauli(j)) * cplx(cij);
            }
        }
    }
    m *= cplx(0.25);

    DensityMatrix d{m, false};
    if (validate) {
        const auto eigenvalues = hermitian_eigenvalues(m);
        if (eigenvalues[0] < -kPsdSlack) {
            throw NotPositiveError(eigenvalues[0]);
        }
        d.validated = true;
    }
    return d;
}

// Inverse of density_from_params via Pauli projections; accepts any Hermitian
// unit-trace matrix so non-states can be analyzed too.
inline DensityParams params_of(const Mat4& d) {
    detail::require_unit_trace(d);
    DensityParams p;
    p.bloch_a.s1 = (kron(pauli(1), pauli(0)) * d).trace().real();
    p.bloch_a.s2 = (kron(pauli(2), pauli(0)) * d).trace().real();
    p.bloch_a.s3 = (kron(pauli(3), pauli(0)) * d).trace().real();
    p.bloch_b.s1 = (kron(pauli(0), pauli(1)) * d).trace().real();
    p.bloch_b.s2 = (kron(pauli(0), pauli(2)) * d).trace().real();
    p.bloch_b.s3 = (kron(pauli(0), pauli(3)) * d).trace().real();
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= 3; ++j) {
            p.corr[i - 1][j - 1] = (kron(pauli(i), pauli(j)) * d).trace().real();
        }
    }
    return p;
}

// corr_ij - sA_i sB_j: what remains after removing the product part. The
// grid vanishes exactly when the state is its own Bloch product.
inline Grid3 correlation_residual(const DensityParams& p) {
    Grid3 r{};
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= 3; ++j) {
            r[i - 1][j - 1] =
                p.corr[i - 1][j - 1] - p.bloch_a.component(i) * p.bloch_b.component(j);
        }
    }
    return r;
}

// Basis coefficients of the general density matrix: the A Bloch vector feeds
// the pseudo-scalar and the fourth vector/pseudo-vector components, the B
// Bloch vector the Sigma block, and the correlation grid the remaining nine.
inline DiracCoefficients density_dirac_coeffs(const DensityParams& p) {
    DiracCoefficients c;
    c[DiracLabel::Unit] = 0.25;
    c[DiracLabel::Gamma5] = 0.25 * p.bloch_a.s1;
    c[DiracLabel::IG4G5] = 0.25 * p.bloch_a.s2;
    c[DiracLabel::Gamma4] = -0.25 * p.bloch_a.s3;
    c[DiracLabel::Sigma1] = 0.25 * p.bloch_b.s1;
    c[DiracLabel::Sigma2] = 0.25 * p.bloch_b.s2;
    c[DiracLabel::Sigma3] = 0.25 * p.bloch_b.s3;
    // corr rows: sigma_1 (x) sigma_j -> i gamma_j gamma_4, sigma_2 (x) sigma_j
    // -> gamma_j, sigma_3 (x) sigma_j -> i gamma_j gamma_5.
    c[DiracLabel::IG1G4] = 0.25 * p.corr[0][0];
    c[DiracLabel::IG2G4] = 0.25 * p.corr[0][1];
    c[DiracLabel::IG3G4] = 0.25 * p.corr[0][2];
    c[DiracLabel::Gamma1] = 0.25 * p.corr[1][0];
    c[DiracLabel::Gamma2] = 0.25 * p.corr[1][1];
    c[DiracLabel::Gamma3] = 0.25 * p.corr[1][2];
    c[DiracLabel::IG1G5] = 0.25 * p.corr[2][0];
    c[DiracLabel::IG2G5] = 0.25 * p.corr[2][1];
    c[DiracLabel::IG3G5] = 0.25 * p.corr[2][2];
    return c;
}

inline DensityMatrix bell_projector(BellLabel label) {
    const Vec4& b = bell_state(label);
    return DensityMatrix{outer(b, b), true};
}

inline double purity(const Mat2& d) { return (d * d).trace().real(); }
inline double purity(const Mat4& d) { return (d * d).trace().real(); }

// True when both Bloch vectors vanish and the correlation grid is diagonal
// with at least one nonzero entry. This is the structural fingerprint the
// Bell projectors carry; it is not a general mixed-state entanglement test.
inline bool entanglement_signature(const DensityParams& p, Tolerance tol = {}) {
    for (std::size_t i = 1; i <= 3; ++i) {
        if (std::abs(p.bloch_a.component(i)) > tol.eps ||
            std::abs(p.bloch_b.component(i)) > tol.eps) {
            return false;
        }
    }
    bool diagonal_entry = false;
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
            if (i == j) {
                diagonal_entry = diagonal_entry || std::abs(p.corr[i][j]) > tol.eps;
            } else if (std::abs(p.corr[i][j]) > tol.eps) {
                return false;
            }
        }
    }
    return diagonal_entry;
}

// Purities of the two marginals: (1/2, 1/2) flags maximally mixed marginals,
// (1, 1) pure ones.
inline std::pair<double, double> marginal_mixedness(const Mat4& d) {
    detail::require_unit_trace(d);
    return {purity(partial_trace(d, Qubit::B)), purity(partial_trace(d, Qubit::A))};
}

}  // namespace dirac2q
