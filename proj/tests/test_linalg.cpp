#include <algorithm>

#include <catch2/catch.hpp>

#include "dirac2q/bell.hpp"
#include "dirac2q/dirac_basis.hpp"
#include "dirac2q/linalg.hpp"
#include "test_helpers.hpp"

using namespace dirac2q;

namespace {
const cplx kI(0.0, 1.0);
}

TEST_CASE("kron reproduces hand-expanded products", "[linalg]") {
    SECTION("identity times identity") {
        REQUIRE(max_abs_diff(kron(pauli(0), pauli(0)), Mat4::identity()) == 0.0);
    }
    SECTION("sigma1 x sigma1 is the anti-diagonal") {
        const Mat4 expected{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
        REQUIRE(max_abs_diff(kron(pauli(1), pauli(1)), expected) == 0.0);
    }
    SECTION("sigma2 x sigma1, expanded entry by entry") {
        const Mat4 expected{{0, 0, 0, -kI}, {0, 0, -kI, 0}, {0, kI, 0, 0}, {kI, 0, 0, 0}};
        REQUIRE(max_abs_diff(kron(pauli(2), pauli(1)), expected) == 0.0);
    }
}

TEST_CASE("kron is bilinear and respects the mixed product", "[linalg]") {
    std::mt19937 rng(101);
    for (int n = 0; n < 50; ++n) {
        const Mat2 a = testutil::random_matrix<2>(rng);
        const Mat2 a2 = testutil::random_matrix<2>(rng);
        const Mat2 b = testutil::random_matrix<2>(rng);
        const Mat2 c = testutil::random_matrix<2>(rng);
        const Mat2 d = testutil::random_matrix<2>(rng);
        REQUIRE(max_abs_diff(kron(a + a2, b), kron(a, b) + kron(a2, b)) <= 1e-12);
        REQUIRE(max_abs_diff(kron(a, b + c), kron(a, b) + kron(a, c)) <= 1e-12);
        REQUIRE(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) <= 1e-10);
    }
}

TEST_CASE("matrix product basics", "[linalg]") {
    const Mat4 m = kron(pauli(2), pauli(3));
    REQUIRE(max_abs_diff(Mat4::identity() * m, m) == 0.0);
    REQUIRE(max_abs_diff(gamma_matrix(1) * gamma_matrix(1), Mat4::identity()) == 0.0);
    REQUIRE((gamma_matrix(1) * gamma_matrix(2) + gamma_matrix(2) * gamma_matrix(1)).max_abs() == 0.0);
}

TEST_CASE("adjoint", "[linalg]") {
    REQUIRE(max_abs_diff(Mat4::identity().adjoint(), Mat4::identity()) == 0.0);
    REQUIRE(max_abs_diff(gamma_matrix(2).adjoint(), gamma_matrix(2)) == 0.0);

    std::mt19937 rng(102);
    for (int n = 0; n < 20; ++n) {
        const Mat4 m = testutil::random_matrix<4>(rng);
        REQUIRE(max_abs_diff(m.adjoint().adjoint(), m) == 0.0);
    }
}

TEST_CASE("trace", "[linalg]") {
    REQUIRE(Mat4::identity().trace() == cplx(4.0));
    REQUIRE(std::abs(gamma_matrix(5).trace()) == 0.0);

    const Vec4& psi = bell_state(BellLabel::PsiMinus);
    REQUIRE(std::abs(outer(psi, psi).trace() - cplx(1.0)) <= 1e-15);
}

TEST_CASE("hermitian eigensystem", "[linalg]") {
    SECTION("diagonal input passes through") {
        const Mat4 d{{-1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        const auto values = hermitian_eigenvalues(d);
        REQUIRE(values == std::array<double, 4>{-1.0, -1.0, 1.0, 1.0});
    }

    SECTION("rank-1 projector") {
        const Vec4& psi = bell_state(BellLabel::PsiMinus);
        const auto values = hermitian_eigenvalues(outer(psi, psi));
        for (std::size_t i = 0; i < 3; ++i) {
            REQUIRE(std::abs(values[i]) <= 1e-12);
        }
        REQUIRE(values[3] == Approx(1.0).margin(1e-12));
    }

    SECTION("two-projector combination with known spectrum") {
        const Vec4& phi_p = bell_state(BellLabel::PhiPlus);
        const Vec4& psi_m = bell_state(BellLabel::PsiMinus);
        const Mat4 op = (outer(phi_p, phi_p) - outer(psi_m, psi_m)) * cplx(2.0 * std::sqrt(2.0));
        const auto values = hermitian_eigenvalues(op);
        REQUIRE(values[0] == Approx(-2.0 * std::sqrt(2.0)).margin(1e-12));
        REQUIRE(values[1] == Approx(0.0).margin(1e-12));
        REQUIRE(values[2] == Approx(0.0).margin(1e-12));
        REQUIRE(values[3] == Approx(2.0 * std::sqrt(2.0)).margin(1e-12));
    }

    SECTION("random Hermitian: reconstruction and trace") {
        std::mt19937 rng(103);
        for (int n = 0; n < 50; ++n) {
            const Mat4 h = testutil::random_hermitian<4>(rng);
            const auto sys = hermitian_eigensystem(h);
            Mat4 rebuilt;
            for (std::size_t k = 0; k < 4; ++k) {
                Vec4 col;
                for (std::size_t r = 0; r < 4; ++r) {
                    col[r] = sys.vectors(r, k);
                }
                rebuilt += outer(col, col) * cplx(sys.values[k]);
            }
            REQUIRE(max_abs_diff(rebuilt, h) <= 1e-8);
            double sum = 0.0;
            for (double v : sys.values) {
                sum += v;
            }
            REQUIRE(sum == Approx(h.trace().real()).margin(1e-8));
            REQUIRE(std::is_sorted(sys.values.begin(), sys.values.end()));
        }
    }

    SECTION("rejects non-Hermitian input") {
        Mat4 m;
        m(0, 1) = 1.0;
        REQUIRE_THROWS_AS(hermitian_eigensystem(m), NotHermitianError);
    }
}

TEST_CASE("partial trace", "[linalg]") {
    std::mt19937 rng(104);

    SECTION("product inputs factor") {
        for (int n = 0; n < 30; ++n) {
            const Mat2 a = testutil::random_matrix<2>(rng);
            const Mat2 b = testutil::random_matrix<2>(rng);
            REQUIRE(max_abs_diff(partial_trace(kron(a, b), Qubit::B), a * b.trace()) <= 1e-10);
            REQUIRE(max_abs_diff(partial_trace(kron(a, b), Qubit::A), b * a.trace()) <= 1e-10);
        }
    }

    SECTION("singlet marginal is maximally mixed") {
        const Vec4& psi = bell_state(BellLabel::PsiMinus);
        const Mat2 half = pauli(0) * cplx(0.5);
        REQUIRE(max_abs_diff(partial_trace(outer(psi, psi), Qubit::B), half) <= 1e-12);
        REQUIRE(max_abs_diff(partial_trace(outer(psi, psi), Qubit::A), half) <= 1e-12);
    }

    SECTION("trace is preserved") {
        for (int n = 0; n < 20; ++n) {
            const Mat4 m = testutil::random_matrix<4>(rng);
            REQUIRE(std::abs(partial_trace(m, Qubit::B).trace() - m.trace()) <= 1e-12);
            REQUIRE(std::abs(partial_trace(m, Qubit::A).trace() - m.trace()) <= 1e-12);
        }
    }
}

TEST_CASE("kron_factor", "[linalg]") {
    SECTION("factors a pure tensor product in canonical gauge") {
        const auto factors = kron_factor(gamma_matrix(5));
        REQUIRE(factors.has_value());
        REQUIRE(factors->first(0, 1) == cplx(1.0));  // sigma1, leading entry exactly 1
        REQUIRE(max_abs_diff(factors->first, pauli(1)) == 0.0);
        REQUIRE(max_abs_diff(factors->second, pauli(0)) <= 1e-12);
    }

    SECTION("CNOT has no factorization") {
        const Mat4 cnot{{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}};
        REQUIRE_FALSE(kron_factor(cnot).has_value());
    }

    SECTION("zero matrix is reported absent") {
        REQUIRE_FALSE(kron_factor(Mat4{}).has_value());
    }

    SECTION("round-trips random products") {
        std::mt19937 rng(105);
        for (int n = 0; n < 50; ++n) {
            Mat2 x = testutil::random_matrix<2>(rng);
            x(0, 0) = 1.0;
            const Mat2 y = testutil::random_matrix<2>(rng);
            const auto factors = kron_factor(kron(x, y));
            REQUIRE(factors.has_value());
            REQUIRE(max_abs_diff(factors->first, x) <= 1e-8);
            REQUIRE(max_abs_diff(factors->second, y) <= 1e-8);
        }
    }

    SECTION("gauge skips leading zero entries") {
        Mat2 x{{0.0, 1.0}, {cplx(0.5, -0.25), 2.0}};
        const Mat2 y{{1.0, cplx(0, 2)}, {3.0, -1.0}};
        const auto factors = kron_factor(kron(x, y));
        REQUIRE(factors.has_value());
        REQUIRE(factors->first(0, 0) == cplx(0.0));
        REQUIRE(factors->first(0, 1) == cplx(1.0));
        REQUIRE(max_abs_diff(factors->first, x) <= 1e-12);
    }
}

TEST_CASE("approx_equal", "[linalg]") {
    const Mat4 m = kron(pauli(3), pauli(2));
    REQUIRE(approx_equal(m, m));
    REQUIRE(approx_equal(gamma_matrix(4), -kron(pauli(3), pauli(0))));
    REQUIRE_FALSE(approx_equal(Mat4::identity(), gamma_matrix(5)));
}

TEST_CASE("tolerance must be positive", "[linalg]") {
    REQUIRE_THROWS_AS(Tolerance(0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(Tolerance(-1e-9), std::invalid_argument);
    REQUIRE(Tolerance{}.eps == 1e-9);
}
