// linalg.hpp
// Fixed-size dense complex linear algebra for two-qubit work: 2x2 and 4x4
// matrices, 4-vectors, Kronecker products, partial traces, a Hermitian
// Jacobi eigensolver and Kronecker factorization.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>

namespace dirac2q {

using cplx = std::complex<double>;

inline constexpr double kDefaultEps = 1e-9;

struct Tolerance {
    double eps = kDefaultEps;

    constexpr Tolerance() = default;
    explicit constexpr Tolerance(double e) : eps(e) {
        if (!(e > 0.0)) {
            throw std::invalid_argument("Tolerance must be positive");
        }
    }
};

struct NotHermitianError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Which qubit of a two-qubit system; A is always the left tensor factor.
enum class Qubit { A, B };

// Dense N x N complex matrix, row-major. The two-qubit basis order is fixed
// globally as |00>,|01>,|10>,|11> with qubit A first.
template <std::size_t N>
class Matrix {
  public:
    constexpr Matrix() = default;

    Matrix(std::initializer_list<std::initializer_list<cplx>> rows) {
        if (rows.size() != N) {
            throw std::invalid_argument("Matrix: wrong row count");
        }
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != N) {
                throw std::invalid_argument("Matrix: wrong column count");
            }
            std::size_t c = 0;
            for (const cplx& v : row) {
                entries_[r * N + c] = v;
                ++c;
            }
            ++r;
        }
    }

    static Matrix identity() {
        Matrix m;
        for (std::size_t i = 0; i < N; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    cplx& operator()(std::size_t r, std::size_t c) { return entries_.at(r * N + c); }
    const cplx& operator()(std::size_t r, std::size_t c) const { return entries_.at(r * N + c); }

    Matrix& operator+=(const Matrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) {
            entries_[i] += o.entries_[i];
        }
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        for (std::size_t i = 0; i < N * N; ++i) {
            entries_[i] -= o.entries_[i];
        }
        return *this;
    }
    Matrix& operator*=(const cplx& s) {
        for (auto& v : entries_) {
            v *= s;
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const cplx& s) { return a *= s; }
    friend Matrix operator*(const cplx& s, Matrix a) { return a *= s; }
    friend Matrix operator-(const Matrix& a) { return a * cplx(-1.0); }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t k = 0; k < N; ++k) {
                const cplx aik = a(i, k);
                if (aik == cplx{}) {
                    continue;
                }
                for (std::size_t j = 0; j < N; ++j) {
                    r(i, j) += aik * b(k, j);
                }
            }
        }
        return r;
    }

    Matrix adjoint() const {
        Matrix r;
        for (std::size_t i = 0; i < N; ++i) {
            for (std::size_t j = 0; j < N; ++j) {
                r(i, j) = std::conj((*this)(j, i));
            }
        }
        return r;
    }

    cplx trace() const {
        cplx t{};
        for (std::size_t i = 0; i < N; ++i) {
            t += (*this)(i, i);
        }
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : entries_) {
            m = std::max(m, std::abs(v));
        }
        return m;
    }

    bool is_finite() const {
        for (const auto& v : entries_) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) { return a.entries_ == b.entries_; }

  private:
    std::array<cplx, N * N> entries_{};
};

using Mat2 = Matrix<2>;
using Mat4 = Matrix<4>;

template <std::size_t N>
double max_abs_diff(const Matrix<N>& a, const Matrix<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            m = std::max(m, std::abs(a(i, j) - b(i, j)));
        }
    }
    return m;
}

template <std::size_t N>
bool approx_equal(const Matrix<N>& a, const Matrix<N>& b, Tolerance tol = {}) {
    return max_abs_diff(a, b) <= tol.eps;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N>& a, Tolerance tol = {}) {
    return max_abs_diff(a, a.adjoint()) <= tol.eps;
}

// Complex column vector of fixed length.
template <std::size_t N>
class Vector {
  public:
    constexpr Vector() = default;

    Vector(std::initializer_list<cplx> amps) {
        if (amps.size() != N) {
            throw std::invalid_argument("Vector: wrong length");
        }
        std::size_t i = 0;
        for (const cplx& v : amps) {
            amplitudes_[i++] = v;
        }
    }

    cplx& operator[](std::size_t i) { return amplitudes_.at(i); }
    const cplx& operator[](std::size_t i) const { return amplitudes_.at(i); }

    Vector& operator+=(const Vector& o) {
        for (std::size_t i = 0; i < N; ++i) {
            amplitudes_[i] += o.amplitudes_[i];
        }
        return *this;
    }
    Vector& operator-=(const Vector& o) {
        for (std::size_t i = 0; i < N; ++i) {
            amplitudes_[i] -= o.amplitudes_[i];
        }
        return *this;
    }
    Vector& operator*=(const cplx& s) {
        for (auto& v : amplitudes_) {
            v *= s;
        }
        return *this;
    }

    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(Vector a, const cplx& s) { return a *= s; }
    friend Vector operator*(const cplx& s, Vector a) { return a *= s; }
    friend Vector operator-(const Vector& a) { return a * cplx(-1.0); }

    double norm() const {
        double n = 0.0;
        for (const auto& v : amplitudes_) {
            n += std::norm(v);
        }
        return std::sqrt(n);
    }

  private:
    std::array<cplx, N> amplitudes_{};
};

using Vec4 = Vector<4>;

// <a|b>, conjugate-linear in the first argument.
template <std::size_t N>
cplx inner(const Vector<N>& a, const Vector<N>& b) {
    cplx r{};
    for (std::size_t i = 0; i < N; ++i) {
        r += std::conj(a[i]) * b[i];
    }
    return r;
}

// |a><b|
template <std::size_t N>
Matrix<N> outer(const Vector<N>& a, const Vector<N>& b) {
    Matrix<N> m;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            m(i, j) = a[i] * std::conj(b[j]);
        }
    }
    return m;
}

template <std::size_t N>
Vector<N> operator*(const Matrix<N>& m, const Vector<N>& v) {
    Vector<N> r;
    for (std::size_t i = 0; i < N; ++i) {
        cplx s{};
        for (std::size_t j = 0; j < N; ++j) {
            s += m(i, j) * v[j];
        }
        r[i] = s;
    }
    return r;
}

template <std::size_t N>
double max_abs_diff(const Vector<N>& a, const Vector<N>& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

// (a (x) b)[2i+k][2j+l] = a[i][j] * b[k][l]; qubit A is the left factor.
inline Mat4 kron(const Mat2& a, const Mat2& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) {
                    r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return r;
}

// Trace over one tensor factor; the total trace is preserved.
inline Mat2 partial_trace(const Mat4& m, Qubit over) {
    Mat2 r;
    if (over == Qubit::B) {
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
            }
        }
    } else {
        for (std::size_t k = 0; k < 2; ++k) {
            for (std::size_t l = 0; l < 2; ++l) {
                r(k, l) = m(k, l) + m(2 + k, 2 + l);
            }
        }
    }
    return r;
}

template <std::size_t N>
struct EigenSystem {
    std::array<double, N> values{};  // ascending
    Matrix<N> vectors;               // columns are the matching eigenvectors
};

// Cyclic Jacobi diagonalization of a Hermitian matrix. Each rotation first
// strips the phase of the pivot entry, then applies a real Jacobi rotation,
// so the working matrix stays Hermitian throughout.
template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Matrix<N>& m, Tolerance tol = {}) {
    if (!is_hermitian(m, tol)) {
        throw NotHermitianError("hermitian_eigensystem: input is not Hermitian");
    }

    Matrix<N> a;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
        }
    }

    Matrix<N> v = Matrix<N>::identity();
    const double scale = a.max_abs() + 1.0;
    const double stop = 1e-15 * scale;

    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                off = std::max(off, std::abs(a(p, q)));
            }
        }
        if (off <= stop) {
            break;
        }

        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const cplx apq = a(p, q);
                const double mag = std::abs(apq);
                if (mag <= 1e-18 * scale) {
                    continue;
                }
                const cplx phase = apq / mag;  // e^{i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * mag);
                const double t = (tau >= 0.0)
                                     ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // Unitary update U: (p,p)=c, (p,q)=-s, (q,p)=s*conj(phase),
                // (q,q)=c*conj(phase). Columns first (A <- A U, V <- V U).
                const cplx up = s * std::conj(phase);
                const cplx uq = c * std::conj(phase);
                for (std::size_t r = 0; r < N; ++r) {
                    const cplx arp = a(r, p);
                    const cplx arq = a(r, q);
                    a(r, p) = arp * c + arq * up;
                    a(r, q) = -arp * s + arq * uq;

                    const cplx vrp = v(r, p);
                    const cplx vrq = v(r, q);
                    v(r, p) = vrp * c + vrq * up;
                    v(r, q) = -vrp * s + vrq * uq;
                }
                // Rows (A <- U^H A).
                for (std::size_t cc = 0; cc < N; ++cc) {
                    const cplx apc = a(p, cc);
                    const cplx aqc = a(q, cc);
                    a(p, cc) = c * apc + s * phase * aqc;
                    a(q, cc) = -s * apc + c * phase * aqc;
                }
            }
        }
    }

    EigenSystem<N> sys;
    std::array<std::size_t, N> order{};
    for (std::size_t i = 0; i < N; ++i) {
        order[i] = i;
    }
    std::array<double, N> diag{};
    for (std::size_t i = 0; i < N; ++i) {
        diag[i] = a(i, i).real();
    }
    for (std::size_t i = 0; i < N; ++i) {
        std::size_t best = i;
        for (std::size_t j = i + 1; j < N; ++j) {
            if (diag[order[j]] < diag[order[best]]) {
                best = j;
            }
        }
        std::swap(order[i], order[best]);
    }
    for (std::size_t i = 0; i < N; ++i) {
        sys.values[i] = diag[order[i]];
        for (std::size_t r = 0; r < N; ++r) {
            sys.vectors(r, i) = v(r, order[i]);
        }
    }
    return sys;
}

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const Matrix<N>& m, Tolerance tol = {}) {
    return hermitian_eigensystem(m, tol).values;
}

namespace detail {

inline Mat2 block2(const Mat4& m, std::size_t bi, std::size_t bj) {
    Mat2 b;
    for (std::size_t k = 0; k < 2; ++k) {
        for (std::size_t l = 0; l < 2; ++l) {
            b(k, l) = m(2 * bi + k, 2 * bj + l);
        }
    }
    return b;
}

inline cplx frobenius_inner(const Mat2& a, const Mat2& b) {
    cplx s{};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            s += std::conj(a(i, j)) * b(i, j);
        }
    }
    return s;
}

}  // namespace detail

// Attempts m = X (x) Y. Works block-wise: each 2x2 block of m must be
// proportional to a common Y, the proportionality constants forming X.
// The gauge is fixed so the first nonzero entry of X (row-major) is exactly 1.
// Absence (not an error) means m has no Kronecker factorization within tol;
// the zero matrix factors only ambiguously and also yields absent.
inline std::optional<std::pair<Mat2, Mat2>> kron_factor(const Mat4& m, Tolerance tol = {}) {
    std::array<Mat2, 4> blocks;
    double best_norm = -1.0;
    std::size_t best = 0;
    for (std::size_t bi = 0; bi < 2; ++bi) {
        for (std::size_t bj = 0; bj < 2; ++bj) {
            const std::size_t idx = 2 * bi + bj;
            blocks[idx] = detail::block2(m, bi, bj);
            const double n = detail::frobenius_inner(blocks[idx], blocks[idx]).real();
            if (n > best_norm) {
                best_norm = n;
                best = idx;
            }
        }
    }
    if (best_norm <= tol.eps * tol.eps) {
        return std::nullopt;
    }

    Mat2 y = blocks[best];
    const double ynorm2 = detail::frobenius_inner(y, y).real();
    Mat2 x;
    for (std::size_t idx = 0; idx < 4; ++idx) {
        x(idx / 2, idx % 2) = detail::frobenius_inner(y, blocks[idx]) / ynorm2;
    }

    // Gauge: first entry of X above tolerance becomes exactly 1.
    std::size_t first = 4;
    for (std::size_t idx = 0; idx < 4 && first == 4; ++idx) {
        if (std::abs(x(idx / 2, idx % 2)) > tol.eps) {
            first = idx;
        }
    }
    if (first == 4) {
        return std::nullopt;
    }
    const cplx gauge = x(first / 2, first % 2);
    x *= 1.0 / gauge;
    x(first / 2, first % 2) = 1.0;
    y *= gauge;

    if (max_abs_diff(kron(x, y), m) > tol.eps) {
        return std::nullopt;
    }
    return std::make_pair(x, y);
}

}  // namespace dirac2q
