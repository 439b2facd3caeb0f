// Copyright 2026 The wqe Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Dense complex linear algebra for small Hermitian matrices: Kronecker
 * product, partial trace, a cyclic Jacobi eigensolver and the spectral
 * matrix functions x ln x and ln x (restricted to the support).
 *
 * Composite indices are ordered with subsystem A slow and B fast, i.e. the
 * basis vector |a> (x) |b> sits at index a * dB + b.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wqe/error.hpp"

namespace wqe {

using Complex = std::complex<double>;

/// Selects which factor of a bipartite system is kept by a partial trace.
enum class Subsystem { A, B };

/// Eigenvalues in [-kNegativeEigenTol, kZeroEigenTol] are treated as 0.
inline constexpr double kZeroEigenTol = 1e-12;
inline constexpr double kNegativeEigenTol = 1e-10;
inline constexpr double kHermitianTol = 1e-10;

/**
 * Dense dim x dim complex matrix stored row-major.
 */
class Matrix {
  public:
    Matrix() = default;

    explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {
        if (dim == 0) {
            fail(ErrorKind::Dimension, "matrix dimension must be at least 1");
        }
    }

    Matrix(std::size_t dim, std::vector<Complex> entries)
        : dim_(dim), data_(std::move(entries)) {
        if (dim == 0) {
            fail(ErrorKind::Dimension, "matrix dimension must be at least 1");
        }
        if (data_.size() != dim * dim) {
            fail(ErrorKind::Dimension,
                 "matrix of dim " + std::to_string(dim) + " needs " +
                     std::to_string(dim * dim) + " entries, got " +
                     std::to_string(data_.size()));
        }
    }

    /// Row-by-row literal, e.g. Matrix{{0, 1}, {1, 0}}.
    Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
        : Matrix(rows.size()) {
        std::size_t r = 0;
        for (const auto &row : rows) {
            if (row.size() != dim_) {
                fail(ErrorKind::Dimension, "matrix literal is not square");
            }
            std::copy(row.begin(), row.end(), data_.begin() + r * dim_);
            ++r;
        }
    }

    static Matrix identity(std::size_t dim) {
        Matrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    static Matrix diagonal(std::span<const double> values) {
        Matrix m(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            m(i, i) = values[i];
        }
        return m;
    }

    static Matrix diagonal(std::initializer_list<double> values) {
        return diagonal(std::span<const double>(values.begin(), values.size()));
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * dim_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * dim_ + c];
    }

    [[nodiscard]] std::span<const Complex> entries() const noexcept {
        return data_;
    }

    [[nodiscard]] Matrix adjoint() const {
        Matrix out(dim_);
        for (std::size_t r = 0; r < dim_; ++r) {
            for (std::size_t c = 0; c < dim_; ++c) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    Matrix &operator+=(const Matrix &other) {
        require_same_dim(other, "matrix sum");
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] += other.data_[i];
        }
        return *this;
    }

    Matrix &operator-=(const Matrix &other) {
        require_same_dim(other, "matrix difference");
        for (std::size_t i = 0; i < data_.size(); ++i) {
            data_[i] -= other.data_[i];
        }
        return *this;
    }

    Matrix &operator*=(Complex scale) {
        for (auto &x : data_) {
            x *= scale;
        }
        return *this;
    }

    Matrix &operator/=(double scale) {
        for (auto &x : data_) {
            x = Complex(x.real() / scale, x.imag() / scale);
        }
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix &b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix &b) { return a -= b; }
    friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
    friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

    friend bool operator==(const Matrix &, const Matrix &) = default;

  private:
    void require_same_dim(const Matrix &other, const char *what) const {
        if (other.dim_ != dim_) {
            fail(ErrorKind::Dimension,
                 std::string(what) + ": dimension mismatch (" +
                     std::to_string(dim_) + " vs " +
                     std::to_string(other.dim_) + ")");
        }
    }

    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Eigenvalues ascending; column k of `vectors` is the eigenvector of
/// `values[k]`.
struct SpectralDecomposition {
    std::vector<double> values;
    Matrix vectors;
};

inline void require_dim(const Matrix &a, const Matrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        fail(ErrorKind::Dimension, std::string(what) +
                                       ": dimension mismatch (" +
                                       std::to_string(a.dim()) + " vs " +
                                       std::to_string(b.dim()) + ")");
    }
}

inline Matrix matmul(const Matrix &a, const Matrix &b) {
    require_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    Matrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{}) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

inline Complex trace(const Matrix &m) {
    Complex sum{};
    for (std::size_t i = 0; i < m.dim(); ++i) {
        sum += m(i, i);
    }
    return sum;
}

/// trace(a * b) without forming the product.
inline Complex trace_of_product(const Matrix &a, const Matrix &b) {
    require_dim(a, b, "trace of product");
    Complex sum{};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < a.dim(); ++k) {
            sum += a(i, k) * b(k, i);
        }
    }
    return sum;
}

inline double max_abs(const Matrix &m) {
    double best = 0.0;
    for (const auto &x : m.entries()) {
        best = std::max(best, std::abs(x));
    }
    return best;
}

inline double frobenius_norm(const Matrix &m) {
    double sum = 0.0;
    for (const auto &x : m.entries()) {
        sum += std::norm(x);
    }
    return std::sqrt(sum);
}

/// Largest elementwise deviation of m from its conjugate transpose.
inline double hermitian_deviation(const Matrix &m) {
    double worst = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = r; c < m.dim(); ++c) {
            worst = std::max(worst, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return worst;
}

inline bool is_hermitian(const Matrix &m, double tol = kHermitianTol) {
    return hermitian_deviation(m) <= tol;
}

inline Matrix kron(const Matrix &a, const Matrix &b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    Matrix out(da * db);
    for (std::size_t a1 = 0; a1 < da; ++a1) {
        for (std::size_t a2 = 0; a2 < da; ++a2) {
            const Complex x = a(a1, a2);
            for (std::size_t b1 = 0; b1 < db; ++b1) {
                for (std::size_t b2 = 0; b2 < db; ++b2) {
                    out(a1 * db + b1, a2 * db + b2) = x * b(b1, b2);
                }
            }
        }
    }
    return out;
}

inline Matrix partial_trace(const Matrix &m, std::size_t dim_a,
                            std::size_t dim_b, Subsystem keep) {
    if (dim_a == 0 || dim_b == 0 || m.dim() != dim_a * dim_b) {
        fail(ErrorKind::Dimension,
             "partial trace: matrix dim " + std::to_string(m.dim()) +
                 " does not factor as " + std::to_string(dim_a) + "x" +
                 std::to_string(dim_b));
    }
    if (keep == Subsystem::A) {
        Matrix out(dim_a);
        for (std::size_t a1 = 0; a1 < dim_a; ++a1) {
            for (std::size_t a2 = 0; a2 < dim_a; ++a2) {
                Complex sum{};
                for (std::size_t b = 0; b < dim_b; ++b) {
                    sum += m(a1 * dim_b + b, a2 * dim_b + b);
                }
                out(a1, a2) = sum;
            }
        }
        return out;
    }
    Matrix out(dim_b);
    for (std::size_t b1 = 0; b1 < dim_b; ++b1) {
        for (std::size_t b2 = 0; b2 < dim_b; ++b2) {
            Complex sum{};
            for (std::size_t a = 0; a < dim_a; ++a) {
                sum += m(a * dim_b + b1, a * dim_b + b2);
            }
            out(b1, b2) = sum;
        }
    }
    return out;
}

namespace detail {

inline double off_diagonal_norm(const Matrix &m) {
    double sum = 0.0;
    for (std::size_t r = 0; r < m.dim(); ++r) {
        for (std::size_t c = 0; c < m.dim(); ++c) {
            if (r != c) {
                sum += std::norm(m(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

// Zeroes a(p, q) with the unitary J = diag(1, e^{-i theta}) R, where
// a(p, q) = |a(p, q)| e^{i theta} and R is the real Jacobi rotation of the
// phase-corrected block. Applies a <- J^H a J and v <- v J.
inline void jacobi_rotate(Matrix &a, Matrix &v, std::size_t p,
                          std::size_t q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    const Complex phase = std::conj(apq) / mag;
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                     (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Complex jpp = c;
    const Complex jpq = s;
    const Complex jqp = -s * phase;
    const Complex jqq = c * phase;

    const std::size_t n = a.dim();
    for (std::size_t k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = akp * jpp + akq * jqp;
        a(k, q) = akp * jpq + akq * jqq;
    }
    for (std::size_t k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
        a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();

    for (std::size_t k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = vkp * jpp + vkq * jqp;
        v(k, q) = vkp * jpq + vkq * jqq;
    }
}

} // namespace detail

inline constexpr int kMaxJacobiSweeps = 100;

/**
 * Cyclic Jacobi eigensolver for Hermitian matrices.
 *
 * Eigenvalues come back ascending. Each eigenvector is rescaled by a unit
 * phase so that its largest-magnitude component is real and positive, which
 * makes the output a deterministic function of the input.
 */
inline SpectralDecomposition hermitian_eig(const Matrix &m) {
    const double deviation = hermitian_deviation(m);
    if (deviation > kHermitianTol) {
        fail(ErrorKind::Validation,
             "eigensolver: matrix not Hermitian (deviation " +
                 std::to_string(deviation) + ")");
    }
    const std::size_t n = m.dim();
    // Work on the exactly Hermitian part.
    Matrix a(n);
    for (std::size_t r = 0; r < n; ++r) {
        a(r, r) = m(r, r).real();
        for (std::size_t c = r + 1; c < n; ++c) {
            const Complex x = 0.5 * (m(r, c) + std::conj(m(c, r)));
            a(r, c) = x;
            a(c, r) = std::conj(x);
        }
    }
    Matrix v = Matrix::identity(n);

    const double threshold = 1e-13 * frobenius_norm(m);
    int sweep = 0;
    while (detail::off_diagonal_norm(a) > threshold) {
        if (sweep++ == kMaxJacobiSweeps) {
            fail(ErrorKind::Convergence,
                 "eigensolver: Jacobi sweeps did not converge");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) > 0.0) {
                    detail::jacobi_rotate(a, v, p, q);
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) {
                         return a(i, i).real() < a(j, j).real();
                     });

    SpectralDecomposition out{std::vector<double>(n), Matrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t col = order[k];
        out.values[k] = a(col, col).real();

        std::size_t pivot = 0;
        double pivot_mag = -1.0;
        for (std::size_t r = 0; r < n; ++r) {
            const double mag = std::abs(v(r, col));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot = r;
            }
        }
        const Complex unphase = std::conj(v(pivot, col)) / pivot_mag;
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, col) * unphase;
        }
        out.vectors(pivot, k) = pivot_mag;
    }
    return out;
}

/// U diag(values) U^H.
inline Matrix reconstruct(const Matrix &vectors,
                          std::span<const double> values) {
    const std::size_t n = vectors.dim();
    Matrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (values[k] == 0.0) {
            continue;
        }
        for (std::size_t r = 0; r < n; ++r) {
            const Complex left = vectors(r, k) * values[k];
            for (std::size_t c = 0; c < n; ++c) {
                out(r, c) += left * std::conj(vectors(c, k));
            }
        }
    }
    return out;
}

inline double min_eigenvalue(const Matrix &m) {
    return hermitian_eig(m).values.front();
}

inline bool is_psd(const Matrix &m, double tol = kNegativeEigenTol) {
    return is_hermitian(m, tol) && min_eigenvalue(m) >= -tol;
}

namespace detail {

template <typename F>
Matrix spectral_function_nonnegative(const Matrix &m, const char *what, F f) {
    const auto eig = hermitian_eig(m);
    std::vector<double> mapped(eig.values.size());
    for (std::size_t k = 0; k < mapped.size(); ++k) {
        const double lambda = eig.values[k];
        if (lambda < -kNegativeEigenTol) {
            fail(ErrorKind::Validation,
                 std::string(what) + ": negative eigenvalue " +
                     std::to_string(lambda));
        }
        mapped[k] = lambda > kZeroEigenTol ? f(lambda) : 0.0;
    }
    return reconstruct(eig.vectors, mapped);
}

} // namespace detail

/// rho ln rho with the 0 ln 0 = 0 convention (natural log).
inline Matrix xlogx_matrix(const Matrix &rho) {
    return detail::spectral_function_nonnegative(
        rho, "x ln x", [](double x) { return x * std::log(x); });
}

/// ln rho on the support of rho, 0 on its kernel.
inline Matrix log_on_support(const Matrix &rho) {
    return detail::spectral_function_nonnegative(
        rho, "ln on support", [](double x) { return std::log(x); });
}

/// Orthogonal projector onto the eigenspace with eigenvalues <= kZeroEigenTol.
inline Matrix kernel_projector(const Matrix &rho) {
    const auto eig = hermitian_eig(rho);
    std::vector<double> indicator(eig.values.size());
    for (std::size_t k = 0; k < indicator.size(); ++k) {
        indicator[k] = eig.values[k] <= kZeroEigenTol ? 1.0 : 0.0;
    }
    return reconstruct(eig.vectors, indicator);
}

} // namespace wqe
