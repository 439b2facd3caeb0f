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
 * Validated state and weight types, the qutrit-in-ququart embedding and
 * seeded random samplers.
 */

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wqe/error.hpp"
#include "wqe/linalg.hpp"

namespace wqe {

inline constexpr double kValidationTol = 1e-10;
inline constexpr double kSimplexTol = 1e-12;

/**
 * Hermitian, positive semidefinite, unit-trace matrix. Construction never
 * normalizes; invalid data raises ErrorKind::Validation.
 */
class DensityMatrix {
  public:
    explicit DensityMatrix(Matrix m, double tol = kValidationTol)
        : m_(std::move(m)) {
        const double dev = hermitian_deviation(m_);
        if (dev > tol) {
            fail(ErrorKind::Validation,
                 "density matrix not Hermitian (deviation " +
                     std::to_string(dev) + ")");
        }
        const double lmin = min_eigenvalue(m_);
        if (lmin < -tol) {
            fail(ErrorKind::Validation,
                 "density matrix not positive semidefinite (min eigenvalue " +
                     std::to_string(lmin) + ")");
        }
        const Complex tr = trace(m_);
        if (std::abs(tr - 1.0) > tol) {
            fail(ErrorKind::Validation, "density matrix trace " +
                                            std::to_string(tr.real()) +
                                            " is not 1");
        }
    }

    [[nodiscard]] const Matrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }

  private:
    Matrix m_;
};

enum class WeightMode {
    /// All eigenvalues strictly positive.
    Strict,
    /// Eigenvalues >= -tol accepted; positive_definite() reports the result.
    Relaxed,
};

/**
 * Hermitian weight matrix. No trace normalization is imposed.
 */
class WeightMatrix {
  public:
    explicit WeightMatrix(Matrix m, WeightMode mode = WeightMode::Strict,
                          double tol = kValidationTol)
        : m_(std::move(m)), mode_(mode) {
        const double dev = hermitian_deviation(m_);
        if (dev > tol) {
            fail(ErrorKind::Validation,
                 "weight matrix not Hermitian (deviation " +
                     std::to_string(dev) + ")");
        }
        const double lmin = min_eigenvalue(m_);
        positive_definite_ = lmin > 0.0;
        if (mode == WeightMode::Strict && !positive_definite_) {
            fail(ErrorKind::Validation,
                 "weight matrix not positive definite (min eigenvalue " +
                     std::to_string(lmin) + ")");
        }
        if (lmin < -tol) {
            fail(ErrorKind::Validation,
                 "weight matrix not positive semidefinite (min eigenvalue " +
                     std::to_string(lmin) + ")");
        }
    }

    static WeightMatrix diagonal(std::initializer_list<double> values,
                                 WeightMode mode = WeightMode::Strict) {
        return WeightMatrix(Matrix::diagonal(values), mode);
    }

    [[nodiscard]] const Matrix &matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t dim() const noexcept { return m_.dim(); }
    [[nodiscard]] WeightMode mode() const noexcept { return mode_; }
    /// False only for relaxed weights with a zero eigenvalue (warning flag).
    [[nodiscard]] bool positive_definite() const noexcept {
        return positive_definite_;
    }

  private:
    Matrix m_;
    WeightMode mode_;
    bool positive_definite_ = true;
};

/// A density matrix on a dA*dB dimensional space, A the slow index.
class BipartiteState {
  public:
    BipartiteState(DensityMatrix rho, std::size_t dim_a, std::size_t dim_b)
        : rho_(std::move(rho)), dim_a_(dim_a), dim_b_(dim_b) {
        if (dim_a < 2 || dim_b < 2) {
            fail(ErrorKind::Dimension,
                 "bipartite factors must both be at least 2");
        }
        if (rho_.dim() != dim_a * dim_b) {
            fail(ErrorKind::Dimension,
                 "state of dim " + std::to_string(rho_.dim()) +
                     " does not factor as " + std::to_string(dim_a) + "x" +
                     std::to_string(dim_b));
        }
    }

    [[nodiscard]] const DensityMatrix &rho() const noexcept { return rho_; }
    [[nodiscard]] std::size_t dim_a() const noexcept { return dim_a_; }
    [[nodiscard]] std::size_t dim_b() const noexcept { return dim_b_; }

  private:
    DensityMatrix rho_;
    std::size_t dim_a_;
    std::size_t dim_b_;
};

/// Diagonal qutrit probabilities (p1, p2, p3).
class QutritDiagonal {
  public:
    QutritDiagonal(double p1, double p2, double p3) : p_{p1, p2, p3} {
        for (double p : p_) {
            if (!(p >= 0.0)) {
                fail(ErrorKind::Validation,
                     "qutrit probability " + std::to_string(p) +
                         " is negative");
            }
        }
        if (std::abs(p1 + p2 + p3 - 1.0) > kSimplexTol) {
            fail(ErrorKind::Validation, "qutrit probabilities do not sum to 1");
        }
    }

    /// p3 = 1 - p1 - p2, clamped at 0 inside the simplex tolerance.
    static QutritDiagonal from_pair(double p1, double p2) {
        if (!(p1 >= 0.0) || !(p2 >= 0.0) || p1 + p2 > 1.0 + kSimplexTol) {
            fail(ErrorKind::Validation,
                 "(p1, p2) = (" + std::to_string(p1) + ", " +
                     std::to_string(p2) + ") outside the probability simplex");
        }
        return {p1, p2, std::max(0.0, 1.0 - p1 - p2)};
    }

    [[nodiscard]] double p1() const noexcept { return p_[0]; }
    [[nodiscard]] double p2() const noexcept { return p_[1]; }
    [[nodiscard]] double p3() const noexcept { return p_[2]; }

  private:
    double p_[3];
};

/// diag(p1, p2, p3, p4) as a 2x2 bipartite state.
inline BipartiteState embed_ququart(double p1, double p2, double p3,
                                    double p4) {
    for (double p : {p1, p2, p3, p4}) {
        if (!(p >= 0.0)) {
            fail(ErrorKind::Validation,
                 "ququart probability " + std::to_string(p) + " is negative");
        }
    }
    if (std::abs(p1 + p2 + p3 + p4 - 1.0) > kSimplexTol) {
        fail(ErrorKind::Validation, "ququart probabilities do not sum to 1");
    }
    return {DensityMatrix(Matrix::diagonal({p1, p2, p3, p4})), 2, 2};
}

/// The qutrit padded with a zero-probability fourth level.
inline BipartiteState embed_qutrit(const QutritDiagonal &q) {
    return embed_ququart(q.p1(), q.p2(), q.p3(), 0.0);
}

inline DensityMatrix reduce_state(const BipartiteState &s, Subsystem keep) {
    return DensityMatrix(
        partial_trace(s.rho().matrix(), s.dim_a(), s.dim_b(), keep));
}

/// Product weight wa (x) wb. Relaxed if either factor is relaxed.
inline WeightMatrix product_weight(const WeightMatrix &wa,
                                   const WeightMatrix &wb) {
    const WeightMode mode =
        wa.mode() == WeightMode::Strict && wb.mode() == WeightMode::Strict
            ? WeightMode::Strict
            : WeightMode::Relaxed;
    return WeightMatrix(kron(wa.matrix(), wb.matrix()), mode);
}

// --- Samplers --------------------------------------------------------------

/// Independent stream derived from (seed, stream) via a SplitMix64 step.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + (stream + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace detail {

inline void require_sampler_dim(std::size_t dim) {
    if (dim < 2) {
        fail(ErrorKind::Dimension, "sampler dimension must be at least 2");
    }
}

inline Matrix complex_gaussian(std::size_t dim, std::mt19937_64 &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix g(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

inline Matrix hermitian_part(const Matrix &m) {
    return (m + m.adjoint()) * Complex(0.5);
}

} // namespace detail

/// Uniform point on the probability simplex as a diagonal state.
inline DensityMatrix random_diagonal_state(std::size_t dim,
                                           std::uint64_t seed) {
    detail::require_sampler_dim(dim);
    std::mt19937_64 rng(seed);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> p(dim);
    double total = 0.0;
    for (auto &x : p) {
        x = expo(rng);
        total += x;
    }
    for (auto &x : p) {
        x /= total;
    }
    return DensityMatrix(Matrix::diagonal(p));
}

/// G G^H / tr(G G^H) with G standard complex Gaussian.
inline DensityMatrix random_density(std::size_t dim, std::uint64_t seed) {
    detail::require_sampler_dim(dim);
    std::mt19937_64 rng(seed);
    const Matrix g = detail::complex_gaussian(dim, rng);
    Matrix gram = detail::hermitian_part(matmul(g, g.adjoint()));
    gram *= Complex(1.0 / trace(gram).real());
    return DensityMatrix(std::move(gram));
}

/// Haar unitary: Gram-Schmidt on the columns of a complex Gaussian matrix.
inline Matrix random_unitary(std::size_t dim, std::uint64_t seed) {
    if (dim == 0) {
        fail(ErrorKind::Dimension, "sampler dimension must be at least 1");
    }
    std::mt19937_64 rng(seed);
    Matrix q = detail::complex_gaussian(dim, rng);
    // Modified Gram-Schmidt; R gets a positive diagonal, which keeps the
    // distribution Haar.
    for (std::size_t k = 0; k < dim; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            Complex dot{};
            for (std::size_t r = 0; r < dim; ++r) {
                dot += std::conj(q(r, j)) * q(r, k);
            }
            for (std::size_t r = 0; r < dim; ++r) {
                q(r, k) -= dot * q(r, j);
            }
        }
        double norm = 0.0;
        for (std::size_t r = 0; r < dim; ++r) {
            norm += std::norm(q(r, k));
        }
        norm = std::sqrt(norm);
        for (std::size_t r = 0; r < dim; ++r) {
            q(r, k) /= norm;
        }
    }
    return q;
}

struct ScaleRange {
    double lo = 0.05;
    double hi = 2.0;
};

/// V diag(u) V^H with V Haar and u uniform in `range`.
inline WeightMatrix random_weight(std::size_t dim, std::uint64_t seed,
                                  ScaleRange range = {}) {
    detail::require_sampler_dim(dim);
    if (!(range.lo > 0.0) || !(range.hi >= range.lo)) {
        fail(ErrorKind::Validation, "weight scale range must satisfy 0 < lo <= hi");
    }
    const Matrix v = random_unitary(dim, derive_seed(seed, 0));
    std::mt19937_64 rng(derive_seed(seed, 1));
    std::uniform_real_distribution<double> uniform(range.lo, range.hi);
    std::vector<double> u(dim);
    for (auto &x : u) {
        x = uniform(rng);
    }
    return WeightMatrix(detail::hermitian_part(reconstruct(v, u)));
}

} // namespace wqe
